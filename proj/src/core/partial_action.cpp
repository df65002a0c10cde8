#include "core/partial_action.hpp"

#include <algorithm>
#include <functional>

#include "core/error.hpp"

namespace excross {

namespace {

class Tally {
 public:
  Tally(std::string id, std::string statement) {
    result_.id = std::move(id);
    result_.statement = std::move(statement);
  }

  void check(bool ok, const std::function<std::string()>& witness) {
    ++result_.checked;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.witness = witness();
    }
  }

  AxiomResult take() { return std::move(result_); }

 private:
  AxiomResult result_;
};

std::vector<bool> indicator(std::size_t n, const std::vector<std::size_t>& points) {
  std::vector<bool> out(n, false);
  for (auto x : points) out[x] = true;
  return out;
}

std::string pair_text(const GroupTable& g, Element a, Element b) {
  return "g=" + g.name(a) + ", h=" + g.name(b);
}

}  // namespace

bool ValidationReport::passed() const {
  return std::all_of(results.begin(), results.end(), [](const AxiomResult& r) { return r.passed; });
}

const AxiomResult* ValidationReport::find(const std::string& id) const {
  for (const auto& r : results)
    if (r.id == id) return &r;
  return nullptr;
}

void ValidationReport::append(const ValidationReport& other) {
  results.insert(results.end(), other.results.begin(), other.results.end());
}

// ---------------------------------------------------------------------------

SetPartialAction::SetPartialAction(GroupTable group, std::size_t base_size, std::vector<PartialBijection> theta)
    : group_(std::move(group)), base_size_(base_size), theta_(std::move(theta)) {
  if (theta_.size() != group_.order()) {
    throw Error(ErrorKind::DimensionMismatch, "expected one map per group element (" +
                                                  std::to_string(group_.order()) + "), got " +
                                                  std::to_string(theta_.size()));
  }
  for (Element g = 0; g < theta_.size(); ++g) {
    if (theta_[g].base_size() != base_size_) {
      throw Error(ErrorKind::BaseSizeMismatch, "map for " + group_.name(g) + " acts on " +
                                                   std::to_string(theta_[g].base_size()) + " points, expected " +
                                                   std::to_string(base_size_));
    }
  }
}

SetPartialAction SetPartialAction::from_listed(GroupTable group, std::size_t base_size,
                                               const std::map<Element, PartialBijection>& listed) {
  std::vector<PartialBijection> theta(group.order(), PartialBijection::empty(base_size));
  for (Element g = 0; g < group.order(); ++g) {
    if (auto it = listed.find(g); it != listed.end()) {
      theta[g] = it->second;
    } else if (g == group.identity()) {
      theta[g] = PartialBijection::identity(base_size);
    } else if (auto inv = listed.find(group.inverse(g)); inv != listed.end()) {
      theta[g] = inv->second.converse();
    }
  }
  return SetPartialAction(std::move(group), base_size, std::move(theta));
}

ValidationReport validate_set_action(const SetPartialAction& action) {
  const GroupTable& G = action.group();
  const std::size_t n = G.order();
  const std::size_t m = action.base_size();
  std::vector<std::vector<bool>> X(n);
  for (Element g = 0; g < n; ++g) X[g] = indicator(m, action.domain_set(g));

  ValidationReport report;

  Tally identity("identity", "theta_e is the identity of X");
  for (std::size_t x = 0; x < m; ++x) {
    auto y = action.theta(G.identity())(x);
    identity.check(y && *y == x, [&] { return "x=" + std::to_string(x); });
  }
  report.results.push_back(identity.take());

  Tally inverse("inverse", "theta_{g^-1} is the inverse of theta_g");
  for (Element g = 0; g < n; ++g) {
    inverse.check(action.theta(G.inverse(g)) == action.theta(g).converse(), [&] { return "g=" + G.name(g); });
  }
  report.results.push_back(inverse.take());

  Tally ii("ii", "theta_g(X_{g^-1} ∩ X_h) = X_g ∩ X_{gh}");
  for (Element g = 0; g < n; ++g)
    for (Element h = 0; h < n; ++h) {
      const auto& t = action.theta(g);
      std::vector<bool> image(m, false);
      for (auto [x, y] : t.pairs())
        if (X[h][x]) image[y] = true;
      std::size_t bad = m;
      for (std::size_t y = 0; y < m && bad == m; ++y)
        if (image[y] != (X[g][y] && X[G.multiply(g, h)][y])) bad = y;
      ii.check(bad == m, [&] {
        return pair_text(G, g, h) + ", x=" + std::to_string(bad) +
               (image[bad] ? " is in theta_g(X_{g^-1} ∩ X_h) but not in X_g ∩ X_gh"
                           : " is in X_g ∩ X_gh but not in theta_g(X_{g^-1} ∩ X_h)");
      });
    }
  report.results.push_back(ii.take());

  Tally iii("iii", "theta_g(theta_h(x)) = theta_gh(x) for x in X_{h^-1} ∩ X_{(gh)^-1}");
  for (Element g = 0; g < n; ++g)
    for (Element h = 0; h < n; ++h) {
      const Element gh = G.multiply(g, h);
      for (std::size_t x = 0; x < m; ++x) {
        if (!X[G.inverse(h)][x] || !X[G.inverse(gh)][x]) continue;
        auto hx = action.theta(h)(x);
        std::optional<std::size_t> ghx = hx ? action.theta(g)(*hx) : std::nullopt;
        auto direct = action.theta(gh)(x);
        iii.check(ghx && direct && *ghx == *direct,
                  [&] { return pair_text(G, g, h) + ", x=" + std::to_string(x); });
      }
    }
  report.results.push_back(iii.take());
  return report;
}

// ---------------------------------------------------------------------------

AlgebraPartialAction::AlgebraPartialAction(GroupTable group, StructureAlgebra algebra, std::vector<Subspace> ideals,
                                           std::vector<LinearMap> alpha)
    : group_(std::move(group)), algebra_(std::move(algebra)), ideals_(std::move(ideals)), alpha_(std::move(alpha)) {
  const std::size_t n = group_.order();
  if (ideals_.size() != n || alpha_.size() != n) {
    throw Error(ErrorKind::InvalidAction, "expected one ideal and one map per group element");
  }
  for (Element g = 0; g < n; ++g) {
    if (ideals_[g].ambient_dim() != algebra_.dim()) {
      throw Error(ErrorKind::InvalidAction, "ideal D_" + group_.name(g) + " is not a subspace of the algebra");
    }
  }
  for (Element g = 0; g < n; ++g) {
    if (alpha_[g].domain() != ideals_[group_.inverse(g)] || alpha_[g].codomain() != ideals_[g]) {
      throw Error(ErrorKind::InvalidAction, "alpha_" + group_.name(g) + " does not map D_" +
                                                group_.name(group_.inverse(g)) + " to D_" + group_.name(g));
    }
  }
}

ValidationReport validate_algebra_action(const AlgebraPartialAction& action) {
  const GroupTable& G = action.group();
  const StructureAlgebra& A = action.algebra();
  const std::size_t n = G.order();
  ValidationReport report;

  Tally unit("unit_ideal", "D_e = A");
  unit.check(action.ideal(G.identity()) == Subspace::full(A.dim()), [] { return std::string("D_e is a proper subspace"); });
  report.results.push_back(unit.take());

  Tally identity("identity", "alpha_e is the identity of A");
  identity.check(action.alpha(G.identity()) == LinearMap::identity(Subspace::full(A.dim())),
                 [] { return std::string("alpha_e moves a basis vector"); });
  report.results.push_back(identity.take());

  Tally ideals("ideals", "each D_g is a two-sided ideal");
  for (Element g = 0; g < n; ++g)
    ideals.check(is_two_sided_ideal(A, action.ideal(g)), [&] { return "g=" + G.name(g); });
  report.results.push_back(ideals.take());

  Tally bijective("bijective", "alpha_g is a bijection D_{g^-1} -> D_g");
  for (Element g = 0; g < n; ++g) bijective.check(action.alpha(g).is_bijective(), [&] { return "g=" + G.name(g); });
  report.results.push_back(bijective.take());

  Tally mult("multiplicative", "alpha_g(xy) = alpha_g(x) alpha_g(y) on D_{g^-1}");
  for (Element g = 0; g < n; ++g) {
    const auto& f = action.alpha(g);
    const auto& basis = f.domain().basis();
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) {
        auto lhs = f.try_apply(A.multiply(basis[i], basis[j]));
        mult.check(lhs && *lhs == A.multiply(f.apply(basis[i]), f.apply(basis[j])),
                   [&] { return "g=" + G.name(g) + ", basis pair (" + std::to_string(i) + "," + std::to_string(j) + ")"; });
      }
  }
  report.results.push_back(mult.take());

  Tally inverse("inverse", "alpha_{g^-1} is the inverse of alpha_g");
  for (Element g = 0; g < n; ++g) {
    const auto& f = action.alpha(g);
    inverse.check(f.is_bijective() && same_partial_map(action.alpha(G.inverse(g)), f.inverse()),
                  [&] { return "g=" + G.name(g); });
  }
  report.results.push_back(inverse.take());

  Tally ii("ii", "alpha_g(D_{g^-1} ∩ D_h) = D_g ∩ D_{gh}");
  for (Element g = 0; g < n; ++g)
    for (Element h = 0; h < n; ++h) {
      Subspace lhs = action.alpha(g).image_of(intersect(action.ideal(G.inverse(g)), action.ideal(h)));
      Subspace rhs = intersect(action.ideal(g), action.ideal(G.multiply(g, h)));
      ii.check(lhs == rhs, [&] {
        return pair_text(G, g, h) + ": dim " + std::to_string(lhs.dim()) + " vs " + std::to_string(rhs.dim());
      });
    }
  report.results.push_back(ii.take());

  Tally iii("iii", "alpha_g alpha_h = alpha_gh on D_{h^-1} ∩ D_{(gh)^-1}");
  for (Element g = 0; g < n; ++g)
    for (Element h = 0; h < n; ++h) {
      const Element gh = G.multiply(g, h);
      Subspace dom = intersect(action.ideal(G.inverse(h)), action.ideal(G.inverse(gh)));
      for (std::size_t k = 0; k < dom.basis().size(); ++k) {
        const Vector& x = dom.basis()[k];
        auto hx = action.alpha(h).try_apply(x);
        auto ghx = hx ? action.alpha(g).try_apply(*hx) : std::nullopt;
        auto direct = action.alpha(gh).try_apply(x);
        iii.check(ghx && direct && *ghx == *direct, [&] { return pair_text(G, g, h) + ", basis vector " + std::to_string(k); });
      }
    }
  report.results.push_back(iii.take());
  return report;
}

ValidationReport ideals_idempotent_check(const AlgebraPartialAction& action) {
  ValidationReport report;
  for (Element g = 0; g < action.group().order(); ++g) {
    Tally t("idempotent_" + action.group().name(g), "span(D_g D_g) = D_g");
    t.check(is_idempotent_ideal(action.algebra(), action.ideal(g)), [&] {
      return "D_" + action.group().name(g) + " has dimension " + std::to_string(action.ideal(g).dim()) +
             " but its square is smaller";
    });
    report.results.push_back(t.take());
  }
  return report;
}

AlgebraPartialAction induce_algebra_action(const SetPartialAction& action) {
  auto report = validate_set_action(action);
  for (const auto& r : report.results) {
    if (!r.passed) throw Error(ErrorKind::InvalidAction, "axiom " + r.id + " fails at " + r.witness);
  }
  const GroupTable& G = action.group();
  const std::size_t m = action.base_size();
  StructureAlgebra A = StructureAlgebra::function_algebra(m);
  auto span_of = [&](const std::vector<std::size_t>& points) {
    std::vector<Vector> vs;
    for (auto x : points) vs.push_back(unit_vector(m, x));
    return Subspace::span(m, vs);
  };
  std::vector<Subspace> ideals;
  for (Element g = 0; g < G.order(); ++g) ideals.push_back(span_of(action.domain_set(g)));
  std::vector<LinearMap> alpha;
  for (Element g = 0; g < G.order(); ++g) {
    std::vector<Vector> sources, images;
    for (auto [x, y] : action.theta(g).pairs()) {
      sources.push_back(unit_vector(m, x));
      images.push_back(unit_vector(m, y));
    }
    alpha.push_back(LinearMap::from_images(ideals[G.inverse(g)], ideals[g], sources, images));
  }
  return AlgebraPartialAction(G, std::move(A), std::move(ideals), std::move(alpha));
}

// ---------------------------------------------------------------------------

SgAction::SgAction(std::shared_ptr<const SemigroupTable> table, StructureAlgebra algebra, std::vector<Subspace> E,
                   std::vector<LinearMap> beta)
    : table_(std::move(table)), algebra_(std::move(algebra)), E_(std::move(E)), beta_(std::move(beta)) {
  if (E_.size() != table_->size() || beta_.size() != table_->size()) {
    throw Error(ErrorKind::InvalidAction, "expected one ideal and one map per element of S(G)");
  }
}

SgAction to_sg_action(const AlgebraPartialAction& action, std::size_t max_order) {
  auto table = std::make_shared<const SemigroupTable>(action.group(), max_order);
  const std::size_t ambient = action.algebra().dim();
  std::vector<Subspace> E;
  E.reserve(table->size());
  for (const auto& s : table->elements()) {
    std::vector<Subspace> parts{action.ideal(s.bracket())};
    for (auto k : s.eps()) parts.push_back(action.ideal(k));
    E.push_back(intersect_all(parts, ambient));
  }
  std::vector<LinearMap> beta;
  beta.reserve(table->size());
  for (std::size_t i = 0; i < table->size(); ++i) {
    try {
      beta.push_back(action.alpha(table->gamma(i)).restrict_to(E[table->star(i)], E[i]));
    } catch (const Error&) {
      throw Error(ErrorKind::InvalidAction, "alpha_" + action.group().name(table->gamma(i)) +
                                                " does not carry E_{s*} into E_s for s = " + table->text(i));
    }
  }
  return SgAction(std::move(table), action.algebra(), std::move(E), std::move(beta));
}

AlgebraPartialAction restrict_to_group(const SgAction& action) {
  const GroupTable& G = action.group();
  std::vector<Subspace> ideals;
  std::vector<LinearMap> alpha;
  for (Element g = 0; g < G.order(); ++g) {
    const std::size_t s = action.table().generator_index(g);
    ideals.push_back(action.E(s));
    alpha.push_back(action.beta(s));
  }
  return AlgebraPartialAction(G, action.algebra(), std::move(ideals), std::move(alpha));
}

ValidationReport validate_sg_action(const SgAction& action) {
  const SemigroupTable& T = action.table();
  const std::size_t n = T.size();
  ValidationReport report;

  Tally unit("unit_ideal", "E_[e] = A");
  unit.check(action.E(0) == Subspace::full(action.algebra().dim()), [] { return std::string("E_[e] is proper"); });
  report.results.push_back(unit.take());

  Tally shape("domains", "beta_s maps E_{s*} onto E_s");
  for (std::size_t s = 0; s < n; ++s) {
    const auto& b = action.beta(s);
    shape.check(b.domain() == action.E(T.star(s)) && b.codomain() == action.E(s) && b.is_bijective(),
                [&] { return "s=" + T.text(s); });
  }
  report.results.push_back(shape.take());

  Tally inverse("inverse", "beta_{s*} = beta_s^-1");
  for (std::size_t s = 0; s < n; ++s) {
    const auto& b = action.beta(s);
    inverse.check(b.is_bijective() && same_partial_map(action.beta(T.star(s)), b.inverse()),
                  [&] { return "s=" + T.text(s); });
  }
  report.results.push_back(inverse.take());

  Tally products("products", "beta_r beta_s = beta_rs as partial maps");
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s) {
      products.check(same_partial_map(compose(action.beta(r), action.beta(s)), action.beta(T.product(r, s))),
                     [&] { return "r=" + T.text(r) + ", s=" + T.text(s); });
    }
  report.results.push_back(products.take());
  return report;
}

ValidationReport check_e_monotone(const SgAction& action) {
  const SemigroupTable& T = action.table();
  Tally t("monotone", "E_st ⊆ E_s");
  for (std::size_t s = 0; s < T.size(); ++s)
    for (std::size_t u = 0; u < T.size(); ++u)
      t.check(action.E(T.product(s, u)).is_subspace_of(action.E(s)), [&] { return "s=" + T.text(s) + ", t=" + T.text(u); });
  return ValidationReport{{t.take()}};
}

ValidationReport check_generator_products(const SgAction& action) {
  const SemigroupTable& T = action.table();
  const GroupTable& G = action.group();
  Tally t("generator_products", "E_{[g][h]} = E_[gh] ∩ E_[g]");
  for (Element g = 0; g < G.order(); ++g)
    for (Element h = 0; h < G.order(); ++h) {
      const std::size_t gh = T.product(T.generator_index(g), T.generator_index(h));
      t.check(action.E(gh) == intersect(action.E(T.generator_index(G.multiply(g, h))), action.E(T.generator_index(g))),
              [&] { return pair_text(G, g, h); });
    }
  return ValidationReport{{t.take()}};
}

ValidationReport check_word_formula(const SgAction& action, const AlgebraPartialAction& source, std::size_t max_len) {
  const SemigroupTable& T = action.table();
  const GroupTable& G = action.group();
  const std::size_t ambient = action.algebra().dim();
  Tally t("word_formula", "E_{[r1]...[rn]} = D_{r1} ∩ D_{r1 r2} ∩ ... ∩ D_{r1...rn}");
  std::vector<Element> word;
  std::function<void(std::size_t, std::vector<Subspace>&, Element)> walk =
      [&](std::size_t s, std::vector<Subspace>& parts, Element prefix) {
        for (Element g = 0; g < G.order(); ++g) {
          const Element p = G.multiply(prefix, g);
          const std::size_t next = word.empty() ? T.generator_index(g) : T.product(s, T.generator_index(g));
          word.push_back(g);
          parts.push_back(source.ideal(p));
          t.check(action.E(next) == intersect_all(parts, ambient), [&] {
            std::string w;
            for (auto x : word) w += "[" + G.name(x) + "]";
            return "r=" + w;
          });
          if (word.size() < max_len) walk(next, parts, p);
          parts.pop_back();
          word.pop_back();
        }
      };
  std::vector<Subspace> parts;
  walk(0, parts, G.identity());
  return ValidationReport{{t.take()}};
}

ValidationReport check_star_compatibility(const SgAction& action) {
  const SemigroupTable& T = action.table();
  const StructureAlgebra& A = action.algebra();
  Tally closed("star_closed", "E_s is closed under the involution");
  Tally commutes("star_commutes", "beta_s(x*) = beta_s(x)*");
  if (!A.has_involution()) {
    closed.check(false, [] { return std::string("the algebra has no involution"); });
    commutes.check(false, [] { return std::string("the algebra has no involution"); });
    return ValidationReport{{closed.take(), commutes.take()}};
  }
  for (std::size_t s = 0; s < T.size(); ++s) {
    for (const auto& x : action.E(s).basis())
      closed.check(action.E(s).contains(A.star(x)), [&] { return "s=" + T.text(s); });
    for (const auto& x : action.E(T.star(s)).basis()) {
      auto lhs = action.beta(s).try_apply(A.star(x));
      commutes.check(lhs && *lhs == A.star(action.beta(s).apply(x)), [&] { return "s=" + T.text(s); });
    }
  }
  return ValidationReport{{closed.take(), commutes.take()}};
}

}  // namespace excross
