// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "core/covariant.hpp"
#include "core/crossed_product.hpp"
#include "core/partial_action.hpp"
#include "core/semigroup.hpp"
#include "core/word_oracle.hpp"
#include "fixtures.hpp"

using namespace excross;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) {
      passed = false;
      detail = what;
    }
  }
  void require(const ValidationReport& report, const std::string& where) {
    for (const auto& r : report.results) require(r.passed, where + ": " + r.id + " " + r.witness);
  }
};

struct NamedAction {
  std::string name;
  SetPartialAction action;
};

std::vector<NamedAction> set_fixtures() {
  return {{"P1", fixtures::p1()},
          {"swap3", fixtures::swap3()},
          {"z3_rotation", fixtures::z3_rotation()},
          {"sym3_partial", fixtures::sym3_partial()},
          {"global_swap", fixtures::global_swap()}};
}

struct NamedAlgebraAction {
  std::string name;
  AlgebraPartialAction action;
};

// Every valid fixture at the algebra level, the zero-product one included.
std::vector<NamedAlgebraAction> algebra_fixtures() {
  std::vector<NamedAlgebraAction> out;
  for (const auto& f : set_fixtures()) out.push_back({f.name, induce_algebra_action(f.action)});
  out.push_back({"zero_product", fixtures::zero_product()});
  return out;
}

Outcome criterion_1() {
  Outcome o;
  const std::array<std::pair<const char*, GroupTable>, 4> groups{
      {{"Z2", cyclic_group(2)}, {"Z3", cyclic_group(3)}, {"Z4", cyclic_group(4)}, {"Klein4", klein_four_group()}}};
  std::ostringstream detail;
  for (const auto& [name, group] : groups) {
    const auto start = std::chrono::steady_clock::now();
    const SemigroupTable table(group);
    const OracleCheck check = oracle_check(table);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(check.passed(), std::string(name) + ": " + check.first_disagreement.value_or("not bijective"));
    o.require(check.agreement_percent() == 100.0, std::string(name) + ": agreement below 100%");
    o.require(secs < 10.0, std::string(name) + ": over 10 s");
    detail << name << " " << check.oracle_classes << " classes, " << check.agreeing << "/" << check.pairs << "; ";
  }
  o.require(WordOracle(cyclic_group(2), 4).class_count() == 3, "oracle |S(Z2)| != 3");
  o.require(WordOracle(cyclic_group(3), 5).class_count() == 8, "oracle |S(Z3)| != 8");
  if (o.passed) o.detail = detail.str() + "|S(Z2)| = 3, |S(Z3)| = 8";
  return o;
}

Outcome criterion_2() {
  Outcome o;
  const std::array<GroupTable, 5> small{cyclic_group(1), cyclic_group(2), cyclic_group(3), cyclic_group(4),
                                        klein_four_group()};
  std::size_t elements = 0;
  for (const auto& group : small) {
    const SemigroupTable t(group);
    const std::size_t n = t.size();
    for (std::size_t r = 0; r < n; ++r) {
      std::size_t count = 0, found = n;
      for (std::size_t s = 0; s < n; ++s) {
        if (t.product(t.product(r, s), r) == r && t.product(t.product(s, r), s) == s) {
          ++count;
          found = s;
        }
      }
      o.require(count == 1 && found == t.star(r), "inverse of " + t.text(r) + " is not unique");
    }
    elements += n;
  }
  const SemigroupTable sym3(symmetric_group_3());
  const ExelSemigroup& sg = sym3.semigroup();
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<std::size_t> pick(0, sym3.size() - 1);
  const std::size_t triples = 10'000;
  for (std::size_t i = 0; i < triples; ++i) {
    const SElem& a = sym3.element(pick(rng));
    const SElem& b = sym3.element(pick(rng));
    const SElem& c = sym3.element(pick(rng));
    o.require(sg.multiply(sg.multiply(a, b), c) == sg.multiply(a, sg.multiply(b, c)),
              "sym3 triple (" + sg.to_text(a) + ", " + sg.to_text(b) + ", " + sg.to_text(c) + ")");
  }
  if (o.passed) {
    o.detail = "unique inverses on " + std::to_string(elements) + " elements, |G| <= 4; " +
               std::to_string(triples) + " sym3 triples associative";
  }
  return o;
}

Outcome criterion_3() {
  Outcome o;
  for (const auto& f : set_fixtures()) {
    const AlgebraPartialAction alpha = induce_algebra_action(f.action);
    const SgAction beta = to_sg_action(alpha);
    o.require(restrict_to_group(beta) == alpha, f.name + ": restrict(induce) != id");
    o.require(to_sg_action(restrict_to_group(beta)) == beta, f.name + ": induce(restrict) != id");
  }
  if (o.passed) o.detail = "both round trips exact on 5 fixtures";
  return o;
}

Outcome criterion_4() {
  Outcome o;
  std::size_t pairs = 0;
  for (const auto& f : algebra_fixtures()) {
    const SgAction beta = to_sg_action(f.action);
    const auto mono = check_e_monotone(beta);
    const auto gens = check_generator_products(beta);
    o.require(mono, f.name);
    o.require(gens, f.name);
    for (const auto& r : mono.results) pairs += r.checked;
    for (const auto& r : gens.results) pairs += r.checked;
  }
  if (o.passed) o.detail = std::to_string(pairs) + " pairs on 6 fixtures";
  return o;
}

Outcome criterion_5() {
  Outcome o;
  std::size_t triples = 0;
  for (const auto& f : set_fixtures()) {
    const AlgebraPartialAction alpha = induce_algebra_action(f.action);
    const auto cp = build_group_cp(alpha);
    const auto scp = build_sg_cp(to_sg_action(alpha), false);
    for (const auto& r : {associativity_result("group_cp", cp.product.algebra()),
                          associativity_result("L", scp.L.algebra())}) {
      o.require(r.passed, f.name + ": " + r.id + " " + r.witness);
      triples += r.checked;
    }
  }
  const auto zero = build_group_cp(fixtures::zero_product());
  const AxiomResult flagged = associativity_result("group_cp", zero.product.algebra());
  o.require(!flagged.passed && !flagged.witness.empty(), "zero-product fixture not flagged");
  if (o.passed) o.detail = std::to_string(triples) + " triples; zero-product witness " + flagged.witness;
  return o;
}

Outcome criterion_6() {
  Outcome o;
  std::string p1_dims;
  for (const auto& f : algebra_fixtures()) {
    if (f.name == "zero_product") continue;  // not associative, so there is nothing to compare
    const auto cp = build_group_cp(f.action);
    const auto scp = build_sg_cp(to_sg_action(f.action));
    const IsoReport iso = check_isomorphism(cp, scp);
    o.require(iso.checks, f.name);
    o.require(iso.checks.find("N_recheck") != nullptr, f.name + ": no second closure");
    o.require(iso.dim_group_cp + iso.dim_N == iso.dim_L, f.name + ": dimensions");
    if (f.name == "P1") {
      p1_dims = std::to_string(iso.dim_group_cp) + " = " + std::to_string(iso.dim_L) + " - " +
                std::to_string(iso.dim_N);
      o.require(iso.dim_group_cp == 3 && iso.dim_L == 4 && iso.dim_N == 1, "P1 dims " + p1_dims);
    }
  }
  if (o.passed) o.detail = "phi, psi mutually inverse *-maps on 5 fixtures; P1 dims " + p1_dims;
  return o;
}

Outcome criterion_7() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& f : set_fixtures()) {
    const auto scp = build_sg_cp(to_sg_action(induce_algebra_action(f.action)));
    const auto report = check_quotient_identities(scp);
    o.require(report, f.name);
    o.require(report.find("bracket_product") && report.find("epsilon_strip"), f.name + ": identity missing");
    for (const auto& r : report.results) checked += r.checked;
  }
  if (o.passed) o.detail = std::to_string(checked) + " instances of both identities on 5 fixtures";
  return o;
}

Outcome criterion_8() {
  Outcome o;
  for (const auto& f : set_fixtures()) {
    const SgAction beta = to_sg_action(induce_algebra_action(f.action));
    const auto scp = build_sg_cp(beta);
    const CovariantRep rep = natural_covariant_rep(f.action, beta);
    const auto report = check_covariant(rep, scp);
    o.require(report, f.name);
    for (const char* id : {"partial_isometry", "nu_multiplicative", "covariance", "initial_space", "final_space",
                           "kills_N"}) {
      o.require(report.find(id) != nullptr, f.name + ": " + id + " not run");
    }
  }
  if (o.passed) o.detail = "natural representation on 5 fixtures";
  return o;
}

Outcome criterion_9() {
  Outcome o;
  std::ostringstream detail;
  for (const auto& f : {NamedAction{"P1", fixtures::p1()}, NamedAction{"swap3", fixtures::swap3()}}) {
    const SgAction beta = to_sg_action(induce_algebra_action(f.action));
    const auto scp = build_sg_cp(beta);
    const CovariantRep rep = natural_covariant_rep(f.action, beta);
    const AxiomResult r = contractivity_check(rep, scp.L, 100, 0, 1e-9);
    o.require(r.passed && r.checked == 100, f.name + ": " + r.witness);
    detail << f.name << " " << r.checked << " samples; ";
  }
  if (o.passed) o.detail = detail.str() + "seed 0, tolerance 1e-9";
  return o;
}

std::string run_cli(const std::string& args, int& status) {
  const std::string command = std::string("\"") + EXCROSS_CLI + "\" " + args;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
  if (!pipe) {
    status = -1;
    return {};
  }
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  status = pclose(pipe.release());
  return out;
}

Outcome criterion_10() {
  Outcome o;
  for (const char* name : {"p1.json", "sym3_partial.json"}) {
    const std::string args = std::string("check all --action \"") + EXCROSS_FIXTURE_DIR + "/" + name + "\"";
    int s1 = 0, s2 = 0;
    const std::string first = run_cli(args, s1);
    const std::string second = run_cli(args, s2);
    o.require(s1 == 0 && s2 == 0, std::string(name) + ": check all did not exit 0");
    o.require(!first.empty() && first == second, std::string(name) + ": reports differ");
  }
  if (o.passed) o.detail = "check all JSON byte-identical across two runs on P1 and sym3_partial";
  return o;
}

}  // namespace

int main() {
  const struct {
    int number;
    const char* title;
    double limit_s;
    std::function<Outcome()> run;
  } criteria[] = {
      {1, "S(G) engine agrees with the word oracle", 40.0, criterion_1},
      {2, "inverse semigroup axioms", 30.0, criterion_2},
      {3, "bijection round trips", 10.0, criterion_3},
      {4, "E_st in E_s and E_[g][h] = E_[gh] ∩ E_[g]", 10.0, criterion_4},
      {5, "crossed product associativity", 30.0, criterion_5},
      {6, "isomorphism A x| G = L/N", 10.0, criterion_6},
      {7, "quotient identities", 10.0, criterion_7},
      {8, "covariant representations", 10.0, criterion_8},
      {9, "contractivity spot-check", 10.0, criterion_9},
      {10, "determinism of check all", 10.0, criterion_10},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& err) {
      o.passed = false;
      o.detail = std::string("exception: ") + err.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= c.limit_s) {
      o.passed = false;
      o.detail += " (over " + std::to_string(static_cast<int>(c.limit_s)) + " s)";
    }
    all = all && o.passed;
    std::printf("%s %d %s: %s [%.2f s]\n", o.passed ? "PASS" : "FAIL", c.number, c.title, o.detail.c_str(), secs);
  }
  return all ? 0 : 1;
}
