#include "core/semigroup.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>

#include "core/error.hpp"

namespace excross {

std::vector<Element> SElem::eps() const {
  std::vector<Element> out;
  for (std::uint64_t m = eps_mask_; m != 0; m &= m - 1) {
    out.push_back(static_cast<Element>(std::countr_zero(m)));
  }
  return out;
}

std::size_t default_max_group_order() {
  if (const char* env = std::getenv("EXCROSS_MAX_GROUP_ORDER")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 8;
}

ExelSemigroup::ExelSemigroup(GroupTable group)
    : group_(std::make_shared<const GroupTable>(std::move(group))) {
  if (group_->order() > kMaxOrder) {
    throw Error(ErrorKind::GroupTooLarge, "S(G) elements are limited to |G| <= " + std::to_string(kMaxOrder));
  }
}

std::uint64_t ExelSemigroup::translate(Element g, std::uint64_t mask) const {
  std::uint64_t out = 0;
  for (std::uint64_t m = mask; m != 0; m &= m - 1) {
    auto k = static_cast<Element>(std::countr_zero(m));
    out |= std::uint64_t{1} << group_->multiply(g, k);
  }
  return out;
}

SElem ExelSemigroup::canonical(std::uint64_t mask, Element bracket) const {
  mask &= ~(std::uint64_t{1} << 0);
  mask &= ~(std::uint64_t{1} << bracket);
  return SElem(bracket, mask);
}

bool ExelSemigroup::is_canonical(const SElem& x) const {
  const std::size_t n = group_->order();
  if (x.bracket() >= n) return false;
  if (n < 64 && (x.eps_mask() >> n) != 0) return false;
  return (x.eps_mask() & 1) == 0 && ((x.eps_mask() >> x.bracket()) & 1) == 0;
}

void ExelSemigroup::require_member(const SElem& x) const {
  if (!is_canonical(x)) {
    throw Error(ErrorKind::GroupMismatch, "element is not a canonical member of S(G) for this group of order " +
                                              std::to_string(group_->order()));
  }
}

SElem ExelSemigroup::generator(Element g) const {
  if (g >= group_->order()) {
    throw Error(ErrorKind::IndexOutOfRange, "element index " + std::to_string(g) + " outside the group");
  }
  return SElem(g, 0);
}

SElem ExelSemigroup::epsilon(Element g) const {
  return multiply(generator(g), generator(group_->inverse(g)));
}

SElem ExelSemigroup::make(const std::vector<Element>& eps, Element bracket) const {
  if (bracket >= group_->order()) {
    throw Error(ErrorKind::IndexOutOfRange, "bracket index " + std::to_string(bracket) + " outside the group");
  }
  std::uint64_t mask = 0;
  for (auto k : eps) {
    if (k >= group_->order()) throw Error(ErrorKind::IndexOutOfRange, "subscript " + std::to_string(k) + " outside the group");
    mask |= std::uint64_t{1} << k;
  }
  return canonical(mask, bracket);
}

SElem ExelSemigroup::multiply(const SElem& x, const SElem& y) const {
  require_member(x);
  require_member(y);
  const Element g = x.bracket();
  const Element h = y.bracket();
  std::uint64_t mask = x.eps_mask() | translate(g, y.eps_mask()) | (std::uint64_t{1} << g);
  return canonical(mask, group_->multiply(g, h));
}

SElem ExelSemigroup::star(const SElem& x) const {
  require_member(x);
  const Element inv = group_->inverse(x.bracket());
  return canonical(translate(inv, x.eps_mask()), inv);
}

bool ExelSemigroup::leq(const SElem& x, const SElem& y) {
  return x.bracket() == y.bracket() && (y.eps_mask() & ~x.eps_mask()) == 0;
}

std::size_t ExelSemigroup::expected_size() const {
  const std::size_t n = group_->order();
  if (n == 1) return 1;
  return (std::size_t{1} << (n - 1)) + (n - 1) * (std::size_t{1} << (n - 2));
}

std::vector<SElem> ExelSemigroup::enumerate(std::size_t max_order) const {
  const std::size_t n = group_->order();
  if (n > max_order || n > 24) {
    throw Error(ErrorKind::GroupTooLarge, "|G| = " + std::to_string(n) + " exceeds the enumeration bound " +
                                              std::to_string(std::min<std::size_t>(max_order, 24)));
  }
  std::vector<SElem> out;
  out.reserve(expected_size());
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  for (Element g = 0; g < n; ++g) {
    const std::uint64_t allowed = all & ~std::uint64_t{1} & ~(std::uint64_t{1} << g);
    // Submasks of `allowed` in increasing order.
    std::uint64_t sub = 0;
    while (true) {
      out.emplace_back(g, sub);
      if (sub == allowed) break;
      sub = (sub - allowed) & allowed;
    }
  }
  return out;
}

std::string ExelSemigroup::to_text(const SElem& x) const {
  std::string out;
  for (auto k : x.eps()) out += "e_{" + group_->name(k) + "}";
  out += "[" + group_->name(x.bracket()) + "]";
  return out;
}

std::vector<Element> ExelSemigroup::representative_word(const SElem& x) const {
  require_member(x);
  std::vector<Element> word;
  Element prefix = group_->identity();
  for (auto s : x.eps()) {
    word.push_back(group_->multiply(group_->inverse(prefix), s));
    prefix = s;
  }
  word.push_back(group_->multiply(group_->inverse(prefix), x.bracket()));
  return word;
}

SElem ExelSemigroup::evaluate(const std::vector<Element>& word) const {
  SElem acc = unit();
  for (auto g : word) acc = multiply(acc, generator(g));
  return acc;
}

// ---------------------------------------------------------------------------

SemigroupTable::SemigroupTable(GroupTable group, std::size_t max_order)
    : semigroup_(std::move(group)), elements_(semigroup_.enumerate(max_order)) {
  const std::size_t n = elements_.size();
  index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) index_.emplace(elements_[i], i);
  products_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) products_[i * n + j] = index_of(semigroup_.multiply(elements_[i], elements_[j]));
  stars_.resize(n);
  for (std::size_t i = 0; i < n; ++i) stars_[i] = index_of(semigroup_.star(elements_[i]));
}

std::size_t SemigroupTable::index_of(const SElem& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) throw Error(ErrorKind::GroupMismatch, "element not in this enumeration of S(G)");
  return it->second;
}

}  // namespace excross
