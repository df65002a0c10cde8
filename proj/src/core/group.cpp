#include "core/group.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <map>
#include <set>

#include "core/error.hpp"

namespace excross {

namespace {

std::string describe(const std::vector<std::string>& names, std::size_t i) {
  if (i < names.size()) return std::to_string(i) + " (" + names[i] + ")";
  return std::to_string(i);
}

bool printable(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
           return std::isprint(c) != 0 && c != ' ';
         });
}

}  // namespace

GroupTable GroupTable::from_table(std::vector<std::string> names,
                                  const std::vector<std::vector<std::size_t>>& table) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorKind::NonLatinSquare, "empty table");
  if (names.empty()) {
    for (std::size_t i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
  }
  if (names.size() != n) {
    throw Error(ErrorKind::BadLabels, std::to_string(names.size()) + " names for a table of order " +
                                          std::to_string(n));
  }
  std::set<std::string> seen;
  for (std::size_t i = 0; i < n; ++i) {
    if (!printable(names[i])) throw Error(ErrorKind::BadLabels, "name " + std::to_string(i) + " is not a printable token");
    if (!seen.insert(names[i]).second) throw Error(ErrorKind::BadLabels, "duplicate name \"" + names[i] + "\"");
  }

  for (std::size_t r = 0; r < n; ++r) {
    if (table[r].size() != n) {
      throw Error(ErrorKind::NonLatinSquare, "row " + describe(names, r) + " has " +
                                                 std::to_string(table[r].size()) + " entries, expected " +
                                                 std::to_string(n));
    }
    for (auto v : table[r]) {
      if (v >= n) throw Error(ErrorKind::NonLatinSquare, "row " + describe(names, r) + " has out-of-range entry " + std::to_string(v));
    }
  }
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<bool> hit(n, false);
    for (std::size_t c = 0; c < n; ++c) {
      if (hit[table[r][c]]) {
        throw Error(ErrorKind::NonLatinSquare, "row " + describe(names, r) + " repeats " +
                                                   describe(names, table[r][c]));
      }
      hit[table[r][c]] = true;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<bool> hit(n, false);
    for (std::size_t r = 0; r < n; ++r) {
      if (hit[table[r][c]]) {
        throw Error(ErrorKind::NonLatinSquare, "column " + describe(names, c) + " repeats " +
                                                   describe(names, table[r][c]));
      }
      hit[table[r][c]] = true;
    }
  }

  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < n && ok; ++g) ok = table[e][g] == g && table[g][e] == g;
    if (ok) identity = e;
  }
  if (!identity) throw Error(ErrorKind::NoIdentity, "no element acts as a two-sided identity");

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw Error(ErrorKind::NonAssociative, "(" + names[a] + "·" + names[b] + ")·" + names[c] +
                                                     " != " + names[a] + "·(" + names[b] + "·" +
                                                     names[c] + ")");
        }

  // Move the identity to index 0, keep the rest in order.
  std::vector<std::size_t> old_of_new;
  old_of_new.push_back(*identity);
  for (std::size_t i = 0; i < n; ++i)
    if (i != *identity) old_of_new.push_back(i);
  std::vector<std::size_t> new_of_old(n);
  for (std::size_t i = 0; i < n; ++i) new_of_old[old_of_new[i]] = i;

  GroupTable g;
  for (auto old : old_of_new) g.names_.push_back(names[old]);
  g.table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      g.table_[a * n + b] = new_of_old[table[old_of_new[a]][old_of_new[b]]];
  g.inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (g.table_[a * n + b] == 0) g.inverse_[a] = b;
  return g;
}

void GroupTable::check_index(Element g) const {
  if (g >= order()) {
    throw Error(ErrorKind::IndexOutOfRange, "element index " + std::to_string(g) +
                                                " outside group of order " + std::to_string(order()));
  }
}

const std::string& GroupTable::name(Element g) const {
  check_index(g);
  return names_[g];
}

std::optional<Element> GroupTable::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Element>(it - names_.begin());
}

Element GroupTable::multiply(Element g, Element h) const {
  check_index(g);
  check_index(h);
  return table_[g * order() + h];
}

Element GroupTable::inverse(Element g) const {
  check_index(g);
  return inverse_[g];
}

Element GroupTable::product_of(const std::vector<Element>& word) const {
  Element acc = identity();
  for (auto g : word) acc = multiply(acc, g);
  return acc;
}

// ---------------------------------------------------------------------------

GroupTable cyclic_group(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::BadDocument, "cyclic group order must be positive");
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) {
    names.push_back(k == 0 ? "e" : k == 1 ? "a" : "a" + std::to_string(k));
  }
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  return GroupTable::from_table(std::move(names), table);
}

GroupTable klein_four_group() {
  // Z2 x Z2 with a = (1,0), b = (0,1), c = (1,1); xor on the index bits.
  std::vector<std::vector<std::size_t>> table(4, std::vector<std::size_t>(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) table[i][j] = i ^ j;
  return GroupTable::from_table({"e", "a", "b", "c"}, table);
}

GroupTable symmetric_group_3() {
  // r = (0 1 2), s = (0 1); elements e, r, r2, s, rs, r2s as permutations.
  using Perm = std::array<std::size_t, 3>;
  auto compose_perm = [](const Perm& p, const Perm& q) {  // (p∘q)(x) = p(q(x))
    Perm out{};
    for (std::size_t x = 0; x < 3; ++x) out[x] = p[q[x]];
    return out;
  };
  const Perm e{0, 1, 2}, r{1, 2, 0}, s{1, 0, 2};
  const Perm r2 = compose_perm(r, r);
  const std::vector<Perm> perms{e, r, r2, s, compose_perm(r, s), compose_perm(r2, s)};
  std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      auto prod = compose_perm(perms[i], perms[j]);
      table[i][j] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), prod) - perms.begin());
    }
  return GroupTable::from_table({"e", "r", "r2", "s", "rs", "r2s"}, table);
}

GroupTable group_from_permutations(const std::vector<std::vector<std::size_t>>& generators) {
  if (generators.empty()) return cyclic_group(1);
  const std::size_t degree = generators.front().size();
  for (const auto& g : generators) {
    if (g.size() != degree) throw Error(ErrorKind::BadDocument, "generators act on different degrees");
    std::vector<bool> hit(degree, false);
    for (auto x : g) {
      if (x >= degree || hit[x]) throw Error(ErrorKind::BadDocument, "generator is not a permutation");
      hit[x] = true;
    }
  }
  using Perm = std::vector<std::size_t>;
  auto compose_perm = [&](const Perm& p, const Perm& q) {
    Perm out(degree);
    for (std::size_t x = 0; x < degree; ++x) out[x] = p[q[x]];
    return out;
  };
  Perm id(degree);
  for (std::size_t x = 0; x < degree; ++x) id[x] = x;
  std::vector<Perm> elements{id};
  std::map<Perm, std::size_t> index{{id, 0}};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : generators) {
      Perm p = compose_perm(elements[i], g);
      if (index.emplace(p, elements.size()).second) elements.push_back(p);
      if (elements.size() > 4096) throw Error(ErrorKind::GroupTooLarge, "generated group exceeds 4096 elements");
    }
  }
  const std::size_t n = elements.size();
  std::vector<std::string> names{"e"};
  for (std::size_t i = 1; i < n; ++i) names.push_back("p" + std::to_string(i));
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i][j] = index.at(compose_perm(elements[i], elements[j]));
  return GroupTable::from_table(std::move(names), table);
}

std::optional<GroupTable> group_preset(std::string_view spec) {
  std::string s(spec);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c) != 0; }), s.end());
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "klein4") return klein_four_group();
  if (s == "sym3" || s == "s3") return symmetric_group_3();
  if (s == "trivial") return cyclic_group(1);
  std::string_view digits;
  if (s.rfind("cyclic", 0) == 0) digits = std::string_view(s).substr(6);
  else if (s.rfind("z", 0) == 0) digits = std::string_view(s).substr(1);
  else return std::nullopt;
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || n == 0) return std::nullopt;
  if (n > 4096) throw Error(ErrorKind::GroupTooLarge, "cyclic preset order " + std::to_string(n));
  return cyclic_group(n);
}

// ---------------------------------------------------------------------------

PartialBijection::PartialBijection(std::size_t base_size,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& pairs)
    : map_(base_size) {
  std::vector<bool> target_used(base_size, false);
  for (auto [x, y] : pairs) {
    if (x >= base_size || y >= base_size) {
      throw Error(ErrorKind::BadDocument, "pair (" + std::to_string(x) + "," + std::to_string(y) +
                                              ") outside base set of size " + std::to_string(base_size));
    }
    if (map_[x]) throw Error(ErrorKind::BadDocument, "source " + std::to_string(x) + " mapped twice");
    if (target_used[y]) throw Error(ErrorKind::BadDocument, "target " + std::to_string(y) + " hit twice");
    map_[x] = y;
    target_used[y] = true;
  }
}

PartialBijection PartialBijection::identity(std::size_t base_size) {
  PartialBijection f;
  f.map_.resize(base_size);
  for (std::size_t x = 0; x < base_size; ++x) f.map_[x] = x;
  return f;
}

PartialBijection PartialBijection::identity_on(std::size_t base_size, const std::vector<std::size_t>& points) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (auto x : points) pairs.emplace_back(x, x);
  return PartialBijection(base_size, pairs);
}

PartialBijection PartialBijection::empty(std::size_t base_size) {
  PartialBijection f;
  f.map_.resize(base_size);
  return f;
}

std::optional<std::size_t> PartialBijection::operator()(std::size_t x) const {
  if (x >= map_.size()) return std::nullopt;
  return map_[x];
}

std::vector<std::size_t> PartialBijection::domain() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < map_.size(); ++x)
    if (map_[x]) out.push_back(x);
  return out;
}

std::vector<std::size_t> PartialBijection::image() const {
  std::vector<std::size_t> out;
  for (const auto& y : map_)
    if (y) out.push_back(*y);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> PartialBijection::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < map_.size(); ++x)
    if (map_[x]) out.emplace_back(x, *map_[x]);
  return out;
}

PartialBijection PartialBijection::converse() const {
  PartialBijection f = empty(map_.size());
  for (std::size_t x = 0; x < map_.size(); ++x)
    if (map_[x]) f.map_[*map_[x]] = x;
  return f;
}

PartialBijection compose(const PartialBijection& f, const PartialBijection& g) {
  if (f.base_size() != g.base_size()) {
    throw Error(ErrorKind::BaseSizeMismatch, "cannot compose maps on base sets of sizes " +
                                                 std::to_string(f.base_size()) + " and " +
                                                 std::to_string(g.base_size()));
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (auto [x, y] : g.pairs()) {
    if (auto z = f(y)) pairs.emplace_back(x, *z);
  }
  return PartialBijection(f.base_size(), pairs);
}

}  // namespace excross
