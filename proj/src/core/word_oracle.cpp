#include "core/word_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "core/error.hpp"

namespace excross {

namespace {

std::string render(const GroupTable& g, const Word& w) {
  std::string out;
  for (auto x : w) out += "[" + g.name(x) + "]";
  return out;
}

std::size_t total_words(std::size_t n, std::size_t len, std::size_t cap) {
  std::size_t total = 0;
  std::size_t p = 1;
  for (std::size_t k = 1; k <= len; ++k) {
    if (p > cap / std::max<std::size_t>(n, 1)) return cap + 1;
    p *= n;
    total += p;
    if (total > cap) return cap + 1;
  }
  return total;
}

}  // namespace

WordOracle::WordOracle(const GroupTable& group, std::size_t max_len, std::size_t max_words)
    : order_(group.order()), max_len_(max_len) {
  if (max_len_ < 4) throw Error(ErrorKind::BoundTooSmall, "word length bound must be at least 4");
  const std::size_t n = order_;
  if (total_words(n, max_len_, max_words) > max_words) {
    throw Error(ErrorKind::GroupTooLarge, "words of length <= " + std::to_string(max_len_) + " over " +
                                              std::to_string(n) + " letters exceed the budget of " +
                                              std::to_string(max_words));
  }
  offset_.assign(max_len_ + 2, 0);
  power_.assign(max_len_ + 1, 1);
  for (std::size_t k = 1; k <= max_len_; ++k) power_[k] = power_[k - 1] * n;
  for (std::size_t k = 1; k <= max_len_; ++k) offset_[k + 1] = offset_[k] + power_[k];
  const std::size_t count = offset_[max_len_ + 1];
  parent_.resize(count);
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});

  const Element e = group.identity();
  Word w;
  Word shorter;
  for (std::size_t k = 2; k <= max_len_; ++k) {
    w.assign(k, 0);
    for (std::size_t v = 0; v < power_[k]; ++v) {
      const std::size_t self = offset_[k] + v;
      for (std::size_t p = 0; p + 1 < k; ++p) {
        // [g][e] -> [g]
        if (w[p + 1] == e) {
          shorter.assign(w.begin(), w.end());
          shorter.erase(shorter.begin() + static_cast<std::ptrdiff_t>(p + 1));
          unite(self, index_of(shorter));
        }
        if (p + 2 < k) {
          // [g^-1][g][h] -> [g^-1][gh]
          if (group.multiply(w[p], w[p + 1]) == e) {
            shorter.assign(w.begin(), w.end());
            shorter[p + 1] = group.multiply(w[p + 1], w[p + 2]);
            shorter.erase(shorter.begin() + static_cast<std::ptrdiff_t>(p + 2));
            unite(self, index_of(shorter));
          }
          // [g][h][h^-1] -> [gh][h^-1]
          if (group.multiply(w[p + 1], w[p + 2]) == e) {
            shorter.assign(w.begin(), w.end());
            shorter[p] = group.multiply(w[p], w[p + 1]);
            shorter.erase(shorter.begin() + static_cast<std::ptrdiff_t>(p + 1));
            unite(self, index_of(shorter));
          }
        }
      }
      // odometer, last letter fastest
      for (std::size_t i = k; i-- > 0;) {
        if (++w[i] < n) break;
        w[i] = 0;
      }
    }
  }

  // Classes are the union-find classes holding a word of length <= M.
  const std::size_t certified = certified_len();
  const std::size_t short_count = offset_[certified + 1];
  const std::size_t none = static_cast<std::size_t>(-1);
  class_id_.assign(count, none);
  for (std::size_t i = 0; i < short_count; ++i) {
    if (find(i) != i) continue;
    class_id_[i] = reps_.size();
    reps_.push_back(word_at(i));
  }
  auto id_of = [&](const Word& w) { return class_id_[find(index_of(w))]; };

  // Every word of length M + 1 must already have a shorter representative.
  for (std::size_t i = short_count; i < offset_[certified + 2]; ++i) {
    if (class_id_[find(i)] == none) {
      throw Error(ErrorKind::BoundTooSmall, "closure at length " + std::to_string(max_len_) + " leaves " +
                                                render(group, word_at(i)) + " without a word of length <= " +
                                                std::to_string(certified));
    }
  }

  const std::size_t classes = reps_.size();
  right_.assign(classes * n, 0);
  left_.assign(classes * n, 0);
  for (std::size_t c = 0; c < classes; ++c) {
    const Word& r = reps_[c];
    for (Element g = 0; g < n; ++g) {
      Word rg = r;
      rg.push_back(g);
      right_[c * n + g] = id_of(rg);
      Word gr{g};
      gr.insert(gr.end(), r.begin(), r.end());
      left_[c * n + g] = id_of(gr);
    }
  }

  // Appending or prepending a letter must not depend on the representative.
  for (std::size_t i = 0; i < short_count; ++i) {
    const std::size_t c = class_id_[find(i)];
    const Word wi = word_at(i);
    for (Element g = 0; g < n; ++g) {
      Word rg = wi;
      rg.push_back(g);
      Word gr{g};
      gr.insert(gr.end(), wi.begin(), wi.end());
      const bool right_ok = id_of(rg) == right_[c * n + g];
      const bool left_ok = id_of(gr) == left_[c * n + g];
      if (!right_ok || !left_ok) {
        throw Error(ErrorKind::BoundTooSmall,
                    "closure at length " + std::to_string(max_len_) + " is not a congruence: " +
                        (right_ok ? render(group, gr) : render(group, rg)) + " and the same product on " +
                        render(group, reps_[c]) + " fall in different classes");
      }
    }
  }

  // Left and right translations commute, so the classes form a semigroup.
  for (std::size_t c = 0; c < classes; ++c)
    for (Element g = 0; g < n; ++g)
      for (Element h = 0; h < n; ++h) {
        if (left_[right_[c * n + h] * n + g] != right_[left_[c * n + g] * n + h]) {
          throw Error(ErrorKind::BoundTooSmall, "closure at length " + std::to_string(max_len_) +
                                                    ": [" + group.name(g) + "]" + render(group, reps_[c]) + "[" +
                                                    group.name(h) + "] depends on the bracketing");
        }
      }
}

std::size_t WordOracle::index_of(const Word& w) const {
  if (w.empty() || w.size() > max_len_) {
    throw Error(ErrorKind::IndexOutOfRange, "word length " + std::to_string(w.size()) + " outside 1.." +
                                                std::to_string(max_len_));
  }
  std::size_t v = 0;
  for (auto x : w) {
    if (x >= order_) throw Error(ErrorKind::IndexOutOfRange, "letter " + std::to_string(x) + " outside the group");
    v = v * order_ + x;
  }
  return offset_[w.size()] + v;
}

Word WordOracle::word_at(std::size_t index) const {
  std::size_t k = 1;
  while (offset_[k + 1] <= index) ++k;
  std::size_t v = index - offset_[k];
  Word w(k);
  for (std::size_t i = k; i-- > 0;) {
    w[i] = v % order_;
    v /= order_;
  }
  return w;
}

std::size_t WordOracle::find(std::size_t i) const {
  std::size_t root = i;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[i] != root) {
    std::size_t next = parent_[i];
    parent_[i] = root;
    i = next;
  }
  return root;
}

void WordOracle::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return;
  if (a < b) {
    parent_[b] = a;
  } else {
    parent_[a] = b;
  }
}

std::size_t WordOracle::class_of(const Word& word) const {
  if (word.empty()) throw Error(ErrorKind::IndexOutOfRange, "empty word");
  std::size_t c = class_id_[find(index_of(Word{word.front()}))];
  for (std::size_t i = 1; i < word.size(); ++i) {
    if (word[i] >= order_) throw Error(ErrorKind::IndexOutOfRange, "letter " + std::to_string(word[i]) + " outside the group");
    c = right_multiply(c, word[i]);
  }
  return c;
}

std::size_t WordOracle::product(std::size_t c1, std::size_t c2) const {
  std::size_t c = c1;
  for (auto g : representative(c2)) c = right_multiply(c, g);
  return c;
}

Word oracle_product(const GroupTable& group, const Word& w1, const Word& w2, std::optional<std::size_t> max_len,
                    std::size_t max_words) {
  if (w1.empty() || w2.empty()) throw Error(ErrorKind::IndexOutOfRange, "oracle words must be nonempty");
  const std::size_t joined = w1.size() + w2.size();
  std::size_t len = max_len.value_or(2 * joined + 4);
  const std::size_t floor = 4;
  if (len < floor) {
    throw Error(ErrorKind::BoundTooSmall, "word length bound must be at least 4");
  }
  while (len > floor && total_words(group.order(), len, max_words) > max_words) --len;
  WordOracle oracle(group, len, max_words);
  Word joined_word = w1;
  joined_word.insert(joined_word.end(), w2.begin(), w2.end());
  return oracle.representative(oracle.class_of(joined_word));
}

OracleCheck oracle_check(const SemigroupTable& table, std::optional<std::size_t> max_word_len) {
  const GroupTable& group = table.group();
  const ExelSemigroup& sg = table.semigroup();
  const std::size_t rep_len = max_word_len.value_or(group.order());

  std::vector<Word> words;
  words.reserve(table.size());
  for (const auto& x : table.elements()) {
    Word w = sg.representative_word(x);
    if (w.size() > rep_len) {
      throw Error(ErrorKind::BoundTooSmall, "representative of " + sg.to_text(x) + " has length " +
                                                std::to_string(w.size()) + " > " + std::to_string(rep_len));
    }
    words.push_back(std::move(w));
  }

  WordOracle oracle(group, std::max<std::size_t>(rep_len + 2, 4));
  OracleCheck out;
  out.closure_len = oracle.max_len();
  out.oracle_classes = oracle.class_count();
  out.engine_elements = table.size();

  std::vector<std::size_t> cls(table.size());
  std::vector<bool> hit(oracle.class_count(), false);
  bool injective = true;
  for (std::size_t i = 0; i < table.size(); ++i) {
    cls[i] = oracle.class_of(words[i]);
    if (hit[cls[i]]) injective = false;
    hit[cls[i]] = true;
  }
  out.bijective = injective && out.oracle_classes == out.engine_elements;

  for (std::size_t i = 0; i < table.size(); ++i) {
    for (std::size_t j = 0; j < table.size(); ++j) {
      ++out.pairs;
      const std::size_t expected = oracle.product(cls[i], cls[j]);
      if (cls[table.product(i, j)] == expected) {
        ++out.agreeing;
      } else if (!out.first_disagreement) {
        out.first_disagreement = table.text(i) + " * " + table.text(j) + " = " + table.text(table.product(i, j)) +
                                 " but the oracle gives " + render(group, oracle.representative(expected));
      }
    }
  }
  return out;
}

}  // namespace excross
