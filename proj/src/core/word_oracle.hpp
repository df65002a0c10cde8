#pragma once

// Ground truth for S(G) built from the defining relations alone, without the
// normal-form engine.
//
// All nonempty words of length <= L over the letters [g] are enumerated and
// merged by union-find along every relation instance
//   [g^-1][g][h] = [g^-1][gh],  [g][h][h^-1] = [gh][h^-1],  [g][e] = [g]
// at every position where the longer side fits. The bounded congruence can
// only be finer than the true one. With M = L - 2 the closure is accepted
// when every word of length M + 1 meets a word of length <= M, appending and
// prepending a letter are well defined on the classes of words of length
// <= M, and the two translations commute. Those classes then form a
// semigroup satisfying the relations, so the congruences coincide.
// Otherwise BoundTooSmall. The margin of two letters is needed because
// [e][g] = [g] is only reachable through [e][g][g^-1][g].

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "core/group.hpp"
#include "core/semigroup.hpp"

namespace excross {

using Word = std::vector<Element>;

class WordOracle {
 public:
  /// Closure over the words of length <= max_len. Throws BoundTooSmall when
  /// the closure is not certified, GroupTooLarge when the word count exceeds
  /// max_words.
  WordOracle(const GroupTable& group, std::size_t max_len, std::size_t max_words = kDefaultWordBudget);

  static constexpr std::size_t kDefaultWordBudget = 4'000'000;

  std::size_t max_len() const { return max_len_; }
  /// Length up to which classes are certified: max_len - 2.
  std::size_t certified_len() const { return max_len_ - 2; }
  std::size_t word_count() const { return parent_.size(); }
  std::size_t class_count() const { return reps_.size(); }

  /// Class id of an arbitrary nonempty word, via the right Cayley graph.
  std::size_t class_of(const Word& word) const;
  /// Shortlex-minimal word of the class.
  const Word& representative(std::size_t cls) const { return reps_.at(cls); }
  std::size_t product(std::size_t c1, std::size_t c2) const;
  std::size_t right_multiply(std::size_t cls, Element g) const { return right_.at(cls * order_ + g); }
  std::size_t left_multiply(Element g, std::size_t cls) const { return left_.at(cls * order_ + g); }

 private:
  std::size_t index_of(const Word& w) const;
  Word word_at(std::size_t index) const;
  std::size_t find(std::size_t i) const;
  void unite(std::size_t a, std::size_t b);

  std::size_t order_;
  std::size_t max_len_;
  std::vector<std::size_t> offset_;  // offset_[k] = index of the first word of length k
  std::vector<std::size_t> power_;
  mutable std::vector<std::size_t> parent_;
  std::vector<std::size_t> class_id_;  // by root word index
  std::vector<Word> reps_;
  std::vector<std::size_t> right_;
  std::vector<std::size_t> left_;
};

/// The class of w1·w2 as its shortlex-minimal word. max_len defaults to
/// 2(|w1| + |w2|) + 4 and is lowered to the largest bound whose word count
/// fits the budget, but never below 4.
Word oracle_product(const GroupTable& group, const Word& w1, const Word& w2,
                    std::optional<std::size_t> max_len = std::nullopt,
                    std::size_t max_words = WordOracle::kDefaultWordBudget);

struct OracleCheck {
  std::size_t closure_len = 0;
  std::size_t oracle_classes = 0;
  std::size_t engine_elements = 0;
  bool bijective = false;
  std::size_t pairs = 0;
  std::size_t agreeing = 0;
  std::optional<std::string> first_disagreement;

  double agreement_percent() const { return pairs == 0 ? 0.0 : 100.0 * static_cast<double>(agreeing) / static_cast<double>(pairs); }
  bool passed() const { return bijective && pairs > 0 && agreeing == pairs; }
};

/// Certifies the normal-form multiplication table against the oracle.
/// max_word_len bounds the representative words (default |G|, the
/// length of e_{all of G minus e}[e]); the closure runs at max_word_len + 2.
OracleCheck oracle_check(const SemigroupTable& table, std::optional<std::size_t> max_word_len = std::nullopt);

}  // namespace excross
