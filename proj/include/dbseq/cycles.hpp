#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dbseq/word.hpp"

namespace dbseq {

/// A key-word split as 0^zeros (head) tail. `head` is absent only for
/// the all-zero word, in which case `tail` is empty.
struct KeyDecomposition {
  std::size_t zeros = 0;
  std::optional<Symbol> head;
  Word tail;

  Word recompose() const;

  /// 0^l (head-1) tail: the key-word one step down in colex order
  /// along the head symbol. Requires a head.
  Word decremented() const;
  /// (head-1) tail 0^l: the word a new cycle is spliced after.
  Word anchor() const;
  /// tail 0^l head.
  Word first() const;
  /// head tail 0^l.
  Word last() const;

  bool operator==(const KeyDecomposition&) const = default;
};

/// The rotation class of a key-word, listed from first() to last() so
/// that each member is the left rotation of the previous one.
class Cycle {
 public:
  explicit Cycle(Word key);

  const Word& key() const { return key_; }
  const Word& first() const { return members_.front(); }
  const Word& last() const { return members_.back(); }
  const std::vector<Word>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }

 private:
  Word key_;
  std::vector<Word> members_;
};

/// Index of the lexicographically largest rotation of w (Booth's
/// failure-function scan, linear time). Requires |w| >= 1.
std::size_t max_rotation_index(const Word& w);

/// Colex maximal among its rotations.
bool is_keyword(const Word& w);

/// The unique colex-maximal rotation of w, computed in O(|w|).
Word keyword_of(const Word& w);

/// Throws InvalidInput if `key` is not a key-word.
KeyDecomposition decompose(const Word& key);

Cycle cycle_of(const Word& w);

/// All key-words of [k]^n in strictly increasing colex order.
std::vector<Word> enumerate_keywords(std::size_t n, Symbol k);

}  // namespace dbseq
