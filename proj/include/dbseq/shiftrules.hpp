#pragma once

#include <optional>

#include "dbseq/sequence.hpp"
#include "dbseq/word.hpp"

namespace dbseq {

/// Whether w is the last word of its cycle. Works on the word alone in
/// O(|w|) time.
bool is_last(const Word& w);

/// Which branch of the successor rule fired.
enum class SuccCase { increment = 1, zero = 2, rotate = 3 };

/// Successor of w in rpmx(n,k) (bounded alphabet) or in the infinite
/// rpmx(n) (unbounded). Returns nullopt at the terminal word (k-1)0^(n-1)
/// of a bounded alphabet. Throws DomainError for an empty word or a
/// symbol outside the alphabet.
std::optional<Word> succ(const Word& w, const Alphabet& alphabet);

/// The branch succ takes on w (no terminal check).
SuccCase succ_case(const Word& w);

/// Successor in rpmn(n,k): complement, succ, complement. nullopt at the
/// terminal word 0(k-1)^(n-1).
std::optional<Word> next(const Word& w, Symbol k);

/// Successor in pmn(n,k), defined through next: if next(s1..sn) =
/// s2..s(n+1) then next_inv(s(n+1)..s2) = sn..s1. nullopt at (k-1)^n.
std::optional<Word> next_inv(const Word& w, Symbol k);

/// Successor in pmx(n,k): the reversal conjugate of succ. nullopt at 0^n.
std::optional<Word> pmx_successor(const Word& w, Symbol k);

/// A shift rule bound to one variant and alphabet. pmx and pmn need a
/// bounded alphabet; rpmn is defined through complements, so it does too.
class ShiftRule {
 public:
  ShiftRule(Variant variant, Alphabet alphabet);

  Variant variant() const { return variant_; }
  const Alphabet& alphabet() const { return alphabet_; }

  /// Starting word of the variant's sequence for length n.
  Word start(std::size_t n) const;
  std::optional<Word> operator()(const Word& w) const;

  /// Walks from start(n) until the rule stops or `limit` words are out.
  DBSequence walk(std::size_t n, std::optional<std::size_t> limit = std::nullopt) const;

 private:
  Variant variant_;
  Alphabet alphabet_;
};

}  // namespace dbseq
