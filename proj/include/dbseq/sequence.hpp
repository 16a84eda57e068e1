#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "dbseq/word.hpp"

namespace dbseq {

/// The four greedy-extreme sequences: prefer-max, prefer-min, and their
/// reverses.
enum class Variant { pmx, pmn, rpmx, rpmn };

std::string_view to_string(Variant v);
std::optional<Variant> parse_variant(std::string_view text);

/// True for the reversed variants (rpmx, rpmn).
constexpr bool is_reversed(Variant v) { return v == Variant::rpmx || v == Variant::rpmn; }
/// True for the prefer-min family (pmn, rpmn).
constexpr bool is_min_family(Variant v) { return v == Variant::pmn || v == Variant::rpmn; }

/// An ordered list of n-words. `k` is absent for prefixes of an
/// infinite sequence over the natural numbers. Words are stored
/// contiguously, n symbols each.
class DBSequence {
 public:
  DBSequence(std::size_t n, std::optional<Symbol> k) : n_(n), k_(k) {}
  DBSequence(std::size_t n, std::optional<Symbol> k, const std::vector<Word>& words);

  std::size_t n() const { return n_; }
  std::optional<Symbol> k() const { return k_; }
  std::size_t size() const { return n_ == 0 ? 0 : symbols_.size() / n_; }
  bool empty() const { return symbols_.empty(); }

  std::span<const Symbol> view(std::size_t i) const {
    return std::span<const Symbol>(symbols_).subspan(i * n_, n_);
  }
  Word word(std::size_t i) const { return Word(view(i)); }
  Word front() const { return word(0); }
  Word back() const { return word(size() - 1); }

  /// Throws InvalidInput if |w| != n.
  void push_back(const Word& w);
  void push_back(std::span<const Symbol> w);
  void reserve(std::size_t words) { symbols_.reserve(words * n_); }

  std::vector<Word> words() const;

  /// Whether the word count equals k^n (false for infinite prefixes).
  bool is_complete() const;

  bool operator==(const DBSequence&) const = default;

 private:
  std::size_t n_;
  std::optional<Symbol> k_;
  std::vector<Symbol> symbols_;
};

}  // namespace dbseq
