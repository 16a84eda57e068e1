#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dbseq {

/// Alphabet symbol. Symbols are non-negative integers; the unbounded
/// alphabet uses the same representation, so symbols are limited to
/// what fits in 32 bits (successor rules compute sigma+1).
using Symbol = std::uint32_t;

struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct NotFound : std::out_of_range {
  using std::out_of_range::out_of_range;
};

/// Either [k] = {0,...,k-1} or the natural numbers.
class Alphabet {
 public:
  static Alphabet bounded(Symbol k) {
    if (k == 0) throw InvalidInput("alphabet size must be positive");
    return Alphabet(k);
  }
  static Alphabet unbounded() { return Alphabet(std::nullopt); }

  bool is_bounded() const { return size_.has_value(); }
  /// Only meaningful for bounded alphabets.
  Symbol size() const { return size_.value(); }
  bool contains(Symbol s) const { return !size_ || s < *size_; }

  bool operator==(const Alphabet&) const = default;

 private:
  explicit Alphabet(std::optional<Symbol> k) : size_(k) {}
  std::optional<Symbol> size_;
};

/// A finite word, stored leftmost symbol first (index 0 is the first
/// symbol as written). The defaulted ordering is lexicographic with a
/// proper prefix sorting first.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Symbol> symbols) : symbols_(symbols) {}
  explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}
  explicit Word(std::span<const Symbol> symbols)
      : symbols_(symbols.begin(), symbols.end()) {}
  Word(std::size_t length, Symbol fill) : symbols_(length, fill) {}

  /// Parses "0120" (one digit per symbol) or "0,11,2" (comma separated).
  static Word parse(std::string_view text);

  /// `count` copies of `s`.
  static Word repeat(Symbol s, std::size_t count) { return Word(count, s); }

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }

  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  Symbol& operator[](std::size_t i) { return symbols_[i]; }
  Symbol front() const { return symbols_.front(); }
  Symbol back() const { return symbols_.back(); }

  auto begin() const { return symbols_.begin(); }
  auto end() const { return symbols_.end(); }

  std::span<const Symbol> symbols() const { return symbols_; }

  /// Symbols [pos, pos+count).
  Word sub(std::size_t pos, std::size_t count) const;
  Word sub(std::size_t pos) const { return sub(pos, size() - pos); }

  Word& append(Symbol s) {
    symbols_.push_back(s);
    return *this;
  }
  Word& append(const Word& w) {
    symbols_.insert(symbols_.end(), w.begin(), w.end());
    return *this;
  }

  /// Largest symbol, or nullopt for the empty word.
  std::optional<Symbol> max_symbol() const;

  friend Word operator+(Word a, const Word& b) { return std::move(a.append(b)); }
  friend Word operator+(Word a, Symbol s) { return std::move(a.append(s)); }
  friend Word operator+(Symbol s, const Word& b) {
    Word out;
    out.symbols_.reserve(b.size() + 1);
    out.symbols_.push_back(s);
    return std::move(out.append(b));
  }

  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

 private:
  std::vector<Symbol> symbols_;
};

/// Digits when every symbol is below 10 and `comma` is false, otherwise
/// comma-separated decimal integers.
std::string to_string(const Word& w, bool comma = false);

/// Formatting convention for a k-letter alphabet: digits for k <= 10.
inline bool uses_commas(Symbol k) { return k > 10; }

/// Rank of w in [k]^n read as a base-k numeral, leftmost symbol most
/// significant. Caller guarantees every symbol < k.
std::uint64_t rank(const Word& w, Symbol k);
Word unrank(std::uint64_t r, std::size_t n, Symbol k);

/// k^n, or nullopt when it does not fit in 64 bits.
std::optional<std::uint64_t> checked_power(std::uint64_t k, std::size_t n);

}  // namespace dbseq
