#include "dbseq/words.hpp"

#include <algorithm>
#include <string>

namespace dbseq {

Word reverse(const Word& w) {
  std::vector<Symbol> out(w.begin(), w.end());
  std::reverse(out.begin(), out.end());
  return Word(std::move(out));
}

Word rotate_left(const Word& w) {
  if (w.empty()) throw DomainError("rotate_left of the empty word");
  std::vector<Symbol> out(w.begin(), w.end());
  std::rotate(out.begin(), out.begin() + 1, out.end());
  return Word(std::move(out));
}

Word rotate_right(const Word& w) {
  if (w.empty()) throw DomainError("rotate_right of the empty word");
  std::vector<Symbol> out(w.begin(), w.end());
  std::rotate(out.begin(), out.end() - 1, out.end());
  return Word(std::move(out));
}

std::strong_ordering lex_compare(const Word& a, const Word& b) { return a <=> b; }

std::strong_ordering colex_compare(const Word& a, const Word& b) {
  return std::lexicographical_compare_three_way(a.symbols().rbegin(), a.symbols().rend(),
                                                b.symbols().rbegin(), b.symbols().rend());
}

Word complement(const Word& w, Symbol k) {
  std::vector<Symbol> out;
  out.reserve(w.size());
  for (Symbol s : w) {
    if (s >= k)
      throw DomainError("symbol " + std::to_string(s) + " outside alphabet of size " +
                        std::to_string(k));
    out.push_back(k - 1 - s);
  }
  return Word(std::move(out));
}

bool is_lyndon(const Word& w) {
  if (w.empty()) throw DomainError("is_lyndon of the empty word");
  // Single Duval pass: w is Lyndon iff it is one factor whose period is |w|.
  std::size_t i = 0;
  std::size_t j = 1;
  while (j < w.size()) {
    if (w[i] < w[j]) {
      i = 0;
    } else if (w[i] == w[j]) {
      ++i;
    } else {
      return false;
    }
    ++j;
  }
  return i == 0;
}

std::size_t period(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = w[i] == w[i - p];
    if (ok) return p;
  }
  return n;
}

DBSequence transform_sequence(const DBSequence& seq, Variant from, Variant to) {
  if (!seq.is_complete())
    throw InvalidInput("transform_sequence needs a complete (n,k) sequence");
  if (from == to) return seq;

  const bool flip_order = is_reversed(from) != is_reversed(to);
  const bool flip_symbols = is_min_family(from) != is_min_family(to);
  const Symbol k = *seq.k();

  DBSequence out(seq.n(), seq.k());
  out.reserve(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    Word w = flip_order ? reverse(seq.word(seq.size() - 1 - i)) : seq.word(i);
    if (flip_symbols) w = complement(w, k);
    out.push_back(w);
  }
  return out;
}

}  // namespace dbseq
