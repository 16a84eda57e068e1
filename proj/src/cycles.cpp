#include "dbseq/cycles.hpp"

#include <algorithm>
#include <string>

#include "dbseq/words.hpp"

namespace dbseq {

Word KeyDecomposition::recompose() const {
  Word out = Word::repeat(0, zeros);
  if (head) out.append(*head);
  return out.append(tail);
}

Word KeyDecomposition::decremented() const {
  if (!head) throw DomainError("the all-zero key-word has no head to decrement");
  return Word::repeat(0, zeros) + (*head - 1) + tail;
}

Word KeyDecomposition::anchor() const {
  if (!head) throw DomainError("the all-zero cycle has no anchor");
  return ((*head - 1) + tail) + Word::repeat(0, zeros);
}

Word KeyDecomposition::first() const {
  if (!head) return Word::repeat(0, zeros);
  return (tail + Word::repeat(0, zeros)) + *head;
}

Word KeyDecomposition::last() const {
  if (!head) return Word::repeat(0, zeros);
  return (*head + tail) + Word::repeat(0, zeros);
}

Cycle::Cycle(Word key) : key_(std::move(key)) {
  const auto parts = decompose(key_);
  members_.push_back(parts.first());
  for (Word next = rotate_left(members_.front()); next != members_.front();
       next = rotate_left(next))
    members_.push_back(next);
}

std::size_t max_rotation_index(const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) throw DomainError("max_rotation_index of the empty word");
  auto at = [&](std::size_t i) { return w[i % n]; };

  std::vector<std::ptrdiff_t> fail(2 * n, -1);
  std::size_t best = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const Symbol sj = at(j);
    std::ptrdiff_t i = fail[j - best - 1];
    while (i != -1 && sj != at(best + i + 1)) {
      if (sj > at(best + i + 1)) best = j - i - 1;
      i = fail[i];
    }
    if (i == -1 && sj != at(best)) {
      if (sj > at(best)) best = j;
      fail[j - best] = -1;
    } else {
      fail[j - best] = i + 1;
    }
  }
  return best % n;
}

Word keyword_of(const Word& w) {
  // Colex order on rotations of w is lex order on rotations of reverse(w).
  const Word r = reverse(w);
  const std::size_t start = max_rotation_index(r);
  std::vector<Symbol> rotated;
  rotated.reserve(r.size());
  rotated.insert(rotated.end(), r.begin() + start, r.end());
  rotated.insert(rotated.end(), r.begin(), r.begin() + start);
  std::reverse(rotated.begin(), rotated.end());
  return Word(std::move(rotated));
}

bool is_keyword(const Word& w) { return keyword_of(w) == w; }

KeyDecomposition decompose(const Word& key) {
  if (key.empty() || !is_keyword(key))
    throw InvalidInput("not a key-word: " + to_string(key));
  KeyDecomposition out;
  while (out.zeros < key.size() && key[out.zeros] == 0) ++out.zeros;
  if (out.zeros < key.size()) {
    out.head = key[out.zeros];
    out.tail = key.sub(out.zeros + 1);
  }
  return out;
}

Cycle cycle_of(const Word& w) { return Cycle(keyword_of(w)); }

std::vector<Word> enumerate_keywords(std::size_t n, Symbol k) {
  if (n == 0 || k == 0) throw InvalidInput("enumerate_keywords needs n >= 1 and k >= 1");
  const auto total = checked_power(k, n);
  if (!total) throw InvalidInput("k^n overflows");

  std::vector<Word> keys;
  for (std::uint64_t r = 0; r < *total; ++r) {
    Word w = unrank(r, n, k);
    if (is_keyword(w)) keys.push_back(std::move(w));
  }
  std::sort(keys.begin(), keys.end(),
            [](const Word& a, const Word& b) { return colex_compare(a, b) < 0; });
  return keys;
}

}  // namespace dbseq
