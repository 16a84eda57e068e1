#include "dbseq/shiftrules.hpp"

#include <limits>
#include <string>

#include "dbseq/cycles.hpp"
#include "dbseq/words.hpp"

namespace dbseq {

namespace {

void require_in_alphabet(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) throw DomainError("shift rules need a non-empty word");
  for (Symbol s : w)
    if (!alphabet.contains(s))
      throw DomainError("symbol " + std::to_string(s) + " outside the alphabet in " +
                        to_string(w));
}

bool is_terminal_rpmx(const Word& w, Symbol k) {
  if (w.front() != k - 1) return false;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] != 0) return false;
  return true;
}

// The unique p with rule(p) == target and p == sigma . target[0..n-2].
template <typename Rule>
std::optional<Word> find_predecessor(const Word& target, Symbol k, Rule rule) {
  const Word body = target.sub(0, target.size() - 1);
  for (Symbol sigma = 0; sigma < k; ++sigma) {
    Word p = sigma + body;
    if (auto out = rule(p); out && *out == target) return p;
  }
  return std::nullopt;
}

}  // namespace

bool is_last(const Word& w) {
  if (w.empty()) throw DomainError("is_last of the empty word");
  const Word key = keyword_of(w);
  KeyDecomposition parts;
  while (parts.zeros < key.size() && key[parts.zeros] == 0) ++parts.zeros;
  if (parts.zeros < key.size()) {
    parts.head = key[parts.zeros];
    parts.tail = key.sub(parts.zeros + 1);
  }
  return parts.last() == w;
}

SuccCase succ_case(const Word& w) {
  if (w.empty()) throw DomainError("succ of the empty word");
  const Symbol sigma = w.front();
  if (sigma == std::numeric_limits<Symbol>::max())
    throw DomainError("symbol too large for the successor rule");
  const Word tail = w.sub(1);
  if (is_last((sigma + 1) + tail)) return SuccCase::increment;
  if (is_last(w)) return SuccCase::zero;
  return SuccCase::rotate;
}

std::optional<Word> succ(const Word& w, const Alphabet& alphabet) {
  require_in_alphabet(w, alphabet);
  if (alphabet.is_bounded() && is_terminal_rpmx(w, alphabet.size())) return std::nullopt;

  const Symbol sigma = w.front();
  Word out = w.sub(1);
  switch (succ_case(w)) {
    case SuccCase::increment: return out.append(sigma + 1);
    case SuccCase::zero: return out.append(0);
    case SuccCase::rotate: return out.append(sigma);
  }
  return std::nullopt;
}

std::optional<Word> next(const Word& w, Symbol k) {
  const auto alphabet = Alphabet::bounded(k);
  require_in_alphabet(w, alphabet);
  auto out = succ(complement(w, k), alphabet);
  if (!out) return std::nullopt;
  return complement(*out, k);
}

std::optional<Word> next_inv(const Word& w, Symbol k) {
  require_in_alphabet(w, Alphabet::bounded(k));
  auto p = find_predecessor(reverse(w), k, [k](const Word& x) { return next(x, k); });
  if (!p) return std::nullopt;
  return reverse(*p);
}

std::optional<Word> pmx_successor(const Word& w, Symbol k) {
  const auto alphabet = Alphabet::bounded(k);
  require_in_alphabet(w, alphabet);
  auto p = find_predecessor(reverse(w), k,
                            [&alphabet](const Word& x) { return succ(x, alphabet); });
  if (!p) return std::nullopt;
  return reverse(*p);
}

ShiftRule::ShiftRule(Variant variant, Alphabet alphabet) : variant_(variant), alphabet_(alphabet) {
  if (variant != Variant::rpmx && !alphabet.is_bounded())
    throw InvalidInput(std::string(to_string(variant)) + " needs a bounded alphabet");
}

Word ShiftRule::start(std::size_t n) const {
  if (n == 0) throw InvalidInput("word length must be positive");
  const Symbol top = alphabet_.is_bounded() ? alphabet_.size() - 1 : 0;
  switch (variant_) {
    case Variant::rpmx: return Word::repeat(0, n);
    case Variant::rpmn: return Word::repeat(top, n);
    case Variant::pmx: return Word::repeat(0, n - 1) + top;
    case Variant::pmn: return Word::repeat(top, n - 1) + Symbol{0};
  }
  return {};
}

std::optional<Word> ShiftRule::operator()(const Word& w) const {
  switch (variant_) {
    case Variant::rpmx: return succ(w, alphabet_);
    case Variant::rpmn: return next(w, alphabet_.size());
    case Variant::pmx: return pmx_successor(w, alphabet_.size());
    case Variant::pmn: return next_inv(w, alphabet_.size());
  }
  return std::nullopt;
}

DBSequence ShiftRule::walk(std::size_t n, std::optional<std::size_t> limit) const {
  if (!limit && !alphabet_.is_bounded())
    throw InvalidInput("an unbounded walk needs a word limit");
  if (!limit) {
    // One past k^n, so a rule that fails to halt shows up as an extra word.
    const auto total = checked_power(alphabet_.size(), n);
    if (!total) throw InvalidInput("k^n overflows");
    limit = *total + 1;
  }
  DBSequence out(n, alphabet_.is_bounded() ? std::optional<Symbol>(alphabet_.size())
                                           : std::nullopt);
  if (limit && *limit == 0) return out;
  std::optional<Word> w = start(n);
  while (w) {
    out.push_back(*w);
    if (limit && out.size() >= *limit) break;
    w = (*this)(*w);
  }
  return out;
}

}  // namespace dbseq
