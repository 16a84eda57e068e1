#include "dbseq/sequence.hpp"

#include <string>

namespace dbseq {

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::pmx: return "pmx";
    case Variant::pmn: return "pmn";
    case Variant::rpmx: return "rpmx";
    case Variant::rpmn: return "rpmn";
  }
  return "?";
}

std::optional<Variant> parse_variant(std::string_view text) {
  for (auto v : {Variant::pmx, Variant::pmn, Variant::rpmx, Variant::rpmn})
    if (to_string(v) == text) return v;
  return std::nullopt;
}

DBSequence::DBSequence(std::size_t n, std::optional<Symbol> k, const std::vector<Word>& words)
    : n_(n), k_(k) {
  reserve(words.size());
  for (const auto& w : words) push_back(w);
}

void DBSequence::push_back(const Word& w) { push_back(w.symbols()); }

void DBSequence::push_back(std::span<const Symbol> w) {
  if (w.size() != n_)
    throw InvalidInput("word of length " + std::to_string(w.size()) +
                       " in a sequence of " + std::to_string(n_) + "-words");
  symbols_.insert(symbols_.end(), w.begin(), w.end());
}

std::vector<Word> DBSequence::words() const {
  std::vector<Word> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(word(i));
  return out;
}

bool DBSequence::is_complete() const {
  if (!k_) return false;
  auto total = checked_power(*k_, n_);
  return total && size() == *total;
}

}  // namespace dbseq
