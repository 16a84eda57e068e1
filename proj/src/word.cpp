#include "dbseq/word.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

namespace dbseq {

Word Word::parse(std::string_view text) {
  std::vector<Symbol> out;
  if (text.find(',') == std::string_view::npos) {
    out.reserve(text.size());
    for (char c : text) {
      if (c < '0' || c > '9') throw InvalidInput("not a digit in word: " + std::string(text));
      out.push_back(static_cast<Symbol>(c - '0'));
    }
    return Word(std::move(out));
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto field = text.substr(pos, comma - pos);
    Symbol value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
      throw InvalidInput("bad symbol in word: " + std::string(text));
    out.push_back(value);
    pos = comma + 1;
  }
  return Word(std::move(out));
}

Word Word::sub(std::size_t pos, std::size_t count) const {
  if (pos > size() || count > size() - pos) throw std::out_of_range("Word::sub");
  return Word(symbols().subspan(pos, count));
}

std::optional<Symbol> Word::max_symbol() const {
  if (symbols_.empty()) return std::nullopt;
  return *std::max_element(symbols_.begin(), symbols_.end());
}

std::string to_string(const Word& w, bool comma) {
  if (!comma && w.max_symbol().value_or(0) > 9) comma = true;
  std::string out;
  out.reserve(comma ? w.size() * 3 : w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (comma) {
      if (i > 0) out.push_back(',');
      out += std::to_string(w[i]);
    } else {
      out.push_back(static_cast<char>('0' + w[i]));
    }
  }
  return out;
}

std::uint64_t rank(const Word& w, Symbol k) {
  std::uint64_t r = 0;
  for (Symbol s : w) r = r * k + s;
  return r;
}

Word unrank(std::uint64_t r, std::size_t n, Symbol k) {
  Word w(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    w[i] = static_cast<Symbol>(r % k);
    r /= k;
  }
  return w;
}

std::optional<std::uint64_t> checked_power(std::uint64_t k, std::size_t n) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (k != 0 && out > std::numeric_limits<std::uint64_t>::max() / k) return std::nullopt;
    out *= k;
  }
  return out;
}

}  // namespace dbseq
