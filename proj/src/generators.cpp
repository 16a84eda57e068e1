#include "dbseq/generators.hpp"

#include <algorithm>
#include <string>

#include "dbseq/joining.hpp"
#include "dbseq/shiftrules.hpp"
#include "dbseq/words.hpp"

namespace dbseq {

namespace {

constexpr std::uint64_t kMaxWords = std::uint64_t{1} << 32;

std::uint64_t word_count(std::size_t n, Symbol k) {
  if (n == 0 || k == 0) throw InvalidInput("need n >= 1 and k >= 1");
  const auto total = checked_power(k, n);
  if (!total || *total > kMaxWords) throw InvalidInput("k^n too large");
  return *total;
}

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::greedy: return "greedy";
    case Method::cycle_join: return "cycle-join";
    case Method::shift_rule: return "shift-rule";
    case Method::fkm: return "fkm";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view text) {
  for (auto m : {Method::greedy, Method::cycle_join, Method::shift_rule, Method::fkm})
    if (to_string(m) == text) return m;
  return std::nullopt;
}

DBSequence greedy(std::size_t n, Symbol k, Variant variant) {
  if (variant != Variant::pmx && variant != Variant::pmn)
    throw InvalidInput("greedy builds pmx or pmn only");
  const std::uint64_t total = word_count(n, k);
  const std::uint64_t top_weight = total / k;
  const bool prefer_max = variant == Variant::pmx;

  std::vector<bool> visited(total, false);
  const Word start = prefer_max ? Word::repeat(0, n - 1) + (k - 1)
                                : Word::repeat(k - 1, n - 1) + Symbol{0};
  std::uint64_t cur = rank(start, k);

  DBSequence out(n, k);
  out.reserve(total);
  for (;;) {
    visited[cur] = true;
    out.push_back(unrank(cur, n, k));
    const std::uint64_t shifted = (cur % top_weight) * k;
    std::optional<std::uint64_t> chosen;
    for (Symbol i = 0; i < k; ++i) {
      const Symbol tau = prefer_max ? k - 1 - i : i;
      if (!visited[shifted + tau]) {
        chosen = shifted + tau;
        break;
      }
    }
    if (!chosen) break;
    cur = *chosen;
  }
  return out;
}

std::vector<Word> fkm_lyndon_words(std::size_t n, Symbol k, LyndonMethod method) {
  word_count(n, k);
  std::vector<Word> out;

  if (method == LyndonMethod::brute_force) {
    for (std::size_t d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      const std::uint64_t total = *checked_power(k, d);
      for (std::uint64_t r = 0; r < total; ++r) {
        Word w = unrank(r, d, k);
        if (is_lyndon(w)) out.push_back(std::move(w));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Lyndon words of length <= n in lex order, keeping lengths dividing n.
  std::vector<Symbol> w{0};
  for (;;) {
    const std::size_t len = w.size();
    if (n % len == 0) out.emplace_back(w);
    while (w.size() < n) w.push_back(w[w.size() - len]);
    while (!w.empty() && w.back() == k - 1) w.pop_back();
    if (w.empty()) break;
    ++w.back();
  }
  return out;
}

std::vector<Symbol> fkm_sequence(std::size_t n, Symbol k) {
  std::vector<Symbol> out;
  out.reserve(word_count(n, k));
  for (const auto& w : fkm_lyndon_words(n, k)) out.insert(out.end(), w.begin(), w.end());
  return out;
}

DBSequence stream_rpmx(std::size_t n, std::size_t limit) {
  if (n == 0 || limit == 0) throw InvalidInput("stream needs n >= 1 and limit >= 1");
  return ShiftRule(Variant::rpmx, Alphabet::unbounded()).walk(n, limit);
}

std::vector<Symbol> word_stream_to_symbols(const DBSequence& seq) {
  if (seq.empty()) throw InvalidInput("empty sequence");
  std::vector<Symbol> out;
  out.reserve(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) out.push_back(seq.view(i).back());
  return out;
}

DBSequence symbols_to_words(const std::vector<Symbol>& symbols, std::size_t n, Symbol k) {
  const std::uint64_t total = word_count(n, k);
  if (symbols.size() != total)
    throw InvalidInput("cyclic stream of " + std::to_string(symbols.size()) +
                       " symbols, expected k^n = " + std::to_string(total));
  const std::size_t len = symbols.size();
  DBSequence out(n, k);
  out.reserve(len);
  std::vector<Symbol> w(n);
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = 0; j < n; ++j) w[j] = symbols[(i + len * n + j + 1 - n) % len];
    out.push_back(std::span<const Symbol>(w));
  }
  return out;
}

Variant native_variant(Method m, Variant requested) {
  switch (m) {
    case Method::greedy: return is_min_family(requested) ? Variant::pmn : Variant::pmx;
    case Method::cycle_join: return Variant::rpmx;
    case Method::shift_rule: return requested;
    case Method::fkm: return Variant::pmn;
  }
  return requested;
}

DBSequence generate(const GeneratorSpec& spec) {
  if (!spec.k) {
    if (spec.method != Method::shift_rule || spec.variant != Variant::rpmx)
      throw InvalidInput("infinite streams are rpmx via the shift rule");
    if (!spec.limit) throw InvalidInput("infinite streams need a limit");
    return stream_rpmx(spec.n, *spec.limit);
  }

  const std::size_t n = spec.n;
  const Symbol k = *spec.k;
  word_count(n, k);
  const Variant native = native_variant(spec.method, spec.variant);

  DBSequence seq = [&] {
    switch (spec.method) {
      case Method::greedy: return greedy(n, k, native);
      case Method::cycle_join: return build(n, k, false).sequence();
      case Method::shift_rule: return ShiftRule(native, Alphabet::bounded(k)).walk(n);
      case Method::fkm: return symbols_to_words(fkm_sequence(n, k), n, k);
    }
    throw InvalidInput("unknown method");
  }();
  if (native != spec.variant) seq = transform_sequence(seq, native, spec.variant);

  if (spec.limit && *spec.limit < seq.size()) {
    DBSequence cut(seq.n(), seq.k());
    cut.reserve(*spec.limit);
    for (std::size_t i = 0; i < *spec.limit; ++i) cut.push_back(seq.view(i));
    return cut;
  }
  return seq;
}

}  // namespace dbseq
