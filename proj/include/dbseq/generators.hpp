#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "dbseq/sequence.hpp"
#include "dbseq/word.hpp"

namespace dbseq {

enum class Method { greedy, cycle_join, shift_rule, fkm };

std::string_view to_string(Method m);
std::optional<Method> parse_method(std::string_view text);

/// What to generate. `k` is absent only for infinite rpmx streams, which
/// then need a `limit`.
struct GeneratorSpec {
  Method method = Method::cycle_join;
  Variant variant = Variant::rpmx;
  std::size_t n = 1;
  std::optional<Symbol> k;
  std::optional<std::size_t> limit;
};

/// Prefer-max or prefer-min greedy sequence. `variant` must be pmx or pmn.
DBSequence greedy(std::size_t n, Symbol k, Variant variant);

enum class LyndonMethod {
  /// Iterative prenecklace generation in lex order.
  generate,
  /// Filters every word of each length dividing n through is_lyndon.
  brute_force,
};

/// Lyndon words over [k] whose length divides n, in lex order.
std::vector<Word> fkm_lyndon_words(std::size_t n, Symbol k,
                                   LyndonMethod method = LyndonMethod::generate);

/// Concatenation of fkm_lyndon_words(n, k): a cyclic stream of k^n symbols.
std::vector<Symbol> fkm_sequence(std::size_t n, Symbol k);

/// First `limit` words of the infinite rpmx(n) sequence over the naturals.
DBSequence stream_rpmx(std::size_t n, std::size_t limit);

/// Last symbol of each word; word i maps to stream position i.
std::vector<Symbol> word_stream_to_symbols(const DBSequence& seq);

/// Inverse of word_stream_to_symbols for a complete cyclic stream:
/// word i is the n symbols ending at position i, read cyclically.
DBSequence symbols_to_words(const std::vector<Symbol>& symbols, std::size_t n, Symbol k);

/// Runs any method and converts to the requested variant. FKM is native
/// pmn, greedy native pmx/pmn, cycle-join native rpmx; shift rules exist
/// for all four. Streams (no k) are rpmx via the shift rule only.
DBSequence generate(const GeneratorSpec& spec);

/// The native variant a method produces before any transform.
Variant native_variant(Method m, Variant requested);

}  // namespace dbseq
