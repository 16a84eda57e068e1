#pragma once

#include <compare>

#include "dbseq/sequence.hpp"
#include "dbseq/word.hpp"

namespace dbseq {

Word reverse(const Word& w);

/// sigma x -> x sigma. Requires |w| >= 1.
Word rotate_left(const Word& w);
Word rotate_right(const Word& w);

std::strong_ordering lex_compare(const Word& a, const Word& b);

/// Co-lexicographic order: compare from the right. A suffix of the other
/// word sorts first, so this agrees with lex_compare(reverse(a), reverse(b))
/// for all lengths.
std::strong_ordering colex_compare(const Word& a, const Word& b);

/// sigma -> k-1-sigma for every symbol. Throws DomainError if a symbol
/// is >= k.
Word complement(const Word& w, Symbol k);

/// Aperiodic and lexicographically minimal among its rotations. Throws
/// DomainError for the empty word.
bool is_lyndon(const Word& w);

/// Smallest p dividing |w| with w = x^(|w|/p), |x| = p.
std::size_t period(const Word& w);

/// Converts a complete (n,k) sequence between the pmx/pmn/rpmx/rpmn
/// forms. Switching between reversed and forward forms reverses the word
/// order and each word; switching families complements every symbol.
/// Throws InvalidInput if `seq` is not complete.
DBSequence transform_sequence(const DBSequence& seq, Variant from, Variant to);

}  // namespace dbseq
