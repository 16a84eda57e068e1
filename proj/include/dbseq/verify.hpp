#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "dbseq/joining.hpp"
#include "dbseq/sequence.hpp"

namespace dbseq {

/// First failure found by a check.
struct Counterexample {
  std::vector<std::size_t> positions;
  std::vector<Word> words;
  std::string message;
};

struct CheckReport {
  std::string name;
  std::size_t n = 0;
  std::optional<Symbol> k;
  bool pass = true;
  std::optional<Counterexample> counterexample;

  static CheckReport ok(std::string name, std::size_t n, std::optional<Symbol> k);
  static CheckReport fail(std::string name, std::size_t n, std::optional<Symbol> k,
                          Counterexample why);
};

/// One line: "PASS name n=3 k=3" or
/// "FAIL name n=3 k=3 at=0,1 words=001,000: message".
std::string to_line(const CheckReport& report);
nlohmann::json to_json(const CheckReport& report);

/// Definition check: k^n distinct words of [k]^n, each word's tail is the
/// next word's head, and the last word wraps onto the first.
CheckReport check_db(const DBSequence& seq, std::size_t n, Symbol k);

/// Identical word lists; reports the first differing position.
CheckReport check_equal(const DBSequence& a, const DBSequence& b);

/// For every 1 <= k < k_max, the (n,k) sequence in `variant` form is a
/// strict prefix of the (n,k+1) one. Sequences come from the cycle join.
CheckReport check_onion(std::size_t n, Symbol k_max, Variant variant = Variant::rpmx);

/// The nesting and key-word relations of a recorded join trace, each run
/// as its own sub-check. Throws InvalidInput if the trace has no log.
std::vector<CheckReport> check_structure_suite(const JoinTrace& trace);

/// All of check_structure_suite folded into one report; a failure names
/// the violated relation.
CheckReport check_structure(const JoinTrace& trace);

/// Steps a fresh join of (n,k) and checks every intermediate ordering:
/// starts at 0^n, ends in a word sigma 0^(n-1), and every word's tail
/// heads its successor.
CheckReport check_build_invariants(std::size_t n, Symbol k);

}  // namespace dbseq
