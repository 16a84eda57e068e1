// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure or overrun of the criterion's time budget.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "dbseq/cycles.hpp"
#include "dbseq/generators.hpp"
#include "dbseq/joining.hpp"
#include "dbseq/shiftrules.hpp"
#include "dbseq/verify.hpp"
#include "dbseq/words.hpp"
#include "oracles.hpp"

using namespace dbseq;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(std::string why) {
    if (pass) detail = std::move(why);
    pass = false;
  }
};

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;  // 0 means no budget
  std::function<Outcome()> body;
};

std::string listing(const DBSequence& seq) {
  std::string s;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i > 0) s.push_back(',');
    s += to_string(seq.word(i));
  }
  return s;
}

std::string params(std::size_t n, Symbol k) {
  return "n=" + std::to_string(n) + " k=" + std::to_string(k);
}

// (n,k) with 1 <= n <= 6, 2 <= k <= 4 and k^n <= 4096.
std::vector<std::pair<std::size_t, Symbol>> cross_matrix() {
  std::vector<std::pair<std::size_t, Symbol>> out;
  for (std::size_t n = 1; n <= 6; ++n)
    for (Symbol k = 2; k <= 4; ++k)
      if (*checked_power(k, n) <= 4096) out.emplace_back(n, k);
  return out;
}

Outcome golden_vectors() {
  Outcome o;
  const auto expect = [&](const char* what, const DBSequence& got, const char* text) {
    if (listing(got) != text) o.fail(std::string(what) + " differs from the listing");
  };
  expect("cycle-join D(3,3)", build(3, 3).sequence(), golden::kJoin33);
  expect("cycle-join D(3,3)", build(3, 3).sequence(), golden::kRpmx33);
  expect("greedy pmx(3,3)", greedy(3, 3, Variant::pmx), golden::kPmx33);
  expect("greedy pmn(3,3)", greedy(3, 3, Variant::pmn), golden::kPmn33);
  expect("rpmn(3,3)", ShiftRule(Variant::rpmn, Alphabet::bounded(3)).walk(3), golden::kRpmn33);
  expect("rpmn(3,3) by transform",
         transform_sequence(build(3, 3).sequence(), Variant::rpmx, Variant::rpmn),
         golden::kRpmn33);
  return o;
}

Outcome keyword_enumeration() {
  Outcome o;
  const auto keys = enumerate_keywords(3, 3);
  std::string got;
  for (std::size_t i = 0; i < keys.size(); ++i) got += (i ? "," : "") + to_string(keys[i]);
  if (keys.size() != 11) o.fail("expected 11 key-words, got " + std::to_string(keys.size()));
  if (got != golden::kKeys33) o.fail("order differs: " + got);
  return o;
}

Outcome cross_construction() {
  Outcome o;
  const Method methods[] = {Method::greedy, Method::cycle_join, Method::shift_rule, Method::fkm};
  for (auto [n, k] : cross_matrix()) {
    const auto reference = generate({Method::cycle_join, Variant::rpmx, n, k, std::nullopt});
    for (Method m : methods) {
      const Variant native = native_variant(m, m == Method::greedy ? Variant::pmx : Variant::rpmx);
      const auto own = generate({m, native, n, k, std::nullopt});
      const auto db = check_db(own, n, k);
      if (!db.pass) o.fail(std::string(to_string(m)) + ": " + to_line(db));
      if (!oracle::is_de_bruijn(own.words(), n, k))
        o.fail(std::string(to_string(m)) + " rejected by brute force at " + params(n, k));
      const auto as_rpmx = generate({m, Variant::rpmx, n, k, std::nullopt});
      const auto eq = check_equal(reference, as_rpmx);
      if (!eq.pass) o.fail(std::string(to_string(m)) + ": " + to_line(eq));
    }
  }
  return o;
}

Outcome onion() {
  Outcome o;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (Symbol k = 1; k <= 3; ++k) {
      const auto inner = build(n, k, false).sequence().words();
      const auto outer = build(n, k + 1, false).sequence().words();
      const bool prefix = inner.size() < outer.size() &&
                          std::equal(inner.begin(), inner.end(), outer.begin());
      if (!prefix) o.fail("D(n,k) not a strict prefix of D(n,k+1) at " + params(n, k));
      if (stream_rpmx(n, inner.size()).words() != inner)
        o.fail("stream prefix differs at " + params(n, k));
    }
  }
  return o;
}

Outcome structure() {
  Outcome o;
  std::size_t traces = 0;
  for (Symbol k = 1; k <= 32; ++k)
    for (std::size_t n = 1; n <= 10; ++n) {
      if (*checked_power(k, n) > 1024) break;
      const auto trace = build(n, k);
      ++traces;
      for (const auto& r : check_structure_suite(trace))
        if (!r.pass) o.fail(to_line(r));
    }
  o.detail = o.pass ? std::to_string(traces) + " traces" : o.detail;
  return o;
}

Outcome fkm_identity() {
  Outcome o;
  for (std::size_t n = 1; n <= 6; ++n)
    for (Symbol k = 1; k <= 3; ++k)
      if (fkm_sequence(n, k) != word_stream_to_symbols(greedy(n, k, Variant::pmn)))
        o.fail("fkm stream differs from greedy pmn at " + params(n, k));
  std::string spot;
  for (Symbol s : fkm_sequence(3, 3)) spot.push_back(static_cast<char>('0' + s));
  if (spot != "000100201101202102211121222") o.fail("spot value (3,3) is " + spot);
  return o;
}

Outcome terminal_behavior() {
  Outcome o;
  for (auto [n, k] : cross_matrix()) {
    const auto alphabet = Alphabet::bounded(k);
    const std::uint64_t total = *checked_power(k, n);
    Word w = Word::repeat(0, n);
    std::uint64_t steps = 0;
    while (auto next_word = succ(w, alphabet)) {
      w = std::move(*next_word);
      if (++steps > total) break;
    }
    if (steps != total - 1)
      o.fail(std::to_string(steps) + " steps instead of k^n-1 at " + params(n, k));
    if (w != (k - 1) + Word::repeat(0, n - 1))
      o.fail("halted at " + to_string(w) + " at " + params(n, k));
  }
  return o;
}

// Seconds per succ call on random words of length n over a wide alphabet,
// best of several rounds.
double succ_seconds(std::size_t n, std::mt19937& rng) {
  const auto nat = Alphabet::unbounded();
  std::vector<Word> inputs;
  for (int i = 0; i < 64; ++i) {
    std::vector<Symbol> v(n);
    for (auto& s : v) s = rng() % 1000;
    inputs.emplace_back(std::move(v));
  }
  const std::size_t calls = 4096 * 64 / n;
  double best = 1e9;
  std::size_t sink = 0;
  for (int round = 0; round < 5; ++round) {
    const auto start = Clock::now();
    for (std::size_t i = 0; i < calls; ++i) sink += succ(inputs[i % inputs.size()], nat)->back();
    const std::chrono::duration<double> took = Clock::now() - start;
    best = std::min(best, took.count() / calls);
  }
  // Keeps the calls from being optimised away.
  static volatile std::size_t keep;
  keep = sink;
  return best;
}

Outcome succ_linear_time() {
  Outcome o;
  std::mt19937 rng(2024);
  const std::size_t lengths[] = {16, 32, 64, 128};
  std::vector<double> t;
  for (std::size_t n : lengths) t.push_back(succ_seconds(n, rng));
  // Per-symbol cost may not grow by more than the slack over the n = 16 cost.
  const double base = t[0] / lengths[0];
  std::string detail;
  for (std::size_t i = 0; i < t.size(); ++i) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s%zu:%.0fns", i ? " " : "", lengths[i], t[i] * 1e9);
    detail += buf;
    if (t[i] / lengths[i] > 2.0 * base)
      o.fail("per-symbol cost at n=" + std::to_string(lengths[i]) + " exceeds twice that at n=16");
  }
  // Slope of the log-log fit; linear is 1, quadratic 2.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double x = std::log2(static_cast<double>(lengths[i])), y = std::log2(t[i]);
    sx += x, sy += y, sxx += x * x, sxy += x * y;
  }
  const double m = static_cast<double>(t.size());
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  if (slope > 1.0 + 1.0 / 3.0) o.fail("log-log slope " + std::to_string(slope));
  char buf[32];
  std::snprintf(buf, sizeof buf, " slope=%.2f", slope);
  if (o.pass) o.detail = detail + buf;
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "golden-vectors", 1, golden_vectors},
      {2, "keyword-enumeration", 1, keyword_enumeration},
      {3, "cross-construction-matrix", 30, cross_construction},
      {4, "onion-prefix", 10, onion},
      {5, "structural-suite", 30, structure},
      {6, "fkm-identity", 5, fkm_identity},
      {7, "shift-rule-terminal", 0, terminal_behavior},
      {8, "succ-linear-time", 5, succ_linear_time},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const std::chrono::duration<double> took = Clock::now() - start;
    if (c.budget_seconds > 0 && took.count() >= c.budget_seconds) {
      o.fail("took " + std::to_string(took.count()) + "s, budget " +
             std::to_string(c.budget_seconds) + "s");
    }
    std::printf("%s criterion-%d %s %.3fs%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                took.count(), o.detail.empty() ? "" : " ", o.detail.c_str());
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
