#include "dbseq/verify.hpp"

#include <algorithm>
#include <sstream>

#include "dbseq/cycles.hpp"
#include "dbseq/words.hpp"

namespace dbseq {

namespace {

bool overlaps(std::span<const Symbol> a, std::span<const Symbol> b) {
  return std::equal(a.begin() + 1, a.end(), b.begin(), b.end() - 1);
}

std::string join_positions(const std::vector<std::size_t>& ps) {
  std::string out;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(ps[i]);
  }
  return out;
}

bool in_alphabet(std::span<const Symbol> w, Symbol k) {
  return std::all_of(w.begin(), w.end(), [k](Symbol s) { return s < k; });
}

Counterexample at(std::vector<std::size_t> positions, std::vector<Word> words,
                  std::string message) {
  return Counterexample{std::move(positions), std::move(words), std::move(message)};
}

}  // namespace

CheckReport CheckReport::ok(std::string name, std::size_t n, std::optional<Symbol> k) {
  return CheckReport{std::move(name), n, k, true, std::nullopt};
}

CheckReport CheckReport::fail(std::string name, std::size_t n, std::optional<Symbol> k,
                              Counterexample why) {
  return CheckReport{std::move(name), n, k, false, std::move(why)};
}

std::string to_line(const CheckReport& report) {
  std::ostringstream out;
  out << (report.pass ? "PASS " : "FAIL ") << report.name << " n=" << report.n;
  if (report.k) out << " k=" << *report.k;
  if (report.counterexample) {
    const auto& c = *report.counterexample;
    const bool comma = report.k && uses_commas(*report.k);
    if (!c.positions.empty()) out << " at=" << join_positions(c.positions);
    if (!c.words.empty()) {
      out << " words=";
      for (std::size_t i = 0; i < c.words.size(); ++i)
        out << (i > 0 ? (comma ? ";" : ",") : "") << to_string(c.words[i], comma);
    }
    out << ": " << c.message;
  }
  return out.str();
}

nlohmann::json to_json(const CheckReport& report) {
  nlohmann::json params = {{"n", report.n}};
  params["k"] = report.k ? nlohmann::json(*report.k) : nlohmann::json(nullptr);
  nlohmann::json out = {{"name", report.name}, {"params", params}, {"pass", report.pass}};
  if (report.counterexample) {
    const auto& c = *report.counterexample;
    const bool comma = report.k && uses_commas(*report.k);
    nlohmann::json words = nlohmann::json::array();
    for (const auto& w : c.words) words.push_back(to_string(w, comma));
    out["counterexample"] = {
        {"positions", c.positions}, {"words", words}, {"message", c.message}};
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

CheckReport check_db(const DBSequence& seq, std::size_t n, Symbol k) {
  const std::string name = "db";
  if (seq.n() != n)
    return CheckReport::fail(name, n, k, at({}, {}, "sequence holds " + std::to_string(seq.n()) +
                                                       "-words"));
  const auto total = checked_power(k, n);
  if (!total || seq.size() != *total)
    return CheckReport::fail(
        name, n, k,
        at({seq.size()}, {}, "cardinality " + std::to_string(seq.size()) + " != k^n"));

  std::vector<std::size_t> first_seen(*total, *total);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const auto w = seq.view(i);
    if (!in_alphabet(w, k))
      return CheckReport::fail(name, n, k, at({i}, {Word(w)}, "symbol outside [k]"));
    auto& seen = first_seen[rank(Word(w), k)];
    if (seen != *total)
      return CheckReport::fail(name, n, k, at({seen, i}, {Word(w)}, "repeated word"));
    seen = i;
  }
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    if (!overlaps(seq.view(i), seq.view(i + 1)))
      return CheckReport::fail(name, n, k,
                               at({i, i + 1}, {seq.word(i), seq.word(i + 1)}, "overlap broken"));
  const std::size_t last = seq.size() - 1;
  if (!overlaps(seq.view(last), seq.view(0)))
    return CheckReport::fail(name, n, k,
                             at({last, 0}, {seq.word(last), seq.word(0)}, "wraparound broken"));
  return CheckReport::ok(name, n, k);
}

CheckReport check_equal(const DBSequence& a, const DBSequence& b) {
  const std::string name = "equal";
  if (a.n() != b.n())
    return CheckReport::fail(name, a.n(), a.k(), at({}, {}, "word lengths differ"));
  const std::size_t common = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < common; ++i) {
    const auto x = a.view(i);
    const auto y = b.view(i);
    if (!std::equal(x.begin(), x.end(), y.begin(), y.end()))
      return CheckReport::fail(name, a.n(), a.k(), at({i}, {Word(x), Word(y)}, "words differ"));
  }
  if (a.size() != b.size())
    return CheckReport::fail(name, a.n(), a.k(),
                             at({common}, {},
                                "lengths differ: " + std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size())));
  return CheckReport::ok(name, a.n(), a.k());
}

CheckReport check_onion(std::size_t n, Symbol k_max, Variant variant) {
  if (n == 0 || k_max < 2) throw InvalidInput("check_onion needs n >= 1 and k_max >= 2");
  const std::string name = "onion";
  auto sequence_for = [&](Symbol k) {
    auto seq = build(n, k, false).sequence();
    return variant == Variant::rpmx ? seq : transform_sequence(seq, Variant::rpmx, variant);
  };
  DBSequence inner = sequence_for(1);
  for (Symbol k = 1; k < k_max; ++k) {
    DBSequence outer = sequence_for(k + 1);
    if (inner.size() >= outer.size())
      return CheckReport::fail(name, n, k, at({}, {}, "not a strict prefix: too long"));
    for (std::size_t i = 0; i < inner.size(); ++i) {
      const auto x = inner.view(i);
      const auto y = outer.view(i);
      if (!std::equal(x.begin(), x.end(), y.begin(), y.end()))
        return CheckReport::fail(
            name, n, k,
            at({i}, {Word(x), Word(y)}, "(n,k) sequence is not a prefix of the (n,k+1) one"));
    }
    inner = std::move(outer);
  }
  return CheckReport::ok(name, n, k_max);
}

std::vector<CheckReport> check_structure_suite(const JoinTrace& trace) {
  const auto& cycles = trace.cycles();
  const std::size_t n = trace.n();
  const Symbol k = trace.k();
  const std::size_t count = cycles.size();
  std::vector<CheckReport> out;

  auto fail = [&](const char* name, Counterexample why) {
    out.push_back(CheckReport::fail(name, n, k, std::move(why)));
  };
  auto pass = [&](const char* name) { out.push_back(CheckReport::ok(name, n, k)); };

  out.push_back(check_db(trace.sequence(), n, k));

  // Starts at 0^n and ends at (k-1)0^(n-1).
  {
    const Word zero = Word::repeat(0, n);
    const Word final_word = (k - 1) + Word::repeat(0, n - 1);
    if (trace.word_at(0) != zero)
      fail("endpoints", at({0}, {trace.word_at(0)}, "first word is not 0^n"));
    else if (trace.word_at(trace.size() - 1) != final_word)
      fail("endpoints", at({trace.size() - 1}, {trace.word_at(trace.size() - 1)},
                           "last word is not (k-1)0^(n-1)"));
    else
      pass("endpoints");
  }

  // Each cycle sits right after the word the rule prescribes.
  {
    std::optional<Counterexample> bad;
    for (std::size_t m = 1; m < count && !bad; ++m) {
      const auto& c = cycles[m];
      const Word rule = decompose(c.key).anchor();
      if (!c.anchor || *c.anchor != rule)
        bad = at({m}, {c.key, c.anchor.value_or(Word{})}, "anchor differs from the rule");
      else if (c.open_position == 0 || trace.word_at(c.open_position - 1) != rule)
        bad = at({c.open_position}, {c.first}, "first word does not follow its anchor");
    }
    bad ? fail("anchor", std::move(*bad)) : pass("anchor");
  }

  // m < r implies first(C_m) before first(C_r).
  {
    std::optional<Counterexample> bad;
    for (std::size_t r = 1; r < count && !bad; ++r)
      if (cycles[r - 1].open_position >= cycles[r].open_position)
        bad = at({cycles[r - 1].open_position, cycles[r].open_position},
                 {cycles[r - 1].first, cycles[r].first}, "cycle " + std::to_string(r) +
                                                             " opens before cycle " +
                                                             std::to_string(r - 1));
    bad ? fail("progression", std::move(*bad)) : pass("progression");
  }

  // Every later cycle either follows an earlier one or nests inside it.
  {
    std::optional<Counterexample> bad;
    for (std::size_t r = 1; r < count && !bad; ++r)
      for (std::size_t m = 0; m < r && !bad; ++m)
        if (trace.embedding_relation(r, m).kind == Embedding::Kind::violation)
          bad = at({m, r}, {cycles[m].key, cycles[r].key},
                   "cycle " + std::to_string(r) + " neither follows nor nests in cycle " +
                       std::to_string(m));
    bad ? fail("parenthesis", std::move(*bad)) : pass("parenthesis");
  }

  // A cycle spliced right after last(C_m), key_m = 0^l (s+1) w, has key 0^l (s+2) w.
  {
    std::optional<Counterexample> bad;
    for (std::size_t r = 1; r < count && !bad; ++r) {
      if (!cycles[r].anchor) continue;
      const Word& anchor = *cycles[r].anchor;
      const std::size_t m = trace.cycle_index_of(anchor);
      if (m == 0 || cycles[m].last != anchor) continue;
      const auto parts = decompose(cycles[m].key);
      const Word expected = (Word::repeat(0, parts.zeros) + (*parts.head + 1)) + parts.tail;
      if (cycles[r].key != expected)
        bad = at({m, r}, {cycles[m].key, cycles[r].key},
                 "key after last(C_m) should be " + to_string(expected));
    }
    bad ? fail("successor-key", std::move(*bad)) : pass("successor-key");
  }

  // Immediate embedding: key_r = 0^i (s+1) 0^j w  =>  key_m = 0^(i+1+j) w, and
  // members of C_m after last(C_r) look like 0^j2 w 0^(i+1+j1), j1 + j2 = j.
  {
    std::optional<Counterexample> bad;
    for (std::size_t r = 1; r < count && !bad; ++r) {
      const auto m = trace.parent(r);
      if (!m) continue;
      const Word& key_r = cycles[r].key;
      std::size_t i = 0;
      while (i < n && key_r[i] == 0) ++i;
      std::size_t j = 0;
      while (i + 1 + j < n && key_r[i + 1 + j] == 0) ++j;
      const Word w = key_r.sub(i + 1 + j);
      const Word expected = Word::repeat(0, i + 1 + j) + w;
      if (cycles[*m].key != expected) {
        bad = at({*m, r}, {cycles[*m].key, key_r},
                 "enclosing key should be " + to_string(expected));
        break;
      }
      const Cycle enclosing(cycles[*m].key);
      for (const Word& u : enclosing.members()) {
        if (trace.position_of(u) <= cycles[r].close_position) continue;
        bool shaped = false;
        for (std::size_t j2 = 0; j2 <= j && !shaped; ++j2)
          shaped = u == (Word::repeat(0, j2) + w) + Word::repeat(0, i + 1 + j - j2);
        if (!shaped) {
          bad = at({*m, r, trace.position_of(u)}, {key_r, u},
                   "member after the embedded cycle has the wrong shape");
          break;
        }
      }
    }
    bad ? fail("embedding-key", std::move(*bad)) : pass("embedding-key");
  }

  // t-embedded: key_r = u v with u the shortest prefix holding t nonzero
  // symbols  =>  key_m = 0^|u| v.
  {
    std::optional<Counterexample> bad;
    for (std::size_t r = 1; r < count && !bad; ++r) {
      const Word& key_r = cycles[r].key;
      std::size_t t = 0;
      std::size_t prefix = 0;
      for (auto m = trace.parent(r); m && !bad; m = trace.parent(*m)) {
        ++t;
        while (prefix < n && key_r[prefix] == 0) ++prefix;
        if (prefix == n) {
          bad = at({*m, r}, {key_r}, "fewer nonzero symbols than the embedding depth");
          break;
        }
        ++prefix;
        const Word expected = Word::repeat(0, prefix) + key_r.sub(prefix);
        if (cycles[*m].key != expected)
          bad = at({*m, r, t}, {cycles[*m].key, key_r},
                   "depth-" + std::to_string(t) + " enclosing key should be " +
                       to_string(expected));
      }
    }
    bad ? fail("t-embedding-key", std::move(*bad)) : pass("t-embedding-key");
  }

  // tau w comes before (tau+1) w.
  {
    std::optional<Counterexample> bad;
    const std::uint64_t top = *checked_power(k, n - 1);
    const std::uint64_t limit = top * (k - 1);
    for (std::uint64_t r = 0; r < limit && !bad; ++r) {
      const Word lo = unrank(r, n, k);
      const Word hi = unrank(r + top, n, k);
      if (trace.position_of(lo) >= trace.position_of(hi))
        bad = at({trace.position_of(lo), trace.position_of(hi)}, {lo, hi},
                 "incremented first symbol appears earlier");
    }
    bad ? fail("increment-order", std::move(*bad)) : pass("increment-order");
  }

  return out;
}

CheckReport check_structure(const JoinTrace& trace) {
  for (auto& report : check_structure_suite(trace)) {
    if (report.pass) continue;
    auto why = *report.counterexample;
    why.message = report.name + ": " + why.message;
    return CheckReport::fail("structure", trace.n(), trace.k(), std::move(why));
  }
  return CheckReport::ok("structure", trace.n(), trace.k());
}

CheckReport check_build_invariants(std::size_t n, Symbol k) {
  const std::string name = "build-invariants";
  JoinBuilder builder(n, k);
  const Word zero = Word::repeat(0, n);
  std::size_t expected_size = 1;
  std::vector<Word> keys = enumerate_keywords(n, k);
  for (std::size_t m = 0;; ++m) {
    const auto order = builder.current_order();
    if (order.size() != expected_size)
      return CheckReport::fail(name, n, k,
                               at({m}, {}, "D_m has " + std::to_string(order.size()) +
                                               " words, expected " +
                                               std::to_string(expected_size)));
    if (order.front() != zero)
      return CheckReport::fail(name, n, k, at({m, 0}, {order.front()}, "D_m does not start at 0^n"));
    const Word& tail = order.back();
    if (!std::all_of(tail.begin() + 1, tail.end(), [](Symbol s) { return s == 0; }))
      return CheckReport::fail(name, n, k,
                               at({m, order.size() - 1}, {tail}, "D_m does not end in s0^(n-1)"));
    for (std::size_t i = 0; i + 1 < order.size(); ++i)
      if (!overlaps(order[i].symbols(), order[i + 1].symbols()))
        return CheckReport::fail(name, n, k,
                                 at({m, i}, {order[i], order[i + 1]}, "successor property broken"));
    if (!builder.step()) break;
    expected_size += Cycle(keys[m + 1]).size();
  }
  return CheckReport::ok(name, n, k);
}

}  // namespace dbseq
