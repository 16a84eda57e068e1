#include "dbseq/joining.hpp"

#include <algorithm>
#include <string>

#include "dbseq/cycles.hpp"
#include "dbseq/words.hpp"

namespace dbseq {

namespace {

// Arrays are indexed by rank, so k^n has to be addressable.
constexpr std::uint64_t kMaxWords = std::uint64_t{1} << 32;

}  // namespace

JoinBuilder::JoinBuilder(std::size_t n, Symbol k, BuildOptions options)
    : n_(n), k_(k), options_(std::move(options)) {
  if (n == 0 || k == 0) throw InvalidInput("cycle join needs n >= 1 and k >= 1");
  const auto total = checked_power(k, n);
  if (!total || *total > kMaxWords) throw InvalidInput("k^n too large for a cycle join");
  top_weight_ = *checked_power(k, n - 1);

  keys_ = enumerate_keywords(n, k);
  next_.assign(*total, kEnd);
  placed_word_.assign(*total, false);
  anchors_.reserve(keys_.size());

  // D_0 = (0^n); rank 0 is the all-zero word.
  placed_word_[0] = true;
  anchors_.emplace_back(std::nullopt);
  placed_ = 1;
}

std::uint64_t JoinBuilder::rotate_rank(std::uint64_t r) const {
  const std::uint64_t head = r / top_weight_;
  return (r % top_weight_) * k_ + head;
}

bool JoinBuilder::step() {
  if (done()) return false;
  const std::size_t m = placed_;
  const auto parts = decompose(keys_[m]);

  Word anchor = parts.anchor();
  if (options_.anchor_override) anchor = options_.anchor_override(m, anchor);
  if (anchor.size() != n_ || !std::all_of(anchor.begin(), anchor.end(),
                                          [&](Symbol s) { return s < k_; }))
    throw InvalidInput("anchor outside [k]^n: " + to_string(anchor));
  const std::uint64_t at = rank(anchor, k_);
  if (!placed_word_[at])
    throw std::logic_error("anchor " + to_string(anchor) + " not yet placed for cycle " +
                           std::to_string(m));

  // Link first -> ... -> last, then splice the chain after the anchor.
  const std::uint64_t first = rank(parts.first(), k_);
  const std::uint64_t after = next_[at];
  std::uint64_t cur = first;
  for (;;) {
    placed_word_[cur] = true;
    const std::uint64_t nxt = rotate_rank(cur);
    if (nxt == first) break;
    next_[cur] = nxt;
    cur = nxt;
  }
  next_[cur] = after;
  next_[at] = first;

  if (options_.record_trace) anchors_.emplace_back(std::move(anchor));
  ++placed_;
  return true;
}

std::vector<Word> JoinBuilder::current_order() const {
  std::vector<Word> out;
  for (std::uint64_t r = 0; r != kEnd; r = next_[r]) out.push_back(unrank(r, n_, k_));
  return out;
}

JoinTrace JoinBuilder::finish() && {
  while (step()) {
  }

  JoinTrace trace;
  trace.n_ = n_;
  trace.k_ = k_;
  trace.order_.reserve(next_.size());
  trace.position_.assign(next_.size(), 0);
  for (std::uint64_t r = 0; r != kEnd; r = next_[r]) {
    trace.position_[r] = trace.order_.size();
    trace.order_.push_back(r);
  }
  next_.clear();
  next_.shrink_to_fit();

  trace.has_log_ = options_.record_trace;
  if (!trace.has_log_) return trace;

  const std::size_t count = keys_.size();
  trace.cycles_.reserve(count);
  for (std::size_t m = 0; m < count; ++m) {
    const auto parts = decompose(keys_[m]);
    JoinedCycle c;
    c.key = keys_[m];
    c.first = parts.first();
    c.last = parts.last();
    c.anchor = anchors_[m];
    c.open_position = trace.position_[rank(c.first, k_)];
    c.close_position = trace.position_[rank(c.last, k_)];
    trace.cycles_.push_back(std::move(c));
  }

  // Nesting forest by interval scan over opening positions.
  std::vector<std::size_t> by_open(count);
  for (std::size_t m = 0; m < count; ++m) by_open[m] = m;
  std::sort(by_open.begin(), by_open.end(), [&](std::size_t a, std::size_t b) {
    return trace.cycles_[a].open_position < trace.cycles_[b].open_position;
  });
  trace.parent_.assign(count, std::nullopt);
  std::vector<std::size_t> open;
  for (std::size_t m : by_open) {
    const auto& cur = trace.cycles_[m];
    while (!open.empty() && trace.cycles_[open.back()].close_position < cur.open_position)
      open.pop_back();
    if (!open.empty()) {
      const auto& outer = trace.cycles_[open.back()];
      if (outer.open_position < cur.open_position && cur.close_position < outer.close_position)
        trace.parent_[m] = open.back();
    }
    open.push_back(m);
  }
  return trace;
}

std::size_t JoinTrace::position_of(const Word& w) const {
  if (w.size() != n_ || !std::all_of(w.begin(), w.end(), [&](Symbol s) { return s < k_; }))
    throw NotFound("word " + to_string(w) + " is not in the ordering");
  return position_[rank(w, k_)];
}

Word JoinTrace::word_at(std::size_t position) const {
  return unrank(order_.at(position), n_, k_);
}

DBSequence JoinTrace::sequence() const {
  DBSequence out(n_, k_);
  out.reserve(order_.size());
  for (std::uint64_t r : order_) out.push_back(unrank(r, n_, k_));
  return out;
}

const std::vector<JoinedCycle>& JoinTrace::checked_cycles() const {
  if (!has_log_) throw InvalidInput("join trace was built without its log");
  return cycles_;
}

const std::vector<JoinedCycle>& JoinTrace::cycles() const { return checked_cycles(); }

std::size_t JoinTrace::cycle_index_of(const Word& w) const {
  const auto& cs = checked_cycles();
  const Word key = keyword_of(w);
  auto it = std::lower_bound(cs.begin(), cs.end(), key, [](const JoinedCycle& c, const Word& k) {
    return colex_compare(c.key, k) < 0;
  });
  if (it == cs.end() || it->key != key) throw NotFound("no cycle for " + to_string(w));
  return static_cast<std::size_t>(it - cs.begin());
}

Embedding JoinTrace::embedding_relation(std::size_t r, std::size_t m) const {
  const auto& cs = checked_cycles();
  if (r >= cs.size() || m >= cs.size())
    throw InvalidInput("unknown cycle ordinal");
  if (m >= r) throw InvalidInput("embedding_relation needs m < r");

  const auto& outer = cs[m];
  const auto& inner = cs[r];
  if (outer.close_position < inner.open_position) return {Embedding::Kind::follows, 0};
  if (outer.open_position < inner.open_position && inner.close_position < outer.close_position) {
    std::size_t depth = 0;
    for (auto p = parent_[r]; p; p = parent_[*p]) {
      ++depth;
      if (*p == m) return {Embedding::Kind::embedded, depth};
    }
  }
  return {Embedding::Kind::violation, 0};
}

std::optional<std::size_t> JoinTrace::parent(std::size_t m) const {
  checked_cycles();
  if (m >= parent_.size()) throw InvalidInput("unknown cycle ordinal");
  return parent_[m];
}

JoinTrace build(std::size_t n, Symbol k, bool record_trace) {
  BuildOptions options;
  options.record_trace = record_trace;
  return JoinBuilder(n, k, std::move(options)).finish();
}

}  // namespace dbseq
