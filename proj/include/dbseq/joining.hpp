#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "dbseq/sequence.hpp"
#include "dbseq/word.hpp"

namespace dbseq {

/// One cycle of the join, with where it landed in the finished order.
struct JoinedCycle {
  Word key;
  Word first;
  Word last;
  /// The word the cycle was spliced after; absent for the all-zero cycle.
  std::optional<Word> anchor;
  std::size_t open_position = 0;   // position of first
  std::size_t close_position = 0;  // position of last
};

/// How cycle r sits relative to an earlier cycle m.
struct Embedding {
  enum class Kind {
    follows,    // last(C_m) < first(C_r)
    embedded,   // first(C_m) < first(C_r) <= last(C_r) < last(C_m)
    violation,  // neither; the nesting structure is broken
  };
  Kind kind = Kind::violation;
  /// Number of immediate-embedding steps from C_r up to C_m.
  std::size_t depth = 0;

  bool operator==(const Embedding&) const = default;
};

struct BuildOptions {
  /// Keep the per-cycle log (keys, anchors, extents). Needed for the
  /// structural queries; plain generation can drop it.
  bool record_trace = true;
  /// Test hook: replaces the anchor chosen for cycle m. Receives m and
  /// the rule's anchor; must return a word already placed.
  std::function<Word(std::size_t, const Word&)> anchor_override;
};

class JoinTrace;

/// Runs the cycle-joining construction one cycle at a time, so callers
/// can inspect every intermediate ordering D_0, D_1, ...
///
/// The ordering is a singly linked list over word ranks (base-k value),
/// so an anchor lookup is O(1) and a splice costs the cycle's length.
class JoinBuilder {
 public:
  JoinBuilder(std::size_t n, Symbol k, BuildOptions options = {});

  std::size_t n() const { return n_; }
  Symbol k() const { return k_; }

  /// Number of cycles placed so far (1 after construction: C_0 = 0^n).
  std::size_t cycles_placed() const { return placed_; }
  std::size_t cycle_count() const { return keys_.size(); }
  bool done() const { return placed_ == keys_.size(); }

  /// Splices the next cycle in. Returns false once every cycle is placed.
  bool step();

  /// The current ordering D_m, read from 0^n.
  std::vector<Word> current_order() const;

  JoinTrace finish() &&;

 private:
  friend class JoinTrace;
  static constexpr std::uint64_t kEnd = ~std::uint64_t{0};

  std::uint64_t rotate_rank(std::uint64_t r) const;

  std::size_t n_;
  Symbol k_;
  BuildOptions options_;
  std::uint64_t top_weight_;  // k^(n-1)
  std::vector<Word> keys_;
  std::vector<std::uint64_t> next_;
  std::vector<bool> placed_word_;
  std::vector<std::optional<Word>> anchors_;
  std::size_t placed_ = 0;
};

/// A finished cycle join: the order D(n,k), word positions, and (when
/// recorded) the per-cycle log with its nesting forest.
class JoinTrace {
 public:
  std::size_t n() const { return n_; }
  Symbol k() const { return k_; }
  std::size_t size() const { return order_.size(); }
  bool has_log() const { return has_log_; }

  /// 0-based position; throws NotFound for words outside [k]^n.
  std::size_t position_of(const Word& w) const;
  Word word_at(std::size_t position) const;

  DBSequence sequence() const;

  /// Throws InvalidInput when the log was not recorded.
  const std::vector<JoinedCycle>& cycles() const;

  /// Index of the cycle containing w. Needs the log.
  std::size_t cycle_index_of(const Word& w) const;

  /// Classifies cycle r against cycle m, m < r. Throws InvalidInput for
  /// unknown ordinals, m >= r, or a trace without the log.
  Embedding embedding_relation(std::size_t r, std::size_t m) const;

  /// The cycle immediately containing m, if any.
  std::optional<std::size_t> parent(std::size_t m) const;

 private:
  friend class JoinBuilder;
  JoinTrace() = default;

  const std::vector<JoinedCycle>& checked_cycles() const;

  std::size_t n_ = 0;
  Symbol k_ = 0;
  std::vector<std::uint64_t> order_;     // position -> rank
  std::vector<std::size_t> position_;    // rank -> position
  bool has_log_ = false;
  std::vector<JoinedCycle> cycles_;
  std::vector<std::optional<std::size_t>> parent_;
};

JoinTrace build(std::size_t n, Symbol k, bool record_trace = true);

}  // namespace dbseq
