#pragma once

// Lazy, pull-based streams over A_n, L_n and D_n built by chaining adjacency
// steps. Each cursor keeps only the current walk position plus a short queue
// of elements already computed but not yet emitted.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "alphaseq/adjacency.hpp"
#include "alphaseq/elementary.hpp"
#include "alphaseq/error.hpp"
#include "alphaseq/sequence.hpp"

namespace alphaseq {

enum class Direction { Ascending, Descending };

inline constexpr std::uint64_t kDefaultEnumerationCap = 30;

class EnumerationCursor {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = AlphaSequence;
    using difference_type = std::ptrdiff_t;
    using reference = const AlphaSequence&;
    using pointer = const AlphaSequence*;

    iterator() = default;
    explicit iterator(EnumerationCursor* cursor) : cursor_(cursor) { ++*this; }

    reference operator*() const { return *value_; }
    pointer operator->() const { return &*value_; }
    iterator& operator++() {
      value_ = cursor_->next();
      return *this;
    }
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& it, std::default_sentinel_t) {
      return !it.value_.has_value();
    }

   private:
    EnumerationCursor* cursor_ = nullptr;
    std::optional<AlphaSequence> value_;
  };

  /// Next element of the stream, or nullopt once the far end was emitted.
  std::optional<AlphaSequence> next() {
    if (pending_.empty()) {
      if (exhausted_ || at_terminal()) {
        exhausted_ = true;
        return std::nullopt;
      }
      advance();
    }
    current_ = std::move(pending_.front());
    pending_.pop_front();
    return current_;
  }

  iterator begin() { return iterator(this); }
  std::default_sentinel_t end() const noexcept { return {}; }

  const SetContext& context() const noexcept { return context_; }
  Direction direction() const noexcept { return direction_; }
  bool exhausted() const noexcept { return exhausted_; }
  /// Last emitted element.
  const std::optional<AlphaSequence>& current() const noexcept { return current_; }
  /// Number of successor steps in L_n or D_n that took the star-product branch.
  std::size_t star_branch_count() const noexcept { return star_branches_; }

 private:
  friend EnumerationCursor enumerate_An(std::uint64_t, std::optional<AlphaSequence>, Direction,
                                        std::uint64_t);
  friend EnumerationCursor enumerate_Ln(std::uint64_t, Direction, std::uint64_t);
  friend EnumerationCursor enumerate_Dn(std::uint64_t, std::uint64_t);

  EnumerationCursor(SetContext context, Direction direction, AlphaSequence start)
      : context_(context), direction_(direction), walk_(std::move(start)) {
    terminal_ = direction_ == Direction::Ascending ? max_element(context_)
                                                   : (context_.kind == SetKind::A
                                                          ? min_element(context_)
                                                          : least_element(context_.n));
  }

  bool at_terminal() const { return walk_ == terminal_; }

  void advance() {
    const bool up = direction_ == Direction::Ascending;
    switch (context_.kind) {
      case SetKind::A:
        walk_ = up ? successor_step_An(walk_) : predecessor_step_An(walk_);
        pending_.push_back(walk_);
        break;
      case SetKind::L:
        if (up) {
          SuccessorStep step = analyze_successor(walk_, context_.n);
          star_branches_ += step.star_branch() ? 1 : 0;
          walk_ = std::move(step.result);
        } else {
          walk_ = predecessor_Ln(walk_, context_.n);
        }
        pending_.push_back(walk_);
        break;
      case SetKind::D: {
        std::vector<AlphaSequence> chain = successor_Dn(walk_, context_.n);
        star_branches_ += chain.size() > 1 ? 1 : 0;
        walk_ = chain.back();
        pending_.insert(pending_.end(), std::make_move_iterator(chain.begin()),
                        std::make_move_iterator(chain.end()));
        break;
      }
    }
  }

  SetContext context_;
  Direction direction_;
  AlphaSequence walk_;      // position of the underlying A_n / L_n walk
  AlphaSequence terminal_;  // walk stops after emitting this
  std::deque<AlphaSequence> pending_;
  std::optional<AlphaSequence> current_;
  bool exhausted_ = false;
  std::size_t star_branches_ = 0;
};

inline void require_within_cap(std::uint64_t n, std::uint64_t cap) {
  require_positive(n);
  if (n > cap) {
    throw Error(ErrorCode::CapExceeded,
                "n = " + std::to_string(n) + " exceeds the cap " + std::to_string(cap));
  }
}

/// Streams A_n in the given direction. Without a seed the walk starts at the
/// near end. With a seed, the part of A_n behind the seed is walked first,
/// buffered and emitted in order before the walk resumes from the seed.
inline EnumerationCursor enumerate_An(std::uint64_t n, std::optional<AlphaSequence> seed = {},
                                      Direction direction = Direction::Ascending,
                                      std::uint64_t cap = kDefaultEnumerationCap) {
  require_within_cap(n, cap);
  const SetContext ctx{SetKind::A, n};
  const bool up = direction == Direction::Ascending;
  const AlphaSequence near_end = up ? min_element(ctx) : max_element(ctx);
  if (seed && !ctx.contains(*seed)) {
    throw Error(ErrorCode::InvalidSeed, "seed is not in A_" + std::to_string(n));
  }
  AlphaSequence start = seed.value_or(near_end);
  std::vector<AlphaSequence> behind{start};
  while (behind.back() != near_end) {
    behind.push_back(up ? predecessor_step_An(behind.back()) : successor_step_An(behind.back()));
  }
  EnumerationCursor cursor(ctx, direction, std::move(start));
  cursor.pending_.assign(behind.rbegin(), behind.rend());
  return cursor;
}

/// Streams L_n from its least element up, or from (n-1) down.
inline EnumerationCursor enumerate_Ln(std::uint64_t n, Direction direction = Direction::Ascending,
                                      std::uint64_t cap = kDefaultEnumerationCap) {
  require_within_cap(n, cap);
  const SetContext ctx{SetKind::L, n};
  AlphaSequence start =
      direction == Direction::Ascending ? least_element(n) : max_element(ctx);
  EnumerationCursor cursor(ctx, direction, start);
  cursor.pending_.push_back(std::move(start));
  return cursor;
}

/// Streams D_n ascending: the harmonics h_0(0) < ... < h_l(0) of the zero
/// sequence (n = 2^l (2s + 1)), the least element of L_n, then the L_n walk
/// with the lower-degree members inserted at every star-branch step.
inline EnumerationCursor enumerate_Dn(std::uint64_t n, std::uint64_t cap = kDefaultEnumerationCap) {
  require_within_cap(n, cap);
  AlphaSequence least = least_element(n);
  EnumerationCursor cursor({SetKind::D, n}, Direction::Ascending, least);
  cursor.pending_.push_back(AlphaSequence::zero());
  for (std::uint64_t m = n; m % 2 == 0; m /= 2) {
    const AlphaSequence& h = cursor.pending_.back();
    cursor.pending_.push_back(concat(extend_odd(h), h));
  }
  if (cursor.pending_.back() != least) {
    cursor.pending_.push_back(std::move(least));
  }
  return cursor;
}

/// Drains up to `limit` elements of a stream.
inline std::vector<AlphaSequence> collect(EnumerationCursor cursor,
                                          std::optional<std::size_t> limit = {}) {
  std::vector<AlphaSequence> out;
  while (!limit || out.size() < *limit) {
    auto next = cursor.next();
    if (!next) {
      break;
    }
    out.push_back(std::move(*next));
  }
  return out;
}

}  // namespace alphaseq
