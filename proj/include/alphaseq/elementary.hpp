#pragma once

// The cell model and the two elementary operations. A sequence of length k
// has cells 1..k; odd cells are positive, even cells negative. Splitting
// replaces a cell of value v >= 2 by (v-1, 1); conjugation merges a cell of
// value 1 into its left neighbour. Both preserve degree and flip the parity
// of the length. All cell indices in this header are 1-based.

#include <cstddef>
#include <vector>

#include "alphaseq/error.hpp"
#include "alphaseq/sequence.hpp"

namespace alphaseq {

enum class Parity { Positive, Negative };

class CellRef {
 public:
  CellRef(const AlphaSequence& a, std::size_t index) : index_(index) {
    if (index < 1 || index > a.length()) {
      throw Error(ErrorCode::IndexOutOfRange, "cell index");
    }
  }

  std::size_t index() const noexcept { return index_; }
  Parity parity() const noexcept {
    return index_ % 2 == 1 ? Parity::Positive : Parity::Negative;
  }

 private:
  std::size_t index_;
};

/// E_s: (a_1, ..., a_i - 1, 1, a_{i+1}, ..., a_k).
inline AlphaSequence split(const AlphaSequence& a, std::size_t i) {
  const CellRef cell(a, i);
  if (a[i - 1] < 2) {
    throw Error(ErrorCode::NotSplittable, "cell value is 1");
  }
  std::vector<Element> out(a.begin(), a.end());
  out[i - 1] -= 1;
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(i), Element{1});
  return AlphaSequence(std::move(out));
}

/// E_c: (a_1, ..., a_{i-1} + 1, a_{i+1}, ..., a_k) for a_i = 1.
inline AlphaSequence conjugate(const AlphaSequence& a, std::size_t i) {
  const CellRef cell(a, i);
  if (i == 1) {
    throw Error(ErrorCode::NotConjugatable, "first cell has no left neighbour");
  }
  if (a[i - 1] != 1) {
    throw Error(ErrorCode::NotConjugatable, "cell value is not 1");
  }
  std::vector<Element> out(a.begin(), a.end());
  out[i - 2] += 1;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(i - 1));
  return AlphaSequence(std::move(out));
}

/// Splits when a_i >= 2, conjugates when a_i = 1.
inline AlphaSequence apply_at(const AlphaSequence& a, std::size_t i) {
  const CellRef cell(a, i);
  return a[i - 1] >= 2 ? split(a, i) : conjugate(a, i);
}

/// True when apply_at(a, i) is defined.
inline bool applicable_at(const AlphaSequence& a, std::size_t i) noexcept {
  return i >= 1 && i <= a.length() && (a[i - 1] >= 2 || i >= 2);
}

/// Adjacent successor in A_n: act on the last negative cell.
inline AlphaSequence successor_step_An(const AlphaSequence& a) {
  if (a.length() < 2) {
    throw Error(ErrorCode::Maximal, "no negative cell");
  }
  const std::size_t i = a.length() % 2 == 0 ? a.length() : a.length() - 1;
  return apply_at(a, i);
}

/// Adjacent predecessor in A_n: act on the last positive cell.
inline AlphaSequence predecessor_step_An(const AlphaSequence& a) {
  if (a.is_zero()) {
    throw Error(ErrorCode::Minimal, "zero sequence");
  }
  const std::size_t i = a.length() % 2 == 1 ? a.length() : a.length() - 1;
  if (!applicable_at(a, i)) {
    throw Error(ErrorCode::Minimal, "(1, n-1) is the least element of A_n");
  }
  return apply_at(a, i);
}

struct Candidate {
  AlphaSequence sequence;
  std::size_t index;  ///< the cell that was acted on

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

namespace detail {

inline Candidate first_lexical_from_right(const AlphaSequence& a, Parity parity) {
  const std::size_t len = a.length();
  const bool want_even = parity == Parity::Negative;
  std::size_t i = (len % 2 == 0) == want_even ? len : len - 1;
  // i wraps below zero after the first cell; the i <= len test stops there.
  for (; i >= 1 && i <= len; i -= 2) {
    if (!applicable_at(a, i)) {
      continue;
    }
    AlphaSequence next = apply_at(a, i);
    if (is_lexical(next)) {
      return {std::move(next), i};
    }
  }
  throw Error(ErrorCode::NoCandidate, want_even ? "no lexical successor" : "no lexical predecessor");
}

}  // namespace detail

/// Acts on negative cells from the right and returns the first result that
/// is lexical, together with the cell index.
inline Candidate lexical_successor_candidate(const AlphaSequence& a) {
  return detail::first_lexical_from_right(a, Parity::Negative);
}

/// Positive-cell counterpart of lexical_successor_candidate.
inline Candidate lexical_predecessor_candidate(const AlphaSequence& a) {
  return detail::first_lexical_from_right(a, Parity::Positive);
}

}  // namespace alphaseq
