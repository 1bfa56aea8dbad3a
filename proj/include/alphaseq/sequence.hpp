#pragma once

// Positive integer sequences under the alternating-sign total order, with the
// algebra built on top of it: products, meets, the even/odd closures,
// harmonics, the star product and the least elements of the lexical sets.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "alphaseq/error.hpp"

namespace alphaseq {

using Element = std::uint64_t;

/// A finite sequence of positive integers. The empty sequence stands for the
/// zero sequence (0): degree 0, the identity of both products.
class AlphaSequence {
 public:
  using const_iterator = std::vector<Element>::const_iterator;

  AlphaSequence() = default;

  AlphaSequence(std::initializer_list<Element> elements)
      : AlphaSequence(std::vector<Element>(elements)) {}

  explicit AlphaSequence(std::vector<Element> elements)
      : elements_(std::move(elements)) {
    for (Element e : elements_) {
      if (e == 0) {
        throw Error(ErrorCode::InvalidElement, "elements must be >= 1");
      }
      degree_ += e;
    }
  }

  static AlphaSequence zero() { return {}; }

  std::size_t length() const noexcept { return elements_.size(); }
  Element degree() const noexcept { return degree_; }
  bool is_zero() const noexcept { return elements_.empty(); }

  /// 0-based element access.
  Element operator[](std::size_t i) const noexcept { return elements_[i]; }
  Element back() const noexcept { return elements_.back(); }

  std::span<const Element> elements() const noexcept { return elements_; }
  const_iterator begin() const noexcept { return elements_.begin(); }
  const_iterator end() const noexcept { return elements_.end(); }

  friend bool operator==(const AlphaSequence& a, const AlphaSequence& b) noexcept {
    return a.elements_ == b.elements_;
  }

 private:
  std::vector<Element> elements_;
  Element degree_ = 0;
};

// ---------------------------------------------------------------------------
// Order

/// Compares two element spans by their alternating-sign views
/// (t1, -t2, t3, -t4, ..., 0, 0, ...).
inline std::strong_ordering compare(std::span<const Element> a,
                                    std::span<const Element> b) noexcept {
  const std::size_t common = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (a[i] != b[i]) {
      const bool positive_cell = (i % 2 == 0);
      return positive_cell ? a[i] <=> b[i] : b[i] <=> a[i];
    }
  }
  if (a.size() == b.size()) {
    return std::strong_ordering::equal;
  }
  // The shorter one has a 0 where the longer one has +x or -x.
  if (a.size() < b.size()) {
    return (common % 2 == 0) ? std::strong_ordering::less
                             : std::strong_ordering::greater;
  }
  return (common % 2 == 0) ? std::strong_ordering::greater
                           : std::strong_ordering::less;
}

inline std::strong_ordering compare(const AlphaSequence& a,
                                    const AlphaSequence& b) noexcept {
  return compare(a.elements(), b.elements());
}

inline std::strong_ordering operator<=>(const AlphaSequence& a,
                                        const AlphaSequence& b) noexcept {
  return compare(a, b);
}

/// A sequence is lexical when it is strictly greater than each of its proper
/// right sequences.
inline bool is_lexical(const AlphaSequence& a) noexcept {
  const auto all = a.elements();
  for (std::size_t i = 1; i < all.size(); ++i) {
    if (compare(all, all.subspan(i)) != std::strong_ordering::greater) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Factors and products

/// Right sequence (a_i, ..., a_k), 1-based i.
inline AlphaSequence right_sequence(const AlphaSequence& a, std::size_t i) {
  if (i < 1 || i > a.length()) {
    throw Error(ErrorCode::IndexOutOfRange, "right_sequence index");
  }
  return AlphaSequence(std::vector<Element>(a.begin() + static_cast<std::ptrdiff_t>(i - 1), a.end()));
}

/// Left sequence (a_1, ..., a_i), 1-based i; i = 0 gives the zero sequence.
inline AlphaSequence left_sequence(const AlphaSequence& a, std::size_t i) {
  if (i > a.length()) {
    throw Error(ErrorCode::IndexOutOfRange, "left_sequence index");
  }
  return AlphaSequence(std::vector<Element>(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(i)));
}

inline AlphaSequence concat(const AlphaSequence& a, const AlphaSequence& b) {
  std::vector<Element> out;
  out.reserve(a.length() + b.length());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return AlphaSequence(std::move(out));
}

inline AlphaSequence power(const AlphaSequence& a, std::size_t q) {
  std::vector<Element> out;
  out.reserve(a.length() * q);
  for (std::size_t j = 0; j < q; ++j) {
    out.insert(out.end(), a.begin(), a.end());
  }
  return AlphaSequence(std::move(out));
}

/// (1, 1, ..., 1) with q ones.
inline AlphaSequence ones(std::size_t q) {
  return AlphaSequence(std::vector<Element>(q, 1));
}

/// Longest common left factor closed by the smaller of the first differing
/// elements. Prefix-related unequal sequences have no such position.
inline AlphaSequence meet(const AlphaSequence& a, const AlphaSequence& b) {
  if (a == b) {
    return a;
  }
  const std::size_t common = std::min(a.length(), b.length());
  for (std::size_t i = 0; i < common; ++i) {
    if (a[i] != b[i]) {
      std::vector<Element> out(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(i));
      out.push_back(std::min(a[i], b[i]));
      return AlphaSequence(std::move(out));
    }
  }
  throw Error(ErrorCode::PrefixAmbiguity, "one sequence is a left factor of the other");
}

// ---------------------------------------------------------------------------
// Even/odd closures, harmonics, star product

namespace detail {

inline AlphaSequence bump_last(const AlphaSequence& a) {
  std::vector<Element> out(a.begin(), a.end());
  ++out.back();
  return AlphaSequence(std::move(out));
}

inline AlphaSequence append_one(const AlphaSequence& a) {
  std::vector<Element> out(a.begin(), a.end());
  out.push_back(1);
  return AlphaSequence(std::move(out));
}

}  // namespace detail

/// Even-length closure: increment the last element of an even-length
/// sequence, append 1 to an odd-length one.
inline AlphaSequence extend_even(const AlphaSequence& a) {
  if (a.is_zero()) {
    throw Error(ErrorCode::Undefined, "extend_even of the zero sequence");
  }
  return a.length() % 2 == 0 ? detail::bump_last(a) : detail::append_one(a);
}

/// Odd-length closure: append 1 to an even-length sequence (including the
/// zero sequence), increment the last element of an odd-length one.
inline AlphaSequence extend_odd(const AlphaSequence& a) {
  return a.length() % 2 == 0 ? detail::append_one(a) : detail::bump_last(a);
}

/// h_0(a) = a, h_j(a) = extend_odd(h_{j-1}(a)) h_{j-1}(a).
inline AlphaSequence harmonic(std::size_t j, const AlphaSequence& a) {
  AlphaSequence h = a;
  for (std::size_t step = 0; step < j; ++step) {
    h = concat(extend_odd(h), h);
  }
  return h;
}

/// a_o (a_e)^{b_1-1} a_o (a_e)^{b_2-1} ... a_o (a_e)^{b_k-1} a.
/// The zero sequence is a two-sided identity.
inline AlphaSequence star(const AlphaSequence& a, const AlphaSequence& b) {
  if (a.is_zero()) {
    return b;
  }
  if (b.is_zero()) {
    return a;
  }
  const AlphaSequence odd = extend_odd(a);
  const AlphaSequence even = extend_even(a);
  std::vector<Element> out;
  for (Element bi : b) {
    out.insert(out.end(), odd.begin(), odd.end());
    for (Element r = 1; r < bi; ++r) {
      out.insert(out.end(), even.begin(), even.end());
    }
  }
  out.insert(out.end(), a.begin(), a.end());
  return AlphaSequence(std::move(out));
}

/// True when a is not h_1(b) for any b. Higher harmonics are h_1 of the
/// previous one, so one level suffices.
inline bool is_fundamental(const AlphaSequence& a) noexcept {
  const std::size_t len = a.length();
  if (len == 0) {
    return true;
  }
  const auto e = a.elements();
  if (len % 2 == 0) {
    // b has odd length len/2; prefix is b with its last element incremented.
    const std::size_t half = len / 2;
    if (half % 2 == 0) {
      return true;
    }
    for (std::size_t i = 0; i + 1 < half; ++i) {
      if (e[i] != e[half + i]) {
        return true;
      }
    }
    return e[half - 1] != e[len - 1] + 1;
  }
  // b has even length (len-1)/2; prefix is b followed by a single 1.
  const std::size_t half = (len - 1) / 2;
  if (half % 2 != 0) {
    return true;
  }
  for (std::size_t i = 0; i < half; ++i) {
    if (e[i] != e[half + 1 + i]) {
      return true;
    }
  }
  return e[half] != 1;
}

// ---------------------------------------------------------------------------
// Set contexts and extreme elements

enum class SetKind { A, L, D };

/// The universe an operation targets: A_n (all sequences of degree n),
/// L_n (lexical, 1 + degree = n) or D_n (union of L_d over d | n).
struct SetContext {
  SetKind kind;
  std::uint64_t n;

  bool contains(const AlphaSequence& a) const {
    switch (kind) {
      case SetKind::A:
        return !a.is_zero() && a.degree() == n;
      case SetKind::L:
        return 1 + a.degree() == n && is_lexical(a);
      case SetKind::D:
        return n >= 1 && n % (1 + a.degree()) == 0 && is_lexical(a);
    }
    return false;
  }

  friend bool operator==(const SetContext&, const SetContext&) = default;
};

inline void require_positive(std::uint64_t n) {
  if (n < 1) {
    throw Error(ErrorCode::InvalidN, "n must be >= 1");
  }
}

/// Least element of L_n. With n = 2^l (2s + 1) it is h_l(0) for s = 0 and
/// h_l(0) * (2, 1^{2(s-1)}) otherwise.
inline AlphaSequence least_element(std::uint64_t n) {
  require_positive(n);
  std::size_t l = 0;
  std::uint64_t odd = n;
  while (odd % 2 == 0) {
    odd /= 2;
    ++l;
  }
  const std::uint64_t s = (odd - 1) / 2;
  AlphaSequence base = harmonic(l, AlphaSequence::zero());
  if (s == 0) {
    return base;
  }
  std::vector<Element> tail(1 + 2 * (s - 1), 1);
  tail.front() = 2;
  return star(base, AlphaSequence(std::move(tail)));
}

inline AlphaSequence max_element(const SetContext& ctx) {
  require_positive(ctx.n);
  if (ctx.kind == SetKind::A) {
    return AlphaSequence{ctx.n};
  }
  if (ctx.n == 1) {
    return AlphaSequence::zero();
  }
  return AlphaSequence{ctx.n - 1};
}

/// Minimum of the set: (1, n-1) for A_n (just (1) for n = 1), the least
/// element of L_n, and (0) for D_n.
inline AlphaSequence min_element(const SetContext& ctx) {
  require_positive(ctx.n);
  switch (ctx.kind) {
    case SetKind::A:
      return ctx.n == 1 ? AlphaSequence{1} : AlphaSequence{1, ctx.n - 1};
    case SetKind::L:
      return least_element(ctx.n);
    case SetKind::D:
      return AlphaSequence::zero();
  }
  return {};
}

}  // namespace alphaseq
