#pragma once

// Adjacent successors and predecessors inside L_n and D_n.
//
// Successor of a in L_n: take the first lexical result a' of an elementary
// operation on a negative cell (scanning from the right), let f = a ^ a' with
// m = 1 + deg f and n = m d + r. For r > 0 the successor is a' itself; for
// r = 0 it is f * least(L_d).
//
// Predecessor of a in L_n: when a = g * least(L_d) for a fundamental g in L_m
// with n = m d, the predecessor is (g_e)^{d-1} g_hat(g); otherwise it is the
// first lexical result of an operation on a positive cell.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "alphaseq/elementary.hpp"
#include "alphaseq/error.hpp"
#include "alphaseq/sequence.hpp"

namespace alphaseq {

inline void require_member_Ln(const AlphaSequence& a, std::uint64_t n) {
  require_positive(n);
  if (!SetContext{SetKind::L, n}.contains(a)) {
    throw Error(ErrorCode::NotInLn, "sequence is not in L_" + std::to_string(n));
  }
}

/// Everything computed on the way to the adjacent successor of a in L_n.
struct SuccessorStep {
  Candidate candidate;        ///< raw elementary-operation successor a'
  AlphaSequence fundamental;  ///< f = a ^ a'
  std::uint64_t m = 0;        ///< 1 + deg f
  std::uint64_t d = 0;        ///< n / m
  std::uint64_t r = 0;        ///< n mod m
  AlphaSequence result;       ///< the adjacent successor

  bool star_branch() const noexcept { return r == 0; }
};

inline SuccessorStep analyze_successor(const AlphaSequence& a, std::uint64_t n) {
  require_member_Ln(a, n);
  if (a == max_element({SetKind::L, n})) {
    throw Error(ErrorCode::Maximal, "no successor in L_" + std::to_string(n));
  }
  SuccessorStep step;
  step.candidate = lexical_successor_candidate(a);
  step.fundamental = meet(a, step.candidate.sequence);
  step.m = 1 + step.fundamental.degree();
  step.d = n / step.m;
  step.r = n % step.m;
  step.result = step.r > 0 ? step.candidate.sequence
                           : star(step.fundamental, least_element(step.d));
  return step;
}

inline AlphaSequence successor_Ln(const AlphaSequence& a, std::uint64_t n) {
  return analyze_successor(a, n).result;
}

/// Elements of D_n between a (exclusive) and its L_n successor (inclusive):
/// for r = 0 the chain f < h_1(f) < ... < h_k(f) <= f * least(L_d), where
/// d = 2^k (2t + 1), with the last duplicate dropped when t = 0.
inline std::vector<AlphaSequence> successor_Dn(const AlphaSequence& a, std::uint64_t n) {
  SuccessorStep step = analyze_successor(a, n);
  if (!step.star_branch()) {
    return {std::move(step.result)};
  }
  std::size_t k = 0;
  for (std::uint64_t d = step.d; d % 2 == 0; d /= 2) {
    ++k;
  }
  std::vector<AlphaSequence> out;
  out.reserve(k + 2);
  out.push_back(step.fundamental);
  for (std::size_t j = 1; j <= k; ++j) {
    out.push_back(concat(extend_odd(out.back()), out.back()));
  }
  if (out.back() != step.result) {
    out.push_back(std::move(step.result));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Star factorization

/// Witness of a = g * lambda with g fundamental in L_m, lambda = least(L_d)
/// and n = m d. The trivial factorization has g = (0), m = 1.
struct StarFactorization {
  AlphaSequence g;
  std::uint64_t m = 0;
  AlphaSequence lambda;
  std::uint64_t d = 0;

  bool trivial() const noexcept { return g.is_zero(); }
  friend bool operator==(const StarFactorization&, const StarFactorization&) = default;
};

namespace detail {

/// The sequence whose odd closure is p, when p has odd length.
inline std::optional<AlphaSequence> invert_odd_closure(const AlphaSequence& p) {
  if (p.length() % 2 == 0) {
    return std::nullopt;
  }
  std::vector<Element> out(p.begin(), p.end());
  if (out.back() == 1) {
    out.pop_back();
  } else {
    --out.back();
  }
  return AlphaSequence(std::move(out));
}

}  // namespace detail

/// Every nontrivial factorization of a in L_n, largest m first.
inline std::vector<StarFactorization> star_factorizations(const AlphaSequence& a,
                                                          std::uint64_t n) {
  require_member_Ln(a, n);
  std::vector<StarFactorization> found;
  // g_o is a left factor of a, so g comes from an odd-length prefix.
  for (std::size_t j = 1; j <= a.length(); j += 2) {
    auto g = detail::invert_odd_closure(left_sequence(a, j));
    if (!g || g->is_zero()) {
      continue;
    }
    const std::uint64_t m = 1 + g->degree();
    if (m >= n || n % m != 0 || !is_lexical(*g) || !is_fundamental(*g)) {
      continue;
    }
    AlphaSequence lambda = least_element(n / m);
    if (star(*g, lambda) == a) {
      found.push_back({std::move(*g), m, std::move(lambda), n / m});
    }
  }
  std::ranges::sort(found, [](const auto& x, const auto& y) { return x.m > y.m; });
  return found;
}

/// The factorization used by the predecessor rule: the one with the longest
/// g, or the trivial one when a is the least element of L_n.
inline std::optional<StarFactorization> star_factorize(const AlphaSequence& a,
                                                       std::uint64_t n) {
  auto found = star_factorizations(a, n);
  if (!found.empty()) {
    return std::move(found.front());
  }
  if (n >= 2 && a == least_element(n)) {
    return StarFactorization{AlphaSequence::zero(), 1, a, n};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// g_hat

enum class GHatForm {
  /// g = tau * (2, 1^{r-3}) for odd r > 1, g_hat = tau * 1^{r-1}
  StarOfLeast,
  /// g = tau_o zeta, g_hat = tau_e zeta with (1 + deg tau) not dividing m
  OddClosurePrefix,
};

struct GHat {
  AlphaSequence value;
  AlphaSequence tau;
  GHatForm form;
};

/// Structural companion of a fundamental g in L_m. The first form is tried
/// first. In the second, the longest prefix giving a lexical tau_e zeta wins.
inline GHat decompose_g_hat(const AlphaSequence& g, std::uint64_t m) {
  if (g.is_zero()) {
    throw Error(ErrorCode::NoDecomposition, "g_hat of the zero sequence");
  }
  require_member_Ln(g, m);

  for (std::uint64_t r = 3; r <= m; r += 2) {
    if (m % r != 0) {
      continue;
    }
    // tau is the right factor of g with degree m/r - 1.
    const Element tau_degree = m / r - 1;
    Element acc = 0;
    std::size_t start = g.length();
    while (start > 0 && acc < tau_degree) {
      acc += g[--start];
    }
    if (acc != tau_degree) {
      continue;
    }
    AlphaSequence tau(std::vector<Element>(g.begin() + static_cast<std::ptrdiff_t>(start), g.end()));
    if (!is_lexical(tau)) {
      continue;
    }
    // least(L_r) = (2, 1^{r-3}) for odd r
    if (star(tau, least_element(r)) == g) {
      AlphaSequence value = star(tau, ones(r - 1));
      return {std::move(value), std::move(tau), GHatForm::StarOfLeast};
    }
  }

  for (std::size_t j = g.length() % 2 == 1 ? g.length() : g.length() - 1; j >= 1 && j <= g.length();
       j -= 2) {
    auto tau = detail::invert_odd_closure(left_sequence(g, j));
    if (!tau || tau->is_zero() || m % (1 + tau->degree()) == 0 || !is_lexical(*tau)) {
      continue;
    }
    AlphaSequence rest(std::vector<Element>(g.begin() + static_cast<std::ptrdiff_t>(j), g.end()));
    AlphaSequence value = concat(extend_even(*tau), rest);
    if (is_lexical(value)) {
      return {std::move(value), std::move(*tau), GHatForm::OddClosurePrefix};
    }
  }
  throw Error(ErrorCode::NoDecomposition, "g fits neither structural form");
}

inline AlphaSequence g_hat(const AlphaSequence& g, std::uint64_t m) {
  return decompose_g_hat(g, m).value;
}

inline AlphaSequence predecessor_Ln(const AlphaSequence& a, std::uint64_t n) {
  require_member_Ln(a, n);
  if (a == least_element(n)) {
    throw Error(ErrorCode::Minimal, "no predecessor in L_" + std::to_string(n));
  }
  if (auto fac = star_factorize(a, n); fac && !fac->trivial()) {
    return concat(power(extend_even(fac->g), fac->d - 1), g_hat(fac->g, fac->m));
  }
  return lexical_predecessor_candidate(a).sequence;
}

// ---------------------------------------------------------------------------

inline bool is_prime(std::uint64_t p) noexcept {
  if (p < 2) {
    return false;
  }
  for (std::uint64_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) {
      return false;
    }
  }
  return true;
}

/// For prime p the star branch never fires: the successor is always the raw
/// elementary-operation candidate.
inline bool prime_shortcut_check(std::uint64_t p, const AlphaSequence& a) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::InvalidN, std::to_string(p) + " is not prime");
  }
  const SuccessorStep step = analyze_successor(a, p);
  return step.result == step.candidate.sequence;
}

}  // namespace alphaseq
