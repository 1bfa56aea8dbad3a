#pragma once

// Brute-force ground truth: generate every composition, filter by the
// definition of lexicality, sort. Ordering here goes through an explicit
// alternating-sign vector difference rather than alphaseq::compare, so the
// two can be checked against each other.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "alphaseq/enumeration.hpp"
#include "alphaseq/error.hpp"
#include "alphaseq/sequence.hpp"

namespace alphaseq::oracle {

inline constexpr std::uint64_t kDefaultOracleCap = 20;

/// Sign of the first nonzero entry of Al(a) - Al(b), where
/// Al(t) = (t_1, -t_2, t_3, ..., 0, 0, ...).
inline int definitional_compare(const AlphaSequence& a, const AlphaSequence& b) {
  const std::size_t len = std::max(a.length(), b.length());
  auto al = [len](const AlphaSequence& t) {
    std::vector<std::int64_t> v(len, 0);
    for (std::size_t i = 0; i < t.length(); ++i) {
      const auto x = static_cast<std::int64_t>(t[i]);
      v[i] = (i % 2 == 0) ? x : -x;
    }
    return v;
  };
  const auto va = al(a);
  const auto vb = al(b);
  for (std::size_t i = 0; i < len; ++i) {
    const std::int64_t diff = va[i] - vb[i];
    if (diff != 0) {
      return diff > 0 ? 1 : -1;
    }
  }
  return 0;
}

inline bool definitional_less(const AlphaSequence& a, const AlphaSequence& b) {
  return definitional_compare(a, b) < 0;
}

/// a is lexical iff a > (a_i, ..., a_k) for every 2 <= i <= k.
inline bool definitional_is_lexical(const AlphaSequence& a) {
  for (std::size_t i = 2; i <= a.length(); ++i) {
    if (definitional_compare(a, right_sequence(a, i)) <= 0) {
      return false;
    }
  }
  return true;
}

inline void require_oracle_cap(std::uint64_t n, std::uint64_t cap) {
  require_positive(n);
  if (n > cap) {
    throw Error(ErrorCode::CapExceeded,
                "oracle n = " + std::to_string(n) + " exceeds the cap " + std::to_string(cap));
  }
}

/// All 2^{n-1} compositions of n, one per subset of the n-1 cut points.
inline std::vector<AlphaSequence> all_compositions(std::uint64_t n,
                                                   std::uint64_t cap = kDefaultOracleCap) {
  require_oracle_cap(n, cap);
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  std::vector<AlphaSequence> out;
  out.reserve(count);
  std::vector<Element> parts;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    parts.clear();
    Element run = 1;
    for (std::uint64_t cut = 0; cut + 1 < n; ++cut) {
      if (mask & (std::uint64_t{1} << cut)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    out.emplace_back(parts);
  }
  return out;
}

inline std::vector<AlphaSequence> sorted(std::vector<AlphaSequence> v) {
  std::ranges::sort(v, definitional_less);
  return v;
}

inline std::vector<AlphaSequence> oracle_An(std::uint64_t n, std::uint64_t cap = kDefaultOracleCap) {
  return sorted(all_compositions(n, cap));
}

inline std::vector<AlphaSequence> oracle_Ln(std::uint64_t n, std::uint64_t cap = kDefaultOracleCap) {
  require_oracle_cap(n, cap);
  if (n == 1) {
    return {AlphaSequence::zero()};
  }
  std::vector<AlphaSequence> lexical;
  for (auto& a : all_compositions(n - 1, cap)) {
    if (definitional_is_lexical(a)) {
      lexical.push_back(std::move(a));
    }
  }
  return sorted(std::move(lexical));
}

/// Union of L_d over d | n. Disjoint, since 1 + degree fixes d.
inline std::vector<AlphaSequence> oracle_Dn(std::uint64_t n, std::uint64_t cap = kDefaultOracleCap) {
  require_oracle_cap(n, cap);
  std::vector<AlphaSequence> all;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0) {
      auto part = oracle_Ln(d, cap);
      all.insert(all.end(), std::make_move_iterator(part.begin()),
                 std::make_move_iterator(part.end()));
    }
  }
  return sorted(std::move(all));
}

struct Neighbors {
  std::optional<AlphaSequence> pred;
  std::optional<AlphaSequence> succ;
};

/// Neighbours of a in an ascending list.
inline Neighbors oracle_adjacent(const std::vector<AlphaSequence>& set, const AlphaSequence& a) {
  const auto it = std::ranges::find(set, a);
  if (it == set.end()) {
    throw Error(ErrorCode::NotMember, "sequence not in set");
  }
  Neighbors out;
  if (it != set.begin()) {
    out.pred = *std::prev(it);
  }
  if (std::next(it) != set.end()) {
    out.succ = *std::next(it);
  }
  return out;
}

struct Mismatch {
  std::size_t position;
  std::optional<AlphaSequence> expected;
  std::optional<AlphaSequence> actual;
};

struct OracleReport {
  std::uint64_t n = 0;
  SetKind set_kind = SetKind::A;
  std::vector<AlphaSequence> expected;
  std::vector<Mismatch> mismatches;

  bool passed() const noexcept { return mismatches.empty(); }
};

inline OracleReport compare_lists(std::uint64_t n, SetKind kind, std::vector<AlphaSequence> expected,
                                  const std::vector<AlphaSequence>& actual) {
  OracleReport report{n, kind, std::move(expected), {}};
  const std::size_t len = std::max(report.expected.size(), actual.size());
  for (std::size_t i = 0; i < len; ++i) {
    std::optional<AlphaSequence> want;
    std::optional<AlphaSequence> got;
    if (i < report.expected.size()) {
      want = report.expected[i];
    }
    if (i < actual.size()) {
      got = actual[i];
    }
    if (want != got) {
      report.mismatches.push_back({i, std::move(want), std::move(got)});
    }
  }
  return report;
}

/// Checks the adjacency-driven streams for A_n, L_n and D_n against the
/// brute-force lists, element by element, for every n in [n_min, n_max].
inline std::vector<OracleReport> verify_range(std::uint64_t n_min, std::uint64_t n_max,
                                              std::uint64_t cap = kDefaultOracleCap) {
  require_positive(n_min);
  if (n_min > n_max) {
    throw Error(ErrorCode::InvalidN, "n_min > n_max");
  }
  require_oracle_cap(n_max, cap);
  std::vector<OracleReport> reports;
  for (std::uint64_t n = n_min; n <= n_max; ++n) {
    reports.push_back(compare_lists(n, SetKind::A, oracle_An(n, cap),
                                    collect(enumerate_An(n, {}, Direction::Ascending, cap))));
    reports.push_back(compare_lists(n, SetKind::L, oracle_Ln(n, cap),
                                    collect(enumerate_Ln(n, Direction::Ascending, cap))));
    reports.push_back(
        compare_lists(n, SetKind::D, oracle_Dn(n, cap), collect(enumerate_Dn(n, cap))));
  }
  return reports;
}

}  // namespace alphaseq::oracle
