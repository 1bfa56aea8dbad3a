#pragma once

#include <cstdint>
#include <vector>

#include "alphaseq/alphaseq.hpp"

namespace alphaseq::testing {

using Seq = AlphaSequence;

/// The zero sequence followed by every composition of 1..max_degree.
inline std::vector<Seq> all_up_to_degree(std::uint64_t max_degree) {
  std::vector<Seq> out{Seq::zero()};
  for (std::uint64_t n = 1; n <= max_degree; ++n) {
    auto part = oracle::all_compositions(n, max_degree);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

inline std::vector<Seq> lexical_up_to_degree(std::uint64_t max_degree) {
  std::vector<Seq> out;
  for (auto& a : all_up_to_degree(max_degree)) {
    if (oracle::definitional_is_lexical(a)) {
      out.push_back(a);
    }
  }
  return out;
}

}  // namespace alphaseq::testing
