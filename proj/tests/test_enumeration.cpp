#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "alphaseq/enumeration.hpp"
#include "alphaseq/io.hpp"
#include "alphaseq/oracle.hpp"
#include "test_support.hpp"

namespace alphaseq {
namespace {

using testing::Seq;
using Seqs = std::vector<Seq>;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::Undefined;
}

const Seqs kA4{{1, 3}, {1, 2, 1}, {1, 1, 1, 1}, {1, 1, 2}, {2, 2}, {2, 1, 1}, {3, 1}, {4}};

const Seqs kL7{{2, 1, 1, 1, 1}, {2, 1, 2, 1}, {3, 2, 1}, {3, 1, 1, 1}, {3, 1, 2},
               {4, 2},          {4, 1, 1},    {5, 1},    {6}};

const Seqs kD8{Seq::zero(),    {1},           {2, 1},       {2, 1, 1, 2, 1}, {2, 1, 1, 1, 1, 1},
               {2, 1, 2, 1, 1}, {3, 2, 1, 1},  {3, 2, 2},    {3, 1, 1, 2},    {3, 1, 1, 1, 1},
               {3, 1, 2, 1},    {3},           {4, 3},       {4, 2, 1},       {4, 1, 1, 1},
               {4, 1, 2},       {5, 2},        {5, 1, 1},    {6, 1},          {7}};

// |L_n| for n = 1..16, from the brute-force filter.
constexpr std::size_t kLnSizes[] = {1, 1, 1, 2, 3, 5, 9, 16, 28, 51, 93, 170, 315, 585, 1091, 2048};

void expect_strictly_ascending(const Seqs& items) {
  for (std::size_t k = 0; k + 1 < items.size(); ++k) {
    ASSERT_EQ(compare(items[k], items[k + 1]), std::strong_ordering::less)
        << items[k] << " then " << items[k + 1];
  }
}

TEST(EnumerateAn, FourTable) {
  EXPECT_EQ(collect(enumerate_An(4)), kA4);
  EXPECT_EQ(collect(enumerate_An(4, Seq{1, 1, 1, 1})), kA4);
  EXPECT_EQ(collect(enumerate_An(1)), (Seqs{{1}}));
}

TEST(EnumerateAn, AnySeedGivesTheSameStream) {
  const Seqs expected = oracle::oracle_An(6);
  for (const auto& seed : expected) {
    ASSERT_EQ(collect(enumerate_An(6, seed)), expected) << "seed " << seed;
  }
}

TEST(EnumerateAn, DescendingIsReversed) {
  for (std::uint64_t n = 1; n <= 9; ++n) {
    Seqs up = collect(enumerate_An(n));
    std::ranges::reverse(up);
    EXPECT_EQ(collect(enumerate_An(n, {}, Direction::Descending)), up);
    EXPECT_EQ(collect(enumerate_An(n, Seq{n}, Direction::Descending)), up);
  }
}

TEST(EnumerateAn, Cardinality) {
  for (std::uint64_t n = 1; n <= 16; ++n) {
    std::size_t count = 0;
    for (const auto& a : enumerate_An(n)) {
      (void)a;
      ++count;
    }
    EXPECT_EQ(count, std::size_t{1} << (n - 1)) << "n = " << n;
  }
}

TEST(EnumerateAn, BadSeed) {
  EXPECT_EQ(code_of([] { (void)enumerate_An(4, Seq{1, 2}); }), ErrorCode::InvalidSeed);
}

// ---------------------------------------------------------------------------

TEST(EnumerateLn, SevenDiagram) {
  EXPECT_EQ(collect(enumerate_Ln(7)), kL7);
  EXPECT_EQ(collect(enumerate_Ln(2)), (Seqs{{1}}));
  EXPECT_EQ(collect(enumerate_Ln(1)), (Seqs{Seq::zero()}));
}

TEST(EnumerateLn, SizesAndOrder) {
  for (std::uint64_t n = 1; n <= 16; ++n) {
    const Seqs items = collect(enumerate_Ln(n));
    EXPECT_EQ(items.size(), kLnSizes[n - 1]) << "n = " << n;
    expect_strictly_ascending(items);
    for (const auto& a : items) {
      ASSERT_TRUE(is_lexical(a));
      ASSERT_EQ(1 + a.degree(), n);
    }
  }
}

TEST(EnumerateLn, DescendingIsReversed) {
  for (std::uint64_t n = 1; n <= 16; ++n) {
    Seqs up = collect(enumerate_Ln(n));
    std::ranges::reverse(up);
    EXPECT_EQ(collect(enumerate_Ln(n, Direction::Descending)), up) << "n = " << n;
  }
}

TEST(EnumerateLn, StarBranchCount) {
  auto cursor = enumerate_Ln(8);
  while (cursor.next()) {
  }
  EXPECT_EQ(cursor.star_branch_count(), 1u);
  for (std::uint64_t p : {5u, 7u, 11u, 13u}) {
    auto prime = enumerate_Ln(p);
    while (prime.next()) {
    }
    EXPECT_EQ(prime.star_branch_count(), 0u) << "p = " << p;
  }
}

// ---------------------------------------------------------------------------

TEST(EnumerateDn, EightTable) {
  EXPECT_EQ(collect(enumerate_Dn(8)), kD8);
  EXPECT_EQ(collect(enumerate_Dn(1)), (Seqs{Seq::zero()}));
}

TEST(EnumerateDn, PrimeIsZeroThenLn) {
  Seqs expected{Seq::zero()};
  for (const auto& a : kL7) {
    expected.push_back(a);
  }
  EXPECT_EQ(collect(enumerate_Dn(7)), expected);
}

TEST(EnumerateDn, CardinalityIsSumOverDivisors) {
  for (std::uint64_t n = 1; n <= 16; ++n) {
    std::size_t expected = 0;
    for (std::uint64_t d = 1; d <= n; ++d) {
      if (n % d == 0) {
        expected += collect(enumerate_Ln(d)).size();
      }
    }
    const Seqs items = collect(enumerate_Dn(n));
    EXPECT_EQ(items.size(), expected) << "n = " << n;
    expect_strictly_ascending(items);
  }
}

TEST(EnumerateDn, AdjacentLengthsAlternateParity) {
  for (std::uint64_t n = 1; n <= 16; ++n) {
    const Seqs items = collect(enumerate_Dn(n));
    for (std::size_t k = 0; k + 1 < items.size(); ++k) {
      ASSERT_NE(items[k].length() % 2, items[k + 1].length() % 2) << items[k] << " in D_" << n;
    }
  }
}

// ---------------------------------------------------------------------------

TEST(Cursor, LimitTakesPrefix) {
  const Seqs full = collect(enumerate_Dn(12));
  for (std::size_t k = 0; k <= full.size() + 2; ++k) {
    const Seqs head = collect(enumerate_Dn(12), k);
    ASSERT_EQ(head.size(), std::min(k, full.size()));
    ASSERT_TRUE(std::equal(head.begin(), head.end(), full.begin()));
  }
}

TEST(Cursor, StateAfterExhaustion) {
  auto cursor = enumerate_Ln(4);
  EXPECT_EQ(cursor.context(), (SetContext{SetKind::L, 4}));
  EXPECT_EQ(cursor.direction(), Direction::Ascending);
  EXPECT_FALSE(cursor.current().has_value());
  EXPECT_EQ(cursor.next(), (Seq{2, 1}));
  EXPECT_EQ(cursor.current(), (Seq{2, 1}));
  EXPECT_EQ(cursor.next(), (Seq{3}));
  EXPECT_FALSE(cursor.exhausted());
  EXPECT_FALSE(cursor.next().has_value());
  EXPECT_TRUE(cursor.exhausted());
  EXPECT_FALSE(cursor.next().has_value());
}

TEST(Cursor, EmittedElementsAreMembers) {
  for (std::uint64_t n = 1; n <= 12; ++n) {
    for (const auto& a : enumerate_Dn(n)) {
      ASSERT_TRUE((SetContext{SetKind::D, n}.contains(a))) << a;
    }
  }
}

TEST(Cursor, CapIsEnforced) {
  EXPECT_EQ(code_of([] { (void)enumerate_An(31); }), ErrorCode::CapExceeded);
  EXPECT_EQ(code_of([] { (void)enumerate_Ln(9, Direction::Ascending, 8); }), ErrorCode::CapExceeded);
  EXPECT_EQ(code_of([] { (void)enumerate_Dn(0); }), ErrorCode::InvalidN);
}

TEST(Cursor, LargeStreamsArePrefixable) {
  // |A_30| is about 5e8; taking a prefix must not walk the whole set.
  const Seqs head = collect(enumerate_An(30), 5);
  ASSERT_EQ(head.size(), 5u);
  EXPECT_EQ(head.front(), (Seq{1, 29}));
  const Seqs lex = collect(enumerate_Ln(30), 3);
  EXPECT_EQ(lex.front(), least_element(30));
}

}  // namespace
}  // namespace alphaseq
