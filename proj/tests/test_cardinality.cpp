#include <doctest.h>

#include "sigmaf/cardinality.hpp"
#include "sigmaf/errors.hpp"
#include "sigmaf/partition.hpp"
#include "support.hpp"

using namespace sigmaf;
using namespace sigmaf::test;

namespace {

GeneratingClass sixteen_point_class() {
  auto u = Universe::numbered(16, 5);
  return GeneratingClass(u, std::vector<SetMask>{mask(u, {8, 10, 14, 16, 17}), mask(u, {6, 7, 18}),
                                                 mask(u, {7, 8, 9, 14, 16, 19}), mask(u, {9, 10, 11, 14, 20})});
}

GeneratingClass eleven_point_class() {
  auto u = Universe::numbered(11, 5);
  return GeneratingClass(u, std::vector<SetMask>{mask(u, {8, 9, 10}), mask(u, {7, 11, 12, 15}),
                                                 mask(u, {7, 11, 12, 13}), mask(u, {8, 10, 13, 15})});
}

// One point per listed positive index set (bit i = member i).
GeneratingClass class_from_cells(std::size_t n, const std::vector<std::uint32_t>& cells) {
  auto u = Universe::numbered(cells.size());
  std::vector<SetMask> sets(n, u->empty_set());
  for (std::size_t p = 0; p < cells.size(); ++p) {
    for (std::size_t i = 0; i < n; ++i) {
      if ((cells[p] >> i) & 1U) sets[i].set(p);
    }
  }
  return GeneratingClass(u, sets);
}

std::vector<IndexSet> sets_of(std::initializer_list<std::initializer_list<unsigned>> lists) {
  std::vector<IndexSet> out;
  for (auto l : lists) out.push_back(IndexSet::of(l));
  return out;
}

}  // namespace

TEST_CASE("index sets") {
  const IndexSet s = IndexSet::of({1, 3});
  CHECK(s.bits() == 0b101u);
  CHECK(s.size() == 2);
  CHECK(s.contains(0));
  CHECK_FALSE(s.contains(1));
  CHECK(s.to_string() == "{1,3}");
  CHECK(IndexSet::of({1, 2}) < IndexSet::of({1, 3}));
  CHECK(IndexSet::of({2, 3}) < IndexSet::of({1, 2, 3}));
  CHECK(s.is_subset_of(IndexSet::of({1, 2, 3})));
  CHECK_THROWS_AS(IndexSet::of({0}), InvalidInput);
}

TEST_CASE("sixteen-point class prediction") {
  const auto r = predict_cardinality(sixteen_point_class());
  CHECK(r.s1 == 0);
  CHECK(r.families.minimal == sets_of({{1, 2}, {2, 4}}));
  CHECK(r.families.extra.empty());
  CHECK(r.implied_union_size == 6);
  CHECK_FALSE(r.covers_universe);
  CHECK(r.predicted_partition_size == 10);
  CHECK(r.oracle_size == 10u);
  CHECK(r.formula_applicable);
  CHECK(r.case_label == RangeCase::kOpenDisjoint);

  const auto c = classify_case(sixteen_point_class());
  CHECK(c.range.min == 5);
  CHECK(c.range.max == 15);
  CHECK(c.in_range);
  CHECK(c.hypotheses_hold);
}

TEST_CASE("eleven-point class prediction, canonical and staged families") {
  const auto cls = eleven_point_class();
  const auto r = predict_cardinality(cls);
  CHECK(r.s1 == 3);
  CHECK(r.s1_members == std::vector<std::size_t>{1, 2, 3});
  CHECK(r.families.minimal == sets_of({{1, 2}, {1, 3}, {2, 3, 4}}));
  CHECK(r.staged_families.minimal == sets_of({{1, 2}, {1, 3}}));
  CHECK(r.staged_families.extra == sets_of({{2, 3, 4}}));
  CHECK(r.implied_union_size == 7);
  CHECK(r.predicted_partition_size == 6);
  CHECK(r.oracle_size == 6u);
  CHECK(r.formula_applicable);
}

TEST_CASE("a class whose empty cells are not implied") {
  // every pairwise intersection is {2}, which also lies in the third set
  auto u = Universe::numbered(5);
  GeneratingClass cls(u, std::vector<SetMask>{mask(u, {1, 2}), mask(u, {2, 3}), mask(u, {2, 4})});
  const auto r = predict_cardinality(cls);
  CHECK(r.s1 == 0);
  CHECK(r.families.minimal.empty());
  CHECK(r.predicted_partition_size == 8);
  CHECK(r.oracle_size == 5u);
  CHECK_FALSE(r.formula_applicable);
  CHECK(r.unexplained_empty_cells == sets_of({{1, 2}, {1, 3}, {2, 3}}));
  const auto c = classify_case(cls);
  CHECK(c.label == RangeCase::kOpenMeeting);
  CHECK(c.in_range);
  CHECK(c.hypotheses_hold);
}

TEST_CASE("special cases with no member inside the others' union") {
  for (std::size_t n = 3; n <= 6; ++n) {
    const std::uint32_t all = (1U << n) - 1;
    {  // no intersection of two or more is empty
      std::vector<std::uint32_t> cells;
      for (std::uint32_t b = 0; b <= all; ++b) cells.push_back(b);
      const auto r = predict_cardinality(class_from_cells(n, cells));
      CHECK(r.predicted_partition_size == (1U << n));
      CHECK(r.oracle_size == (1U << n));
    }
    {  // only the (n-1)-factor intersections are empty
      for (std::size_t q = 1; q <= n; ++q) {
        std::vector<std::uint32_t> cells;
        for (std::uint32_t b = 0; b < all; ++b) {
          const bool dropped = std::popcount(b) == static_cast<int>(n - 1) && static_cast<std::size_t>(std::countr_zero(~b)) < q;
          if (!dropped) cells.push_back(b);
        }
        const auto r = predict_cardinality(class_from_cells(n, cells));
        CHECK(r.s1 == 0);
        CHECK(r.predicted_partition_size == (1U << n) - q - 1);
        CHECK(r.oracle_size == (1U << n) - q - 1);
      }
    }
    {  // all pairwise intersections are empty
      std::vector<std::uint32_t> cells{0};
      for (std::size_t i = 0; i < n; ++i) cells.push_back(1U << i);
      const auto r = predict_cardinality(class_from_cells(n, cells));
      CHECK(r.predicted_partition_size == n + 1);
      CHECK(r.oracle_size == n + 1);
    }
  }
}

TEST_CASE("case ranges") {
  CHECK(case_range(RangeCase::kOpenMeeting, 3).min == 5);
  CHECK(case_range(RangeCase::kOpenMeeting, 3).max == 8);
  CHECK(case_range(RangeCase::kCoveringMeeting, 3).min == 4);
  CHECK(case_range(RangeCase::kCoveringMeeting, 3).max == 7);
  CHECK(case_range(RangeCase::kOpenDisjoint, 4).min == 5);
  CHECK(case_range(RangeCase::kOpenDisjoint, 4).max == 15);
  CHECK(case_range(RangeCase::kCoveringDisjoint, 4).min == 4);
  CHECK(case_range(RangeCase::kCoveringDisjoint, 4).max == 14);
  for (auto c : {RangeCase::kOpenMeeting, RangeCase::kCoveringMeeting, RangeCase::kOpenDisjoint,
                 RangeCase::kCoveringDisjoint}) {
    CHECK(parse_range_case(to_string(c)) == c);
  }
  CHECK_FALSE(parse_range_case("v").has_value());
}

TEST_CASE("implied-union size: enumeration equals inclusion-exclusion") {
  Rng rng(808);
  for (int t = 0; t < 3000; ++t) {
    const std::size_t n = 2 + rng() % 11;
    const std::size_t k = rng() % 9;
    std::vector<IndexSet> fam;
    for (std::size_t i = 0; i < k; ++i) {
      std::uint32_t b = static_cast<std::uint32_t>(rng()) & ((1U << n) - 1);
      if (std::popcount(b) < 2) continue;
      fam.emplace_back(b);
    }
    const auto direct = implied_union_size(n, fam);
    REQUIRE(direct == implied_union_size_inclusion_exclusion(n, fam));

    // adding a family never shrinks the union
    std::uint32_t extra = static_cast<std::uint32_t>(rng()) & ((1U << n) - 1);
    if (std::popcount(extra) >= 2) {
      auto more = fam;
      more.emplace_back(extra);
      REQUIRE(implied_union_size(n, more) >= direct);
    }
  }
  // the two families of the sixteen-point class
  CHECK(implied_union_size(4, sets_of({{1, 2}, {2, 4}})) == 6);
  CHECK(implied_union_size(4, sets_of({{1, 2}, {1, 3}, {2, 3, 4}})) == 7);
}

TEST_CASE("random classes: prediction bounds the oracle and every field checks out") {
  Rng rng(1234);
  int applicable = 0, not_applicable = 0;
  for (int t = 0; t < 3000; ++t) {
    const std::size_t size = 2 + rng() % 10;
    auto u = Universe::numbered(size);
    const std::size_t n = 2 + rng() % std::min<std::size_t>(4, (std::size_t{1} << size) - 3);
    if ((std::size_t{1} << size) - 2 < n) continue;
    const auto masks = random_class_masks(u, n, rng);
    GeneratingClass cls(u, masks);
    const auto r = predict_cardinality(cls);
    std::vector<std::uint64_t> words;
    for (const auto& m : masks) words.push_back(to_word(m));

    // s1 against the single-positive cells of the naive partition
    const auto positive = oracle::nonempty_positive_sets(words, size);
    std::size_t s1 = 0;
    for (std::size_t i = 0; i < n; ++i) s1 += positive.count(1U << i) ? 0 : 1;
    REQUIRE(r.s1 == s1);

    // L against direct emptiness of every index set
    std::vector<IndexSet> minimal;
    for (std::uint32_t b = 0; b < (1U << n); ++b) {
      if (std::popcount(b) < 2) continue;
      auto empty = [&](std::uint32_t s) {
        std::uint64_t inter = oracle::full(size);
        for (std::size_t i = 0; i < n; ++i) {
          if ((s >> i) & 1U) inter &= words[i];
        }
        return inter == 0;
      };
      if (!empty(b)) continue;
      bool is_min = true;
      for (std::size_t i = 0; i < n; ++i) {
        const std::uint32_t smaller = b & ~(1U << i);
        if (((b >> i) & 1U) && std::popcount(smaller) >= 2 && empty(smaller)) is_min = false;
      }
      if (is_min) minimal.emplace_back(b);
    }
    std::sort(minimal.begin(), minimal.end());
    REQUIRE(r.families.minimal == minimal);

    REQUIRE(r.oracle_size == positive.size());
    REQUIRE(r.predicted_partition_size >= *r.oracle_size);
    REQUIRE(r.predicted_partition_size - *r.oracle_size == r.unexplained_empty_cells.size());
    REQUIRE(r.formula_applicable == (r.predicted_partition_size == *r.oracle_size));

    std::vector<IndexSet> staged = r.staged_families.minimal;
    staged.insert(staged.end(), r.staged_families.extra.begin(), r.staged_families.extra.end());
    REQUIRE(implied_union_size(n, staged) == r.implied_union_size);

    (r.formula_applicable ? applicable : not_applicable)++;

    if (n >= 3 && oracle::sigma_distinct(words, size) && oracle::all_atoms(words)) {
      const auto c = classify_case(cls);
      REQUIRE(c.hypotheses_hold);
      REQUIRE(static_cast<int>(c.label) == oracle::case_index(words, size));
      REQUIRE(c.in_range);
    }
  }
  CHECK(applicable > 100);
  CHECK(not_applicable > 100);
}

TEST_CASE("prediction needs two members") {
  auto u = Universe::numbered(3);
  GeneratingClass one(u, std::vector<SetMask>{mask(u, {1})});
  CHECK_THROWS_AS(predict_cardinality(one), InvalidInput);
  CHECK_THROWS_AS(s1_count(one), InvalidInput);
}
