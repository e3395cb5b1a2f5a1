#include "sigmaf/cardinality.hpp"

#include <algorithm>
#include <unordered_set>

#include "sigmaf/errors.hpp"
#include "sigmaf/partition.hpp"

namespace sigmaf {

namespace {

void require_index_width(std::size_t n) {
  if (n > kMaxPartitionArity) {
    throw GuardExceeded("index sets over " + std::to_string(n) + " members exceed the 2^24 limit", n);
  }
}

// Positive index set of a cell signature (A1 is the signature's high bit).
IndexSet positive_members(std::uint32_t signature, std::size_t n) {
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if ((signature >> (n - 1 - i)) & 1U) bits |= 1U << i;
  }
  return IndexSet(bits);
}

// empty[S] == (intersection of the members in S is empty), for every S.
std::vector<bool> empty_intersections(const GeneratingClass& cls) {
  const std::size_t n = cls.size();
  std::vector<bool> empty(std::size_t{1} << n, false);
  const SetMask full = cls.universe()->full_set();
  // Depth-first over S, adding members in increasing index order.
  auto walk = [&](auto&& self, std::size_t next, std::uint32_t bits, const SetMask& inter) -> void {
    for (std::size_t i = next; i < n; ++i) {
      const std::uint32_t s = bits | (1U << i);
      SetMask x = inter & cls.mask(i);
      if (x.none()) {
        // Supersets are empty too; mark them without further intersections.
        const std::uint32_t rest = ~s & ((1U << n) - 1);
        for (std::uint32_t extra = rest;; extra = (extra - 1) & rest) {
          empty[s | extra] = true;
          if (extra == 0) break;
        }
        continue;
      }
      self(self, i + 1, s, x);
    }
  };
  walk(walk, 0, 0U, full);
  return empty;
}

void sort_families(std::vector<IndexSet>& v) { std::sort(v.begin(), v.end()); }

}  // namespace

// ---------------------------------------------------------------- IndexSet

IndexSet IndexSet::of(std::initializer_list<unsigned> one_based) {
  std::uint32_t bits = 0;
  for (auto i : one_based) {
    if (i == 0 || i > 32) throw InvalidInput("index set members are 1-based and at most 32");
    bits |= 1U << (i - 1);
  }
  return IndexSet(bits);
}

std::vector<unsigned> IndexSet::one_based() const {
  std::vector<unsigned> out;
  for (unsigned i = 0; i < 32; ++i) {
    if ((bits_ >> i) & 1U) out.push_back(i + 1);
  }
  return out;
}

std::string IndexSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (auto i : one_based()) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

bool IndexSet::operator<(const IndexSet& o) const {
  if (size() != o.size()) return size() < o.size();
  return one_based() < o.one_based();
}

// ---------------------------------------------------------------- s1 and families

std::vector<std::size_t> s1_members(const GeneratingClass& cls) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    SetMask others = cls.universe()->empty_set();
    for (std::size_t j = 0; j < cls.size(); ++j) {
      if (j != i) others |= cls.mask(j);
    }
    if (cls.mask(i).is_subset_of(others)) out.push_back(i);
  }
  return out;
}

std::size_t s1_count(const GeneratingClass& cls) {
  if (cls.size() < 2) throw InvalidInput("s1 needs at least two members");
  return s1_members(cls).size();
}

EmptyFamilies empty_intersection_families(const GeneratingClass& cls) {
  const std::size_t n = cls.size();
  if (n < 2) throw InvalidInput("empty intersection families need at least two members");
  require_index_width(n);
  const auto empty = empty_intersections(cls);
  EmptyFamilies out;
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    if (std::popcount(s) < 2 || !empty[s]) continue;
    bool minimal = true;
    for (std::uint32_t rest = s; rest && minimal; rest &= rest - 1) {
      const std::uint32_t smaller = s & ~(rest & -rest);
      if (std::popcount(smaller) >= 2 && empty[smaller]) minimal = false;
    }
    if (minimal) out.minimal.emplace_back(s);
  }
  sort_families(out.minimal);
  return out;
}

EmptyFamilies staged_empty_families(const GeneratingClass& cls) {
  EmptyFamilies canonical = empty_intersection_families(cls);
  EmptyFamilies out;
  if (canonical.minimal.empty()) return out;
  const std::size_t lowest = canonical.minimal.front().size();
  for (const auto& f : canonical.minimal) {
    (f.size() == lowest ? out.minimal : out.extra).push_back(f);
  }
  return out;
}

std::uint64_t implied_union_size(std::size_t n, std::span<const IndexSet> families) {
  require_index_width(n);
  std::uint64_t count = 0;
  for (std::uint32_t b = 0; b < (1U << n); ++b) {
    const IndexSet candidate(b);
    if (std::any_of(families.begin(), families.end(), [&](IndexSet f) { return f.is_subset_of(candidate); })) ++count;
  }
  return count;
}

std::uint64_t implied_union_size_inclusion_exclusion(std::size_t n, std::span<const IndexSet> families) {
  require_index_width(n);
  if (families.size() > 24) throw GuardExceeded("inclusion-exclusion over more than 24 families", families.size());
  // Sum over nonempty subsets T of (-1)^(|T|+1) 2^(n - |union of T|).
  std::int64_t total = 0;
  auto walk = [&](auto&& self, std::size_t next, std::uint32_t merged, int chosen) -> void {
    for (std::size_t i = next; i < families.size(); ++i) {
      const std::uint32_t u = merged | families[i].bits();
      const int k = chosen + 1;
      const std::int64_t term = std::int64_t{1} << (n - static_cast<std::size_t>(std::popcount(u)));
      total += (k % 2 == 1) ? term : -term;
      self(self, i + 1, u, k);
    }
  };
  walk(walk, 0, 0U, 0);
  return static_cast<std::uint64_t>(total);
}

// ---------------------------------------------------------------- cases

std::string to_string(RangeCase c) {
  switch (c) {
    case RangeCase::kOpenMeeting: return "i";
    case RangeCase::kCoveringMeeting: return "ii";
    case RangeCase::kOpenDisjoint: return "iii";
    case RangeCase::kCoveringDisjoint: return "iv";
  }
  return "?";
}

std::optional<RangeCase> parse_range_case(std::string_view s) {
  if (s == "i") return RangeCase::kOpenMeeting;
  if (s == "ii") return RangeCase::kCoveringMeeting;
  if (s == "iii") return RangeCase::kOpenDisjoint;
  if (s == "iv") return RangeCase::kCoveringDisjoint;
  return std::nullopt;
}

CaseRange case_range(RangeCase c, std::size_t n) {
  const std::uint64_t top = std::uint64_t{1} << n;
  switch (c) {
    case RangeCase::kOpenMeeting: return {c, n + 2, top};
    case RangeCase::kCoveringMeeting: return {c, n + 1, top - 1};
    case RangeCase::kOpenDisjoint: return {c, n + 1, top - 1};
    case RangeCase::kCoveringDisjoint: return {c, n, top - 2};
  }
  return {c, 0, 0};
}

RangeCase range_case_of(bool covers_universe, bool intersection_empty) {
  if (!covers_universe) return intersection_empty ? RangeCase::kOpenDisjoint : RangeCase::kOpenMeeting;
  return intersection_empty ? RangeCase::kCoveringDisjoint : RangeCase::kCoveringMeeting;
}

CaseClassification classify_case(const GeneratingClass& cls) {
  const std::size_t n = cls.size();
  const RangeCase label = range_case_of(cls.union_all().all(), cls.intersection_all().none());
  CaseClassification c{label, case_range(label, n)};
  c.partition_size = induced_partition(cls).size();
  c.in_range = c.range.contains(c.partition_size);
  c.hypotheses_hold = n >= 3 && is_sigma_distinct(cls).distinct && all_atoms(cls).all_atoms;
  return c;
}

// ---------------------------------------------------------------- prediction

CardinalityReport predict_cardinality(const GeneratingClass& cls) {
  const std::size_t n = cls.size();
  if (n < 2) throw InvalidInput("cardinality prediction needs at least two members");
  require_index_width(n);

  CardinalityReport r;
  r.n = n;
  r.s1_members = s1_members(cls);
  r.s1 = r.s1_members.size();
  r.families = empty_intersection_families(cls);
  r.staged_families = staged_empty_families(cls);

  std::vector<IndexSet> all_families = r.families.minimal;
  all_families.insert(all_families.end(), r.families.extra.begin(), r.families.extra.end());
  r.implied_union_size = implied_union_size(n, all_families);

  r.covers_universe = cls.union_all().all();
  r.q0_correction = r.covers_universe ? 1 : 0;
  r.predicted_partition_size = (std::uint64_t{1} << n) - r.implied_union_size - r.s1 - r.q0_correction;
  r.case_label = range_case_of(r.covers_universe, cls.intersection_all().none());

  const Partition oracle = induced_partition(cls);
  r.oracle_size = oracle.size();

  std::unordered_set<std::uint32_t> nonempty;
  for (const auto& c : oracle.cells()) nonempty.insert(positive_members(c.signature, n).bits());
  std::unordered_set<std::size_t> s1_set(r.s1_members.begin(), r.s1_members.end());

  for (std::uint32_t b = 0; b < (1U << n); ++b) {
    const IndexSet positive(b);
    bool expected_empty = false;
    if (positive.size() == 0) {
      expected_empty = r.covers_universe;
    } else if (positive.size() == 1) {
      expected_empty = s1_set.count(static_cast<std::size_t>(std::countr_zero(b))) > 0;
    } else {
      expected_empty = std::any_of(all_families.begin(), all_families.end(),
                                   [&](IndexSet f) { return f.is_subset_of(positive); });
    }
    if (!expected_empty && nonempty.count(b) == 0) r.unexplained_empty_cells.push_back(positive);
  }
  sort_families(r.unexplained_empty_cells);
  r.formula_applicable = r.unexplained_empty_cells.empty();
  return r;
}

}  // namespace sigmaf
