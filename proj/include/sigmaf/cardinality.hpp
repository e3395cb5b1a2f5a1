#ifndef SIGMAF_CARDINALITY_HPP_
#define SIGMAF_CARDINALITY_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sigmaf/core_sets.hpp"

namespace sigmaf {

/// Subset of member indices {0..n-1}, bit i = member i. Rendered 1-based.
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint32_t bits) : bits_(bits) {}
  /// From 1-based member numbers, e.g. {1, 2} for A1 A2.
  static IndexSet of(std::initializer_list<unsigned> one_based);

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  constexpr bool is_subset_of(IndexSet o) const { return (bits_ & ~o.bits_) == 0; }
  std::vector<unsigned> one_based() const;
  std::string to_string() const;  // "{1,2}"

  constexpr bool operator==(const IndexSet&) const = default;
  /// (size, lexicographic on the sorted member lists)
  bool operator<(const IndexSet& o) const;

 private:
  std::uint32_t bits_ = 0;
};

/// Number of members contained in the union of the other members; each one
/// empties its own single-positive cell.
std::size_t s1_count(const GeneratingClass& cls);

/// Which members make up s1 (0-based).
std::vector<std::size_t> s1_members(const GeneratingClass& cls);

struct EmptyFamilies {
  std::vector<IndexSet> minimal;  // L: inclusion-minimal, size >= 2, empty intersection
  std::vector<IndexSet> extra;    // M: empty, not implied by L or earlier M (always empty here)

  bool operator==(const EmptyFamilies&) const = default;
};

/// Canonical decomposition: L = every inclusion-minimal empty index set.
EmptyFamilies empty_intersection_families(const GeneratingClass& cls);

/// Order-dependent decomposition used in hand calculations: L holds the
/// minimal empty sets of the smallest order that has any, M the remaining
/// minimal empty sets. Implies exactly the same cells as the canonical one.
EmptyFamilies staged_empty_families(const GeneratingClass& cls);

/// |union over families F of {B : F ⊆ B ⊆ {1..n}}| by walking all 2^n index sets.
std::uint64_t implied_union_size(std::size_t n, std::span<const IndexSet> families);

/// Same count by inclusion-exclusion over the families (at most 24 families).
std::uint64_t implied_union_size_inclusion_exclusion(std::size_t n, std::span<const IndexSet> families);

enum class RangeCase {
  kOpenMeeting,     // (i)   union != Omega, intersection != empty
  kCoveringMeeting, // (ii)  union == Omega, intersection != empty
  kOpenDisjoint,    // (iii) union != Omega, intersection == empty
  kCoveringDisjoint // (iv)  union == Omega, intersection == empty
};

std::string to_string(RangeCase c);  // "i", "ii", "iii", "iv"
std::optional<RangeCase> parse_range_case(std::string_view s);

struct CaseRange {
  RangeCase label;
  std::uint64_t min = 0;
  std::uint64_t max = 0;
  bool contains(std::uint64_t v) const { return v >= min && v <= max; }
};

/// Attainable partition sizes for sigma-distinct atom classes of n >= 3 sets.
CaseRange case_range(RangeCase c, std::size_t n);

RangeCase range_case_of(bool covers_universe, bool intersection_empty);

struct CaseClassification {
  RangeCase label;
  CaseRange range;
  std::size_t partition_size = 0;  // oracle |P|
  bool in_range = false;
  bool hypotheses_hold = false;  // sigma-distinct, all atoms, n >= 3
};

CaseClassification classify_case(const GeneratingClass& cls);

struct CardinalityReport {
  std::size_t n = 0;
  std::size_t s1 = 0;
  std::vector<std::size_t> s1_members;
  EmptyFamilies families;
  EmptyFamilies staged_families;
  std::uint64_t implied_union_size = 0;
  bool covers_universe = false;  // union of members == Omega, so the Q0 cell is empty
  std::uint64_t q0_correction = 0;
  std::uint64_t predicted_partition_size = 0;
  RangeCase case_label = RangeCase::kOpenMeeting;
  std::optional<std::uint64_t> oracle_size;
  bool formula_applicable = false;
  /// Positive index sets of cells the formula expects nonempty but which are empty.
  std::vector<IndexSet> unexplained_empty_cells;

  bool operator==(const CardinalityReport&) const = default;
};

/// Predicts |P_A| from s1, the empty intersection families and the Q0 cell,
/// then checks the prediction against the induced partition.
CardinalityReport predict_cardinality(const GeneratingClass& cls);

}  // namespace sigmaf

#endif  // SIGMAF_CARDINALITY_HPP_
