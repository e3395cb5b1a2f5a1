#ifndef SIGMAF_ENUMERATE_HPP_
#define SIGMAF_ENUMERATE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <span>

#include "sigmaf/cardinality.hpp"
#include "sigmaf/kernels.hpp"

namespace sigmaf {

// Enumeration works on single-word masks.
inline constexpr std::size_t kMaxEnumerationUniverse = 62;

struct EnumerationOptions {
  // Largest number of candidate classes examined; 0 means no limit. When the
  // exhaustive candidate count exceeds it, `sample_budget` random classes are
  // drawn instead and the result is flagged as sampled.
  std::uint64_t sample_budget = 0;
  std::uint64_t seed = 1;
  bool require_sigma_distinct = true;
  bool require_atoms = true;
};

struct EnumerationHistogram {
  std::size_t n = 0;
  std::size_t universe_size = 0;
  bool sampled = false;
  std::uint64_t candidates_total = 0;  // saturates at UINT64_MAX
  std::uint64_t candidates_examined = 0;
  std::uint64_t qualifying = 0;
  // case -> |P| -> number of classes
  std::map<RangeCase, std::map<std::uint64_t, std::uint64_t>> counts;

  std::set<std::uint64_t> achieved(RangeCase c) const;
  std::set<std::uint64_t> achieved_all() const;
  bool empty() const { return qualifying == 0; }

  bool operator==(const EnumerationHistogram&) const = default;
};

/// Classes of n distinct nonempty proper subsets of a universe of the given
/// size, taken once per unordered family (members in increasing mask order),
/// filtered by the options and tallied by case label and partition size.
/// Parallel over the first member; the merged histogram is deterministic.
EnumerationHistogram enumerate_families(std::size_t n, std::size_t universe_size,
                                        const EnumerationOptions& options = {});

/// Serial reference for enumerate_families().
EnumerationHistogram enumerate_families_serial(std::size_t n, std::size_t universe_size,
                                               const EnumerationOptions& options = {});

/// Serial visit of every qualifying class (same selection as the histogram).
void for_each_family(std::size_t n, std::size_t universe_size, const EnumerationOptions& options,
                     const std::function<void(std::span<const kernels::Word>)>& visit);

/// Number of unordered n-member families over a universe of the given size,
/// saturating at UINT64_MAX.
std::uint64_t family_candidate_count(std::size_t n, std::size_t universe_size);

}  // namespace sigmaf

#endif  // SIGMAF_ENUMERATE_HPP_
