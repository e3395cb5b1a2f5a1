#ifndef SIGMAF_SIGMA_FIELD_HPP_
#define SIGMAF_SIGMA_FIELD_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sigmaf/core_sets.hpp"
#include "sigmaf/partition.hpp"

namespace sigmaf {

inline constexpr std::size_t kMaxFieldMembers = std::size_t{1} << 20;
inline constexpr std::size_t kMaxPartitionBlocksForField = 20;

/// A finite sigma-field: members kept in canonical order (popcount, value).
class SigmaField {
 public:
  /// Sorts and deduplicates. Does not check closure; see audit_closure().
  SigmaField(UniversePtr universe, std::vector<SetMask> members, std::string note = {});

  const UniversePtr& universe() const { return universe_; }
  const std::vector<SetMask>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(const SetMask& m) const;
  const std::string& note() const { return note_; }

  /// log2 of the size when the size is a power of two.
  std::optional<std::size_t> log2_size() const;

  bool operator==(const SigmaField& o) const { return members_ == o.members_; }

 private:
  UniversePtr universe_;
  std::vector<SetMask> members_;
  std::string note_;
};

/// Least collection containing the sets, the empty set and the universe,
/// closed under complement and pairwise union. Worklist fixpoint; throws
/// GuardExceeded past kMaxFieldMembers.
SigmaField closure_bruteforce(const GeneratingClass& cls);
SigmaField closure_bruteforce(const UniversePtr& universe, std::span<const SetMask> sets);

/// All 2^k unions of the k blocks. Throws GuardExceeded for k > 20.
SigmaField sigma_from_partition(const Partition& p);

/// Minimal nonempty members, in canonical order.
Partition atoms_of(const SigmaField& field);

struct ClosureAudit {
  bool has_empty = false;
  bool has_full = false;
  bool complement_closed = false;
  bool union_closed = false;
  bool power_of_two = false;
  bool sampled = false;  // pairwise unions were sampled rather than exhaustive
  std::size_t pairs_checked = 0;

  bool ok() const { return has_empty && has_full && complement_closed && union_closed && power_of_two; }
};

/// Explicit closure check. Pairwise unions are exhaustive up to
/// `exhaustive_limit` members and sampled (deterministically, `samples`
/// pairs) above it. Runs the member loop with OpenMP.
ClosureAudit audit_closure(const SigmaField& field, std::size_t exhaustive_limit = 1024,
                           std::size_t samples = 200000, std::uint64_t seed = 0x5eed);

struct GenerationReport {
  bool equal = false;
  std::size_t closure_size = 0;    // |sigma(A)| by brute force
  std::size_t partition_size = 0;  // |P_A|
  std::size_t from_partition_size = 0;  // 2^|P_A|
  bool hypotheses_hold = false;    // sigma-distinct and all members atoms
  SigmaDistinctReport distinct;
  AtomReport atoms;
};

/// Compares the brute-force closure of the class with the sigma-field built
/// from its induced partition, member for member.
GenerationReport verify_generation_by_partition(const GeneratingClass& cls);

struct ExtensionReport {
  SigmaField extended;
  bool d_in_field = false;           // hypothesis D not in B fails; extended == field
  std::size_t extended_partition_size = 0;  // |P_{A,D}|
  unsigned long long predicted_size = 0;    // 2^|P_{A,D}|
  bool square_law = false;           // every atom split by D, hence |extended| == |field|^2
};

/// sigma(B, D) for a field B: built from the atoms of B refined by D.
/// Throws GuardExceeded if the predicted size passes kMaxFieldMembers.
ExtensionReport extend_with(const SigmaField& field, const SetMask& d);

}  // namespace sigmaf

#endif  // SIGMAF_SIGMA_FIELD_HPP_
