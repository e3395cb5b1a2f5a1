#ifndef SIGMAF_PARTITION_HPP_
#define SIGMAF_PARTITION_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sigmaf/core_sets.hpp"

namespace sigmaf {

// Signature enumeration visits 2^n sign vectors; refuse anything larger.
inline constexpr std::size_t kMaxPartitionArity = 24;

/// One nonempty cell  A1^e1 ∩ ... ∩ An^en.
///
/// The signature packs the sign vector into an integer with A1 as the most
/// significant of n bits, so cells sort in binary-counter order.
struct Cell {
  std::uint32_t signature = 0;
  SetMask mask;
};

class Partition {
 public:
  /// Partition carrying signatures over `arity` generating sets. Cells must be
  /// nonempty, disjoint, cover the universe and have distinct signatures;
  /// throws InvalidInput otherwise.
  Partition(UniversePtr universe, std::size_t arity, std::vector<std::string> names,
            std::vector<Cell> cells);

  /// Signature-free partition from plain blocks (kept in the given order).
  static Partition from_blocks(UniversePtr universe, std::vector<SetMask> blocks);

  const UniversePtr& universe() const { return universe_; }
  std::size_t arity() const { return arity_; }
  bool has_signatures() const { return arity_ > 0; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<Cell>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  std::vector<SetMask> masks() const;

  /// epsilon_i of a signature, i 0-based.
  bool sign(const Cell& c, std::size_t i) const {
    return (c.signature >> (arity_ - 1 - i)) & 1U;
  }
  /// Number of positive signs (the stratum index j).
  std::size_t order(const Cell& c) const;
  /// "1010" for A1 A2^c A3 A4^c.
  std::string signature_string(const Cell& c) const;
  /// "A1 A2^c A3 A4^c" using member names.
  std::string signature_expression(const Cell& c) const;

  /// Same cells as `other`, ignoring signatures and order.
  bool same_blocks(const Partition& other) const;

 private:
  Partition() = default;

  UniversePtr universe_;
  std::size_t arity_ = 0;
  std::vector<std::string> names_;
  std::vector<Cell> cells_;
};

/// Cell for one signature, recomputed from the generating masks.
SetMask cell_mask(std::span<const SetMask> sets, const SetMask& full, std::uint32_t signature);

/// Finest partition induced by the class: all nonempty cells over the 2^n
/// signatures, in ascending signature order. Throws GuardExceeded for n > 24.
Partition induced_partition(const GeneratingClass& cls);

/// Same construction over arbitrary masks: empty sets, the whole universe,
/// duplicates and nested sets are all allowed.
Partition partition_of(const UniversePtr& universe, std::span<const SetMask> sets,
                       std::vector<std::string> names = {});

/// The reduced partition P*: nonempty cells only. Distinct signatures give
/// disjoint cells, so no stored cell is a union of others.
Partition reduced_partition(const GeneratingClass& cls);
Partition reduced_partition(const UniversePtr& universe, std::span<const SetMask> sets);

struct Stratum {
  std::size_t order = 0;  // j
  std::vector<Cell> cells;
};

/// Strata Q_0..Q_n of a signature-carrying partition.
std::vector<Stratum> strata(const Partition& p);

struct StratumUnion {
  std::size_t order = 0;
  SetMask mask;
};

/// Nonempty R_j = union of the cells in Q_j, in increasing j.
std::vector<StratumUnion> strata_union_partition(const Partition& p);

/// Cells pairwise disjoint and covering the universe.
bool is_disjoint_cover(const UniversePtr& universe, std::span<const SetMask> blocks);

}  // namespace sigmaf

#endif  // SIGMAF_PARTITION_HPP_
