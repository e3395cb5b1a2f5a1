#ifndef SIGMAF_KERNELS_HPP_
#define SIGMAF_KERNELS_HPP_

// Hot loops, each in a serial reference form and an OpenMP form. The
// reference forms follow the definitions literally and are kept for tests
// and the benchmark; the library calls the parallel forms.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sigmaf/core_sets.hpp"

namespace sigmaf::kernels {

struct RawCell {
  std::uint32_t signature;
  SetMask mask;
};

/// Walks all 2^n signatures in order and keeps the nonempty cells.
std::vector<RawCell> cells_reference(std::span<const SetMask> sets, const SetMask& full);

/// Depth-first refinement that abandons a branch as soon as its running
/// intersection is empty. The top levels are split into independent prefixes
/// run under OpenMP and concatenated in signature order, so the output is
/// identical to cells_reference().
std::vector<RawCell> cells_parallel(std::span<const SetMask> sets, const SetMask& full);

// Single-word kernels for universes of at most 64 points. `full` is the mask
// of the whole universe.
using Word = std::uint64_t;

/// Number of nonempty cells of the partition induced by `sets`.
std::size_t count_cells(std::span<const Word> sets, Word full);

/// Nonempty cells, ascending signature order.
std::vector<Word> cells_of(std::span<const Word> sets, Word full);

/// True iff `target` is a union of cells of the partition induced by `sets`,
/// i.e. target lies in the sigma-field they generate.
bool in_generated_field(std::span<const Word> sets, Word full, Word target);

/// No member lies in the field generated by the others.
bool sigma_distinct(std::span<const Word> sets, Word full);

/// No member is a proper subset of another.
bool all_atoms(std::span<const Word> sets);

}  // namespace sigmaf::kernels

#endif  // SIGMAF_KERNELS_HPP_
