#include "sigmaf/kernels.hpp"

#include <algorithm>

#include <omp.h>

namespace sigmaf::kernels {

namespace {

struct Prefix {
  std::uint32_t signature;
  SetMask mask;
};

// Nonempty cells below `mask`, which already fixes the signs of members
// [0, depth). Visits the A^c branch before the A branch.
void refine(std::span<const SetMask> sets, std::size_t depth, std::uint32_t signature, const SetMask& mask,
            std::vector<RawCell>& out) {
  if (depth == sets.size()) {
    out.push_back({signature, mask});
    return;
  }
  SetMask outside = mask - sets[depth];
  if (!outside.none()) refine(sets, depth + 1, signature << 1, outside, out);
  SetMask inside = mask & sets[depth];
  if (!inside.none()) refine(sets, depth + 1, (signature << 1) | 1U, inside, out);
}

template <typename Visit>
void refine_words(std::span<const Word> sets, std::size_t depth, Word mask, Visit&& visit) {
  if (depth == sets.size()) {
    visit(mask);
    return;
  }
  const Word outside = mask & ~sets[depth];
  if (outside) refine_words(sets, depth + 1, outside, visit);
  const Word inside = mask & sets[depth];
  if (inside) refine_words(sets, depth + 1, inside, visit);
}

}  // namespace

std::vector<RawCell> cells_reference(std::span<const SetMask> sets, const SetMask& full) {
  const std::size_t n = sets.size();
  std::vector<RawCell> out;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t s = 0; s < count; ++s) {
    SetMask cell = full;
    for (std::size_t i = 0; i < n; ++i) {
      const bool positive = (s >> (n - 1 - i)) & 1U;
      cell = positive ? (cell & sets[i]) : (cell - sets[i]);
    }
    if (!cell.none()) out.push_back({static_cast<std::uint32_t>(s), std::move(cell)});
  }
  return out;
}

std::vector<RawCell> cells_parallel(std::span<const SetMask> sets, const SetMask& full) {
  const std::size_t n = sets.size();
  const std::size_t split = std::min<std::size_t>(n, 6);

  // Breadth-first over the first `split` members, keeping signature order.
  std::vector<Prefix> frontier{{0U, full}};
  for (std::size_t depth = 0; depth < split; ++depth) {
    std::vector<Prefix> next;
    next.reserve(frontier.size() * 2);
    for (const auto& p : frontier) {
      SetMask outside = p.mask - sets[depth];
      if (!outside.none()) next.push_back({p.signature << 1, std::move(outside)});
      SetMask inside = p.mask & sets[depth];
      if (!inside.none()) next.push_back({(p.signature << 1) | 1U, std::move(inside)});
    }
    frontier = std::move(next);
  }

  std::vector<std::vector<RawCell>> parts(frontier.size());
  const auto prefixes = static_cast<std::ptrdiff_t>(frontier.size());
#pragma omp parallel for schedule(dynamic) if (n > 8)
  for (std::ptrdiff_t k = 0; k < prefixes; ++k) {
    const auto& p = frontier[static_cast<std::size_t>(k)];
    refine(sets, split, p.signature, p.mask, parts[static_cast<std::size_t>(k)]);
  }

  std::vector<RawCell> out;
  for (auto& part : parts) {
    std::move(part.begin(), part.end(), std::back_inserter(out));
  }
  return out;
}

std::size_t count_cells(std::span<const Word> sets, Word full) {
  std::size_t count = 0;
  refine_words(sets, 0, full, [&](Word) { ++count; });
  return count;
}

std::vector<Word> cells_of(std::span<const Word> sets, Word full) {
  std::vector<Word> out;
  refine_words(sets, 0, full, [&](Word c) { out.push_back(c); });
  return out;
}

bool in_generated_field(std::span<const Word> sets, Word full, Word target) {
  bool inside = true;
  refine_words(sets, 0, full, [&](Word c) {
    if ((c & target) != 0 && (c & ~target) != 0) inside = false;
  });
  return inside;
}

bool sigma_distinct(std::span<const Word> sets, Word full) {
  std::vector<Word> others;
  others.reserve(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    others.clear();
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (j != i) others.push_back(sets[j]);
    }
    if (in_generated_field(others, full, sets[i])) return false;
  }
  return true;
}

bool all_atoms(std::span<const Word> sets) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (i != j && (sets[j] & ~sets[i]) == 0 && sets[j] != sets[i]) return false;
    }
  }
  return true;
}

}  // namespace sigmaf::kernels
