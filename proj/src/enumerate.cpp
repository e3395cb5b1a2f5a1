#include "sigmaf/enumerate.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <omp.h>

#include "sigmaf/errors.hpp"
#include "sigmaf/partition.hpp"

namespace sigmaf {

namespace {

using kernels::Word;

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

void check_arguments(std::size_t n, std::size_t universe_size) {
  if (n < 1) throw InvalidInput("enumeration needs n >= 1");
  if (n > kMaxPartitionArity) throw GuardExceeded("enumeration arity above 24", n);
  if (universe_size < 1 || universe_size > kMaxEnumerationUniverse) {
    throw InvalidInput("enumeration universe size must be in 1..62");
  }
}

struct Tally {
  std::uint64_t examined = 0;
  std::uint64_t qualifying = 0;
  std::map<RangeCase, std::map<std::uint64_t, std::uint64_t>> counts;

  void merge(const Tally& o) {
    examined += o.examined;
    qualifying += o.qualifying;
    for (const auto& [label, sizes] : o.counts) {
      for (const auto& [size, count] : sizes) counts[label][size] += count;
    }
  }
};

bool qualifies(std::span<const Word> sets, Word full, const EnumerationOptions& options) {
  if (options.require_atoms && !kernels::all_atoms(sets)) return false;
  if (options.require_sigma_distinct && !kernels::sigma_distinct(sets, full)) return false;
  return true;
}

void record(std::span<const Word> sets, Word full, const EnumerationOptions& options, Tally& tally) {
  ++tally.examined;
  if (!qualifies(sets, full, options)) return;
  ++tally.qualifying;
  Word uni = 0;
  Word inter = full;
  for (Word s : sets) {
    uni |= s;
    inter &= s;
  }
  const RangeCase label = range_case_of(uni == full, inter == 0);
  ++tally.counts[label][kernels::count_cells(sets, full)];
}

// Visits increasing tuples whose first `depth` entries are fixed in `tuple`.
template <typename Visit>
void extend_tuple(std::vector<Word>& tuple, std::size_t depth, Word last_mask, Visit&& visit) {
  if (depth == tuple.size()) {
    visit(std::span<const Word>(tuple));
    return;
  }
  for (Word m = tuple[depth - 1] + 1; m <= last_mask; ++m) {
    tuple[depth] = m;
    extend_tuple(tuple, depth + 1, last_mask, visit);
  }
}

std::vector<std::vector<Word>> draw_samples(std::size_t n, std::size_t universe_size, std::uint64_t budget,
                                            std::uint64_t seed) {
  const Word last_mask = (Word{1} << universe_size) - 2;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Word> pick(1, last_mask);
  std::vector<std::vector<Word>> samples;
  samples.reserve(budget);
  for (std::uint64_t k = 0; k < budget; ++k) {
    std::vector<Word> tuple;
    while (tuple.size() < n) {
      const Word m = pick(rng);
      if (std::find(tuple.begin(), tuple.end(), m) == tuple.end()) tuple.push_back(m);
    }
    std::sort(tuple.begin(), tuple.end());
    samples.push_back(std::move(tuple));
  }
  return samples;
}

EnumerationHistogram finish(std::size_t n, std::size_t universe_size, bool sampled, Tally tally) {
  EnumerationHistogram h;
  h.n = n;
  h.universe_size = universe_size;
  h.sampled = sampled;
  h.candidates_total = family_candidate_count(n, universe_size);
  h.candidates_examined = tally.examined;
  h.qualifying = tally.qualifying;
  h.counts = std::move(tally.counts);
  return h;
}

bool use_sampling(std::size_t n, std::size_t universe_size, const EnumerationOptions& options) {
  return options.sample_budget > 0 && family_candidate_count(n, universe_size) > options.sample_budget;
}

}  // namespace

std::set<std::uint64_t> EnumerationHistogram::achieved(RangeCase c) const {
  std::set<std::uint64_t> out;
  auto it = counts.find(c);
  if (it == counts.end()) return out;
  for (const auto& [size, count] : it->second) {
    if (count > 0) out.insert(size);
  }
  return out;
}

std::set<std::uint64_t> EnumerationHistogram::achieved_all() const {
  std::set<std::uint64_t> out;
  for (const auto& [label, sizes] : counts) {
    for (const auto& [size, count] : sizes) {
      if (count > 0) out.insert(size);
    }
  }
  return out;
}

std::uint64_t family_candidate_count(std::size_t n, std::size_t universe_size) {
  if (universe_size >= 64) return kSaturated;
  const std::uint64_t masks = (std::uint64_t{1} << universe_size) - 2;
  if (n > masks) return 0;
  // C(masks, n) computed incrementally; each partial product is exact.
  boost::multiprecision::cpp_int c = 1;
  for (std::uint64_t k = 1; k <= n; ++k) {
    c = c * (masks - n + k) / k;
    if (c > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(c);
}

EnumerationHistogram enumerate_families_serial(std::size_t n, std::size_t universe_size,
                                               const EnumerationOptions& options) {
  check_arguments(n, universe_size);
  const Word full = (Word{1} << universe_size) - 1;
  Tally tally;
  auto visit = [&](std::span<const Word> sets) { record(sets, full, options, tally); };
  const bool sampled = use_sampling(n, universe_size, options);
  if (sampled) {
    for (const auto& t : draw_samples(n, universe_size, options.sample_budget, options.seed)) visit(t);
  } else {
    const Word last_mask = full - 1;
    std::vector<Word> tuple(n);
    for (Word first = 1; first <= last_mask; ++first) {
      tuple[0] = first;
      extend_tuple(tuple, 1, last_mask, visit);
    }
  }
  return finish(n, universe_size, sampled, std::move(tally));
}

EnumerationHistogram enumerate_families(std::size_t n, std::size_t universe_size, const EnumerationOptions& options) {
  check_arguments(n, universe_size);
  const Word full = (Word{1} << universe_size) - 1;
  const bool sampled = use_sampling(n, universe_size, options);
  Tally total;

  if (sampled) {
    const auto samples = draw_samples(n, universe_size, options.sample_budget, options.seed);
    const auto count = static_cast<std::ptrdiff_t>(samples.size());
#pragma omp parallel
    {
      Tally local;
#pragma omp for schedule(dynamic, 256) nowait
      for (std::ptrdiff_t k = 0; k < count; ++k) record(samples[static_cast<std::size_t>(k)], full, options, local);
#pragma omp critical(sigmaf_enumerate_merge)
      total.merge(local);
    }
  } else {
    const Word last_mask = full - 1;
    const auto firsts = static_cast<std::ptrdiff_t>(last_mask);
#pragma omp parallel
    {
      Tally local;
      std::vector<Word> tuple(n);
      auto visit = [&](std::span<const Word> sets) { record(sets, full, options, local); };
#pragma omp for schedule(dynamic) nowait
      for (std::ptrdiff_t f = 1; f <= firsts; ++f) {
        tuple[0] = static_cast<Word>(f);
        extend_tuple(tuple, 1, last_mask, visit);
      }
#pragma omp critical(sigmaf_enumerate_merge)
      total.merge(local);
    }
  }
  return finish(n, universe_size, sampled, std::move(total));
}

void for_each_family(std::size_t n, std::size_t universe_size, const EnumerationOptions& options,
                     const std::function<void(std::span<const Word>)>& visit) {
  check_arguments(n, universe_size);
  const Word full = (Word{1} << universe_size) - 1;
  auto filtered = [&](std::span<const Word> sets) {
    if (qualifies(sets, full, options)) visit(sets);
  };
  if (use_sampling(n, universe_size, options)) {
    for (const auto& t : draw_samples(n, universe_size, options.sample_budget, options.seed)) filtered(t);
    return;
  }
  const Word last_mask = full - 1;
  std::vector<Word> tuple(n);
  for (Word first = 1; first <= last_mask; ++first) {
    tuple[0] = first;
    extend_tuple(tuple, 1, last_mask, filtered);
  }
}

}  // namespace sigmaf
