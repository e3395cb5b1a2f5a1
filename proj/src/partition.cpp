#include "sigmaf/partition.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "sigmaf/errors.hpp"
#include "sigmaf/kernels.hpp"

namespace sigmaf {

Partition::Partition(UniversePtr universe, std::size_t arity, std::vector<std::string> names,
                     std::vector<Cell> cells)
    : universe_(std::move(universe)), arity_(arity), names_(std::move(names)), cells_(std::move(cells)) {
  if (!universe_) throw InvalidInput("partition needs a universe");
  if (arity_ > kMaxPartitionArity) throw InvalidInput("partition arity above 24");
  if (!names_.empty() && names_.size() != arity_) throw InvalidInput("partition names do not match arity");
  std::unordered_set<std::uint32_t> seen;
  for (const auto& c : cells_) {
    if (c.mask.none()) throw InvalidInput("partition cell is empty");
    if (arity_ > 0) {
      if (arity_ < 32 && (c.signature >> arity_) != 0) throw InvalidInput("cell signature wider than arity");
      if (!seen.insert(c.signature).second) throw InvalidInput("two cells share a signature");
    }
  }
  if (!is_disjoint_cover(universe_, masks())) throw InvalidInput("cells are not a disjoint cover of the universe");
}

Partition Partition::from_blocks(UniversePtr universe, std::vector<SetMask> blocks) {
  std::vector<Cell> cells;
  cells.reserve(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    cells.push_back({static_cast<std::uint32_t>(i), std::move(blocks[i])});
  }
  return Partition(std::move(universe), 0, {}, std::move(cells));
}

std::vector<SetMask> Partition::masks() const {
  std::vector<SetMask> out;
  out.reserve(cells_.size());
  for (const auto& c : cells_) out.push_back(c.mask);
  return out;
}

std::size_t Partition::order(const Cell& c) const { return static_cast<std::size_t>(std::popcount(c.signature)); }

std::string Partition::signature_string(const Cell& c) const {
  std::string s;
  for (std::size_t i = 0; i < arity_; ++i) s += sign(c, i) ? '1' : '0';
  return s;
}

std::string Partition::signature_expression(const Cell& c) const {
  std::string s;
  for (std::size_t i = 0; i < arity_; ++i) {
    if (i) s += ' ';
    s += names_.empty() ? "A" + std::to_string(i + 1) : names_[i];
    if (!sign(c, i)) s += "^c";
  }
  return s;
}

bool Partition::same_blocks(const Partition& other) const {
  if (size() != other.size()) return false;
  std::unordered_set<SetMask> mine;
  for (const auto& c : cells_) mine.insert(c.mask);
  return std::all_of(other.cells_.begin(), other.cells_.end(), [&](const Cell& c) { return mine.count(c.mask) > 0; });
}

SetMask cell_mask(std::span<const SetMask> sets, const SetMask& full, std::uint32_t signature) {
  const std::size_t n = sets.size();
  SetMask cell = full;
  for (std::size_t i = 0; i < n; ++i) {
    const bool positive = (signature >> (n - 1 - i)) & 1U;
    cell = positive ? (cell & sets[i]) : (cell - sets[i]);
  }
  return cell;
}

Partition partition_of(const UniversePtr& universe, std::span<const SetMask> sets, std::vector<std::string> names) {
  if (sets.size() > kMaxPartitionArity) {
    throw GuardExceeded("partition of " + std::to_string(sets.size()) + " sets needs 2^" +
                            std::to_string(sets.size()) + " signatures; limit is 2^24",
                        sets.size());
  }
  for (const auto& s : sets) {
    if (s.universe_id() != universe->id()) {
      throw UniverseMismatch("set of universe #" + std::to_string(s.universe_id()) + " partitioned over " +
                             universe->describe());
    }
  }
  auto raw = kernels::cells_parallel(sets, universe->full_set());
  std::vector<Cell> cells;
  cells.reserve(raw.size());
  for (auto& r : raw) cells.push_back({r.signature, std::move(r.mask)});
  return Partition(universe, sets.size(), std::move(names), std::move(cells));
}

Partition induced_partition(const GeneratingClass& cls) {
  std::vector<std::string> names;
  for (const auto& m : cls.members()) names.push_back(m.name);
  const auto masks = cls.masks();
  return partition_of(cls.universe(), masks, std::move(names));
}

Partition reduced_partition(const GeneratingClass& cls) { return induced_partition(cls); }

Partition reduced_partition(const UniversePtr& universe, std::span<const SetMask> sets) {
  return partition_of(universe, sets);
}

std::vector<Stratum> strata(const Partition& p) {
  if (!p.has_signatures()) throw InvalidInput("strata need a partition with signatures");
  std::vector<Stratum> out(p.arity() + 1);
  for (std::size_t j = 0; j <= p.arity(); ++j) out[j].order = j;
  for (const auto& c : p.cells()) out[p.order(c)].cells.push_back(c);
  return out;
}

std::vector<StratumUnion> strata_union_partition(const Partition& p) {
  std::vector<StratumUnion> out;
  for (const auto& s : strata(p)) {
    if (s.cells.empty()) continue;
    SetMask r = p.universe()->empty_set();
    for (const auto& c : s.cells) r |= c.mask;
    out.push_back({s.order, std::move(r)});
  }
  return out;
}

bool is_disjoint_cover(const UniversePtr& universe, std::span<const SetMask> blocks) {
  SetMask seen = universe->empty_set();
  for (const auto& b : blocks) {
    if (b.intersects(seen)) return false;
    seen |= b;
  }
  return seen.all();
}

}  // namespace sigmaf
