#include "sigmaf/sigma_field.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <unordered_set>

#include "sigmaf/errors.hpp"

namespace sigmaf {

namespace {

// Dense bitmap indexed by the mask value for small universes, hash set otherwise.
class MemberIndex {
 public:
  explicit MemberIndex(std::size_t universe_size) : dense_(universe_size <= kDenseLimit) {
    if (dense_) bitmap_.assign(((std::size_t{1} << universe_size) + 63) / 64, 0);
  }

  // True if newly inserted.
  bool insert(const SetMask& m) {
    if (!dense_) return hashed_.insert(m).second;
    const std::uint64_t v = m.words().empty() ? 0 : m.words()[0];
    std::uint64_t& w = bitmap_[v / 64];
    const std::uint64_t bit = std::uint64_t{1} << (v % 64);
    if (w & bit) return false;
    w |= bit;
    return true;
  }

 private:
  static constexpr std::size_t kDenseLimit = 20;
  bool dense_;
  std::vector<std::uint64_t> bitmap_;
  std::unordered_set<SetMask> hashed_;
};

void require_universe(const UniversePtr& universe, const SetMask& m) {
  if (m.universe_id() != universe->id()) {
    throw UniverseMismatch("set of universe #" + std::to_string(m.universe_id()) + " used with " +
                           universe->describe());
  }
}

}  // namespace

SigmaField::SigmaField(UniversePtr universe, std::vector<SetMask> members, std::string note)
    : universe_(std::move(universe)), members_(std::move(members)), note_(std::move(note)) {
  for (const auto& m : members_) require_universe(universe_, m);
  std::sort(members_.begin(), members_.end(), CanonicalLess{});
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool SigmaField::contains(const SetMask& m) const {
  return std::binary_search(members_.begin(), members_.end(), m, CanonicalLess{});
}

std::optional<std::size_t> SigmaField::log2_size() const {
  if (!std::has_single_bit(members_.size())) return std::nullopt;
  return static_cast<std::size_t>(std::countr_zero(members_.size()));
}

SigmaField closure_bruteforce(const GeneratingClass& cls) {
  const auto masks = cls.masks();
  return closure_bruteforce(cls.universe(), masks);
}

SigmaField closure_bruteforce(const UniversePtr& universe, std::span<const SetMask> sets) {
  MemberIndex index(universe->size());
  std::vector<SetMask> members;
  auto add = [&](SetMask m) {
    if (!index.insert(m)) return;
    if (members.size() >= kMaxFieldMembers) {
      throw GuardExceeded("closure exceeds " + std::to_string(kMaxFieldMembers) + " members",
                          members.size() + 1);
    }
    members.push_back(std::move(m));
  };

  add(universe->empty_set());
  add(universe->full_set());
  for (const auto& s : sets) {
    require_universe(universe, s);
    add(s);
  }

  // Every member is processed once, in insertion order: its complement and
  // its union with every member present at that time. A member that arrives
  // later forms the missing unions when its own turn comes.
  for (std::size_t head = 0; head < members.size(); ++head) {
    const SetMask x = members[head];
    add(x.complement());
    for (std::size_t j = 0; j < members.size(); ++j) add(x | members[j]);
  }
  return SigmaField(universe, std::move(members), "closure");
}

SigmaField sigma_from_partition(const Partition& p) {
  const std::size_t k = p.size();
  if (k > kMaxPartitionBlocksForField) {
    throw GuardExceeded("sigma-field of a " + std::to_string(k) + "-block partition has 2^" + std::to_string(k) +
                            " members; limit is 2^20",
                        k >= 64 ? ~0ULL : (1ULL << k));
  }
  const auto& cells = p.cells();
  const std::size_t count = std::size_t{1} << k;
  std::vector<SetMask> members(count);
  members[0] = p.universe()->empty_set();
  for (std::size_t s = 1; s < count; ++s) {
    members[s] = members[s & (s - 1)] | cells[static_cast<std::size_t>(std::countr_zero(s))].mask;
  }
  return SigmaField(p.universe(), std::move(members), "unions of partition blocks");
}

Partition atoms_of(const SigmaField& field) {
  // Members are in popcount order, so a member is minimal iff it contains no
  // minimal member found before it.
  std::vector<SetMask> atoms;
  for (const auto& m : field.members()) {
    if (m.none()) continue;
    const bool minimal = std::none_of(atoms.begin(), atoms.end(), [&](const SetMask& a) { return a.is_subset_of(m); });
    if (minimal) atoms.push_back(m);
  }
  return Partition::from_blocks(field.universe(), std::move(atoms));
}

ClosureAudit audit_closure(const SigmaField& field, std::size_t exhaustive_limit, std::size_t samples,
                           std::uint64_t seed) {
  ClosureAudit audit;
  const auto& members = field.members();
  const auto& u = *field.universe();
  audit.has_empty = field.contains(u.empty_set());
  audit.has_full = field.contains(u.full_set());
  audit.power_of_two = std::has_single_bit(members.size());

  const auto count = static_cast<std::ptrdiff_t>(members.size());
  bool complement_ok = true;
#pragma omp parallel for reduction(&& : complement_ok)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    complement_ok = complement_ok && field.contains(members[static_cast<std::size_t>(i)].complement());
  }
  audit.complement_closed = complement_ok;

  bool union_ok = true;
  if (members.size() <= exhaustive_limit) {
    std::size_t pairs = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(&& : union_ok) reduction(+ : pairs)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      const auto& a = members[static_cast<std::size_t>(i)];
      for (std::size_t j = static_cast<std::size_t>(i) + 1; j < members.size(); ++j) {
        union_ok = union_ok && field.contains(a | members[j]);
        ++pairs;
      }
    }
    audit.pairs_checked = pairs;
  } else {
    audit.sampled = true;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
    for (std::size_t s = 0; s < samples && union_ok; ++s) {
      union_ok = field.contains(members[pick(rng)] | members[pick(rng)]);
      ++audit.pairs_checked;
    }
  }
  audit.union_closed = union_ok;
  return audit;
}

GenerationReport verify_generation_by_partition(const GeneratingClass& cls) {
  GenerationReport r;
  r.distinct = is_sigma_distinct(cls);
  r.atoms = all_atoms(cls);
  r.hypotheses_hold = r.distinct.distinct && r.atoms.all_atoms;
  const SigmaField closure = closure_bruteforce(cls);
  const Partition partition = induced_partition(cls);
  const SigmaField from_partition = sigma_from_partition(partition);
  r.closure_size = closure.size();
  r.partition_size = partition.size();
  r.from_partition_size = from_partition.size();
  r.equal = closure == from_partition;
  return r;
}

ExtensionReport extend_with(const SigmaField& field, const SetMask& d) {
  require_universe(field.universe(), d);
  const Partition atoms = atoms_of(field);
  if (field.contains(d)) {
    return ExtensionReport{field, true, atoms.size(), static_cast<unsigned long long>(field.size()), false};
  }
  std::vector<SetMask> sets = atoms.masks();
  sets.push_back(d);
  const Partition refined = reduced_partition(field.universe(), sets);
  if (refined.size() > kMaxPartitionBlocksForField) {
    throw GuardExceeded("extended field would have 2^" + std::to_string(refined.size()) + " members; limit is 2^20",
                        refined.size() >= 64 ? ~0ULL : (1ULL << refined.size()));
  }
  ExtensionReport r{sigma_from_partition(refined), false, refined.size(), 1ULL << refined.size(),
                    refined.size() == 2 * atoms.size()};
  return r;
}

}  // namespace sigmaf
