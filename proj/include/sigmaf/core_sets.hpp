#ifndef SIGMAF_CORE_SETS_HPP_
#define SIGMAF_CORE_SETS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace sigmaf {

using UniverseId = std::uint64_t;

class SetMask;

// Universes up to this size are "desk scale"; larger ones work but callers
// are expected to warn.
inline constexpr std::size_t kDeskScaleUniverse = 64;

/// An explicit finite universe. Point i of the universe is bit i of every
/// SetMask built over it; the order is fixed at construction.
class Universe {
 public:
  /// Throws InvalidInput on an empty label list or duplicate labels.
  static std::shared_ptr<const Universe> create(std::vector<std::string> labels);

  /// Universe with labels "1".."size" (or first..first+size-1).
  static std::shared_ptr<const Universe> numbered(std::size_t size, long first = 1);

  UniverseId id() const { return id_; }
  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> index_of(std::string_view label) const;
  bool exceeds_desk_scale() const { return size() > kDeskScaleUniverse; }

  SetMask empty_set() const;
  SetMask full_set() const;
  /// Throws InvalidInput naming the first unknown label.
  SetMask mask_of(std::span<const std::string> labels) const;
  SetMask mask_of(std::initializer_list<std::string_view> labels) const;
  SetMask mask_of_indices(std::initializer_list<std::size_t> indices) const;

  /// Human-readable identity used in diagnostics.
  std::string describe() const;

 private:
  explicit Universe(std::vector<std::string> labels);

  UniverseId id_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

using UniversePtr = std::shared_ptr<const Universe>;

/// Membership bitmask of one subset of a universe.
///
/// Masks remember the id and size of the universe they were built over;
/// every binary operation checks that both operands agree and throws
/// UniverseMismatch otherwise.
class SetMask {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  SetMask() = default;
  SetMask(UniverseId universe, std::size_t size);

  UniverseId universe_id() const { return universe_; }
  std::size_t size() const { return size_; }
  std::span<const Word> words() const { return {words_.data(), words_.size()}; }

  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

  std::size_t count() const;
  bool none() const;
  bool all() const;
  std::vector<std::size_t> indices() const;

  SetMask complement() const;
  SetMask operator~() const { return complement(); }
  SetMask operator|(const SetMask& o) const;
  SetMask operator&(const SetMask& o) const;
  SetMask operator-(const SetMask& o) const;
  SetMask operator^(const SetMask& o) const;
  SetMask& operator|=(const SetMask& o);
  SetMask& operator&=(const SetMask& o);

  bool is_subset_of(const SetMask& o) const;
  bool is_proper_subset_of(const SetMask& o) const;
  bool intersects(const SetMask& o) const;

  bool operator==(const SetMask& o) const;

  /// Canonical order: popcount first, then numeric value with bit i worth 2^i.
  bool canonical_less(const SetMask& o) const;

  std::size_t hash() const;

  /// "{5,8,10}" using the universe's labels.
  std::string to_string(const Universe& u) const;
  /// Bit string, point 0 first.
  std::string bits() const;

 private:
  void require_same_universe(const SetMask& o) const;
  void clear_padding();

  UniverseId universe_ = 0;
  std::size_t size_ = 0;
  boost::container::small_vector<Word, 1> words_;
};

struct CanonicalLess {
  bool operator()(const SetMask& a, const SetMask& b) const { return a.canonical_less(b); }
};

struct SetMaskHash {
  std::size_t operator()(const SetMask& m) const { return m.hash(); }
};

struct NamedSet {
  std::string name;
  SetMask mask;
};

/// Ordered, named family A1..An over one universe.
///
/// Construction rejects: an empty family, duplicate names, duplicate masks,
/// members equal to the empty set or the whole universe, and masks from a
/// different universe. Sigma-distinctness and the atom condition are *not*
/// required; see is_sigma_distinct() and all_atoms().
class GeneratingClass {
 public:
  GeneratingClass(UniversePtr universe, std::vector<NamedSet> members);
  /// Members named "A1".."An".
  GeneratingClass(UniversePtr universe, std::vector<SetMask> masks);

  const UniversePtr& universe() const { return universe_; }
  std::size_t size() const { return members_.size(); }
  const NamedSet& operator[](std::size_t i) const { return members_.at(i); }
  const std::vector<NamedSet>& members() const { return members_; }
  const std::string& name(std::size_t i) const { return members_.at(i).name; }
  const SetMask& mask(std::size_t i) const { return members_.at(i).mask; }
  std::vector<SetMask> masks() const;

  SetMask union_all() const;
  SetMask intersection_all() const;

  /// Same class with members reordered: result[i] = this[order[i]].
  GeneratingClass permuted(std::span<const std::size_t> order) const;

 private:
  UniversePtr universe_;
  std::vector<NamedSet> members_;
};

class SigmaField;

struct SigmaDistinctViolation {
  std::size_t index;  // 0-based member index
  // Closure of the remaining members; it contains the violator.
  std::shared_ptr<const SigmaField> witness;
};

struct SigmaDistinctReport {
  bool distinct = true;
  std::vector<SigmaDistinctViolation> violators;
};

/// Member i violates iff A_i lies in the sigma-field generated by the other
/// members (brute-force closure).
SigmaDistinctReport is_sigma_distinct(const GeneratingClass& cls);

struct AtomViolation {
  std::size_t container;  // i: the larger member
  std::size_t contained;  // j: A_j is a proper subset of A_i
};

struct AtomReport {
  bool all_atoms = true;
  std::vector<AtomViolation> violations;
};

AtomReport all_atoms(const GeneratingClass& cls);

}  // namespace sigmaf

template <>
struct std::hash<sigmaf::SetMask> {
  std::size_t operator()(const sigmaf::SetMask& m) const { return m.hash(); }
};

#endif  // SIGMAF_CORE_SETS_HPP_
