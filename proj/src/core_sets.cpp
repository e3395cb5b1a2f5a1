#include "sigmaf/core_sets.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <sstream>
#include <unordered_set>

#include "sigmaf/errors.hpp"
#include "sigmaf/sigma_field.hpp"

namespace sigmaf {

namespace {

std::atomic<UniverseId> next_universe_id{1};

std::size_t word_count(std::size_t bits) { return (bits + SetMask::kWordBits - 1) / SetMask::kWordBits; }

}  // namespace

// ---------------------------------------------------------------- Universe

Universe::Universe(std::vector<std::string> labels)
    : id_(next_universe_id.fetch_add(1, std::memory_order_relaxed)), labels_(std::move(labels)) {
  if (labels_.empty()) throw InvalidInput("universe must contain at least one point");
  index_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second) {
      throw InvalidInput("duplicate universe label '" + labels_[i] + "'");
    }
  }
}

std::shared_ptr<const Universe> Universe::create(std::vector<std::string> labels) {
  return std::shared_ptr<const Universe>(new Universe(std::move(labels)));
}

std::shared_ptr<const Universe> Universe::numbered(std::size_t size, long first) {
  std::vector<std::string> labels;
  labels.reserve(size);
  for (std::size_t i = 0; i < size; ++i) labels.push_back(std::to_string(first + static_cast<long>(i)));
  return create(std::move(labels));
}

std::optional<std::size_t> Universe::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SetMask Universe::empty_set() const { return SetMask(id_, size()); }

SetMask Universe::full_set() const { return empty_set().complement(); }

SetMask Universe::mask_of(std::span<const std::string> labels) const {
  SetMask m = empty_set();
  for (const auto& l : labels) {
    auto i = index_of(l);
    if (!i) throw InvalidInput("label '" + l + "' is not in " + describe());
    m.set(*i);
  }
  return m;
}

SetMask Universe::mask_of(std::initializer_list<std::string_view> labels) const {
  std::vector<std::string> owned(labels.begin(), labels.end());
  return mask_of(owned);
}

SetMask Universe::mask_of_indices(std::initializer_list<std::size_t> indices) const {
  SetMask m = empty_set();
  for (auto i : indices) {
    if (i >= size()) throw InvalidInput("point index " + std::to_string(i) + " outside " + describe());
    m.set(i);
  }
  return m;
}

std::string Universe::describe() const {
  std::ostringstream os;
  os << "universe #" << id_ << " (" << size() << " points";
  if (!labels_.empty()) os << ": " << labels_.front() << (size() > 1 ? ".." + labels_.back() : "");
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------- SetMask

SetMask::SetMask(UniverseId universe, std::size_t size)
    : universe_(universe), size_(size), words_(word_count(size), Word{0}) {}

void SetMask::clear_padding() {
  const std::size_t tail = size_ % kWordBits;
  if (tail != 0 && !words_.empty()) words_.back() &= (Word{1} << tail) - 1;
}

void SetMask::require_same_universe(const SetMask& o) const {
  if (universe_ != o.universe_ || size_ != o.size_) {
    std::ostringstream os;
    os << "sets belong to different universes: universe #" << universe_ << " (" << size_
       << " points) vs universe #" << o.universe_ << " (" << o.size_ << " points)";
    throw UniverseMismatch(os.str());
  }
}

std::size_t SetMask::count() const {
  std::size_t c = 0;
  for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool SetMask::none() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

bool SetMask::all() const { return count() == size_; }

std::vector<std::size_t> SetMask::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    Word bits = words_[w];
    while (bits) {
      out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

SetMask SetMask::complement() const {
  SetMask r = *this;
  for (auto& w : r.words_) w = ~w;
  r.clear_padding();
  return r;
}

SetMask SetMask::operator|(const SetMask& o) const {
  SetMask r = *this;
  r |= o;
  return r;
}

SetMask SetMask::operator&(const SetMask& o) const {
  SetMask r = *this;
  r &= o;
  return r;
}

SetMask SetMask::operator-(const SetMask& o) const {
  require_same_universe(o);
  SetMask r = *this;
  for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] &= ~o.words_[i];
  return r;
}

SetMask SetMask::operator^(const SetMask& o) const {
  require_same_universe(o);
  SetMask r = *this;
  for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] ^= o.words_[i];
  return r;
}

SetMask& SetMask::operator|=(const SetMask& o) {
  require_same_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

SetMask& SetMask::operator&=(const SetMask& o) {
  require_same_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

bool SetMask::is_subset_of(const SetMask& o) const {
  require_same_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~o.words_[i]) return false;
  }
  return true;
}

bool SetMask::is_proper_subset_of(const SetMask& o) const { return is_subset_of(o) && !(*this == o); }

bool SetMask::intersects(const SetMask& o) const {
  require_same_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & o.words_[i]) return true;
  }
  return false;
}

bool SetMask::operator==(const SetMask& o) const {
  require_same_universe(o);
  return std::equal(words_.begin(), words_.end(), o.words_.begin());
}

bool SetMask::canonical_less(const SetMask& o) const {
  require_same_universe(o);
  const auto ca = count();
  const auto cb = o.count();
  if (ca != cb) return ca < cb;
  for (std::size_t i = words_.size(); i-- > 0;) {
    if (words_[i] != o.words_[i]) return words_[i] < o.words_[i];
  }
  return false;
}

std::size_t SetMask::hash() const {
  std::size_t h = static_cast<std::size_t>(universe_) * 0x9e3779b97f4a7c15ULL;
  for (Word w : words_) {
    h ^= static_cast<std::size_t>(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string SetMask::to_string(const Universe& u) const {
  if (u.id() != universe_) {
    throw UniverseMismatch("set of universe #" + std::to_string(universe_) + " rendered with " + u.describe());
  }
  std::string out = "{";
  bool first = true;
  for (auto i : indices()) {
    if (!first) out += ",";
    out += u.label(i);
    first = false;
  }
  return out + "}";
}

std::string SetMask::bits() const {
  std::string out(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (test(i)) out[i] = '1';
  }
  return out;
}

// ---------------------------------------------------------------- GeneratingClass

GeneratingClass::GeneratingClass(UniversePtr universe, std::vector<NamedSet> members)
    : universe_(std::move(universe)), members_(std::move(members)) {
  if (!universe_) throw InvalidInput("generating class needs a universe");
  if (members_.empty()) throw InvalidInput("generating class must have at least one member");
  std::unordered_set<std::string> names;
  std::unordered_set<SetMask> masks;
  for (const auto& m : members_) {
    if (m.mask.universe_id() != universe_->id()) {
      throw UniverseMismatch("member '" + m.name + "' belongs to universe #" +
                             std::to_string(m.mask.universe_id()) + ", class uses " + universe_->describe());
    }
    if (!names.insert(m.name).second) throw InvalidInput("duplicate member name '" + m.name + "'");
    if (m.mask.none()) throw InvalidInput("member '" + m.name + "' is the empty set");
    if (m.mask.all()) throw InvalidInput("member '" + m.name + "' is the whole universe");
    if (!masks.insert(m.mask).second) throw InvalidInput("member '" + m.name + "' duplicates an earlier member");
  }
}

namespace {

std::vector<NamedSet> auto_named(std::vector<SetMask> masks) {
  std::vector<NamedSet> out;
  out.reserve(masks.size());
  for (std::size_t i = 0; i < masks.size(); ++i) out.push_back({"A" + std::to_string(i + 1), std::move(masks[i])});
  return out;
}

}  // namespace

GeneratingClass::GeneratingClass(UniversePtr universe, std::vector<SetMask> masks)
    : GeneratingClass(std::move(universe), auto_named(std::move(masks))) {}

std::vector<SetMask> GeneratingClass::masks() const {
  std::vector<SetMask> out;
  out.reserve(members_.size());
  for (const auto& m : members_) out.push_back(m.mask);
  return out;
}

SetMask GeneratingClass::union_all() const {
  SetMask u = universe_->empty_set();
  for (const auto& m : members_) u |= m.mask;
  return u;
}

SetMask GeneratingClass::intersection_all() const {
  SetMask x = universe_->full_set();
  for (const auto& m : members_) x &= m.mask;
  return x;
}

GeneratingClass GeneratingClass::permuted(std::span<const std::size_t> order) const {
  if (order.size() != members_.size()) throw InvalidInput("permutation length does not match class size");
  std::vector<NamedSet> out;
  out.reserve(order.size());
  for (auto i : order) out.push_back(members_.at(i));
  return GeneratingClass(universe_, std::move(out));
}

// ---------------------------------------------------------------- predicates

SigmaDistinctReport is_sigma_distinct(const GeneratingClass& cls) {
  SigmaDistinctReport report;
  const auto masks = cls.masks();
  for (std::size_t i = 0; i < masks.size(); ++i) {
    std::vector<SetMask> others;
    others.reserve(masks.size() - 1);
    for (std::size_t j = 0; j < masks.size(); ++j) {
      if (j != i) others.push_back(masks[j]);
    }
    auto field = std::make_shared<const SigmaField>(closure_bruteforce(cls.universe(), others));
    if (field->contains(masks[i])) report.violators.push_back({i, std::move(field)});
  }
  report.distinct = report.violators.empty();
  return report;
}

AtomReport all_atoms(const GeneratingClass& cls) {
  AtomReport report;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    for (std::size_t j = 0; j < cls.size(); ++j) {
      if (i != j && cls.mask(j).is_proper_subset_of(cls.mask(i))) report.violations.push_back({i, j});
    }
  }
  report.all_atoms = report.violations.empty();
  return report;
}

}  // namespace sigmaf
