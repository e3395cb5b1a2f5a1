#ifndef SIGMAF_TESTS_SUPPORT_HPP_
#define SIGMAF_TESTS_SUPPORT_HPP_

// Shared generators and independent oracles for the test suites. The oracles
// deliberately avoid the library: sets are plain point lists or uint64
// bitmaps, and every construction follows the definitions directly.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sigmaf/core_sets.hpp"
#include "sigmaf/independence.hpp"

namespace sigmaf::test {

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(SIGMAF_FIXTURE_DIR) / name;
}

using Rng = std::mt19937_64;

/// Mask over a numbered universe from 1-based point labels.
inline SetMask mask(const UniversePtr& u, std::initializer_list<int> points) {
  SetMask m = u->empty_set();
  for (int p : points) m.set(*u->index_of(std::to_string(p)));
  return m;
}

inline SetMask random_mask(const UniversePtr& u, Rng& rng) {
  SetMask m = u->empty_set();
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < u->size(); ++i) {
    if (coin(rng)) m.set(i);
  }
  return m;
}

inline SetMask from_word(const UniversePtr& u, std::uint64_t w) {
  SetMask m = u->empty_set();
  for (std::size_t i = 0; i < u->size(); ++i) {
    if ((w >> i) & 1U) m.set(i);
  }
  return m;
}

inline std::uint64_t to_word(const SetMask& m) {
  std::uint64_t w = 0;
  for (auto i : m.indices()) w |= std::uint64_t{1} << i;
  return w;
}

/// n distinct masks that are neither empty nor the whole universe.
inline std::vector<SetMask> random_class_masks(const UniversePtr& u, std::size_t n, Rng& rng) {
  std::vector<SetMask> out;
  while (out.size() < n) {
    SetMask m = random_mask(u, rng);
    if (m.none() || m.all()) continue;
    if (std::find(out.begin(), out.end(), m) != out.end()) continue;
    out.push_back(m);
  }
  return out;
}

namespace oracle {

using Word = std::uint64_t;

inline Word full(std::size_t u) { return u == 64 ? ~Word{0} : (Word{1} << u) - 1; }

/// Cells of the induced partition, grouping points by their membership vector.
inline std::map<std::vector<bool>, Word> cells(const std::vector<Word>& sets, std::size_t u) {
  std::map<std::vector<bool>, Word> out;
  for (std::size_t p = 0; p < u; ++p) {
    std::vector<bool> key;
    for (Word s : sets) key.push_back((s >> p) & 1U);
    out[key] |= Word{1} << p;
  }
  return out;
}

/// Closure under complement, union and intersection, repeated until stable.
inline std::set<Word> closure(const std::vector<Word>& sets, std::size_t u) {
  const Word all = full(u);
  std::set<Word> f{0, all};
  f.insert(sets.begin(), sets.end());
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Word> cur(f.begin(), f.end());
    for (Word a : cur) {
      if (f.insert(all & ~a).second) grew = true;
      for (Word b : cur) {
        if (f.insert(a | b).second) grew = true;
        if (f.insert(a & b).second) grew = true;
      }
    }
  }
  return f;
}

/// Member i lies in the closure of the others.
inline bool sigma_distinct(const std::vector<Word>& sets, std::size_t u) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::vector<Word> others;
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (j != i) others.push_back(sets[j]);
    }
    if (closure(others, u).count(sets[i])) return false;
  }
  return true;
}

inline bool all_atoms(const std::vector<Word>& sets) {
  for (Word a : sets) {
    for (Word b : sets) {
      if (a != b && (a & b) == a) return false;
    }
  }
  return true;
}

/// Which positive index sets (bit i = member i) give a nonempty cell.
inline std::set<std::uint32_t> nonempty_positive_sets(const std::vector<Word>& sets, std::size_t u) {
  std::set<std::uint32_t> out;
  for (const auto& [key, pts] : cells(sets, u)) {
    std::uint32_t b = 0;
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (key[i]) b |= 1U << i;
    }
    out.insert(b);
  }
  return out;
}

/// Case label by the definitions: 0..3 for (i)..(iv).
inline int case_index(const std::vector<Word>& sets, std::size_t u) {
  Word uni = 0, inter = full(u);
  for (Word s : sets) {
    uni |= s;
    inter &= s;
  }
  const bool covers = uni == full(u);
  const bool meet = inter != 0;
  if (!covers && meet) return 0;
  if (covers && meet) return 1;
  if (!covers && !meet) return 2;
  return 3;
}

/// Exact fraction in lowest terms on 64-bit integers; enough for the small
/// denominators the tests use.
struct Frac {
  std::int64_t p = 0;
  std::int64_t q = 1;

  Frac() = default;
  Frac(std::int64_t num, std::int64_t den) : p(num), q(den) { reduce(); }
  void reduce() {
    if (q < 0) {
      p = -p;
      q = -q;
    }
    const std::int64_t g = std::gcd(p < 0 ? -p : p, q);
    if (g > 1) {
      p /= g;
      q /= g;
    }
  }
  friend Frac operator+(Frac a, Frac b) { return Frac(a.p * b.q + b.p * a.q, a.q * b.q); }
  friend Frac operator-(Frac a, Frac b) { return Frac(a.p * b.q - b.p * a.q, a.q * b.q); }
  friend Frac operator*(Frac a, Frac b) { return Frac(a.p * b.p, a.q * b.q); }
  friend bool operator==(Frac a, Frac b) { return a.p == b.p && a.q == b.q; }
};

inline Frac prob(const std::vector<Frac>& masses, Word e) {
  Frac s;
  for (std::size_t i = 0; i < masses.size(); ++i) {
    if ((e >> i) & 1U) s = s + masses[i];
  }
  return s;
}

inline bool indep(const std::vector<Frac>& masses, Word a, Word b) {
  return prob(masses, a & b) == prob(masses, a) * prob(masses, b);
}

/// A independent of every member of the closure of {B, C}.
inline bool independent_of_field(const std::vector<Frac>& masses, Word a, Word b, Word c) {
  for (Word m : closure({b, c}, masses.size())) {
    if (!indep(masses, a, m)) return false;
  }
  return true;
}

}  // namespace oracle

/// A random exact space with three events. One trial in three is a product
/// cube whose events depend on disjoint coordinates, so independence occurs.
struct SpaceTrial {
  ProbabilitySpace space;
  std::vector<oracle::Frac> masses;
  SetMask a, b, c;
};

// Masses k_i / D with the units of D spread at random over the points.
inline std::vector<std::int64_t> composition(std::size_t points, std::int64_t units, Rng& rng) {
  std::vector<std::int64_t> k(points, 0);
  std::uniform_int_distribution<std::size_t> pick(0, points - 1);
  for (std::int64_t i = 0; i < units; ++i) ++k[pick(rng)];
  return k;
}

inline SpaceTrial random_space_trial(Rng& rng) {
  const bool product = rng() % 3 == 0;
  std::size_t size = 0;
  std::vector<oracle::Frac> fr;
  if (!product) {
    size = 1 + rng() % 8;
    const std::int64_t d = 1 + static_cast<std::int64_t>(rng() % 12);
    for (auto k : composition(size, d, rng)) fr.emplace_back(k, d);
  } else {
    // cube {0,1}^3 with independent coordinates; point bit j = coordinate j
    size = 8;
    oracle::Frac p[3];
    for (auto& x : p) {
      const std::int64_t q = 1 + static_cast<std::int64_t>(rng() % 12);
      x = oracle::Frac(static_cast<std::int64_t>(rng() % (q + 1)), q);
    }
    for (std::size_t pt = 0; pt < 8; ++pt) {
      oracle::Frac m(1, 1);
      for (std::size_t j = 0; j < 3; ++j) m = m * (((pt >> j) & 1U) ? p[j] : oracle::Frac(1, 1) - p[j]);
      fr.push_back(m);
    }
  }
  auto u = Universe::numbered(size);
  std::vector<Rational> masses;
  for (const auto& f : fr) masses.emplace_back(Rational(f.p, f.q));
  ProbabilitySpace space(u, masses);

  SetMask a = random_mask(u, rng), b = random_mask(u, rng), c = random_mask(u, rng);
  if (product) {
    // A from coordinate 0; B and C from coordinates 1 and 2
    auto event = [&](std::uint32_t pattern_mask, int shift_from, int width) {
      SetMask m = u->empty_set();
      for (std::size_t pt = 0; pt < 8; ++pt) {
        const std::uint32_t key = static_cast<std::uint32_t>(pt >> shift_from) & ((1U << width) - 1);
        if ((pattern_mask >> key) & 1U) m.set(pt);
      }
      return m;
    };
    a = event(static_cast<std::uint32_t>(rng() % 4), 0, 1);
    b = event(static_cast<std::uint32_t>(rng() % 16), 1, 2);
    c = event(static_cast<std::uint32_t>(rng() % 16), 1, 2);
  }
  return SpaceTrial{std::move(space), std::move(fr), a, b, c};
}


}  // namespace sigmaf::test

#endif  // SIGMAF_TESTS_SUPPORT_HPP_
