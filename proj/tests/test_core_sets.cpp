#include <doctest.h>

#include "sigmaf/core_sets.hpp"
#include "sigmaf/errors.hpp"
#include "sigmaf/sigma_field.hpp"
#include "support.hpp"

using namespace sigmaf;
using namespace sigmaf::test;

TEST_CASE("universe construction and lookup") {
  CHECK_THROWS_AS(Universe::create({}), InvalidInput);
  CHECK_THROWS_AS(Universe::create({"a", "b", "a"}), InvalidInput);

  auto u = Universe::numbered(16, 5);
  CHECK(u->size() == 16);
  CHECK(u->label(0) == "5");
  CHECK(u->label(15) == "20");
  CHECK(u->index_of("8") == 3u);
  CHECK_FALSE(u->index_of("21").has_value());
  CHECK(u->describe().find("16 points") != std::string::npos);

  CHECK(u->mask_of({"5", "20"}).count() == 2);
  CHECK_THROWS_AS(u->mask_of({"5", "99"}), InvalidInput);
  CHECK_THROWS_AS(u->mask_of_indices({16}), InvalidInput);
  CHECK(u->empty_set().none());
  CHECK(u->full_set().all());
  CHECK(u->full_set().count() == 16);
}

TEST_CASE("universe ids keep masks apart") {
  auto u = Universe::numbered(4);
  auto v = Universe::numbered(4);
  CHECK(u->id() != v->id());
  const SetMask a = u->mask_of({"1"});
  const SetMask b = v->mask_of({"1"});
  CHECK_THROWS_AS(a | b, UniverseMismatch);
  CHECK_THROWS_AS(a & b, UniverseMismatch);
  CHECK_THROWS_AS((void)(a == b), UniverseMismatch);
  CHECK_THROWS_AS((void)a.is_subset_of(b), UniverseMismatch);
}

TEST_CASE("De Morgan and difference laws hold exhaustively up to eight points") {
  for (std::size_t n = 1; n <= 8; ++n) {
    auto u = Universe::numbered(n);
    const std::uint64_t limit = std::uint64_t{1} << n;
    std::vector<SetMask> all;
    for (std::uint64_t w = 0; w < limit; ++w) all.push_back(from_word(u, w));
    for (std::uint64_t i = 0; i < limit; ++i) {
      const SetMask& a = all[i];
      REQUIRE(~~a == a);
      REQUIRE(to_word(~a) == ((limit - 1) & ~i));
      for (std::uint64_t j = 0; j < limit; ++j) {
        const SetMask& b = all[j];
        REQUIRE(~(a | b) == (~a & ~b));
        REQUIRE(~(a & b) == (~a | ~b));
        REQUIRE((a - b) == (a & ~b));
        REQUIRE(to_word(a ^ b) == (i ^ j));
        REQUIRE(a.is_subset_of(b) == ((i & ~j) == 0));
        REQUIRE(a.intersects(b) == ((i & j) != 0));
      }
    }
  }
}

TEST_CASE("multi-word masks keep padding clear") {
  Rng rng(7);
  for (std::size_t n : {63u, 64u, 65u, 130u, 200u}) {
    auto u = Universe::numbered(n);
    CHECK(u->full_set().count() == n);
    CHECK((~u->empty_set()).all());
    CHECK((~u->full_set()).none());
    for (int t = 0; t < 200; ++t) {
      const SetMask a = random_mask(u, rng);
      const SetMask b = random_mask(u, rng);
      REQUIRE(~(a | b) == (~a & ~b));
      REQUIRE(~(a & b) == (~a | ~b));
      REQUIRE((a | ~a).all());
      REQUIRE((a.count() + (~a).count()) == n);
      SetMask rebuilt = u->empty_set();
      for (auto i : a.indices()) rebuilt.set(i);
      REQUIRE(rebuilt == a);
      REQUIRE(a.hash() == rebuilt.hash());
    }
  }
}

TEST_CASE("canonical order sorts by size, then value") {
  auto u = Universe::numbered(4);
  const SetMask a = mask(u, {4});
  const SetMask b = mask(u, {1, 2});
  const SetMask c = mask(u, {1, 3});
  CHECK(u->empty_set().canonical_less(a));
  CHECK(a.canonical_less(b));
  CHECK(b.canonical_less(c));
  CHECK_FALSE(c.canonical_less(b));
  CHECK_FALSE(b.canonical_less(b));
  CHECK(b.to_string(*u) == "{1,2}");
  CHECK(b.bits() == "1100");
}

TEST_CASE("generating classes reject degenerate members") {
  auto u = Universe::numbered(4);
  auto v = Universe::numbered(4);
  CHECK_THROWS_AS(GeneratingClass(u, std::vector<SetMask>{}), InvalidInput);
  CHECK_THROWS_AS(GeneratingClass(u, std::vector<SetMask>{u->empty_set()}), InvalidInput);
  CHECK_THROWS_AS(GeneratingClass(u, std::vector<SetMask>{u->full_set()}), InvalidInput);
  CHECK_THROWS_AS(GeneratingClass(u, std::vector<SetMask>{mask(u, {1}), mask(u, {1})}), InvalidInput);
  CHECK_THROWS_AS(GeneratingClass(u, std::vector<SetMask>{mask(u, {1}), v->mask_of({"2"})}), UniverseMismatch);
  CHECK_THROWS_AS(GeneratingClass(u, std::vector<NamedSet>{{"A", mask(u, {1})}, {"A", mask(u, {2})}}), InvalidInput);

  GeneratingClass cls(u, std::vector<SetMask>{mask(u, {1, 2}), mask(u, {2, 3})});
  CHECK(cls.name(0) == "A1");
  CHECK(cls.name(1) == "A2");
  CHECK(cls.union_all() == mask(u, {1, 2, 3}));
  CHECK(cls.intersection_all() == mask(u, {2}));

  const std::vector<std::size_t> order{1, 0};
  auto swapped = cls.permuted(order);
  CHECK(swapped.name(0) == "A2");
  CHECK(swapped.mask(0) == mask(u, {2, 3}));
}

TEST_CASE("sigma-distinctness and atoms") {
  auto u = Universe::numbered(4);
  SUBCASE("a union of two members is not distinct") {
    GeneratingClass cls(u, std::vector<SetMask>{mask(u, {1}), mask(u, {2}), mask(u, {1, 2})});
    auto r = is_sigma_distinct(cls);
    CHECK_FALSE(r.distinct);
    REQUIRE(r.violators.size() == 3);
    for (const auto& v : r.violators) CHECK(v.witness->contains(cls.mask(v.index)));
    auto a = all_atoms(cls);
    CHECK_FALSE(a.all_atoms);
    REQUIRE(a.violations.size() == 2);
    CHECK(a.violations[0].container == 2);
  }
  SUBCASE("two overlapping sets are distinct atoms") {
    GeneratingClass cls(u, std::vector<SetMask>{mask(u, {1, 2}), mask(u, {2, 3})});
    CHECK(is_sigma_distinct(cls).distinct);
    CHECK(all_atoms(cls).all_atoms);
  }
  SUBCASE("agrees with the closure oracle on random classes") {
    Rng rng(11);
    for (int t = 0; t < 400; ++t) {
      const std::size_t size = 2 + rng() % 5;
      auto w = Universe::numbered(size);
      const std::size_t n = 1 + rng() % std::min<std::size_t>(3, (std::size_t{1} << size) - 2);
      auto masks = random_class_masks(w, n, rng);
      std::vector<std::uint64_t> words;
      for (const auto& m : masks) words.push_back(to_word(m));
      GeneratingClass cls(w, masks);
      REQUIRE(is_sigma_distinct(cls).distinct == oracle::sigma_distinct(words, size));
      REQUIRE(all_atoms(cls).all_atoms == oracle::all_atoms(words));
    }
  }
}
