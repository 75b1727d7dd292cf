#include "core.hpp"

#include <random>

#include "doctest.h"

using namespace softtopo;

namespace {

UniversePtr example_universe() {
  return Universe::make({"e1", "e2"}, {"w", "x", "y", "z"});
}

// The worked data set used throughout: F, G, H and the subspace sets.
SoftSet set_F(const UniversePtr& u) {
  return make_soft_set(u, {{"e1", {"x", "z"}}, {"e2", {"w", "x"}}});
}
SoftSet set_G(const UniversePtr& u) {
  return make_soft_set(u, {{"e1", {"w", "x", "y", "z"}}, {"e2", {"y", "z"}}});
}
SoftSet set_H(const UniversePtr& u) {
  return make_soft_set(u, {{"e1", {"x", "z"}}});
}

}  // namespace

TEST_CASE("universe construction and label lookup") {
  auto u = example_universe();
  CHECK(u->param_count() == 2);
  CHECK(u->point_count() == 4);
  CHECK(u->cell_count() == 8);
  CHECK(u->point_index("w") == 0);
  CHECK(u->param_index("e2") == 1);
  CHECK_THROWS_AS(u->point_index("q"), InputError);
  CHECK_THROWS_WITH(u->point_index("q"), doctest::Contains("'q'"));

  CHECK_THROWS_AS(Universe::make({}, {"a"}), InputError);
  CHECK_THROWS_AS(Universe::make({"e"}, {"a", "a"}), InputError);
  // 5*5 = 25 > 24 breaks the one-word cap; 24 itself is fine.
  CHECK_THROWS_AS(Universe::make({"1", "2", "3", "4", "5"}, {"a", "b", "c", "d", "e"}),
                  InputError);
  CHECK(Universe::make({"1", "2", "3", "4"}, {"a", "b", "c", "d", "e", "f"})->cell_count() ==
        24);
  CHECK_THROWS_AS(Universe::make({"e"}, {"a"}, 30), InputError);
}

TEST_CASE("make_soft_set matches the worked example sections") {
  auto u = example_universe();
  auto f = set_F(u);
  CHECK(f.section("e1") == std::vector<std::string>{"x", "z"});
  CHECK(f.section("e2") == std::vector<std::string>{"w", "x"});
  CHECK(f.to_text() == "{(e1,{x,z}), (e2,{w,x})}");

  CHECK(make_soft_set(u, {}).is_null());
  CHECK(make_soft_set(u, {{"e1", {"w", "x", "y", "z"}}, {"e2", {"w", "x", "y", "z"}}})
            .is_absolute());
  // Missing parameters mean empty sections.
  CHECK(set_H(u).section("e2").empty());
  CHECK_THROWS_WITH(make_soft_set(u, {{"e9", {"x"}}}), doctest::Contains("'e9'"));
  CHECK_THROWS_WITH(make_soft_set(u, {{"e1", {"bad"}}}), doctest::Contains("'bad'"));
}

TEST_CASE("algebra on the worked example") {
  auto u = example_universe();
  auto f = set_F(u), g = set_G(u), h = set_H(u);

  // {x,z} n X and {w,x} n {y,z}, by hand.
  CHECK(soft_intersection(f, g) == h);
  CHECK(soft_union(f, g) == SoftSet::absolute(u));
  CHECK(h.subset_of(f));
  CHECK_FALSE(f.subset_of(h));
  CHECK(SoftSet::null_set(u).complement() == SoftSet::absolute(u));
  CHECK(SoftSet::absolute(u).complement() == SoftSet::null_set(u));

  auto other = Universe::make({"e1"}, {"a"});
  CHECK_THROWS_AS(soft_union(f, SoftSet::null_set(other)), InputError);
  CHECK_THROWS_AS(f.subset_of(SoftSet::null_set(other)), InputError);
}

TEST_CASE("soft point membership") {
  auto u = example_universe();
  auto f = set_F(u);
  CHECK(f.contains({"e2", "x"}));
  CHECK_FALSE(f.contains({"e1", "w"}));
  CHECK_FALSE(SoftSet::null_set(u).contains({"e1", "x"}));

  auto i = make_soft_set(u, {{"e1", {"x"}}, {"e2", {"x"}}});
  CHECK_FALSE(i.contains({"e1", "y"}));
  CHECK_THROWS_AS(f.contains({"e1", "nope"}), InputError);
}

TEST_CASE("flatten and unflatten") {
  auto u = example_universe();
  CHECK(flatten(SoftSet::null_set(u)).cells().empty());

  auto h = set_H(u);
  const auto labels = flatten(h).labels();
  REQUIRE(labels.size() == 2);
  CHECK(labels[0] == std::pair<std::string, std::string>{"e1", "x"});
  CHECK(labels[1] == std::pair<std::string, std::string>{"e1", "z"});

  CHECK(unflatten(flatten(set_G(u))) == set_G(u));
  CHECK(flatten(SoftSet::absolute(u)).cells().size() == 8);
}

TEST_CASE("flattening is a boolean-algebra isomorphism (exhaustive, 4 cells)") {
  for (auto u : {Universe::make({"e1", "e2"}, {"a", "b"}),
                 Universe::make({"e1"}, {"a", "b", "c", "d"})}) {
    const Mask full = u->full_mask();
    for (Mask a = 0; a <= full; ++a) {
      const SoftSet sa(u, a);
      CHECK(unflatten(flatten(sa)) == sa);
      CHECK(flat_complement(flatten(sa)) == flatten(sa.complement()));
      for (Mask b = 0; b <= full; ++b) {
        const SoftSet sb(u, b);
        CHECK(flat_union(flatten(sa), flatten(sb)) == flatten(soft_union(sa, sb)));
        CHECK(flat_intersection(flatten(sa), flatten(sb)) ==
              flatten(soft_intersection(sa, sb)));
      }
    }
  }
}

TEST_CASE("De Morgan, involution and subset order on random data") {
  auto u = Universe::make({"e1", "e2", "e3"}, {"a", "b", "c", "d", "e", "f", "g", "h"});
  std::mt19937_64 rng(7);
  const Mask full = u->full_mask();
  for (int trial = 0; trial < 300; ++trial) {
    const SoftSet a(u, static_cast<Mask>(rng()) & full);
    const SoftSet b(u, static_cast<Mask>(rng()) & full);
    const SoftSet c(u, static_cast<Mask>(rng()) & full);
    CHECK(soft_union(a, b).complement() ==
          soft_intersection(a.complement(), b.complement()));
    CHECK(soft_intersection(a, b).complement() ==
          soft_union(a.complement(), b.complement()));
    CHECK(a.complement().complement() == a);

    // Partial order: reflexive, antisymmetric, transitive.
    CHECK(a.subset_of(a));
    if (a.subset_of(b) && b.subset_of(a)) CHECK(a == b);
    if (a.subset_of(b) && b.subset_of(c)) CHECK(a.subset_of(c));
  }
}
