#include "functions.hpp"

#include "doctest.h"

using namespace softtopo;

namespace {

UniversePtr identity_universe() { return Universe::make({"e1", "e2"}, {"x", "y", "z"}); }

SoftTopology identity_domain_topology(const UniversePtr& u) {
  auto f = make_soft_set(u, {{"e1", {"y"}}, {"e2", {"y"}}});
  auto g = make_soft_set(u, {{"e1", {"x", "z"}}, {"e2", {"x", "z"}}});
  return SoftTopology::from_family(u, {SoftSet::null_set(u), f, g, SoftSet::absolute(u)});
}

SoftTopology identity_codomain_topology(const UniversePtr& u) {
  auto h = make_soft_set(u, {{"e1", {"x", "y", "z"}}, {"e2", {"x", "y"}}});
  return SoftTopology::from_family(u, {SoftSet::null_set(u), h, SoftSet::absolute(u)});
}

std::vector<SoftFunction> all_functions(const UniversePtr& dom, const UniversePtr& cod) {
  std::vector<SoftFunction> out;
  const int ny = cod->point_count(), ne = cod->param_count();
  std::vector<int> u(dom->point_count(), 0), p(dom->param_count(), 0);
  auto advance = [](std::vector<int>& digits, int base) {
    for (auto& d : digits) {
      if (++d < base) return true;
      d = 0;
    }
    return false;
  };
  do {
    do {
      out.push_back(SoftFunction::from_indices(dom, cod, u, p));
    } while (advance(u, ny));
  } while (advance(p, ne));
  return out;
}

}  // namespace

TEST_CASE("construction and totality") {
  auto u = identity_universe();
  auto f = SoftFunction::from_labels(u, u, {{"x", "x"}, {"y", "y"}, {"z", "z"}},
                                     {{"e1", "e1"}, {"e2", "e2"}});
  CHECK(f.bijective());
  CHECK_THROWS_WITH(
      SoftFunction::from_labels(u, u, {{"x", "x"}, {"y", "y"}}, {{"e1", "e1"}, {"e2", "e2"}}),
      doctest::Contains("'z'"));
  CHECK_THROWS_AS(SoftFunction::from_labels(u, u, {{"x", "q"}, {"y", "y"}, {"z", "z"}},
                                            {{"e1", "e1"}, {"e2", "e2"}}),
                  InputError);
}

TEST_CASE("image and preimage basics") {
  auto u = identity_universe();
  auto id = SoftFunction::identity(u);
  auto h = make_soft_set(u, {{"e1", {"x", "y", "z"}}, {"e2", {"x", "y"}}});
  CHECK(id.preimage(h) == h);
  CHECK(id.image(h) == h);
  CHECK(id.preimage(SoftSet::absolute(u)).is_absolute());
  CHECK(id.image(SoftSet::null_set(u)).is_null());

  // Collapse everything onto y with p the identity: image sections become
  // {y} exactly at the parameters where the argument has support.
  auto collapse = SoftFunction::from_labels(u, u, {{"x", "y"}, {"y", "y"}, {"z", "y"}},
                                            {{"e1", "e1"}, {"e2", "e2"}});
  auto a = make_soft_set(u, {{"e1", {"x", "z"}}});
  CHECK(collapse.image(a) == make_soft_set(u, {{"e1", {"y"}}}));
  CHECK_FALSE(collapse.injective());
  CHECK_FALSE(collapse.surjective());

  auto other = Universe::make({"e"}, {"a"});
  CHECK_THROWS_AS(id.image(SoftSet::null_set(other)), InputError);
}

TEST_CASE("preimage is a boolean-algebra morphism; image preserves unions (exhaustive)") {
  auto dom = Universe::make({"e1", "e2"}, {"a", "b"});
  auto cod = Universe::make({"d1"}, {"p", "q", "r"});
  const Mask dom_full = dom->full_mask();
  const Mask cod_full = cod->full_mask();
  for (const auto& f : all_functions(dom, cod)) {
    for (Mask b = 0; b <= cod_full; ++b) {
      CHECK(f.preimage_mask(cod_full & ~b) == (dom_full & ~f.preimage_mask(b)));
      for (Mask b2 = 0; b2 <= cod_full; ++b2) {
        CHECK(f.preimage_mask(b | b2) == (f.preimage_mask(b) | f.preimage_mask(b2)));
        CHECK(f.preimage_mask(b & b2) == (f.preimage_mask(b) & f.preimage_mask(b2)));
      }
    }
    for (Mask a = 0; a <= dom_full; ++a) {
      for (Mask a2 = 0; a2 <= dom_full; ++a2) {
        CHECK(f.image_mask(a | a2) == (f.image_mask(a) | f.image_mask(a2)));
        if ((a & ~a2) == 0) CHECK((f.image_mask(a) & ~f.image_mask(a2)) == 0);
      }
    }
  }
}

TEST_CASE("image need not preserve intersections") {
  auto u = Universe::make({"e1"}, {"a", "b"});
  auto collapse =
      SoftFunction::from_labels(u, u, {{"a", "a"}, {"b", "a"}}, {{"e1", "e1"}});
  auto sa = SoftSet(u, 1), sb = SoftSet(u, 2);
  CHECK(collapse.image(soft_intersection(sa, sb)).is_null());
  CHECK_FALSE(soft_intersection(collapse.image(sa), collapse.image(sb)).is_null());
}

TEST_CASE("flattened action agrees with classical image/preimage (exhaustive, 4 cells)") {
  auto dom = Universe::make({"e1", "e2"}, {"a", "b"});
  auto cod = Universe::make({"d1"}, {"p", "q", "r", "s"});
  for (const auto& f : all_functions(dom, cod)) {
    for (Mask a = 0; a <= dom->full_mask(); ++a) {
      Mask expected = 0;
      for (int c = 0; c < dom->cell_count(); ++c) {
        if ((a >> c) & 1u) expected |= Mask{1} << f.map_cell(c);
      }
      CHECK(f.image_mask(a) == expected);
    }
    for (Mask b = 0; b <= cod->full_mask(); ++b) {
      Mask expected = 0;
      for (int c = 0; c < dom->cell_count(); ++c) {
        if ((b >> f.map_cell(c)) & 1u) expected |= Mask{1} << c;
      }
      CHECK(f.preimage_mask(b) == expected);
    }
    // Injectivity/surjectivity coincide with the flattened map's.
    std::vector<int> hits(cod->cell_count(), 0);
    for (int c = 0; c < dom->cell_count(); ++c) ++hits[f.map_cell(c)];
    bool flat_inj = true, flat_surj = true;
    for (int h : hits) {
      if (h > 1) flat_inj = false;
      if (h == 0) flat_surj = false;
    }
    CHECK(f.injective() == flat_inj);
    CHECK(f.surjective() == flat_surj);
  }
}

TEST_CASE("classification of the worked identity example") {
  auto u = identity_universe();
  auto t = identity_domain_topology(u);
  auto s = identity_codomain_topology(u);
  auto id = SoftFunction::identity(u);

  auto v = classify_function(id, t, s);
  CHECK(v.sw_continuous);
  CHECK_FALSE(v.semicontinuous);
  CHECK_FALSE(v.continuous);
  CHECK(v.sd_continuous);  // sw-continuity implies SD-continuity

  // Identity with equal topologies carries every flag.
  auto all = classify_function(id, t, t);
  CHECK(all.continuous);
  CHECK(all.semicontinuous);
  CHECK(all.beta_continuous);
  CHECK(all.sd_continuous);
  CHECK(all.sw_continuous);
  CHECK(all.open_map);
  CHECK(all.semiopen_map);
  CHECK(all.beta_open_map);
  CHECK(all.sd_open_map);
  CHECK(all.sw_open_map);
  CHECK(all.homeomorphism);
  CHECK(all.sw_homeomorphism);

  // Constant collapse into the indiscrete codomain is continuous.
  auto indiscrete = SoftTopology::generate(u, {});
  auto collapse = SoftFunction::from_labels(u, u, {{"x", "x"}, {"y", "x"}, {"z", "x"}},
                                            {{"e1", "e1"}, {"e2", "e1"}});
  CHECK(classify_function(collapse, t, indiscrete).continuous);
}

TEST_CASE("restriction bundles the relative topology") {
  auto u = Universe::make({"e1", "e2"}, {"w", "x", "y", "z"});
  auto f = make_soft_set(u, {{"e1", {"x", "z"}}, {"e2", {"w", "x"}}});
  auto g = make_soft_set(u, {{"e1", {"w", "x", "y", "z"}}, {"e2", {"y", "z"}}});
  auto t = SoftTopology::generate(u, {f, g});
  auto id = SoftFunction::identity(u);

  auto whole = restrict(id, SoftSet::absolute(u), t);
  CHECK(whole.domain == t);

  auto y = make_soft_set(u, {{"e1", {"x", "y"}}, {"e2", {"x", "y"}}});
  auto over_y = restrict(id, y, t);
  // Preimage of F under the restriction = F /\ Y = I.
  auto i = make_soft_set(u, {{"e1", {"x"}}, {"e2", {"x"}}});
  CHECK(soft_intersection(id.preimage(f), y) == i);
  CHECK(over_y.domain.is_open_mask(i.bits()));

  CHECK_THROWS_AS(restrict(id, SoftSet::null_set(u), t), InputError);
}

TEST_CASE("restriction to a dense carrier keeps sw-continuity (brute force, 3 cells)") {
  auto u = Universe::make({"e1"}, {"a", "b", "c"});
  const Mask full = u->full_mask();
  // All topology pairs on three cells, all functions, all dense carriers.
  std::vector<std::vector<Mask>> families;
  for (Mask a = 0; a < 8; ++a) {
    auto t = SoftTopology::generate(u, {SoftSet(u, a)});
    families.push_back(t.opens_masks());
  }
  for (const auto& fam_t : families) {
    auto t = SoftTopology::unchecked(u, fam_t, full);
    for (const auto& fam_s : families) {
      auto s = SoftTopology::unchecked(u, fam_s, full);
      for (const auto& fn : all_functions(u, u)) {
        bool swc = true;
        for (Mask v : s.opens_masks()) {
          if (!t.sw_open_mask(fn.preimage_mask(v))) swc = false;
        }
        if (!swc) continue;
        for (Mask d = 1; d <= full; ++d) {
          if (t.closure_mask(d) != full) continue;
          auto rel = t.subspace(SoftSet(u, d));
          for (Mask v : s.opens_masks()) {
            CHECK(rel.sw_open_mask(fn.preimage_mask(v) & d));
          }
        }
      }
    }
  }
}
