#include "checker.hpp"

#include "doctest.h"
#include "oracle.hpp"

using namespace softtopo;

namespace {

SearchBudget quick_budget(int cells) {
  SearchBudget b;
  b.max_cells = cells;
  return b;
}

}  // namespace

TEST_CASE("enumeration counts match the brute-force family filter") {
  CHECK(count_topologies(1) == 1);
  CHECK(count_topologies(2) == 4);
  CHECK(count_topologies(3) == 29);

  auto u = Universe::make({"e1"}, {"a", "b", "c"});
  auto topologies = enumerate_topologies(u);
  auto expected = oracle::all_topologies_brute_force(3);
  REQUIRE(topologies.size() == expected.size());
  for (size_t i = 0; i < topologies.size(); ++i) {
    CHECK(topologies[i].opens_masks() ==
          std::vector<Mask>(expected[i].begin(), expected[i].end()));
  }

  // Duplicate-free and every member valid.
  for (size_t i = 1; i < topologies.size(); ++i) {
    CHECK_FALSE(topologies[i - 1] == topologies[i]);
  }
  for (const auto& t : topologies) {
    CHECK_FALSE(validate_family(u, t.opens()).has_value());
  }

  CHECK_THROWS_WITH(count_topologies(7), doctest::Contains("sampl"));
  auto big = Universe::make({"e1"}, {"a", "b", "c", "d", "e", "f", "g"});
  CHECK_THROWS_AS(enumerate_topologies(big), InputError);
}

TEST_CASE("proved statements confirm at desk scale") {
  for (PropId id : {PropId::P3_UNION, PropId::L3_SEMI_CL_IDENT, PropId::P3_SUPERSET,
                    PropId::L3_SEMICLOSED_SD}) {
    auto w = check_proposition(id, quick_budget(3));
    CHECK(w.verdict == Verdict::Confirmed);
    CHECK(w.checks > 0);
    CHECK(w.complete);
  }
}

TEST_CASE("function statement at tiny scale") {
  auto b = quick_budget(2);
  auto w = check_proposition(PropId::P4_EQUIV, b);
  CHECK(w.verdict == Verdict::Confirmed);
  CHECK(w.complete);
}

TEST_CASE("the separable statement reports vacuous") {
  auto w = check_proposition(PropId::T4_SEPARABLE_VACUOUS, quick_budget(3));
  CHECK(w.verdict == Verdict::Vacuous);
  REQUIRE(w.data.has_value());
  CHECK(w.data->trace.find("separable") != std::string::npos);
}

TEST_CASE("SD_NOT_SW finds the minimal two-cell witness") {
  auto w = find_strictness_witness(PropId::SD_NOT_SW, quick_budget(4));
  REQUIRE(w.verdict == Verdict::Found);
  REQUIRE(w.data.has_value());
  const auto& d = *w.data;
  REQUIRE(d.space.has_value());
  // Indiscrete space over E={e1}, X={a,b}; G = {(e1,{a})}.
  CHECK(d.space->universe->cell_count() == 2);
  CHECK(d.space->universe->param_count() == 1);
  CHECK(d.space->opens.empty());  // only the implicit null/absolute members
  REQUIRE(d.sets.size() == 1);
  CHECK(d.sets[0].first == "G");
  CHECK(d.sets[0].second.bits() == 1);
  CHECK(replay_witness(w));
}

TEST_CASE("strictness witnesses sit at their minimal budgets and replay") {
  struct Expected {
    PropId id;
    int cells;
  };
  // Minimal cell counts established by the brute-force enumeration.
  for (auto [id, cells] : {Expected{PropId::SD_NOT_SW, 2}, Expected{PropId::BETA_NOT_SW, 2},
                           Expected{PropId::SW_NOT_SEMI, 3},
                           Expected{PropId::INTERSECT_NOT_SW, 3},
                           Expected{PropId::SW_NOT_BETA, 3}}) {
    auto w = find_strictness_witness(id, quick_budget(4));
    REQUIRE(w.verdict == Verdict::Found);
    REQUIRE(w.data.has_value());
    CHECK(w.data->space->universe->cell_count() == cells);
    CHECK(replay_witness(w));
  }
}

TEST_CASE("witness properties verify through the classifier modules") {
  auto w = find_strictness_witness(PropId::SW_NOT_SEMI, quick_budget(4));
  REQUIRE(w.data.has_value());
  auto t = w.data->space->build_topology();
  const auto& g = w.data->sets.at(0).second;
  auto v = t.classify(g);
  CHECK(v.sw_open);
  CHECK_FALSE(v.semiopen);

  auto w2 = find_strictness_witness(PropId::INTERSECT_NOT_SW, quick_budget(4));
  REQUIRE(w2.data.has_value());
  auto t2 = w2.data->space->build_topology();
  const auto& g2 = w2.data->sets.at(0).second;
  const auto& h2 = w2.data->sets.at(1).second;
  CHECK(t2.classify(g2).sw_open);
  CHECK(t2.classify(h2).sw_open);
  CHECK_FALSE(t2.classify(soft_intersection(g2, h2)).sw_open);
}

TEST_CASE("sw-homeomorphism witness breaks T0 preservation") {
  auto w = find_strictness_witness(PropId::SWHOMEO_NOT_T0, quick_budget(4));
  REQUIRE(w.verdict == Verdict::Found);
  REQUIRE(w.data.has_value());
  CHECK(w.data->space->universe->cell_count() == 3);  // minimal by exhaustion
  REQUIRE(w.data->cod_space.has_value());
  REQUIRE(w.data->fn.has_value());

  auto t = w.data->space->build_topology();
  auto s = w.data->cod_space->build_topology();
  auto v = classify_function(*w.data->fn, t, s);
  CHECK(v.sw_homeomorphism);
  CHECK(t.properties().t0);
  CHECK_FALSE(s.properties().t0);
  CHECK(replay_witness(w));
}

TEST_CASE("searches report not-found honestly under starved budgets") {
  auto w = find_strictness_witness(PropId::SW_NOT_SEMI, quick_budget(2));
  CHECK(w.verdict == Verdict::NotFound);
  CHECK_FALSE(w.data.has_value());

  auto w2 = find_strictness_witness(PropId::SWHOMEO_NOT_T0, quick_budget(1));
  CHECK(w2.verdict == Verdict::NotFound);
}

TEST_CASE("check cap truncates deterministically") {
  SearchBudget b = quick_budget(3);
  b.max_checks = 50;
  auto w = check_proposition(PropId::P3_UNION, b);
  CHECK_FALSE(w.complete);
  CHECK(w.checks >= 50);
  auto w2 = check_proposition(PropId::P3_UNION, b);
  CHECK(w.checks == w2.checks);
}

TEST_CASE("serial and parallel runs agree") {
  SearchBudget serial = quick_budget(3);
  SearchBudget parallel = quick_budget(3);
  parallel.jobs = 4;
  for (PropId id : {PropId::P3_SUPERSET, PropId::L3_DENSE_SUBSPACE, PropId::SD_NOT_SW}) {
    auto a = is_search(id) ? find_strictness_witness(id, serial)
                           : check_proposition(id, serial);
    auto b = is_search(id) ? find_strictness_witness(id, parallel)
                           : check_proposition(id, parallel);
    CHECK(a.verdict == b.verdict);
    CHECK(a.checks == b.checks);
    CHECK((a.data.has_value() == b.data.has_value()));
    if (a.data && b.data) CHECK(a.data->trace == b.data->trace);
  }
}

TEST_CASE("catalog naming round-trips") {
  CHECK(catalog().size() == 34);
  for (PropId id : catalog()) {
    auto back = prop_from_string(to_string(id));
    REQUIRE(back.has_value());
    CHECK(*back == id);
    CHECK(statement(id)[0] != '\0');
  }
  CHECK_FALSE(prop_from_string("NOPE").has_value());
  CHECK(is_search(PropId::SD_NOT_SW));
  CHECK_FALSE(is_search(PropId::P3_UNION));
}

TEST_CASE("run_report covers the catalog and reports wall time") {
  SearchBudget b = quick_budget(2);
  auto report = run_report(b);
  CHECK(report.entries.size() == catalog().size());
  CHECK(report.ok());
  for (const auto& e : report.entries) {
    CHECK(e.wall_ms >= 0);
  }
}

TEST_CASE("hand-built witnesses classify as expected") {
  // Somewhere dense but not sw-open: {a} when the only proper open is {a,b}.
  auto u3 = Universe::make({"e1"}, {"a", "b", "c"});
  auto t1 = SoftTopology::generate(u3, {make_soft_set(u3, {{"e1", {"a", "b"}}})});
  auto a = t1.classify(make_soft_set(u3, {{"e1", {"a"}}}));
  CHECK(a.somewhere_dense);
  CHECK(a.beta_open);
  CHECK_FALSE(a.sw_open);

  // sw-open but not semiopen: {a,c} under opens generated by {a} and {c,d}.
  auto u4 = Universe::make({"e1"}, {"a", "b", "c", "d"});
  auto t2 = SoftTopology::generate(
      u4, {make_soft_set(u4, {{"e1", {"a"}}}), make_soft_set(u4, {{"e1", {"c", "d"}}})});
  auto ac = t2.classify(make_soft_set(u4, {{"e1", {"a", "c"}}}));
  CHECK(ac.sw_open);
  CHECK_FALSE(ac.semiopen);
}

TEST_CASE("one-cell budgets confirm trivially and search honestly") {
  SearchBudget b = quick_budget(1);
  auto report = run_report(b);
  CHECK(report.ok());
  for (const auto& e : report.entries) {
    if (is_search(e.witness.id)) {
      CHECK(e.witness.verdict == Verdict::NotFound);
    } else {
      CHECK((e.witness.verdict == Verdict::Confirmed ||
             e.witness.verdict == Verdict::Vacuous));
    }
  }
}

TEST_CASE("budgets outside the cell cap are rejected") {
  SearchBudget b = quick_budget(40);
  CHECK_THROWS_AS(check_proposition(PropId::P3_UNION, b), InputError);
  CHECK_THROWS_AS(find_strictness_witness(PropId::P3_UNION, quick_budget(3)), InputError);
}

TEST_CASE("replay rejects tampered witnesses") {
  auto w = find_strictness_witness(PropId::SD_NOT_SW, quick_budget(3));
  REQUIRE(w.verdict == Verdict::Found);
  REQUIRE(replay_witness(w));

  Witness tampered_trace = w;
  tampered_trace.data->trace += " (edited)";
  CHECK_FALSE(replay_witness(tampered_trace));

  Witness tampered_set = w;
  auto& g = tampered_set.data->sets.at(0).second;
  g = g.complement();
  CHECK_FALSE(replay_witness(tampered_set));
}
