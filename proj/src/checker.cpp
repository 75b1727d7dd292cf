#include "checker.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <mutex>
#include <random>
#include <set>
#include <thread>
#include <unordered_set>

#include "checker_detail.hpp"

namespace softtopo {

using detail::CatalogEntry;
using detail::Counter;
using detail::TripleCtx;

// ---------------------------------------------------------------------------
// Flat enumeration: soft topologies over n cells = families of n-bit masks
// containing 0 and the full mask, closed under pairwise | and &. A family
// is one word: bit s set iff mask s belongs to it (needs 2^n <= 64).

namespace {

using FamilyBits = std::uint64_t;

FamilyBits close_family_bits(FamilyBits fam, int nsets) {
  bool grew = true;
  while (grew) {
    grew = false;
    std::array<std::uint8_t, 64> member{};
    int k = 0;
    for (int s = 0; s < nsets; ++s) {
      if ((fam >> s) & 1u) member[k++] = static_cast<std::uint8_t>(s);
    }
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        const int u = member[i] | member[j];
        const int w = member[i] & member[j];
        if (!((fam >> u) & 1u)) {
          fam |= FamilyBits{1} << u;
          grew = true;
        }
        if (!((fam >> w) & 1u)) {
          fam |= FamilyBits{1} << w;
          grew = true;
        }
      }
    }
  }
  return fam;
}

std::vector<Mask> family_masks(FamilyBits fam, int nsets) {
  std::vector<Mask> out;
  for (int s = 0; s < nsets; ++s) {
    if ((fam >> s) & 1u) out.push_back(static_cast<Mask>(s));
  }
  return out;
}

// All topologies over `cells` cells, reached by breadth-first growth from
// the indiscrete family: every topology is the closure of a chain of
// single-set insertions, and closures stay inside any topology containing
// the inserted sets, so the walk visits each one.
const std::vector<std::vector<Mask>>& flat_topologies(int cells) {
  static std::mutex mu;
  static std::vector<std::vector<std::vector<Mask>>> cache(kMaxExhaustiveCells + 1);
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[cells];
  if (!slot.empty()) return slot;

  const int nsets = 1 << cells;
  const FamilyBits start =
      (FamilyBits{1} << 0) | (FamilyBits{1} << (nsets - 1));
  std::unordered_set<FamilyBits> seen = {start};
  std::vector<FamilyBits> todo = {start};
  while (!todo.empty()) {
    const FamilyBits fam = todo.back();
    todo.pop_back();
    for (int s = 0; s < nsets; ++s) {
      if ((fam >> s) & 1u) continue;
      const FamilyBits next = close_family_bits(fam | (FamilyBits{1} << s), nsets);
      if (seen.insert(next).second) todo.push_back(next);
    }
  }
  std::vector<FamilyBits> all(seen.begin(), seen.end());
  std::sort(all.begin(), all.end());
  slot.reserve(all.size());
  for (FamilyBits fam : all) slot.push_back(family_masks(fam, nsets));
  return slot;
}

}  // namespace

std::uint64_t count_topologies(int cells) {
  if (cells < 1 || cells > kMaxExhaustiveCells) {
    throw InputError("exhaustive enumeration handles 1.." +
                     std::to_string(kMaxExhaustiveCells) +
                     " cells; use sampled mode (--samples with --seed) beyond that");
  }
  return flat_topologies(cells).size();
}

std::vector<SoftTopology> enumerate_topologies(const UniversePtr& universe) {
  const int cells = universe->cell_count();
  count_topologies(cells);  // bounds check with the same guidance
  std::vector<SoftTopology> out;
  const auto& families = flat_topologies(cells);
  out.reserve(families.size());
  for (const auto& fam : families) {
    out.push_back(SoftTopology::unchecked(universe, fam, universe->full_mask()));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Canonical universes and candidate pools.

namespace detail {

UniversePtr canonical_universe(int params, int points) {
  std::vector<std::string> es, xs;
  for (int e = 1; e <= params; ++e) es.push_back("e" + std::to_string(e));
  for (int x = 0; x < points; ++x) xs.push_back(std::string(1, static_cast<char>('a' + x)));
  return Universe::make(std::move(es), std::move(xs));
}

std::vector<std::pair<int, int>> shapes_for_cells(int cells) {
  std::vector<std::pair<int, int>> out;
  for (int e = 1; e <= cells; ++e) {
    if (cells % e == 0) out.emplace_back(e, cells / e);
  }
  return out;
}

}  // namespace detail

namespace {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t sample_seed(const SearchBudget& b, PropId id, int cells, int shape_idx) {
  std::uint64_t s = mix64(b.seed ^ 0x736f6674746f706full);
  s = mix64(s ^ static_cast<std::uint64_t>(id));
  s = mix64(s ^ (static_cast<std::uint64_t>(cells) << 32));
  return mix64(s ^ static_cast<std::uint64_t>(shape_idx));
}

// Random topology: close a small random subbasis. Oversized closures are
// skipped so sampling stays cheap at larger cell counts.
std::optional<std::vector<Mask>> sample_family(std::mt19937_64& rng, int cells) {
  const Mask full = cells == 32 ? ~Mask{0} : (Mask{1} << cells) - 1;
  std::set<Mask> fam = {0, full};
  const int gens = 1 + static_cast<int>(rng() % 4);
  for (int i = 0; i < gens; ++i) fam.insert(static_cast<Mask>(rng()) & full);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Mask> snap(fam.begin(), fam.end());
    for (size_t i = 0; i < snap.size(); ++i) {
      for (size_t j = i + 1; j < snap.size(); ++j) {
        grew |= fam.insert(snap[i] | snap[j]).second;
        grew |= fam.insert(snap[i] & snap[j]).second;
        if (fam.size() > 4096) return std::nullopt;
      }
    }
  }
  return std::vector<Mask>(fam.begin(), fam.end());
}

struct PoolEntry {
  int cells = 0;
  UniversePtr uni;
  std::vector<SoftTopology> topos;
  bool sampled = false;
};

// Spaces in canonical order: cells ascending, shapes with parameters
// ascending; exhaustive through min(max_cells, 4), seeded samples above.
std::vector<PoolEntry> build_space_pool(PropId id, const SearchBudget& b) {
  std::vector<PoolEntry> pool;
  const int exhaustive_to = std::min(b.max_cells, 4);
  for (int cells = 1; cells <= b.max_cells; ++cells) {
    const bool sampled = cells > exhaustive_to;
    if (sampled && b.sample_count <= 0) continue;
    int shape_idx = 0;
    for (auto [params, points] : detail::shapes_for_cells(cells)) {
      PoolEntry entry;
      entry.cells = cells;
      entry.uni = detail::canonical_universe(params, points);
      entry.sampled = sampled;
      if (!sampled) {
        for (const auto& fam : flat_topologies(cells)) {
          entry.topos.push_back(
              SoftTopology::unchecked(entry.uni, fam, entry.uni->full_mask()));
        }
      } else {
        std::mt19937_64 rng(sample_seed(b, id, cells, shape_idx));
        for (int i = 0; i < b.sample_count; ++i) {
          if (auto fam = sample_family(rng, cells)) {
            entry.topos.push_back(
                SoftTopology::unchecked(entry.uni, *fam, entry.uni->full_mask()));
          }
        }
      }
      pool.push_back(std::move(entry));
      ++shape_idx;
    }
  }
  return pool;
}

// Function encoding: index = p-number * |u-space| + u-number, digits
// little-endian (u[0] varies fastest).
std::vector<int> decode_digits(std::uint64_t index, int count, int base) {
  std::vector<int> out(count);
  for (int i = 0; i < count; ++i) {
    out[i] = static_cast<int>(index % base);
    index /= base;
  }
  return out;
}

std::uint64_t pow_u64(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::vector<SoftFunction> all_functions(const UniversePtr& dom, const UniversePtr& cod,
                                        bool bijective_only) {
  const std::uint64_t nu = pow_u64(cod->point_count(), dom->point_count());
  const std::uint64_t np = pow_u64(cod->param_count(), dom->param_count());
  std::vector<SoftFunction> out;
  for (std::uint64_t pi = 0; pi < np; ++pi) {
    for (std::uint64_t ui = 0; ui < nu; ++ui) {
      auto f = SoftFunction::from_indices(
          dom, cod, decode_digits(ui, dom->point_count(), cod->point_count()),
          decode_digits(pi, dom->param_count(), cod->param_count()));
      if (bijective_only && !f.bijective()) continue;
      out.push_back(std::move(f));
    }
  }
  return out;
}

struct PairEntry {
  const PoolEntry* dom;
  const PoolEntry* cod;
  std::vector<SoftFunction> fns;
};

std::vector<PairEntry> build_pair_pool(const std::vector<PoolEntry>& pool,
                                       const SearchBudget& b, const CatalogEntry& entry) {
  std::vector<std::pair<int, int>> order;  // (dom idx, cod idx)
  for (size_t i = 0; i < pool.size(); ++i) {
    for (size_t j = 0; j < pool.size(); ++j) {
      if (entry.same_shape_only && !pool[i].uni->same_as(*pool[j].uni)) continue;
      order.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  std::stable_sort(order.begin(), order.end(), [&](const auto& a, const auto& c) {
    return pool[a.first].cells + pool[a.second].cells <
           pool[c.first].cells + pool[c.second].cells;
  });

  std::vector<PairEntry> pairs;
  int pair_idx = 0;
  for (auto [i, j] : order) {
    PairEntry pe{&pool[i], &pool[j], {}};
    if (!pool[i].sampled && !pool[j].sampled) {
      pe.fns = all_functions(pool[i].uni, pool[j].uni, entry.bijective_only);
    } else {
      std::mt19937_64 rng(
          mix64(sample_seed(b, entry.id, pool[i].cells + pool[j].cells, pair_idx)));
      for (int k = 0; k < b.sample_count; ++k) {
        std::vector<int> u(pool[i].uni->point_count());
        std::vector<int> p(pool[i].uni->param_count());
        for (auto& v : u) v = static_cast<int>(rng() % pool[j].uni->point_count());
        for (auto& v : p) v = static_cast<int>(rng() % pool[j].uni->param_count());
        auto f = SoftFunction::from_indices(pool[i].uni, pool[j].uni, std::move(u),
                                            std::move(p));
        if (entry.bijective_only && !f.bijective()) continue;
        pe.fns.push_back(std::move(f));
      }
    }
    if (!pe.fns.empty()) pairs.push_back(std::move(pe));
    ++pair_idx;
  }
  return pairs;
}

// ---------------------------------------------------------------------------
// Deterministic task stream. Tasks run in canonical order; results merge
// back in that order, so the cap and the first hit land on the same task
// no matter how many workers ran.

struct TaskResult {
  std::uint64_t work = 0;
  std::uint64_t asserted = 0;
  std::optional<WitnessData> hit;
  bool evaluated = false;
};

struct MergeOutcome {
  std::uint64_t work = 0;
  std::uint64_t asserted = 0;
  bool complete = true;
  std::optional<WitnessData> hit;
};

MergeOutcome execute_tasks(const std::vector<std::function<TaskResult()>>& tasks,
                           const SearchBudget& b) {
  std::vector<TaskResult> results(tasks.size());
  const int jobs = std::max(1, b.jobs);
  if (jobs == 1) {
    std::uint64_t done = 0;
    for (size_t i = 0; i < tasks.size(); ++i) {
      results[i] = tasks[i]();
      results[i].evaluated = true;
      done += results[i].work;
      if (results[i].hit || done >= b.max_checks) break;
    }
  } else {
    std::atomic<size_t> next{0};
    std::atomic<std::uint64_t> done{0};
    std::atomic<size_t> stop_hint{tasks.size()};
    auto worker = [&] {
      while (true) {
        const size_t i = next.fetch_add(1);
        if (i >= tasks.size()) return;
        // Completed work below index i already exceeds the cap, or a hit
        // exists at an earlier index: the merge cutoff lies before i.
        if (done.load() >= b.max_checks || i > stop_hint.load()) return;
        results[i] = tasks[i]();
        results[i].evaluated = true;
        done.fetch_add(results[i].work);
        if (results[i].hit) {
          size_t cur = stop_hint.load();
          while (i < cur && !stop_hint.compare_exchange_weak(cur, i)) {
          }
        }
      }
    };
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }

  MergeOutcome out;
  for (auto& r : results) {
    if (!r.evaluated) break;  // everything at or before the cutoff is evaluated
    out.work += r.work;
    out.asserted += r.asserted;
    if (r.hit) {
      out.hit = std::move(r.hit);
      return out;
    }
    if (out.work >= b.max_checks) {
      out.complete = false;
      return out;
    }
  }
  return out;
}

Witness outcome_to_witness(PropId id, const CatalogEntry& entry, MergeOutcome&& mo) {
  Witness w;
  w.id = id;
  w.checks = mo.work;
  w.asserted = mo.asserted;
  w.complete = mo.complete;
  const bool search = entry.kind == CatalogEntry::Kind::SearchSpace ||
                      entry.kind == CatalogEntry::Kind::SearchTriple;
  if (mo.hit) {
    w.verdict = search ? Verdict::Found : Verdict::Counterexample;
    w.data = std::move(mo.hit);
  } else if (search) {
    w.verdict = Verdict::NotFound;
  } else {
    w.verdict = mo.asserted == 0 ? Verdict::Vacuous : Verdict::Confirmed;
  }
  return w;
}

Witness run_entry(const CatalogEntry& entry, const SearchBudget& b) {
  if (b.max_cells < 1 || b.max_cells > Universe::kDefaultMaxCells) {
    throw InputError("budget max_cells must lie in 1.." +
                     std::to_string(Universe::kDefaultMaxCells));
  }
  if (entry.kind == CatalogEntry::Kind::VacuousProp) {
    Witness w;
    w.id = entry.id;
    w.verdict = Verdict::Vacuous;
    WitnessData d;
    d.trace =
        "every finite soft topological space is soft separable (any absolute set is a "
        "countable soft dense subset), so the preservation statement holds vacuously";
    w.data = std::move(d);
    return w;
  }

  const auto pool = build_space_pool(entry.id, b);
  std::vector<PairEntry> pairs;  // outlives the tasks referencing it
  std::vector<std::function<TaskResult()>> tasks;

  if (entry.kind == CatalogEntry::Kind::Space ||
      entry.kind == CatalogEntry::Kind::SearchSpace) {
    for (const auto& pe : pool) {
      for (const auto& topo : pe.topos) {
        tasks.push_back([&topo, &entry, sep = b.separation]() {
          Counter n;
          TaskResult r;
          r.hit = entry.space_eval(topo, sep, n);
          r.work = n.work;
          r.asserted = n.asserted;
          return r;
        });
      }
    }
  } else {
    pairs = build_pair_pool(pool, b, entry);
    for (const auto& pe : pairs) {
      for (const auto& dom_topo : pe.dom->topos) {
        tasks.push_back([&pe, &dom_topo, &entry, sep = b.separation]() {
          Counter n;
          TaskResult r;
          for (const auto& cod_topo : pe.cod->topos) {
            for (const auto& f : pe.fns) {
              TripleCtx ctx{dom_topo, cod_topo, f, sep};
              r.hit = entry.triple_eval(ctx, n);
              if (r.hit) {
                r.work = n.work;
                r.asserted = n.asserted;
                return r;
              }
            }
          }
          r.work = n.work;
          r.asserted = n.asserted;
          return r;
        });
      }
    }
  }
  return outcome_to_witness(entry.id, entry, execute_tasks(tasks, b));
}

}  // namespace

Witness check_proposition(PropId id, const SearchBudget& budget) {
  return run_entry(detail::catalog_entry(id), budget);
}

Witness find_strictness_witness(PropId id, const SearchBudget& budget) {
  const auto& entry = detail::catalog_entry(id);
  if (!is_search(id)) throw InputError(std::string(to_string(id)) + " is not a search id");
  return run_entry(entry, budget);
}

// ---------------------------------------------------------------------------
// Replay: rebuild the instance from the serialized documents and run the
// same per-instance evaluation; the verdict must reproduce exactly.

bool replay_witness(const Witness& w, SeparationMode separation) {
  const auto& entry = detail::catalog_entry(w.id);
  if (entry.kind == CatalogEntry::Kind::VacuousProp) return w.verdict == Verdict::Vacuous;
  if (!w.data) return w.verdict == Verdict::Confirmed || w.verdict == Verdict::NotFound ||
                       w.verdict == Verdict::Vacuous;
  const WitnessData& d = *w.data;
  if (!d.space) return false;
  Counter n;
  std::optional<WitnessData> again;
  const SoftTopology dom = d.space->build_topology();
  if (entry.kind == CatalogEntry::Kind::Space ||
      entry.kind == CatalogEntry::Kind::SearchSpace) {
    again = entry.space_eval(dom, separation, n);
  } else {
    if (!d.cod_space || !d.fn) return false;
    const SoftTopology cod = d.cod_space->build_topology();
    TripleCtx ctx{dom, cod, *d.fn, separation};
    again = entry.triple_eval(ctx, n);
  }
  if (!again || again->trace != d.trace) return false;
  // The re-derived role sets must agree with the serialized ones.
  auto sets_equal = [](const std::vector<std::pair<std::string, SoftSet>>& a,
                       const std::vector<std::pair<std::string, SoftSet>>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i].first != b[i].first || a[i].second.bits() != b[i].second.bits()) {
        return false;
      }
    }
    return true;
  };
  return sets_equal(again->sets, d.sets) && sets_equal(again->cod_sets, d.cod_sets);
}

// ---------------------------------------------------------------------------

const std::vector<PropId>& catalog() {
  static const std::vector<PropId> ids = [] {
    std::vector<PropId> v;
    for (const auto& e : detail::catalog_entries()) v.push_back(e.id);
    return v;
  }();
  return ids;
}

const char* to_string(PropId id) { return detail::catalog_entry(id).name; }

std::optional<PropId> prop_from_string(const std::string& name) {
  for (const auto& e : detail::catalog_entries()) {
    if (name == e.name) return e.id;
  }
  return std::nullopt;
}

const char* statement(PropId id) { return detail::catalog_entry(id).statement; }

bool is_search(PropId id) {
  const auto kind = detail::catalog_entry(id).kind;
  return kind == CatalogEntry::Kind::SearchSpace ||
         kind == CatalogEntry::Kind::SearchTriple;
}

bool Report::ok() const {
  for (const auto& e : entries) {
    if (e.witness.verdict == Verdict::Counterexample) return false;
  }
  return true;
}

Report run_report(const SearchBudget& budget, const std::vector<PropId>* ids) {
  Report report;
  report.budget = budget;
  const std::vector<PropId>& selection = ids && !ids->empty() ? *ids : catalog();
  for (PropId id : selection) {
    const auto start = std::chrono::steady_clock::now();
    Report::Entry entry;
    entry.witness = run_entry(detail::catalog_entry(id), budget);
    entry.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    report.entries.push_back(std::move(entry));
  }
  return report;
}

namespace detail {

WitnessData make_space_witness(const SoftTopology& t,
                               std::vector<std::pair<std::string, SoftSet>> sets,
                               std::string trace) {
  WitnessData d;
  d.space = document_from_topology(t, "witness");
  d.sets = std::move(sets);
  d.trace = std::move(trace);
  return d;
}

WitnessData make_triple_witness(const TripleCtx& ctx,
                                std::vector<std::pair<std::string, SoftSet>> sets,
                                std::vector<std::pair<std::string, SoftSet>> cod_sets,
                                std::string trace) {
  WitnessData d;
  d.space = document_from_topology(ctx.dom, "witness-domain");
  d.cod_space = document_from_topology(ctx.cod, "witness-codomain");
  d.sets = std::move(sets);
  d.cod_sets = std::move(cod_sets);
  d.fn = ctx.fn;
  d.trace = std::move(trace);
  return d;
}

std::string fn_text(const SoftFunction& f) {
  std::string out = "u: ";
  for (int x = 0; x < f.domain()->point_count(); ++x) {
    if (x) out += ", ";
    out += f.domain()->point_label(x) + "->" + f.codomain()->point_label(f.point_map()[x]);
  }
  out += "; p: ";
  for (int e = 0; e < f.domain()->param_count(); ++e) {
    if (e) out += ", ";
    out += f.domain()->param_label(e) + "->" + f.codomain()->param_label(f.param_map()[e]);
  }
  return out;
}

bool is_sw_continuous(const SoftTopology& t_dom, const SoftTopology& t_cod,
                      const SoftFunction& f, Counter& n) {
  for (Mask v : t_cod.opens_masks()) {
    ++n.work;
    if (!t_dom.sw_open_mask(f.preimage_mask(v) & t_dom.carrier_mask())) return false;
  }
  return true;
}

bool is_sw_open_map(const SoftTopology& t_dom, const SoftTopology& t_cod,
                    const SoftFunction& f, Counter& n) {
  for (Mask u : t_dom.opens_masks()) {
    ++n.work;
    if (!t_cod.sw_open_mask(f.image_mask(u))) return false;
  }
  return true;
}

std::vector<SoftFunction> extensions_of(const SoftFunction& f, Mask carrier) {
  const auto& dom = f.domain();
  const auto& cod = f.codomain();
  std::vector<bool> fixed_x(dom->point_count(), false);
  std::vector<bool> fixed_e(dom->param_count(), false);
  for (int c = 0; c < dom->cell_count(); ++c) {
    if ((carrier >> c) & 1u) {
      fixed_e[dom->cell_param(c)] = true;
      fixed_x[dom->cell_point(c)] = true;
    }
  }
  std::vector<int> free_x, free_e;
  for (int x = 0; x < dom->point_count(); ++x) {
    if (!fixed_x[x]) free_x.push_back(x);
  }
  for (int e = 0; e < dom->param_count(); ++e) {
    if (!fixed_e[e]) free_e.push_back(e);
  }
  const std::uint64_t nu = pow_u64(cod->point_count(), static_cast<int>(free_x.size()));
  const std::uint64_t np = pow_u64(cod->param_count(), static_cast<int>(free_e.size()));
  std::vector<SoftFunction> out;
  out.reserve(nu * np);
  for (std::uint64_t pi = 0; pi < np; ++pi) {
    const auto pdig = decode_digits(pi, static_cast<int>(free_e.size()), cod->param_count());
    for (std::uint64_t ui = 0; ui < nu; ++ui) {
      const auto udig =
          decode_digits(ui, static_cast<int>(free_x.size()), cod->point_count());
      std::vector<int> u = f.point_map();
      std::vector<int> p = f.param_map();
      for (size_t i = 0; i < free_x.size(); ++i) u[free_x[i]] = udig[i];
      for (size_t i = 0; i < free_e.size(); ++i) p[free_e[i]] = pdig[i];
      out.push_back(SoftFunction::from_indices(dom, cod, std::move(u), std::move(p)));
    }
  }
  return out;
}

}  // namespace detail

}  // namespace softtopo
