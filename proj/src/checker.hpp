#ifndef SOFTTOPO_CHECKER_HPP
#define SOFTTOPO_CHECKER_HPP

// Bounded-exhaustive verification. Soft topologies over a universe with n
// cells correspond one-to-one with families of n-bit masks satisfying the
// axioms, so the enumerator works on flat families and reuses them for
// every universe shape with the same cell count. Each statement of the
// catalog is a universally quantified check over enumerated spaces (and
// functions, covers, carriers as the statement demands); the strictness
// entries instead search for the smallest witness separating two classes.
//
// Everything here is deterministic for a fixed budget: candidate streams
// are generated in canonical order (ascending cell count, then shape, then
// topology, then set/function encoding), sampling above the exhaustive
// range is driven purely by the seed, and parallel execution partitions
// the stream into tasks whose results merge back in canonical order, so
// serial and parallel runs produce byte-identical reports.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core.hpp"
#include "documents.hpp"
#include "functions.hpp"
#include "topology.hpp"

namespace softtopo {

enum class PropId {
  P3_SUPERSET,
  P3_NBHD,
  P3_UNION,
  P3_HYPER_INT,
  L3_DENSE_SUBSPACE,
  L3_OPEN_SUBSPACE,
  L3_SEMI_CL_IDENT,
  L3_SEMI_NONNULL_INT,
  L3_CL_OPEN_INT,
  L3_OPEN_SEMI,
  L3_OPEN_SEMI_REL,
  L3_SEMI_IFF_SW_INT,
  L3_SEMICLOSED_SD,
  P4_EQUIV,
  T4_DENSE_RESTRICT,
  T4_COVER_GLUE,
  T4_EXTENSION,
  T4_SEMI_IFF_RESTRICT,
  T4_CHAR,
  C4_CODENSE,
  T4_SEPARABLE_VACUOUS,
  T4_HYPER,
  P5_EQUIV,
  T5_OPEN_RESTRICT,
  T5_DENSE_EXT,
  T5_COVER_GLUE,
  T5_CHAR_CLOSED,
  T5_CHAR_DENSE,
  SW_NOT_SEMI,
  SD_NOT_SW,
  BETA_NOT_SW,
  SW_NOT_BETA,
  INTERSECT_NOT_SW,
  SWHOMEO_NOT_T0,
};

const std::vector<PropId>& catalog();
const char* to_string(PropId id);
std::optional<PropId> prop_from_string(const std::string& name);
const char* statement(PropId id);
bool is_search(PropId id);

struct SearchBudget {
  int max_cells = 4;         // exhaustive through 4 cells, sampled above
  int sample_count = 0;      // sampled candidates per shape when > 4 cells
  std::uint64_t seed = 0;
  int jobs = 1;
  std::uint64_t max_checks = 10'000'000;  // per statement
  SeparationMode separation = SeparationMode::SameParameter;
};

// The exhaustive enumerator handles at most this many cells; larger
// budgets fall back to seeded sampling.
constexpr int kMaxExhaustiveCells = 5;

// Everything needed to replay a verdict through the ordinary modules.
struct WitnessData {
  std::optional<SpaceDocument> space;      // domain space
  std::optional<SpaceDocument> cod_space;  // codomain space, for function statements
  std::vector<std::pair<std::string, SoftSet>> sets;      // role -> set, domain side
  std::vector<std::pair<std::string, SoftSet>> cod_sets;  // role -> set, codomain side
  std::optional<SoftFunction> fn;
  std::string trace;
};

enum class Verdict { Confirmed, Counterexample, Found, NotFound, Vacuous };

struct Witness {
  PropId id = PropId::P3_SUPERSET;
  Verdict verdict = Verdict::Confirmed;
  std::uint64_t checks = 0;    // work units examined; the budget cap applies here
  std::uint64_t asserted = 0;  // conclusions actually asserted (0 = vacuous)
  bool complete = true;  // false when the per-statement check cap cut the sweep short
  std::optional<WitnessData> data;
};

// All soft topologies over the universe, each exactly once, in canonical
// order. Refuses universes beyond kMaxExhaustiveCells with guidance to
// use sampling instead.
std::vector<SoftTopology> enumerate_topologies(const UniversePtr& universe);
std::uint64_t count_topologies(int cells);

// Universally quantifies the statement within the budget; returns the
// confirmed count or the first counterexample in canonical order.
Witness check_proposition(PropId id, const SearchBudget& budget);

// Smallest-budget witness in canonical order; "not found within budget"
// is a legitimate outcome, reported as such.
Witness find_strictness_witness(PropId id, const SearchBudget& budget);

// Re-derives the witness verdict from its serialized spaces and sets; true
// when the replay agrees bit-for-bit.
bool replay_witness(const Witness& w, SeparationMode separation = SeparationMode::SameParameter);

struct Report {
  SearchBudget budget;
  struct Entry {
    Witness witness;
    std::int64_t wall_ms = 0;
  };
  std::vector<Entry> entries;
  // False when any proved statement produced a counterexample.
  bool ok() const;
};

// Runs the ids in catalog order (nullptr/empty = the whole catalog).
Report run_report(const SearchBudget& budget, const std::vector<PropId>* ids = nullptr);

}  // namespace softtopo

#endif
