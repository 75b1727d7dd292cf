#ifndef SOFTTOPO_CHECKER_DETAIL_HPP
#define SOFTTOPO_CHECKER_DETAIL_HPP

// Internals shared between the check driver and the statement catalog.
// Not part of the library surface.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "checker.hpp"

namespace softtopo::detail {

struct Counter {
  // Work units drive the per-statement cap: one unit is roughly one
  // classifier evaluation, ticked in every inner loop including premise
  // scans. Asserted counts actually-asserted conclusions; a statement
  // whose hypothesis never fired reports vacuous, not confirmed.
  std::uint64_t work = 0;
  std::uint64_t asserted = 0;
};

struct TripleCtx {
  const SoftTopology& dom;
  const SoftTopology& cod;
  const SoftFunction& fn;
  SeparationMode separation;
};

using SpaceEvalFn = std::optional<WitnessData> (*)(const SoftTopology&, SeparationMode,
                                                   Counter&);
using TripleEvalFn = std::optional<WitnessData> (*)(const TripleCtx&, Counter&);

struct CatalogEntry {
  PropId id;
  const char* name;
  const char* statement;
  enum class Kind { Space, Triple, SearchSpace, SearchTriple, VacuousProp } kind;
  SpaceEvalFn space_eval = nullptr;
  TripleEvalFn triple_eval = nullptr;
  bool bijective_only = false;   // restrict the function stream to bijections
  bool same_shape_only = false;  // domain and codomain universes share the shape
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry& catalog_entry(PropId id);

// Canonical universe for an enumerated shape: parameters e1, e2, ...,
// points a, b, c, ...
UniversePtr canonical_universe(int params, int points);

// (params, points) factorizations of a cell count, parameters ascending.
std::vector<std::pair<int, int>> shapes_for_cells(int cells);

// Witness assembly.
WitnessData make_space_witness(const SoftTopology& t,
                               std::vector<std::pair<std::string, SoftSet>> sets,
                               std::string trace);
WitnessData make_triple_witness(const TripleCtx& ctx,
                                std::vector<std::pair<std::string, SoftSet>> sets,
                                std::vector<std::pair<std::string, SoftSet>> cod_sets,
                                std::string trace);

std::string fn_text(const SoftFunction& f);

// Whole-function shorthands over full carriers; tick one work unit per
// open examined.
bool is_sw_continuous(const SoftTopology& t_dom, const SoftTopology& t_cod,
                      const SoftFunction& f, Counter& n);
bool is_sw_open_map(const SoftTopology& t_dom, const SoftTopology& t_cod,
                    const SoftFunction& f, Counter& n);

// Every (u',p') agreeing with f on the points and parameters that appear
// in some cell of the carrier, in canonical encoding order.
std::vector<SoftFunction> extensions_of(const SoftFunction& f, Mask carrier);

}  // namespace softtopo::detail

#endif
