#ifndef SOFTTOPO_TOPOLOGY_HPP
#define SOFTTOPO_TOPOLOGY_HPP

// Soft topological spaces and the operators on them: interior, closure,
// the sw-operators, subspaces, the per-set classifier and the space-level
// property scan. A space may be a subspace of a larger one; the carrier
// then plays the role of the absolute set and complements are taken
// inside it, so the same code answers both absolute and relative queries.

#include <optional>
#include <string>
#include <vector>

#include "core.hpp"

namespace softtopo {

// Boolean profile of one soft set relative to a topology.
struct ClassificationVector {
  bool open = false;
  bool closed = false;
  bool dense = false;
  bool co_dense = false;
  bool semiopen = false;
  bool semiclosed = false;
  bool beta_open = false;
  bool somewhere_dense = false;
  bool sw_open = false;
  bool sw_closed = false;
};

// How the separation axioms quantify over soft-point pairs.
//   SameParameter: pairs P^x_e, P^y_e with x != y (the default reading).
//   AllPairs:      every pair of distinct soft points, parameters may differ.
enum class SeparationMode { SameParameter, AllPairs };

struct SpaceProperties {
  bool hyperconnected = false;
  bool connected = false;
  bool t0 = false;
  bool t1 = false;
  bool t2 = false;
  // True on every finite model; reported so the flags are never silently absent.
  bool separable = true;
  bool compact = true;
};

// Why a family fails the topology axioms. Indices refer to the family as
// given to validate_family; -1 where not applicable.
struct TopologyViolation {
  enum class Kind {
    ForeignUniverse,
    OutsideCarrier,
    MissingNull,
    MissingAbsolute,
    MissingUnion,
    MissingIntersection,
  };
  Kind kind;
  int first = -1;
  int second = -1;
  std::string message;
};

class SoftTopology {
 public:
  // Validates the three axioms; throws InputError on violation.
  static SoftTopology from_family(const UniversePtr& universe,
                                  const std::vector<SoftSet>& family);

  // Smallest topology containing the family: adds the null and absolute
  // sets, then closes under pairwise intersection and union.
  static SoftTopology generate(const UniversePtr& universe,
                               const std::vector<SoftSet>& family);

  // Caller guarantees the axioms hold; used by the enumerator where every
  // candidate is valid by construction.
  static SoftTopology unchecked(UniversePtr universe, std::vector<Mask> opens,
                                Mask carrier);

  const UniversePtr& universe() const { return uni_; }
  Mask carrier_mask() const { return carrier_; }
  SoftSet carrier_set() const { return SoftSet(uni_, carrier_); }
  bool is_subspace() const { return carrier_ != uni_->full_mask(); }

  // Canonical family: masks sorted ascending.
  const std::vector<Mask>& opens_masks() const { return opens_; }
  std::vector<SoftSet> opens() const;
  int open_count() const { return static_cast<int>(opens_.size()); }

  bool is_open_mask(Mask g) const;
  bool is_closed_mask(Mask g) const { return is_open_mask(rel_complement(g)); }
  Mask rel_complement(Mask g) const { return carrier_ & ~g; }

  // Union of opens inside g / intersection of closed sets containing g.
  Mask interior_mask(Mask g) const;
  Mask closure_mask(Mask g) const;

  // Union of sw-open subsets of g / intersection of sw-closed supersets.
  // Collapses to {null, g} resp. {g, carrier}: every superset of an
  // sw-open set is sw-open, so g itself is the union whenever any
  // non-null sw-open set fits inside it.
  Mask int_sw_mask(Mask g) const { return sw_open_mask(g) ? g : 0; }
  Mask cl_sw_mask(Mask g) const { return sw_closed_mask(g) ? g : carrier_; }

  bool dense_mask(Mask g) const { return closure_mask(g) == carrier_; }
  bool co_dense_mask(Mask g) const { return interior_mask(g) == 0; }
  bool semiopen_mask(Mask g) const { return subset(g, closure_mask(interior_mask(g))); }
  bool semiclosed_mask(Mask g) const { return semiopen_mask(rel_complement(g)); }
  bool beta_open_mask(Mask g) const {
    return subset(g, closure_mask(interior_mask(closure_mask(g))));
  }
  // The null set counts as somewhere dense by convention.
  bool somewhere_dense_mask(Mask g) const {
    return g == 0 || interior_mask(closure_mask(g)) != 0;
  }
  bool sw_open_mask(Mask g) const { return g == 0 || interior_mask(g) != 0; }
  bool sw_closed_mask(Mask g) const { return closure_mask(g) != carrier_ || g == carrier_; }

  // SoftSet-level wrappers; all require the set to live in this universe
  // and inside the carrier.
  SoftSet interior(const SoftSet& g) const { return wrap(interior_mask(checked(g))); }
  SoftSet closure(const SoftSet& g) const { return wrap(closure_mask(checked(g))); }
  SoftSet int_sw(const SoftSet& g) const { return wrap(int_sw_mask(checked(g))); }
  SoftSet cl_sw(const SoftSet& g) const { return wrap(cl_sw_mask(checked(g))); }

  ClassificationVector classify_mask(Mask g) const;
  ClassificationVector classify(const SoftSet& g) const { return classify_mask(checked(g)); }

  // Relative topology {G /\ S : G open} over the carrier s.
  SoftTopology subspace(const SoftSet& s) const;

  SpaceProperties properties(SeparationMode mode = SeparationMode::SameParameter) const;

  friend bool operator==(const SoftTopology& a, const SoftTopology& b) {
    return a.uni_->same_as(*b.uni_) && a.carrier_ == b.carrier_ && a.opens_ == b.opens_;
  }

 private:
  SoftTopology(UniversePtr uni, std::vector<Mask> opens, Mask carrier);
  Mask checked(const SoftSet& g) const;
  SoftSet wrap(Mask m) const { return SoftSet(uni_, m); }
  static bool subset(Mask a, Mask b) { return (a & ~b) == 0; }
  void build_tables();

  UniversePtr uni_;
  std::vector<Mask> opens_;
  Mask carrier_;
  // Memoized interior/closure per mask, built eagerly for small cell
  // counts so the instance stays immutable and freely shareable.
  std::vector<Mask> int_table_;
  std::vector<Mask> cl_table_;
};

// Confirms the three axioms for the family as given (nothing implicit);
// on failure reports the offending member or pair.
std::optional<TopologyViolation> validate_family(const UniversePtr& universe,
                                                 const std::vector<SoftSet>& family);

}  // namespace softtopo

#endif
