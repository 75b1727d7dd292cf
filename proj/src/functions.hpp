#ifndef SOFTTOPO_FUNCTIONS_HPP
#define SOFTTOPO_FUNCTIONS_HPP

// Soft functions between soft topological spaces: a pair of total maps
// (u on points, p on parameters) acting on soft sets by image and
// preimage, restriction to a carrier, and the continuity/openness
// classifiers up to sw-homeomorphism.

#include <map>
#include <string>
#include <vector>

#include "core.hpp"
#include "topology.hpp"

namespace softtopo {

class SoftFunction {
 public:
  // u maps every domain point label to a codomain point label, p every
  // domain parameter label to a codomain parameter label. Totality is
  // checked; missing or unknown labels raise InputError.
  static SoftFunction from_labels(UniversePtr domain, UniversePtr codomain,
                                  const std::map<std::string, std::string>& u,
                                  const std::map<std::string, std::string>& p);
  static SoftFunction from_indices(UniversePtr domain, UniversePtr codomain,
                                   std::vector<int> u, std::vector<int> p);
  static SoftFunction identity(const UniversePtr& universe);

  const UniversePtr& domain() const { return dom_; }
  const UniversePtr& codomain() const { return cod_; }
  const std::vector<int>& point_map() const { return u_; }
  const std::vector<int>& param_map() const { return p_; }

  // Flattened action (e,x) -> (p(e),u(x)) as domain-cell -> codomain-cell.
  int map_cell(int cell) const { return cell_map_[cell]; }

  bool injective() const;
  bool surjective() const;
  bool bijective() const { return injective() && surjective(); }

  Mask image_mask(Mask a) const;
  Mask preimage_mask(Mask b) const;
  SoftSet image(const SoftSet& a) const;
  SoftSet preimage(const SoftSet& b) const;

 private:
  SoftFunction(UniversePtr dom, UniversePtr cod, std::vector<int> u, std::vector<int> p);
  UniversePtr dom_;
  UniversePtr cod_;
  std::vector<int> u_;
  std::vector<int> p_;
  std::vector<int> cell_map_;
};

struct FunctionClassification {
  bool continuous = false;
  bool semicontinuous = false;
  bool beta_continuous = false;
  bool sd_continuous = false;
  bool sw_continuous = false;
  bool open_map = false;
  bool semiopen_map = false;
  bool beta_open_map = false;
  bool sd_open_map = false;
  bool sw_open_map = false;
  bool homeomorphism = false;
  bool sw_homeomorphism = false;
};

// Continuity flags quantify preimages of the codomain opens, openness
// flags images of the domain opens. Works for subspace topologies too:
// preimages are cut down to the domain carrier, and the image of the
// domain carrier must stay inside the codomain carrier.
FunctionClassification classify_function(const SoftFunction& f, const SoftTopology& t_dom,
                                         const SoftTopology& t_cod);

// A function considered on a subspace: the map itself together with the
// relative topology of the carrier, so classification runs "over A".
struct Restriction {
  SoftFunction fn;
  SoftTopology domain;
};

Restriction restrict(const SoftFunction& f, const SoftSet& carrier,
                     const SoftTopology& t_dom);

}  // namespace softtopo

#endif
