#include "functions.hpp"

#include <algorithm>

namespace softtopo {

SoftFunction::SoftFunction(UniversePtr dom, UniversePtr cod, std::vector<int> u,
                           std::vector<int> p)
    : dom_(std::move(dom)), cod_(std::move(cod)), u_(std::move(u)), p_(std::move(p)) {
  cell_map_.resize(dom_->cell_count());
  for (int e = 0; e < dom_->param_count(); ++e) {
    for (int x = 0; x < dom_->point_count(); ++x) {
      cell_map_[dom_->cell(e, x)] = cod_->cell(p_[e], u_[x]);
    }
  }
}

SoftFunction SoftFunction::from_labels(UniversePtr domain, UniversePtr codomain,
                                       const std::map<std::string, std::string>& u,
                                       const std::map<std::string, std::string>& p) {
  std::vector<int> ui(domain->point_count());
  for (int x = 0; x < domain->point_count(); ++x) {
    const auto& label = domain->point_label(x);
    auto it = u.find(label);
    if (it == u.end()) throw InputError("point map is missing '" + label + "'");
    ui[x] = codomain->point_index(it->second);
  }
  for (const auto& [from, to] : u) {
    domain->point_index(from);  // reject entries for unknown labels
    (void)to;
  }
  std::vector<int> pi(domain->param_count());
  for (int e = 0; e < domain->param_count(); ++e) {
    const auto& label = domain->param_label(e);
    auto it = p.find(label);
    if (it == p.end()) throw InputError("parameter map is missing '" + label + "'");
    pi[e] = codomain->param_index(it->second);
  }
  for (const auto& [from, to] : p) {
    domain->param_index(from);
    (void)to;
  }
  return SoftFunction(std::move(domain), std::move(codomain), std::move(ui), std::move(pi));
}

SoftFunction SoftFunction::from_indices(UniversePtr domain, UniversePtr codomain,
                                        std::vector<int> u, std::vector<int> p) {
  if (static_cast<int>(u.size()) != domain->point_count() ||
      static_cast<int>(p.size()) != domain->param_count()) {
    throw InputError("map sizes do not match the domain universe");
  }
  for (int v : u) {
    if (v < 0 || v >= codomain->point_count()) throw InputError("point map index out of range");
  }
  for (int v : p) {
    if (v < 0 || v >= codomain->param_count()) {
      throw InputError("parameter map index out of range");
    }
  }
  return SoftFunction(std::move(domain), std::move(codomain), std::move(u), std::move(p));
}

SoftFunction SoftFunction::identity(const UniversePtr& universe) {
  std::vector<int> u(universe->point_count());
  std::vector<int> p(universe->param_count());
  for (size_t i = 0; i < u.size(); ++i) u[i] = static_cast<int>(i);
  for (size_t i = 0; i < p.size(); ++i) p[i] = static_cast<int>(i);
  return SoftFunction(universe, universe, std::move(u), std::move(p));
}

namespace {
bool distinct_values(const std::vector<int>& v) {
  std::vector<int> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}
bool covers(const std::vector<int>& v, int n) {
  std::vector<bool> hit(n, false);
  for (int x : v) hit[x] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}
}  // namespace

bool SoftFunction::injective() const { return distinct_values(u_) && distinct_values(p_); }

bool SoftFunction::surjective() const {
  return covers(u_, cod_->point_count()) && covers(p_, cod_->param_count());
}

Mask SoftFunction::image_mask(Mask a) const {
  Mask out = 0;
  for (int c = 0; c < dom_->cell_count(); ++c) {
    if ((a >> c) & 1u) out |= Mask{1} << cell_map_[c];
  }
  return out;
}

Mask SoftFunction::preimage_mask(Mask b) const {
  Mask out = 0;
  for (int c = 0; c < dom_->cell_count(); ++c) {
    if ((b >> cell_map_[c]) & 1u) out |= Mask{1} << c;
  }
  return out;
}

SoftSet SoftFunction::image(const SoftSet& a) const {
  if (!a.universe()->same_as(*dom_)) {
    throw InputError("image operand does not live in the domain universe");
  }
  return SoftSet(cod_, image_mask(a.bits()));
}

SoftSet SoftFunction::preimage(const SoftSet& b) const {
  if (!b.universe()->same_as(*cod_)) {
    throw InputError("preimage operand does not live in the codomain universe");
  }
  return SoftSet(dom_, preimage_mask(b.bits()));
}

FunctionClassification classify_function(const SoftFunction& f, const SoftTopology& t_dom,
                                         const SoftTopology& t_cod) {
  if (!t_dom.universe()->same_as(*f.domain()) || !t_cod.universe()->same_as(*f.codomain())) {
    throw InputError("topologies do not match the function endpoints");
  }
  const Mask a = t_dom.carrier_mask();
  if ((f.image_mask(a) & ~t_cod.carrier_mask()) != 0) {
    throw InputError("the image of the domain carrier escapes the codomain carrier");
  }

  FunctionClassification r;
  r.continuous = r.semicontinuous = r.beta_continuous = true;
  r.sd_continuous = r.sw_continuous = true;
  for (Mask v : t_cod.opens_masks()) {
    const Mask pre = f.preimage_mask(v) & a;
    r.continuous = r.continuous && t_dom.is_open_mask(pre);
    r.semicontinuous = r.semicontinuous && t_dom.semiopen_mask(pre);
    r.beta_continuous = r.beta_continuous && t_dom.beta_open_mask(pre);
    r.sd_continuous = r.sd_continuous && t_dom.somewhere_dense_mask(pre);
    r.sw_continuous = r.sw_continuous && t_dom.sw_open_mask(pre);
  }

  r.open_map = r.semiopen_map = r.beta_open_map = true;
  r.sd_open_map = r.sw_open_map = true;
  for (Mask u : t_dom.opens_masks()) {
    const Mask im = f.image_mask(u);
    r.open_map = r.open_map && t_cod.is_open_mask(im);
    r.semiopen_map = r.semiopen_map && t_cod.semiopen_mask(im);
    r.beta_open_map = r.beta_open_map && t_cod.beta_open_mask(im);
    r.sd_open_map = r.sd_open_map && t_cod.somewhere_dense_mask(im);
    r.sw_open_map = r.sw_open_map && t_cod.sw_open_mask(im);
  }

  const bool bij = f.bijective();
  r.homeomorphism = bij && r.continuous && r.open_map;
  r.sw_homeomorphism = bij && r.sw_continuous && r.sw_open_map;
  return r;
}

Restriction restrict(const SoftFunction& f, const SoftSet& carrier,
                     const SoftTopology& t_dom) {
  if (!carrier.universe()->same_as(*f.domain())) {
    throw InputError("restriction carrier does not live in the domain universe");
  }
  return Restriction{f, t_dom.subspace(carrier)};
}

}  // namespace softtopo
