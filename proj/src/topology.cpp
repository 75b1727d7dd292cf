#include "topology.hpp"

#include <algorithm>
#include <set>

namespace softtopo {

namespace {
constexpr int kTableCellLimit = 6;  // 2^6 masks per table at most

std::vector<Mask> canonical(std::vector<Mask> masks) {
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  return masks;
}
}  // namespace

SoftTopology::SoftTopology(UniversePtr uni, std::vector<Mask> opens, Mask carrier)
    : uni_(std::move(uni)), opens_(canonical(std::move(opens))), carrier_(carrier) {
  build_tables();
}

void SoftTopology::build_tables() {
  const int cells = uni_->cell_count();
  if (cells > kTableCellLimit) return;
  const Mask limit = Mask{1} << cells;
  int_table_.resize(limit);
  cl_table_.resize(limit);
  for (Mask g = 0; g < limit; ++g) {
    if ((g & ~carrier_) != 0) continue;
    Mask in = 0;
    for (Mask o : opens_) {
      if (subset(o, g)) in |= o;
    }
    Mask cl = carrier_;
    for (Mask o : opens_) {
      const Mask closed = carrier_ & ~o;
      if (subset(g, closed)) cl &= closed;
    }
    int_table_[g] = in;
    cl_table_[g] = cl;
  }
}

SoftTopology SoftTopology::from_family(const UniversePtr& universe,
                                       const std::vector<SoftSet>& family) {
  if (auto v = validate_family(universe, family)) {
    throw InputError("not a soft topology: " + v->message);
  }
  std::vector<Mask> masks;
  masks.reserve(family.size());
  for (const auto& s : family) masks.push_back(s.bits());
  return SoftTopology(universe, std::move(masks), universe->full_mask());
}

SoftTopology SoftTopology::generate(const UniversePtr& universe,
                                    const std::vector<SoftSet>& family) {
  std::set<Mask> fam = {0, universe->full_mask()};
  for (const auto& s : family) {
    if (!s.universe()->same_as(*universe)) {
      throw InputError("universe mismatch in generating family");
    }
    fam.insert(s.bits());
  }
  // Close under pairwise union and intersection to a fixed point.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Mask> snapshot(fam.begin(), fam.end());
    for (size_t i = 0; i < snapshot.size(); ++i) {
      for (size_t j = i + 1; j < snapshot.size(); ++j) {
        grew |= fam.insert(snapshot[i] | snapshot[j]).second;
        grew |= fam.insert(snapshot[i] & snapshot[j]).second;
      }
    }
  }
  return SoftTopology(universe, std::vector<Mask>(fam.begin(), fam.end()),
                      universe->full_mask());
}

SoftTopology SoftTopology::unchecked(UniversePtr universe, std::vector<Mask> opens,
                                     Mask carrier) {
  return SoftTopology(std::move(universe), std::move(opens), carrier);
}

std::vector<SoftSet> SoftTopology::opens() const {
  std::vector<SoftSet> out;
  out.reserve(opens_.size());
  for (Mask m : opens_) out.emplace_back(uni_, m);
  return out;
}

bool SoftTopology::is_open_mask(Mask g) const {
  return std::binary_search(opens_.begin(), opens_.end(), g);
}

Mask SoftTopology::interior_mask(Mask g) const {
  if (!int_table_.empty()) return int_table_[g];
  Mask in = 0;
  for (Mask o : opens_) {
    if (subset(o, g)) in |= o;
  }
  return in;
}

Mask SoftTopology::closure_mask(Mask g) const {
  if (!cl_table_.empty()) return cl_table_[g];
  Mask cl = carrier_;
  for (Mask o : opens_) {
    const Mask closed = carrier_ & ~o;
    if (subset(g, closed)) cl &= closed;
  }
  return cl;
}

Mask SoftTopology::checked(const SoftSet& g) const {
  if (!g.universe()->same_as(*uni_)) throw InputError("universe mismatch between operands");
  if ((g.bits() & ~carrier_) != 0) {
    throw InputError("set " + g.to_text() + " lies outside the subspace carrier");
  }
  return g.bits();
}

ClassificationVector SoftTopology::classify_mask(Mask g) const {
  ClassificationVector v;
  v.open = is_open_mask(g);
  v.closed = is_closed_mask(g);
  v.dense = dense_mask(g);
  v.co_dense = co_dense_mask(g);
  v.semiopen = semiopen_mask(g);
  v.semiclosed = semiclosed_mask(g);
  v.beta_open = beta_open_mask(g);
  v.somewhere_dense = somewhere_dense_mask(g);
  v.sw_open = sw_open_mask(g);
  v.sw_closed = sw_closed_mask(g);
  return v;
}

SoftTopology SoftTopology::subspace(const SoftSet& s) const {
  const Mask carrier = checked(s);
  if (carrier == 0) throw InputError("subspace carrier must be non-null");
  std::vector<Mask> rel;
  rel.reserve(opens_.size());
  for (Mask o : opens_) rel.push_back(o & carrier);
  return SoftTopology(uni_, std::move(rel), carrier);
}

SpaceProperties SoftTopology::properties(SeparationMode mode) const {
  SpaceProperties p;

  std::vector<Mask> nonnull;
  for (Mask o : opens_) {
    if (o != 0) nonnull.push_back(o);
  }

  p.hyperconnected = true;
  for (size_t i = 0; i < nonnull.size() && p.hyperconnected; ++i) {
    for (size_t j = i; j < nonnull.size(); ++j) {
      if ((nonnull[i] & nonnull[j]) == 0) {
        p.hyperconnected = false;
        break;
      }
    }
  }

  p.connected = true;
  for (size_t i = 0; i < nonnull.size() && p.connected; ++i) {
    for (size_t j = i + 1; j < nonnull.size(); ++j) {
      if ((nonnull[i] & nonnull[j]) == 0 && (nonnull[i] | nonnull[j]) == carrier_) {
        p.connected = false;
        break;
      }
    }
  }

  // Soft-point pairs to separate, as cell indices inside the carrier.
  std::vector<std::pair<int, int>> pairs;
  const int cells = uni_->cell_count();
  for (int c1 = 0; c1 < cells; ++c1) {
    if (!((carrier_ >> c1) & 1u)) continue;
    for (int c2 = c1 + 1; c2 < cells; ++c2) {
      if (!((carrier_ >> c2) & 1u)) continue;
      if (mode == SeparationMode::SameParameter &&
          uni_->cell_param(c1) != uni_->cell_param(c2)) {
        continue;
      }
      pairs.emplace_back(c1, c2);
    }
  }

  p.t0 = p.t1 = p.t2 = true;
  for (const auto& [c1, c2] : pairs) {
    bool sep1 = false, sep2 = false, disjoint = false;
    for (Mask o : opens_) {
      const bool has1 = (o >> c1) & 1u;
      const bool has2 = (o >> c2) & 1u;
      if (has1 && !has2) sep1 = true;
      if (has2 && !has1) sep2 = true;
    }
    if (p.t2) {
      for (Mask o1 : nonnull) {
        if (!((o1 >> c1) & 1u)) continue;
        for (Mask o2 : nonnull) {
          if (((o2 >> c2) & 1u) && (o1 & o2) == 0) {
            disjoint = true;
            break;
          }
        }
        if (disjoint) break;
      }
    }
    p.t0 = p.t0 && (sep1 || sep2);
    p.t1 = p.t1 && sep1 && sep2;
    p.t2 = p.t2 && disjoint;
  }
  return p;
}

std::optional<TopologyViolation> validate_family(const UniversePtr& universe,
                                                 const std::vector<SoftSet>& family) {
  using Kind = TopologyViolation::Kind;
  std::vector<Mask> masks;
  masks.reserve(family.size());
  for (size_t i = 0; i < family.size(); ++i) {
    if (!family[i].universe()->same_as(*universe)) {
      return TopologyViolation{Kind::ForeignUniverse, static_cast<int>(i), -1,
                               "member " + std::to_string(i) + " belongs to a different universe"};
    }
    masks.push_back(family[i].bits());
  }
  std::set<Mask> present(masks.begin(), masks.end());
  if (!present.count(0)) {
    return TopologyViolation{Kind::MissingNull, -1, -1, "the null soft set Phi_E is missing"};
  }
  if (!present.count(universe->full_mask())) {
    return TopologyViolation{Kind::MissingAbsolute, -1, -1,
                             "the absolute soft set X_E is missing"};
  }
  for (size_t i = 0; i < masks.size(); ++i) {
    for (size_t j = i + 1; j < masks.size(); ++j) {
      if (!present.count(masks[i] & masks[j])) {
        return TopologyViolation{
            Kind::MissingIntersection, static_cast<int>(i), static_cast<int>(j),
            "the intersection of " + family[i].to_text() + " and " + family[j].to_text() +
                " is missing from the family"};
      }
      if (!present.count(masks[i] | masks[j])) {
        return TopologyViolation{
            Kind::MissingUnion, static_cast<int>(i), static_cast<int>(j),
            "the union of " + family[i].to_text() + " and " + family[j].to_text() +
                " is missing from the family"};
      }
    }
  }
  return std::nullopt;
}

}  // namespace softtopo
