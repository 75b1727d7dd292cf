#include "core.hpp"

#include <algorithm>
#include <set>

namespace softtopo {

namespace {

void check_labels(const std::vector<std::string>& labels, const char* what) {
  if (labels.empty()) {
    throw InputError(std::string("universe needs at least one ") + what + " label");
  }
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw InputError(std::string("empty ") + what + " label");
    if (!seen.insert(l).second) {
      throw InputError(std::string("duplicate ") + what + " label '" + l + "'");
    }
  }
}

}  // namespace

UniversePtr Universe::make(std::vector<std::string> parameters,
                           std::vector<std::string> points, int max_cells) {
  check_labels(parameters, "parameter");
  check_labels(points, "point");
  if (max_cells < 1 || max_cells > kDefaultMaxCells) {
    throw InputError("cell cap must lie in 1.." + std::to_string(kDefaultMaxCells));
  }
  const long cells = static_cast<long>(parameters.size()) * static_cast<long>(points.size());
  if (cells > max_cells) {
    throw InputError("universe has " + std::to_string(cells) +
                     " cells, exceeding the cap of " + std::to_string(max_cells));
  }
  return UniversePtr(new Universe(std::move(parameters), std::move(points)));
}

int Universe::param_index(const std::string& label) const {
  for (int e = 0; e < param_count(); ++e) {
    if (params_[e] == label) return e;
  }
  throw InputError("unknown parameter label '" + label + "'");
}

int Universe::point_index(const std::string& label) const {
  for (int x = 0; x < point_count(); ++x) {
    if (points_[x] == label) return x;
  }
  throw InputError("unknown point label '" + label + "'");
}

SoftSet::SoftSet(UniversePtr universe, Mask bits) : uni_(std::move(universe)), bits_(bits) {
  if (!uni_) throw InputError("soft set needs a universe");
  if (bits_ & ~uni_->full_mask()) throw InputError("bit pattern exceeds the universe");
}

SoftSet SoftSet::absolute(UniversePtr universe) {
  Mask full = universe->full_mask();
  return SoftSet(std::move(universe), full);
}

bool SoftSet::contains(const SoftPoint& p) const {
  const int e = uni_->param_index(p.param);
  const int x = uni_->point_index(p.point);
  return contains_cell(e, x);
}

bool SoftSet::subset_of(const SoftSet& other) const {
  if (!uni_->same_as(*other.uni_)) throw InputError("universe mismatch between operands");
  return (bits_ & ~other.bits_) == 0;
}

std::vector<std::string> SoftSet::section(const std::string& param) const {
  const int e = uni_->param_index(param);
  std::vector<std::string> out;
  for (int x = 0; x < uni_->point_count(); ++x) {
    if (contains_cell(e, x)) out.push_back(uni_->point_label(x));
  }
  return out;
}

std::string SoftSet::to_text() const {
  if (is_null()) return "Phi_E";
  if (is_absolute()) return "X_E";
  std::string out = "{";
  for (int e = 0; e < uni_->param_count(); ++e) {
    if (e) out += ", ";
    out += "(" + uni_->param_label(e) + ",{";
    bool first = true;
    for (int x = 0; x < uni_->point_count(); ++x) {
      if (!contains_cell(e, x)) continue;
      if (!first) out += ",";
      out += uni_->point_label(x);
      first = false;
    }
    out += "})";
  }
  out += "}";
  return out;
}

namespace {
const UniversePtr& common_universe(const SoftSet& a, const SoftSet& b) {
  if (!a.universe()->same_as(*b.universe())) {
    throw InputError("universe mismatch between operands");
  }
  return a.universe();
}
}  // namespace

SoftSet soft_union(const SoftSet& a, const SoftSet& b) {
  return SoftSet(common_universe(a, b), a.bits() | b.bits());
}

SoftSet soft_intersection(const SoftSet& a, const SoftSet& b) {
  return SoftSet(common_universe(a, b), a.bits() & b.bits());
}

SoftSet make_soft_set(const UniversePtr& universe,
                      const std::map<std::string, std::vector<std::string>>& assignment) {
  Mask bits = 0;
  for (const auto& [param, pts] : assignment) {
    const int e = universe->param_index(param);
    for (const auto& pt : pts) {
      bits |= Mask{1} << universe->cell(e, universe->point_index(pt));
    }
  }
  return SoftSet(universe, bits);
}

FlatSet::FlatSet(UniversePtr universe, std::vector<Cell> cells)
    : uni_(std::move(universe)), cells_(std::move(cells)) {
  for (const auto& [e, x] : cells_) {
    if (e < 0 || e >= uni_->param_count() || x < 0 || x >= uni_->point_count()) {
      throw InputError("flat cell out of bounds");
    }
  }
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

std::vector<std::pair<std::string, std::string>> FlatSet::labels() const {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(cells_.size());
  for (const auto& [e, x] : cells_) {
    out.emplace_back(uni_->param_label(e), uni_->point_label(x));
  }
  return out;
}

bool FlatSet::contains(const Cell& c) const {
  return std::binary_search(cells_.begin(), cells_.end(), c);
}

FlatSet flat_union(const FlatSet& a, const FlatSet& b) {
  common_universe(SoftSet(a.universe(), 0), SoftSet(b.universe(), 0));
  std::vector<FlatSet::Cell> out;
  std::set_union(a.cells().begin(), a.cells().end(), b.cells().begin(), b.cells().end(),
                 std::back_inserter(out));
  return FlatSet(a.universe(), std::move(out));
}

FlatSet flat_intersection(const FlatSet& a, const FlatSet& b) {
  common_universe(SoftSet(a.universe(), 0), SoftSet(b.universe(), 0));
  std::vector<FlatSet::Cell> out;
  std::set_intersection(a.cells().begin(), a.cells().end(), b.cells().begin(),
                        b.cells().end(), std::back_inserter(out));
  return FlatSet(a.universe(), std::move(out));
}

FlatSet flat_complement(const FlatSet& a) {
  std::vector<FlatSet::Cell> out;
  for (int e = 0; e < a.universe()->param_count(); ++e) {
    for (int x = 0; x < a.universe()->point_count(); ++x) {
      if (!a.contains({e, x})) out.emplace_back(e, x);
    }
  }
  return FlatSet(a.universe(), std::move(out));
}

FlatSet flatten(const SoftSet& s) {
  std::vector<FlatSet::Cell> cells;
  const auto& uni = s.universe();
  for (int e = 0; e < uni->param_count(); ++e) {
    for (int x = 0; x < uni->point_count(); ++x) {
      if (s.contains_cell(e, x)) cells.emplace_back(e, x);
    }
  }
  return FlatSet(uni, std::move(cells));
}

SoftSet unflatten(const FlatSet& s) {
  Mask bits = 0;
  for (const auto& [e, x] : s.cells()) {
    bits |= Mask{1} << s.universe()->cell(e, x);
  }
  return SoftSet(s.universe(), bits);
}

}  // namespace softtopo
