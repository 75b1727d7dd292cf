#ifndef SOFTTOPO_CORE_HPP
#define SOFTTOPO_CORE_HPP

// Soft-set value types over a finite universe: a parameterized family
// E -> P(X) stored as one bit matrix, its boolean algebra, soft points,
// and the flattening bijection onto plain subsets of the product E x X.

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace softtopo {

// Malformed user input: unknown labels, universe mismatches, cap
// violations. Maps to exit code 2 at the command-line boundary.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// One soft set is one machine word: bit (e*|X| + x) holds "x in F(e)".
using Mask = std::uint32_t;

class Universe;
using UniversePtr = std::shared_ptr<const Universe>;

// Ordered parameter labels E and point labels X. |E|*|X| is capped so
// every soft set over the universe fits in a single Mask.
class Universe {
 public:
  static constexpr int kDefaultMaxCells = 24;

  static UniversePtr make(std::vector<std::string> parameters,
                          std::vector<std::string> points,
                          int max_cells = kDefaultMaxCells);

  int param_count() const { return static_cast<int>(params_.size()); }
  int point_count() const { return static_cast<int>(points_.size()); }
  int cell_count() const { return param_count() * point_count(); }

  const std::string& param_label(int e) const { return params_.at(e); }
  const std::string& point_label(int x) const { return points_.at(x); }
  const std::vector<std::string>& param_labels() const { return params_; }
  const std::vector<std::string>& point_labels() const { return points_; }

  int param_index(const std::string& label) const;  // throws InputError
  int point_index(const std::string& label) const;  // throws InputError

  int cell(int e, int x) const { return e * point_count() + x; }
  int cell_param(int c) const { return c / point_count(); }
  int cell_point(int c) const { return c % point_count(); }
  Mask full_mask() const { return cell_count() == 32 ? ~Mask{0} : (Mask{1} << cell_count()) - 1; }

  // Structural identity: same labels in the same order.
  bool same_as(const Universe& other) const {
    return params_ == other.params_ && points_ == other.points_;
  }

 private:
  Universe(std::vector<std::string> parameters, std::vector<std::string> points)
      : params_(std::move(parameters)), points_(std::move(points)) {}
  std::vector<std::string> params_;
  std::vector<std::string> points_;
};

// P^x_e: the soft set whose only nonempty section is {x} at e.
struct SoftPoint {
  std::string param;
  std::string point;
};

class SoftSet {
 public:
  SoftSet(UniversePtr universe, Mask bits);

  static SoftSet null_set(UniversePtr universe) { return SoftSet(std::move(universe), 0); }
  static SoftSet absolute(UniversePtr universe);

  const UniversePtr& universe() const { return uni_; }
  Mask bits() const { return bits_; }

  bool is_null() const { return bits_ == 0; }
  bool is_absolute() const { return bits_ == uni_->full_mask(); }

  bool contains_cell(int e, int x) const { return (bits_ >> uni_->cell(e, x)) & 1u; }
  bool contains(const SoftPoint& p) const;

  SoftSet complement() const { return SoftSet(uni_, bits_ ^ uni_->full_mask()); }
  bool subset_of(const SoftSet& other) const;

  // Section F(e), as point labels in universe order.
  std::vector<std::string> section(const std::string& param) const;

  // Section-list rendering, e.g. {(e1,{x,z}), (e2,{})}.
  std::string to_text() const;

  friend bool operator==(const SoftSet& a, const SoftSet& b) {
    return a.uni_->same_as(*b.uni_) && a.bits_ == b.bits_;
  }

 private:
  UniversePtr uni_;
  Mask bits_;
};

SoftSet soft_union(const SoftSet& a, const SoftSet& b);
SoftSet soft_intersection(const SoftSet& a, const SoftSet& b);

// Sections listed per parameter label; missing parameters mean the empty
// section. Unknown labels raise InputError naming the offender.
SoftSet make_soft_set(const UniversePtr& universe,
                      const std::map<std::string, std::vector<std::string>>& assignment);

// A soft set viewed as one plain subset of the product E x X. Bridge
// representation for the classical-topology oracle; carries its own
// set algebra so the two routes stay independent.
class FlatSet {
 public:
  using Cell = std::pair<int, int>;  // (parameter index, point index)

  FlatSet(UniversePtr universe, std::vector<Cell> cells);

  const UniversePtr& universe() const { return uni_; }
  const std::vector<Cell>& cells() const { return cells_; }  // sorted, unique
  std::vector<std::pair<std::string, std::string>> labels() const;

  bool contains(const Cell& c) const;

  friend bool operator==(const FlatSet& a, const FlatSet& b) {
    return a.uni_->same_as(*b.uni_) && a.cells_ == b.cells_;
  }

 private:
  UniversePtr uni_;
  std::vector<Cell> cells_;
};

FlatSet flat_union(const FlatSet& a, const FlatSet& b);
FlatSet flat_intersection(const FlatSet& a, const FlatSet& b);
FlatSet flat_complement(const FlatSet& a);

FlatSet flatten(const SoftSet& s);
SoftSet unflatten(const FlatSet& s);

}  // namespace softtopo

#endif
