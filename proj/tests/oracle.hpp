#ifndef SOFTTOPO_TESTS_ORACLE_HPP
#define SOFTTOPO_TESTS_ORACLE_HPP

// Test-side oracles, deliberately independent of the library code paths:
// classical point-set computations on the flattened cell space using
// std::set, and the brute-force family filter that tries every subset
// family against the topology axioms. Only suitable for desk-scale cell
// counts.

#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using Cell = int;
using CellSet = std::set<Cell>;
using Family = std::vector<CellSet>;

inline CellSet set_from_mask(std::uint32_t mask, int cells) {
  CellSet out;
  for (int c = 0; c < cells; ++c) {
    if ((mask >> c) & 1u) out.insert(c);
  }
  return out;
}

inline std::uint32_t mask_from_set(const CellSet& s) {
  std::uint32_t out = 0;
  for (Cell c : s) out |= std::uint32_t{1} << c;
  return out;
}

inline bool is_subset(const CellSet& a, const CellSet& b) {
  for (Cell c : a) {
    if (!b.count(c)) return false;
  }
  return true;
}

inline CellSet set_union(const CellSet& a, const CellSet& b) {
  CellSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

inline CellSet set_intersection(const CellSet& a, const CellSet& b) {
  CellSet out;
  for (Cell c : a) {
    if (b.count(c)) out.insert(c);
  }
  return out;
}

inline CellSet set_difference(const CellSet& a, const CellSet& b) {
  CellSet out;
  for (Cell c : a) {
    if (!b.count(c)) out.insert(c);
  }
  return out;
}

// Largest member of the family inside g (the family is a topology, so the
// union of all such members is itself a member).
inline CellSet interior(const Family& opens, const CellSet& g) {
  CellSet out;
  for (const CellSet& o : opens) {
    if (is_subset(o, g)) out = set_union(out, o);
  }
  return out;
}

// Smallest closed superset, scanning complements of opens.
inline CellSet closure(const Family& opens, const CellSet& carrier, const CellSet& g) {
  CellSet out = carrier;
  for (const CellSet& o : opens) {
    const CellSet closed = set_difference(carrier, o);
    if (is_subset(g, closed)) out = set_intersection(out, closed);
  }
  return out;
}

// The three axioms, checked literally.
inline bool is_topology(const Family& family, const CellSet& carrier) {
  bool has_null = false, has_carrier = false;
  for (const CellSet& s : family) {
    if (s.empty()) has_null = true;
    if (s == carrier) has_carrier = true;
  }
  if (!has_null || !has_carrier) return false;
  auto member = [&](const CellSet& s) {
    for (const CellSet& t : family) {
      if (t == s) return true;
    }
    return false;
  };
  for (const CellSet& a : family) {
    for (const CellSet& b : family) {
      if (!member(set_union(a, b))) return false;
      if (!member(set_intersection(a, b))) return false;
    }
  }
  return true;
}

// Every family of subsets of an n-cell space that forms a topology, found
// by testing all 2^(2^n) candidate families. Families are returned as
// sorted mask vectors.
inline std::vector<std::vector<std::uint32_t>> all_topologies_brute_force(int cells) {
  const int nsets = 1 << cells;
  CellSet carrier;
  for (int c = 0; c < cells; ++c) carrier.insert(c);
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint64_t fam_bits = 0; fam_bits < (std::uint64_t{1} << nsets); ++fam_bits) {
    Family family;
    std::vector<std::uint32_t> masks;
    for (int s = 0; s < nsets; ++s) {
      if ((fam_bits >> s) & 1u) {
        family.push_back(set_from_mask(static_cast<std::uint32_t>(s), cells));
        masks.push_back(static_cast<std::uint32_t>(s));
      }
    }
    if (is_topology(family, carrier)) out.push_back(masks);
  }
  return out;
}

}  // namespace oracle

#endif
