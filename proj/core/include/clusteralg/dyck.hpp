/*
 * dyck.hpp
 * --------
 * Maximal Dyck paths of type a1 x a2, wraparound subpaths, and the
 * r-compatibility predicate on pairs of edge subsets, with exhaustive
 * enumeration of compatible pairs.
 *
 * The path is treated as a cycle: the corner points (0,0) and (a1,a2) are
 * the same point, so a subpath may wrap around.  Horizontal edges are
 * u_1..u_{a1} from left to right, vertical edges v_1..v_{a2} from bottom
 * to top.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "clusteralg/laurent.hpp"

namespace clusteralg {

struct LatticePoint {
  int x = 0;
  int y = 0;
  bool operator==(const LatticePoint&) const = default;
};

class DyckPath {
 public:
  /// The unique maximal path of the given type.  Negative sizes clamp to
  /// zero (the type convention for negative parameters).
  static DyckPath maximal(long a1, long a2);

  int a1() const { return a1_; }
  int a2() const { return a2_; }
  int length() const { return a1_ + a2_; }

  /// Path corners/lattice points in order, points()[0] = (0,0) and
  /// points()[length()] = (a1,a2).
  const std::vector<LatticePoint>& points() const { return points_; }
  /// True at position k iff the step from points()[k] is horizontal.
  const std::vector<bool>& step_is_horizontal() const { return horizontal_; }

  /// Cyclic position of the left endpoint of u_i (1-based).
  int horizontal_edge_position(int i) const;
  /// Cyclic position of the bottom endpoint of v_j (1-based).
  int vertical_edge_position(int j) const;
  LatticePoint left_endpoint_of_horizontal(int i) const;
  LatticePoint upper_endpoint_of_vertical(int j) const;

  /// Position of a lattice point on the path, with (a1,a2) mapped to 0.
  std::optional<int> position_of(const LatticePoint& p) const;

  /// Top height of the path at abscissa x.
  int height_at(int x) const;

 private:
  int a1_ = 0, a2_ = 0;
  std::vector<LatticePoint> points_;
  std::vector<bool> horizontal_;
  std::vector<int> h_pos_;  // position of u_i
  std::vector<int> v_pos_;  // position of v_j
};

/// Defining property of the maximal path, checked over a height profile
/// heights[x] = top height at abscissa x: the profile stays weakly below
/// the main diagonal and every lattice point strictly above it is strictly
/// above the diagonal.
bool is_maximal_profile(int a1, int a2, const std::vector<int>& heights);

struct Subpath {
  std::vector<int> horizontal;          // u-indices, in path order
  std::vector<int> vertical;            // v-indices, in path order
  std::vector<LatticePoint> interior;   // points strictly between the endpoints
};

/// The subpath from A to B in the Northeast direction, wrapping through
/// (a1,a2)=(0,0) when needed; AA is the full path.  Throws when A or B is
/// not on the path.
Subpath subpath(const DyckPath& path, const LatticePoint& a, const LatticePoint& b);

/// Edge subsets are bitmasks: bit i-1 of s1 selects u_i, bit j-1 of s2
/// selects v_j.
bool is_compatible(const DyckPath& path, uint64_t s1, uint64_t s2, long r);

bool is_compatible(const DyckPath& path, const std::vector<int>& s1,
                   const std::vector<int>& s2, long r);

/// Streams every r-compatible pair exactly once, S1 outer then S2, both in
/// ascending bitmask order.  Throws std::invalid_argument when
/// a1 + a2 exceeds the cap.
void enumerate_compatible_pairs(long a1, long a2, long r,
                                const std::function<void(uint64_t, uint64_t)>& emit,
                                int cap = 24);

/// Number of r-compatible pairs keyed by (|S1|, |S2|), by enumeration.
std::map<std::pair<int, int>, Coeff> compatible_size_distribution(long a1, long a2,
                                                                  long r, int cap = 24);

}  // namespace clusteralg
