#pragma once

#include <vector>

#include "arrangebij/arrangement.hpp"
#include "arrangebij/cubic.hpp"
#include "arrangebij/rtree.hpp"

namespace arrangebij {

// An r-parking function is a sequence (a_1..a_n) whose weakly increasing
// rearrangement b satisfies b_i <= r*(i-1).
struct ParkingFunction {
  int r = 0;
  std::vector<int> entries;

  bool operator==(const ParkingFunction&) const = default;
  bool operator<(const ParkingFunction& o) const {
    return entries < o.entries;
  }
};

bool is_parking_function(int r, const std::vector<int>& entries);

// Region of the Shi arrangement -> O-rooted labeled r-tree: column-minimal
// positive entries of the cubic matrix at any interior point give the father
// of each vertex (all-nonpositive column j => F(v_j) = O).
RTree psi(const Region& region);

// Inverse map. Reconstructs the region's sign tensor by deleting the smallest
// childless vertex, recursing, and filling the deleted row/column back in
// from (p_j, q_j) data via the sign lemma; the windows are then read off the
// per-threshold signs. Throws EmptyFiber if the tree is not in the image.
Region psi_inverse(const RTree& tree);

// Pak-Stanley labeling: entry j = number of strictly positive entries in row
// j of the region's (window-derived) Shi sign tensor.
ParkingFunction pak_stanley(const Region& region);

// pak_stanley(psi_inverse(tree)); no closed form is implemented.
ParkingFunction tree_to_parking(const RTree& tree);

// All r-parking functions of length n, lexicographically ordered.
std::vector<ParkingFunction> enumerate_parking_functions(int n, int r);

}  // namespace arrangebij
