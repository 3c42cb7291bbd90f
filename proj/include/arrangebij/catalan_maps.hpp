#pragma once

#include <string>
#include <vector>

#include "arrangebij/arrangement.hpp"
#include "arrangebij/rational.hpp"

namespace arrangebij {

// An r-Dyck path from (0,0) to (n, rn) with unit E/N steps staying weakly
// below y = r*x, encoded by its height sequence: h_i = height after the i-th
// E step. Valid iff 0 <= h_1 <= ... <= h_n <= r*(i-1) pointwise.
struct DyckPath {
  int n = 0;
  int r = 0;
  std::vector<int> heights;

  bool operator==(const DyckPath&) const = default;
  bool operator<(const DyckPath& o) const { return heights < o.heights; }
};

// Validate a height sequence (NotMonotone / HeightBound on failure).
DyckPath heights_to_path(int n, int r, const std::vector<int>& heights);

// Space-separated E/N step word, e.g. "E E E N N E N N E E N N".
std::string path_steps(const DyckPath& p);

// Parse a step word back to heights (inverse of path_steps).
DyckPath path_from_steps(int n, int r, const std::string& steps);

// The permutation sorting a Catalan region: pi[k-1] = index of the k-th
// largest coordinate of any interior point (coordinates are pairwise
// distinct off the x_i = x_j hyperplanes).
std::vector<int> sort_permutation(const Region& region);

// Region of the Catalan arrangement -> (permutation, r-Dyck path):
// permute coordinates decreasingly, then h_j = number of strictly positive
// entries in column j of the Catalan cubic matrix of the permuted point.
std::pair<std::vector<int>, DyckPath> phi(const Region& region);

// Fuss-Catalan number binom(rn + n, n) / (rn + 1), exact.
Int fuss_catalan(int n, int r);

// All r-Dyck paths with n E-steps, lexicographic in height sequence.
std::vector<DyckPath> enumerate_dyck_paths(int n, int r);

// ASCII rendering of the lattice path under the boundary y = r*x.
std::string render_path_ascii(const DyckPath& p);

}  // namespace arrangebij
