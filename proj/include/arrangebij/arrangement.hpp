#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "arrangebij/errors.hpp"
#include "arrangebij/rational.hpp"

namespace arrangebij {

enum class Kind { Shi, Catalan };

// A deformation of the braid arrangement in R^n: for each pair i < j the
// hyperplanes x_i - x_j = t for t in [min_offset, max_offset].
//   Shi:     t in {-r+1, ..., r}   (2r offsets)
//   Catalan: t in {-r, ..., r}    (2r+1 offsets)
struct ArrangementSpec {
  Kind kind = Kind::Shi;
  int n = 0;
  int r = 0;

  int min_offset() const { return kind == Kind::Shi ? 1 - r : -r; }
  int max_offset() const { return r; }
  // Number of open intervals x_i - x_j can land in: offsets + 1.
  int windows_per_pair() const {
    return max_offset() - min_offset() + 2;
  }
  int pairs() const { return n * (n - 1) / 2; }

  bool operator==(const ArrangementSpec&) const = default;
};

// One hyperplane x_i - x_j = offset, i < j, offset in the spec's offset set.
struct Hyperplane {
  int i = 0, j = 0, offset = 0;
  bool operator==(const Hyperplane&) const = default;
};

// All hyperplanes of the arrangement, sorted by (i, j, offset).
std::vector<Hyperplane> hyperplanes(const ArrangementSpec& spec);

// Index of pair (i, j), 1 <= i < j <= n, in lexicographic order:
// (1,2), (1,3), ..., (1,n), (2,3), ...
int pair_index(int n, int i, int j);

// Inverse of pair_index.
std::pair<int, int> pair_from_index(int n, int idx);

// One open interval for the value x_i - x_j. Legal forms per spec:
// (a, a+1) for integer offsets a, a+1 in the arrangement's offset set,
// (-inf, min_offset), or (max_offset, +inf). Encoded as optional endpoints.
struct Window {
  std::optional<int> lo;  // nullopt = -inf
  std::optional<int> hi;  // nullopt = +inf

  bool operator==(const Window&) const = default;
};

// Window <-> small-integer code. Code w in [0, T] where T = #offsets:
//   w = 0              <-> (-inf, min_offset)
//   w = k, 0 < k < T   <-> (min_offset + k - 1, min_offset + k)
//   w = T              <-> (max_offset, +inf)
int window_code(const ArrangementSpec& spec, const Window& w);
Window window_from_code(const ArrangementSpec& spec, int code);
std::string window_to_string(const Window& w);

// An open region: a feasible assignment of one window per pair, stored as
// codes in pair_index order, plus one exact interior representative.
struct Region {
  ArrangementSpec spec;
  std::vector<int> windows;  // size = spec.pairs(), values in [0, T]
  std::vector<Rat> rep;      // size = n, interior point

  Window window(int i, int j) const;  // i < j

  // Representative is derived data; identity is the window vector.
  bool operator==(const Region& o) const {
    return spec == o.spec && windows == o.windows;
  }
};

// Feasibility of a partial assignment (nullopt = unconstrained pair, indexed
// in pair_index order). Exact; no floating point.
bool feasible(const ArrangementSpec& spec,
              const std::vector<std::optional<Window>>& partial);

// Exact interior point of the region described by a full window assignment.
// Throws InfeasibleRegion if the system has no solution.
std::vector<Rat> representative(const ArrangementSpec& spec,
                                const std::vector<int>& codes);

// Build a Region (validating + computing a representative) from window codes.
Region region_from_windows(const ArrangementSpec& spec,
                           const std::vector<int>& codes);
Region region_from_windows(const ArrangementSpec& spec,
                           const std::vector<Window>& windows);

// The region containing a point. Throws OnHyperplane if x_i - x_j equals an
// offset of the arrangement for some pair.
Region region_of_point(const ArrangementSpec& spec,
                       const std::vector<Rat>& point);

// All regions, deterministically ordered: DFS over pairs in pair_index order,
// window codes ascending, infeasible branches pruned. `jobs` > 1 shards the
// search on the first pair's window; output order (and bytes) are identical
// for every jobs value.
std::vector<Region> enumerate_regions(const ArrangementSpec& spec,
                                      int jobs = 1);

// Number of regions by the product formula:
//   Shi:     (r n + 1)^(n-1)
//   Catalan: n! * FussCatalan(n, r)
Int region_count_formula(const ArrangementSpec& spec);

// Delete coordinate j (1-based): the region of the (n-1)-coordinate point in
// the same-kind arrangement with n-1 coordinates.
Region project(const Region& region, int j);

// A fresh interior point of the region, sampled by jittering the stored
// representative (exact rational jitter, rejection until inside). Used by
// property tests; deterministic given the RNG state.
std::vector<Rat> interior_sample(const Region& region, std::mt19937_64& rng);

}  // namespace arrangebij
