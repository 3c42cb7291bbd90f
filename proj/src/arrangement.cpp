#include "arrangebij/arrangement.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "arrangebij/catalan_maps.hpp"

namespace arrangebij {

namespace {

void require_valid_spec(const ArrangementSpec& spec) {
  if (spec.n < 1 || spec.r < 1)
    throw DomainError("arrangement requires n >= 1 and r >= 1");
}

// Difference constraint x_to - x_from <= w, scaled by (n+1) so that the
// strict bound "< c" becomes the integer bound "<= (n+1)c - 1".
struct Edge {
  int from, to;
  long long w;
};

void add_window_edges(const ArrangementSpec& spec, int i, int j,
                      const Window& w, std::vector<Edge>& edges) {
  const long long scale = spec.n + 1;
  if (w.hi) edges.push_back({j, i, scale * *w.hi - 1});   // x_i - x_j < hi
  if (w.lo) edges.push_back({i, j, -scale * *w.lo - 1});  // x_j - x_i < -lo
}

// Bellman-Ford with implicit zero source; nodes 1..n. Returns scaled
// potentials, or nullopt when a negative cycle makes the system infeasible.
std::optional<std::vector<long long>> solve_potentials(
    int n, const std::vector<Edge>& edges) {
  std::vector<long long> d(n + 1, 0);
  for (int round = 0; round < n; ++round) {
    bool changed = false;
    for (const Edge& e : edges) {
      if (d[e.from] + e.w < d[e.to]) {
        d[e.to] = d[e.from] + e.w;
        changed = true;
      }
    }
    if (!changed) return d;
  }
  for (const Edge& e : edges)
    if (d[e.from] + e.w < d[e.to]) return std::nullopt;
  return d;
}

std::vector<Rat> potentials_to_point(int n,
                                     const std::vector<long long>& d) {
  std::vector<Rat> x;
  x.reserve(n);
  for (int i = 1; i <= n; ++i) {
    Rat v(static_cast<long>(d[i]), static_cast<long>(n + 1));
    v.canonicalize();
    x.push_back(v);
  }
  return x;
}

}  // namespace

std::vector<Hyperplane> hyperplanes(const ArrangementSpec& spec) {
  require_valid_spec(spec);
  std::vector<Hyperplane> out;
  for (int i = 1; i <= spec.n; ++i)
    for (int j = i + 1; j <= spec.n; ++j)
      for (int t = spec.min_offset(); t <= spec.max_offset(); ++t)
        out.push_back({i, j, t});
  return out;
}

int pair_index(int n, int i, int j) {
  if (!(1 <= i && i < j && j <= n))
    throw std::out_of_range("pair_index: need 1 <= i < j <= n");
  return (i - 1) * n - i * (i - 1) / 2 + (j - i - 1);
}

std::pair<int, int> pair_from_index(int n, int idx) {
  for (int i = 1; i < n; ++i) {
    int row = n - i;
    if (idx < row) return {i, i + 1 + idx};
    idx -= row;
  }
  throw std::out_of_range("pair_from_index: index exceeds n(n-1)/2");
}

int window_code(const ArrangementSpec& spec, const Window& w) {
  const int tmin = spec.min_offset(), tmax = spec.max_offset();
  const int T = tmax - tmin + 1;  // number of offsets
  if (!w.lo && w.hi && *w.hi == tmin) return 0;
  if (w.lo && !w.hi && *w.lo == tmax) return T;
  if (w.lo && w.hi && *w.hi == *w.lo + 1 && *w.lo >= tmin && *w.hi <= tmax)
    return *w.lo - tmin + 1;
  throw InvalidWindow("window " + window_to_string(w) +
                      " is not an open cell between adjacent offsets");
}

Window window_from_code(const ArrangementSpec& spec, int code) {
  const int tmin = spec.min_offset(), tmax = spec.max_offset();
  const int T = tmax - tmin + 1;
  if (code < 0 || code > T)
    throw InvalidWindow("window code " + std::to_string(code) +
                        " outside [0, " + std::to_string(T) + "]");
  Window w;
  if (code > 0) w.lo = tmin + code - 1;
  if (code < T) w.hi = tmin + code;
  return w;
}

std::string window_to_string(const Window& w) {
  std::string lo = w.lo ? std::to_string(*w.lo) : "-inf";
  std::string hi = w.hi ? std::to_string(*w.hi) : "+inf";
  return "(" + lo + "," + hi + ")";
}

Window Region::window(int i, int j) const {
  return window_from_code(spec, windows.at(pair_index(spec.n, i, j)));
}

bool feasible(const ArrangementSpec& spec,
              const std::vector<std::optional<Window>>& partial) {
  require_valid_spec(spec);
  if (static_cast<int>(partial.size()) != spec.pairs())
    throw InvalidWindow("partial window map must have one slot per pair");
  std::vector<Edge> edges;
  for (int idx = 0; idx < spec.pairs(); ++idx) {
    if (!partial[idx]) continue;
    window_code(spec, *partial[idx]);  // validates shape
    auto [i, j] = pair_from_index(spec.n, idx);
    add_window_edges(spec, i, j, *partial[idx], edges);
  }
  return solve_potentials(spec.n, edges).has_value();
}

std::vector<Rat> representative(const ArrangementSpec& spec,
                                const std::vector<int>& codes) {
  require_valid_spec(spec);
  if (static_cast<int>(codes.size()) != spec.pairs())
    throw InvalidWindow("expected one window code per pair");
  std::vector<Edge> edges;
  for (int idx = 0; idx < spec.pairs(); ++idx) {
    Window w = window_from_code(spec, codes[idx]);
    auto [i, j] = pair_from_index(spec.n, idx);
    add_window_edges(spec, i, j, w, edges);
  }
  auto d = solve_potentials(spec.n, edges);
  if (!d) throw InfeasibleRegion("window system has no interior point");
  return potentials_to_point(spec.n, *d);
}

Region region_from_windows(const ArrangementSpec& spec,
                           const std::vector<int>& codes) {
  return Region{spec, codes, representative(spec, codes)};
}

Region region_from_windows(const ArrangementSpec& spec,
                           const std::vector<Window>& windows) {
  if (static_cast<int>(windows.size()) != spec.pairs())
    throw InvalidWindow("expected one window per pair");
  std::vector<int> codes;
  codes.reserve(windows.size());
  for (const Window& w : windows) codes.push_back(window_code(spec, w));
  return region_from_windows(spec, codes);
}

Region region_of_point(const ArrangementSpec& spec,
                       const std::vector<Rat>& point) {
  require_valid_spec(spec);
  if (static_cast<int>(point.size()) != spec.n)
    throw DomainError("point has wrong dimension");
  const int tmin = spec.min_offset(), tmax = spec.max_offset();
  const int T = tmax - tmin + 1;
  std::vector<int> codes(spec.pairs());
  for (int idx = 0; idx < spec.pairs(); ++idx) {
    auto [i, j] = pair_from_index(spec.n, idx);
    Rat delta = point[i - 1] - point[j - 1];
    delta.canonicalize();
    if (delta.get_den() == 1 && delta >= tmin && delta <= tmax)
      throw OnHyperplane(i, j, static_cast<int>(delta.get_num().get_si()));
    int code;
    if (delta < tmin) {
      code = 0;
    } else if (delta > tmax) {
      code = T;
    } else {
      Int fl;
      mpz_fdiv_q(fl.get_mpz_t(), delta.get_num().get_mpz_t(),
                 delta.get_den().get_mpz_t());
      code = static_cast<int>(fl.get_si()) - tmin + 1;
    }
    codes[idx] = code;
  }
  return Region{spec, std::move(codes), point};
}

namespace {

// Depth-first extension over pairs in pair_index order, window codes
// ascending, pruning with the exact feasibility check after each assignment.
void dfs_enumerate(const ArrangementSpec& spec, int depth,
                   std::vector<int>& codes, std::vector<Edge>& edges,
                   std::vector<Region>& out) {
  const int P = spec.pairs();
  const int T = spec.windows_per_pair() - 1;
  if (depth == P) {
    auto d = solve_potentials(spec.n, edges);
    out.push_back(
        Region{spec, codes, potentials_to_point(spec.n, *d)});
    return;
  }
  auto [i, j] = pair_from_index(spec.n, depth);
  for (int c = 0; c <= T; ++c) {
    Window w = window_from_code(spec, c);
    const size_t save = edges.size();
    add_window_edges(spec, i, j, w, edges);
    if (solve_potentials(spec.n, edges)) {
      codes.push_back(c);
      dfs_enumerate(spec, depth + 1, codes, edges, out);
      codes.pop_back();
    }
    edges.resize(save);
  }
}

}  // namespace

std::vector<Region> enumerate_regions(const ArrangementSpec& spec, int jobs) {
  require_valid_spec(spec);
  if (spec.n == 1) return {Region{spec, {}, {Rat(0)}}};

  const int T = spec.windows_per_pair() - 1;
  if (jobs < 1) jobs = 1;
  jobs = std::min(jobs, T + 1);

  // One independent subtree per first-pair window code; workers take codes
  // round-robin and the shards are concatenated in code order, so the result
  // is byte-identical to the sequential run.
  std::vector<std::vector<Region>> shard(T + 1);
  auto run_code = [&spec, &shard](int c) {
    std::vector<int> codes{c};
    std::vector<Edge> edges;
    auto [i, j] = pair_from_index(spec.n, 0);
    add_window_edges(spec, i, j, window_from_code(spec, c), edges);
    if (solve_potentials(spec.n, edges))
      dfs_enumerate(spec, 1, codes, edges, shard[c]);
  };

  if (jobs == 1) {
    for (int c = 0; c <= T; ++c) run_code(c);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&run_code, t, jobs, T] {
        for (int c = t; c <= T; c += jobs) run_code(c);
      });
    for (auto& th : pool) th.join();
  }

  std::vector<Region> out;
  for (auto& part : shard)
    for (auto& region : part) out.push_back(std::move(region));
  return out;
}

Int region_count_formula(const ArrangementSpec& spec) {
  require_valid_spec(spec);
  Int result;
  if (spec.kind == Kind::Shi) {
    mpz_ui_pow_ui(result.get_mpz_t(),
                  static_cast<unsigned long>(spec.r * spec.n + 1),
                  static_cast<unsigned long>(spec.n - 1));
  } else {
    Int fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(spec.n));
    result = fact * fuss_catalan(spec.n, spec.r);
  }
  return result;
}

Region project(const Region& region, int j) {
  const int n = region.spec.n;
  if (n < 2) throw DomainError("cannot project a 1-coordinate region");
  if (j < 1 || j > n) throw DomainError("projection index out of range");
  std::vector<Rat> point;
  point.reserve(n - 1);
  for (int i = 1; i <= n; ++i)
    if (i != j) point.push_back(region.rep[i - 1]);
  ArrangementSpec sub{region.spec.kind, n - 1, region.spec.r};
  return region_of_point(sub, point);
}

std::vector<Rat> interior_sample(const Region& region, std::mt19937_64& rng) {
  const int n = region.spec.n;
  std::uniform_int_distribution<int> off(-3, 3);
  for (int t = 0;; ++t) {
    Int den = Int(n + 1) << (t + 2);
    std::vector<Rat> x;
    x.reserve(n);
    for (int i = 0; i < n; ++i) {
      Rat jitter(Int(off(rng)), den);
      jitter.canonicalize();
      x.push_back(region.rep[i] + jitter);
    }
    try {
      if (region_of_point(region.spec, x).windows == region.windows) return x;
    } catch (const OnHyperplane&) {
      // fell on a wall; shrink and retry
    }
  }
}

}  // namespace arrangebij
