#include "arrangebij/shi_maps.hpp"

#include <algorithm>
#include <functional>

namespace arrangebij {

bool is_parking_function(int r, const std::vector<int>& entries) {
  if (r < 1) throw DomainError("parking functions require r >= 1");
  std::vector<int> sorted = entries;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 0) return false;
    if (sorted[i] > r * static_cast<int>(i)) return false;
  }
  return true;
}

namespace {

// Ordered f-tuples from analytic (p_j, q_j) data: f(v_j) is (o_1..o_r) at a
// root-fathered vertex, else f(v_{p_j}) with its q_j-th element replaced by
// an appended v_{p_j}.
std::vector<std::vector<Vertex>> tuples_from_minpos(
    int n, int r, const std::vector<MinPos>& mp) {
  std::vector<std::vector<Vertex>> f(n);
  std::vector<char> state(n + 1, 0);  // 0 fresh, 1 in progress, 2 done
  std::function<void(int)> compute = [&](int j) {
    if (state[j] == 2) return;
    if (state[j] == 1)
      throw DomainError("father chain of column data has a cycle");
    state[j] = 1;
    const int p = mp[j - 1].p, q = mp[j - 1].q;
    if (p == 0) {
      for (int k = 1; k <= r; ++k) f[j - 1].push_back(root_vertex(k));
    } else {
      compute(p);
      f[j - 1] = f[p - 1];
      f[j - 1].erase(f[j - 1].begin() + (q - 1));
      f[j - 1].push_back(labeled_vertex(p));
    }
    state[j] = 2;
  };
  for (int j = 1; j <= n; ++j) compute(j);
  return f;
}

}  // namespace

RTree psi(const Region& region) {
  if (region.spec.kind != Kind::Shi)
    throw DomainError("psi requires a Shi region");
  const int n = region.spec.n, r = region.spec.r;
  auto mp = min_positive_columns(shi_cubic(region.rep, r));
  auto f = tuples_from_minpos(n, r, mp);
  std::vector<std::vector<Vertex>> fathers(n);
  for (int j = 1; j <= n; ++j) {
    fathers[j - 1] = f[j - 1];
    std::sort(fathers[j - 1].begin(), fathers[j - 1].end());
  }
  return validate(n, r, std::move(fathers));
}

namespace {

// Reconstruct the sign tensor of psi^{-1}(tree) by deleting the smallest
// childless vertex, recursing, and filling the deleted column and row back in
// from the (p_j, q_j) data via the four-case sign lemma.
SignTensor inverse_signs(const RTree& tree) {
  const int n = tree.n, r = tree.r;
  SignTensor S{Kind::Shi, n, r,
               std::vector<int>(static_cast<size_t>(n) * n * r, 0)};
  if (n == 1) return S;

  const int jd = childless(tree).front();
  const auto rho = [jd](int i) { return i > jd ? i - 1 : i; };

  std::vector<std::vector<Vertex>> sub;
  sub.reserve(n - 1);
  for (int j = 1; j <= n; ++j) {
    if (j == jd) continue;
    std::vector<Vertex> f = tree.fathers[j - 1];
    for (Vertex& v : f)
      if (!v.is_root) v.index = rho(v.index);
    sub.push_back(std::move(f));
  }
  const SignTensor Ssub = inverse_signs(validate(n - 1, r, std::move(sub)));

  for (int i = 1; i <= n; ++i) {
    if (i == jd) continue;
    for (int j = 1; j <= n; ++j) {
      if (j == jd || j == i) continue;
      for (int k = 1; k <= r; ++k)
        S.at(i, j, k) = Ssub.at(rho(i), rho(j), k);
    }
  }

  const FTupleTable ft = f_tuples(tree);

  // Column jd: the father pins the positive prefix; the sign lemma fills the
  // other rows from entries already copied from the subtree.
  const int pd = ft.p[jd - 1], qd = ft.q[jd - 1];
  if (pd == 0) {
    for (int i = 1; i <= n; ++i) {
      if (i == jd) continue;
      for (int k = 1; k <= r; ++k) S.at(i, jd, k) = -1;
    }
  } else {
    for (int k = 1; k <= r; ++k) S.at(pd, jd, k) = k <= qd ? 1 : -1;
    for (int i = 1; i <= n; ++i) {
      if (i == jd || i == pd) continue;
      for (int k = 1; k <= r; ++k) {
        S.at(i, jd, k) =
            even_parity(i, jd, pd)
                ? (qd <= k ? S.at(i, pd, k - qd + 1) : -S.at(pd, i, qd - k))
                : (qd >= k ? -S.at(pd, i, qd - k + 1) : S.at(i, pd, k - qd));
      }
    }
  }

  // Row jd: chase father chains; each step either lands in column jd (known)
  // or moves to the father, which terminates at a root-fathered vertex.
  std::function<int(int, int)> resolve = [&](int j, int k) -> int {
    const int p = ft.p[j - 1], q = ft.q[j - 1];
    if (p == 0) return -1;
    if (even_parity(jd, j, p))
      return q <= k ? resolve(p, k - q + 1) : -S.at(p, jd, q - k);
    return q >= k ? -S.at(p, jd, q - k + 1) : resolve(p, k - q);
  };
  for (int j = 1; j <= n; ++j) {
    if (j == jd) continue;
    for (int k = 1; k <= r; ++k) S.at(jd, j, k) = resolve(j, k);
  }
  return S;
}

}  // namespace

Region psi_inverse(const RTree& tree) {
  const SignTensor S = inverse_signs(tree);
  const ArrangementSpec spec{Kind::Shi, tree.n, tree.r};
  const int tmin = spec.min_offset(), tmax = spec.max_offset();
  std::vector<int> codes(spec.pairs(), 0);
  for (int i = 1; i <= tree.n; ++i)
    for (int j = i + 1; j <= tree.n; ++j) {
      // Per-offset signs of x_i - x_j: offsets 1..r live in S(i,j,·),
      // offsets 1-r..0 are the negated S(j,i,·) layers.
      int last_positive = tmin - 1;
      bool seen_negative = false;
      for (int t = tmin; t <= tmax; ++t) {
        const int sigma = t >= 1 ? S.at(i, j, t) : -S.at(j, i, 1 - t);
        if (sigma > 0) {
          if (seen_negative)
            throw EmptyFiber("sign pattern of pair (" + std::to_string(i) +
                             "," + std::to_string(j) +
                             ") is not an interval");
          last_positive = t;
        } else {
          seen_negative = true;
        }
      }
      codes[pair_index(tree.n, i, j)] = last_positive - tmin + 1;
    }
  try {
    return region_from_windows(spec, codes);
  } catch (const InfeasibleRegion& e) {
    throw EmptyFiber(std::string("reconstructed windows are infeasible: ") +
                     e.what());
  }
}

ParkingFunction pak_stanley(const Region& region) {
  if (region.spec.kind != Kind::Shi)
    throw DomainError("the Pak-Stanley labeling requires a Shi region");
  const SignTensor t = sign_tensor(region);
  ParkingFunction out{region.spec.r, {}};
  out.entries.reserve(region.spec.n);
  for (int i = 1; i <= region.spec.n; ++i)
    out.entries.push_back(row_positive_count(t, i));
  return out;
}

ParkingFunction tree_to_parking(const RTree& tree) {
  return pak_stanley(psi_inverse(tree));
}

std::vector<ParkingFunction> enumerate_parking_functions(int n, int r) {
  if (n < 1 || r < 1)
    throw DomainError("parking functions require n >= 1 and r >= 1");
  const int hi = r * (n - 1);
  std::vector<ParkingFunction> out;
  std::vector<int> entries(n, 0);
  while (true) {
    if (is_parking_function(r, entries)) out.push_back({r, entries});
    int pos = n - 1;
    while (pos >= 0 && entries[pos] == hi) entries[pos--] = 0;
    if (pos < 0) break;
    ++entries[pos];
  }
  return out;
}

}  // namespace arrangebij
