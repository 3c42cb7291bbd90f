#include "arrangebij/cubic.hpp"

#include <algorithm>
#include <sstream>

namespace arrangebij {

CubicMatrix::CubicMatrix(Kind kind, int n, int r, std::vector<Rat> entries)
    : kind_(kind), n_(n), r_(r), entries_(std::move(entries)) {
  if (n_ < 1 || r_ < 1) throw DomainError("cubic matrix requires n, r >= 1");
  if (entries_.size() != static_cast<size_t>(n_) * n_ * r_)
    throw DomainError("cubic matrix entry count mismatch");
}

const Rat& CubicMatrix::at(int i, int j, int k) const {
  if (i < 1 || i > n_ || j < 1 || j > n_ || k < 1 || k > r_)
    throw std::out_of_range("cubic matrix index");
  return entries_[(static_cast<size_t>(i - 1) * n_ + (j - 1)) * r_ + (k - 1)];
}

namespace {

CubicMatrix build_cubic(Kind kind, const std::vector<Rat>& x, int r) {
  const int n = static_cast<int>(x.size());
  if (n < 1 || r < 1) throw DomainError("cubic matrix requires n, r >= 1");
  std::vector<Rat> e;
  e.reserve(static_cast<size_t>(n) * n * r);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= r; ++k) {
        Rat v;
        if (i == j) {
          v = 0;
        } else if (kind == Kind::Catalan || i < j) {
          v = x[i - 1] - x[j - 1] - k;
        } else {
          v = x[i - 1] - x[j - 1] - k + 1;
        }
        v.canonicalize();
        e.push_back(std::move(v));
      }
  return CubicMatrix(kind, n, r, std::move(e));
}

int sign_of(const Rat& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Sign of (x_i - x_j - t) inside the window with this code: positive exactly
// when the window lies to the right of the offset t.
int threshold_sign(const ArrangementSpec& spec, int code, int t) {
  return code > t - spec.min_offset() ? 1 : -1;
}

}  // namespace

CubicMatrix shi_cubic(const std::vector<Rat>& x, int r) {
  return build_cubic(Kind::Shi, x, r);
}

CubicMatrix catalan_cubic(const std::vector<Rat>& x, int r) {
  return build_cubic(Kind::Catalan, x, r);
}

SignTensor signs_of(const CubicMatrix& m) {
  SignTensor t{m.kind(), m.n(), m.r(),
               std::vector<int>(static_cast<size_t>(m.n()) * m.n() * m.r())};
  for (int i = 1; i <= m.n(); ++i)
    for (int j = 1; j <= m.n(); ++j)
      for (int k = 1; k <= m.r(); ++k) t.at(i, j, k) = sign_of(m.at(i, j, k));
  return t;
}

SignTensor sign_tensor(const Region& region) {
  const ArrangementSpec& spec = region.spec;
  const int n = spec.n, r = spec.r;
  SignTensor t{spec.kind, n, r,
               std::vector<int>(static_cast<size_t>(n) * n * r, 0)};
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const int code = region.windows[pair_index(n, i, j)];
      for (int k = 1; k <= r; ++k) {
        t.at(i, j, k) = threshold_sign(spec, code, k);
        // c_jik = x_j - x_i - k + 1 (Shi) resp. x_j - x_i - k (Catalan) is
        // the negation of x_i - x_j - (1-k) resp. x_i - x_j - (-k).
        t.at(j, i, k) = spec.kind == Kind::Shi
                            ? -threshold_sign(spec, code, 1 - k)
                            : -threshold_sign(spec, code, -k);
      }
    }
  return t;
}

std::optional<MinPos> min_positive_in_column(const CubicMatrix& m, int j) {
  if (j < 1 || j > m.n()) throw std::out_of_range("column index");
  std::optional<MinPos> best;
  Rat best_value;
  int ties = 0;
  for (int i = 1; i <= m.n(); ++i) {
    if (i == j) continue;
    for (int k = 1; k <= m.r(); ++k) {
      const Rat& v = m.at(i, j, k);
      if (v <= 0) continue;
      if (!best || v < best_value) {
        best = MinPos{i, k};
        best_value = v;
        ties = 1;
      } else if (v == best_value) {
        ++ties;
      }
    }
  }
  if (best && ties > 1)
    throw TieOnMinimum("column " + std::to_string(j) +
                       " has tied minimal positive entries");
  return best;
}

std::vector<MinPos> min_positive_columns(const CubicMatrix& m) {
  std::vector<MinPos> out(m.n());
  for (int j = 1; j <= m.n(); ++j)
    if (auto mp = min_positive_in_column(m, j)) out[j - 1] = *mp;
  return out;
}

int row_positive_count(const SignTensor& t, int i) {
  int count = 0;
  for (int j = 1; j <= t.n; ++j)
    for (int k = 1; k <= t.r; ++k)
      if (t.at(i, j, k) > 0) ++count;
  return count;
}

int col_positive_count(const SignTensor& t, int j) {
  int count = 0;
  for (int i = 1; i <= t.n; ++i)
    for (int k = 1; k <= t.r; ++k)
      if (t.at(i, j, k) > 0) ++count;
  return count;
}

namespace {

void fact_violation(std::vector<std::string>& out, const char* name, int i,
                    int j, int k, int s, int t) {
  std::ostringstream msg;
  msg << name << " fails at i=" << i << " j=" << j << " k=" << k
      << " s=" << s << " t=" << t;
  out.push_back(msg.str());
}

}  // namespace

std::vector<std::string> linear_fact_violations(const CubicMatrix& m) {
  std::vector<std::string> out;
  const int n = m.n(), r = m.r();
  if (m.kind() == Kind::Shi) {
    for (int k = 1; k <= n; ++k)
      for (int j = k + 1; j <= n; ++j)
        for (int i = j + 1; i <= n; ++i)
          for (int s = 1; s < r + 1; ++s)
            for (int t = 1; s + t <= r; ++t) {
              if (m.at(i, j, s) + m.at(j, k, t) != m.at(i, k, s + t - 1))
                fact_violation(out, "F1", i, j, k, s, t);
              if (m.at(i, k, s) + m.at(k, j, t) != m.at(i, j, s + t))
                fact_violation(out, "F2", i, j, k, s, t);
              if (m.at(k, i, s) + m.at(i, j, t) != m.at(k, j, s + t - 1))
                fact_violation(out, "F3", i, j, k, s, t);
              if (m.at(k, j, s) + m.at(j, i, t) != m.at(k, i, s + t))
                fact_violation(out, "F4", i, j, k, s, t);
              if (m.at(j, k, s) + m.at(k, i, t) != m.at(j, i, s + t - 1))
                fact_violation(out, "F5", i, j, k, s, t);
              if (m.at(j, i, s) + m.at(i, k, t) != m.at(j, k, s + t))
                fact_violation(out, "F6", i, j, k, s, t);
            }
  } else {
    // Catalan flavor obeys the single addition rule d_abs + d_bct = d_ac(s+t)
    // for pairwise distinct indices.
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        for (int c = 1; c <= n; ++c) {
          if (a == b || b == c || a == c) continue;
          for (int s = 1; s < r + 1; ++s)
            for (int t = 1; s + t <= r; ++t)
              if (m.at(a, b, s) + m.at(b, c, t) != m.at(a, c, s + t))
                fact_violation(out, "D-add", a, b, c, s, t);
        }
  }
  return out;
}

bool check_linear_facts(const CubicMatrix& m) {
  return linear_fact_violations(m).empty();
}

bool check_linear_facts(const std::vector<Rat>& x, int r) {
  return check_linear_facts(shi_cubic(x, r));
}

bool even_parity(int i, int j, int p) {
  return (i < j && j < p) || (p < i && i < j) || (j < p && p < i);
}

std::vector<std::string> sign_relation_violations(
    const SignTensor& t, const std::vector<MinPos>& mp) {
  std::vector<std::string> out;
  if (static_cast<int>(mp.size()) != t.n)
    throw DomainError("min-positive table size mismatch");
  for (int j = 1; j <= t.n; ++j) {
    const int p = mp[j - 1].p, q = mp[j - 1].q;
    if (p == 0) continue;
    for (int i = 1; i <= t.n; ++i) {
      if (i == j || i == p) continue;
      for (int k = 1; k <= t.r; ++k) {
        int expected;
        if (even_parity(i, j, p)) {
          expected = q <= k ? t.at(i, p, k - q + 1) : -t.at(p, i, q - k);
        } else {
          expected = q >= k ? -t.at(p, i, q - k + 1) : t.at(i, p, k - q);
        }
        if (t.at(i, j, k) != expected) {
          std::ostringstream msg;
          msg << "sign relation fails at i=" << i << " j=" << j << " k=" << k
              << " with (p_j,q_j)=(" << p << "," << q << ")";
          out.push_back(msg.str());
        }
      }
    }
  }
  return out;
}

bool check_sign_relations(const SignTensor& t, const std::vector<MinPos>& mp) {
  return sign_relation_violations(t, mp).empty();
}

bool check_sign_relations(const Region& region) {
  if (region.spec.kind != Kind::Shi)
    throw DomainError("sign relations are defined for Shi regions");
  SignTensor t = sign_tensor(region);
  auto mp = min_positive_columns(shi_cubic(region.rep, region.spec.r));
  return check_sign_relations(t, mp);
}

std::string render_blocks(const CubicMatrix& m) {
  size_t width = 0;
  std::vector<std::string> text;
  text.reserve(static_cast<size_t>(m.n()) * m.n() * m.r());
  for (int k = 1; k <= m.r(); ++k)
    for (int i = 1; i <= m.n(); ++i)
      for (int j = 1; j <= m.n(); ++j) {
        text.push_back(to_fraction(m.at(i, j, k)));
        width = std::max(width, text.back().size());
      }
  std::ostringstream out;
  size_t idx = 0;
  for (int k = 1; k <= m.r(); ++k) {
    out << "k=" << k << "\n";
    for (int i = 1; i <= m.n(); ++i) {
      for (int j = 1; j <= m.n(); ++j) {
        const std::string& cell = text[idx++];
        out << (j > 1 ? " " : "") << std::string(width - cell.size(), ' ')
            << cell;
      }
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace arrangebij
