#include "arrangebij/catalan_maps.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "arrangebij/cubic.hpp"

namespace arrangebij {

DyckPath heights_to_path(int n, int r, const std::vector<int>& heights) {
  if (n < 1 || r < 1) throw DomainError("paths require n >= 1 and r >= 1");
  if (static_cast<int>(heights.size()) != n)
    throw WrongDegree("expected " + std::to_string(n) + " heights, got " +
                      std::to_string(heights.size()));
  for (int i = 1; i <= n; ++i) {
    const int h = heights[i - 1];
    if (h < 0 || h > r * (i - 1))
      throw HeightBound("h_" + std::to_string(i) + " = " + std::to_string(h) +
                        " outside [0, " + std::to_string(r * (i - 1)) + "]");
    if (i > 1 && h < heights[i - 2])
      throw NotMonotone("h_" + std::to_string(i) + " < h_" +
                        std::to_string(i - 1));
  }
  return DyckPath{n, r, heights};
}

std::string path_steps(const DyckPath& p) {
  std::vector<char> steps;
  int y = 0;
  for (int i = 1; i <= p.n; ++i) {
    for (; y < p.heights[i - 1]; ++y) steps.push_back('N');
    steps.push_back('E');
  }
  for (; y < p.r * p.n; ++y) steps.push_back('N');
  std::string out;
  for (size_t t = 0; t < steps.size(); ++t) {
    if (t) out += ' ';
    out += steps[t];
  }
  return out;
}

DyckPath path_from_steps(int n, int r, const std::string& steps) {
  std::istringstream in(steps);
  std::string token;
  std::vector<int> heights;
  int y = 0;
  while (in >> token) {
    if (token == "E")
      heights.push_back(y);
    else if (token == "N")
      ++y;
    else
      throw DomainError("bad step token '" + token + "'");
  }
  if (static_cast<int>(heights.size()) != n)
    throw WrongDegree("step word has " + std::to_string(heights.size()) +
                      " east steps; expected " + std::to_string(n));
  if (y != r * n)
    throw WrongDegree("step word ends at height " + std::to_string(y) +
                      "; expected " + std::to_string(r * n));
  return heights_to_path(n, r, heights);
}

std::vector<int> sort_permutation(const Region& region) {
  const int n = region.spec.n;
  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 1);
  std::sort(pi.begin(), pi.end(), [&region](int a, int b) {
    return region.rep[a - 1] > region.rep[b - 1];
  });
  for (int k = 1; k < n; ++k)
    if (region.rep[pi[k - 1] - 1] == region.rep[pi[k] - 1])
      throw DomainError("representative has tied coordinates");
  return pi;
}

std::pair<std::vector<int>, DyckPath> phi(const Region& region) {
  if (region.spec.kind != Kind::Catalan)
    throw DomainError("phi requires a Catalan region");
  const int n = region.spec.n, r = region.spec.r;
  std::vector<int> pi = sort_permutation(region);
  std::vector<Rat> y;
  y.reserve(n);
  for (int k = 0; k < n; ++k) y.push_back(region.rep[pi[k] - 1]);
  const SignTensor s = signs_of(catalan_cubic(y, r));
  std::vector<int> heights;
  heights.reserve(n);
  for (int j = 1; j <= n; ++j) heights.push_back(col_positive_count(s, j));
  return {std::move(pi), heights_to_path(n, r, heights)};
}

Int fuss_catalan(int n, int r) {
  if (n < 1 || r < 1)
    throw DomainError("fuss_catalan requires n >= 1 and r >= 1");
  Int binom;
  mpz_bin_uiui(binom.get_mpz_t(),
               static_cast<unsigned long>(r * n + n),
               static_cast<unsigned long>(n));
  Int quotient, remainder;
  mpz_fdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), binom.get_mpz_t(),
              Int(r * n + 1).get_mpz_t());
  if (remainder != 0)
    throw DomainError("fuss_catalan division was not exact");
  return quotient;
}

namespace {

void grow_paths(int n, int r, int i, std::vector<int>& h,
                std::vector<DyckPath>& out) {
  if (i > n) {
    out.push_back(DyckPath{n, r, h});
    return;
  }
  const int lo = i == 1 ? 0 : h[i - 2];
  for (int v = lo; v <= r * (i - 1); ++v) {
    h.push_back(v);
    grow_paths(n, r, i + 1, h, out);
    h.pop_back();
  }
}

}  // namespace

std::vector<DyckPath> enumerate_dyck_paths(int n, int r) {
  if (n < 1 || r < 1) throw DomainError("paths require n >= 1 and r >= 1");
  std::vector<DyckPath> out;
  std::vector<int> h;
  grow_paths(n, r, 1, h, out);
  return out;
}

std::string render_path_ascii(const DyckPath& p) {
  const int n = p.n, top = p.r * p.n;
  // Lattice walk: marks for visited points and traversed edges.
  std::vector<std::vector<char>> point(top + 1, std::vector<char>(n + 1, 0));
  std::vector<std::vector<char>> hedge(top + 1, std::vector<char>(n, 0));
  std::vector<std::vector<char>> vedge(top, std::vector<char>(n + 1, 0));
  int x = 0, y = 0;
  point[0][0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (; y < p.heights[i - 1]; ++y) {
      vedge[y][x] = 1;
      point[y + 1][x] = 1;
    }
    hedge[y][x] = 1;
    ++x;
    point[y][x] = 1;
  }
  for (; y < top; ++y) {
    vedge[y][x] = 1;
    point[y + 1][x] = 1;
  }

  std::ostringstream out;
  for (int row = top; row >= 0; --row) {
    std::string line;
    for (int col = 0; col <= n; ++col) {
      if (point[row][col])
        line += '+';
      else if (row == p.r * col)
        line += '*';
      else
        line += '.';
      if (col < n) line += hedge[row][col] ? '-' : ' ';
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
    if (row > 0) {
      std::string edge;
      for (int col = 0; col <= n; ++col) {
        edge += vedge[row - 1][col] ? '|' : ' ';
        if (col < n) edge += ' ';
      }
      while (!edge.empty() && edge.back() == ' ') edge.pop_back();
      out << edge << "\n";
    }
  }
  return out.str();
}

}  // namespace arrangebij
