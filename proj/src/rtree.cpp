#include "arrangebij/rtree.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <tuple>

namespace arrangebij {

Vertex root_vertex(int k) { return Vertex{true, k}; }
Vertex labeled_vertex(int j) { return Vertex{false, j}; }

std::string to_string(const Vertex& v) {
  return (v.is_root ? "o" : "v") + std::to_string(v.index);
}

Vertex vertex_from_string(const std::string& s) {
  if (s.size() < 2 || (s[0] != 'o' && s[0] != 'v'))
    throw DomainError("bad vertex name: '" + s + "'");
  int idx = 0;
  for (size_t pos = 1; pos < s.size(); ++pos) {
    if (s[pos] < '0' || s[pos] > '9')
      throw DomainError("bad vertex name: '" + s + "'");
    idx = idx * 10 + (s[pos] - '0');
    if (idx > 1000000) throw DomainError("vertex index too large: '" + s + "'");
  }
  if (idx < 1) throw DomainError("bad vertex name: '" + s + "'");
  return Vertex{s[0] == 'o', idx};
}

bool RTree::operator<(const RTree& o) const {
  return std::tie(n, r, fathers) < std::tie(o.n, o.r, o.fathers);
}

namespace {

// Labeled members v_i of F(v_j) with |F(v_j) ∩ F(v_i)| = r - 1; father sets
// must already be sorted.
std::vector<int> father_candidates(
    const std::vector<std::vector<Vertex>>& fathers, int j) {
  std::vector<int> out;
  const auto& fj = fathers[j - 1];
  for (const Vertex& v : fj) {
    if (v.is_root) continue;
    const auto& fi = fathers[v.index - 1];
    std::vector<Vertex> common;
    std::set_intersection(fj.begin(), fj.end(), fi.begin(), fi.end(),
                          std::back_inserter(common));
    if (static_cast<int>(common.size()) ==
        static_cast<int>(fj.size()) - 1)
      out.push_back(v.index);
  }
  return out;
}

bool all_roots(const std::vector<Vertex>& f) {
  return std::all_of(f.begin(), f.end(),
                     [](const Vertex& v) { return v.is_root; });
}

}  // namespace

RTree validate(int n, int r, std::vector<std::vector<Vertex>> fathers) {
  if (n < 1 || r < 1) throw DomainError("tree requires n >= 1 and r >= 1");
  if (static_cast<int>(fathers.size()) != n)
    throw WrongDegree("expected " + std::to_string(n) + " father sets, got " +
                      std::to_string(fathers.size()));
  for (int j = 1; j <= n; ++j) {
    auto& f = fathers[j - 1];
    if (static_cast<int>(f.size()) != r)
      throw WrongDegree("F(v" + std::to_string(j) + ") must have exactly " +
                        std::to_string(r) + " members");
    for (const Vertex& v : f) {
      const int limit = v.is_root ? r : n;
      if (v.index < 1 || v.index > limit)
        throw WrongDegree("F(v" + std::to_string(j) +
                          ") references unknown vertex " + to_string(v));
    }
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      throw WrongDegree("F(v" + std::to_string(j) + ") has duplicate members");
  }

  // Acyclicity of j -> labeled members of F(v_j), self-loops included.
  std::vector<int> color(n + 1, 0);  // 0 white, 1 on stack, 2 done
  std::vector<int> path;
  std::function<void(int)> dfs = [&](int j) {
    color[j] = 1;
    path.push_back(j);
    for (const Vertex& v : fathers[j - 1]) {
      if (v.is_root) continue;
      if (color[v.index] == 1) {
        std::ostringstream msg;
        msg << "father chain cycle: ";
        size_t start = 0;
        while (path[start] != v.index) ++start;
        for (size_t t = start; t < path.size(); ++t)
          msg << "v" << path[t] << " -> ";
        msg << "v" << v.index;
        throw Cyclic(msg.str());
      }
      if (color[v.index] == 0) dfs(v.index);
    }
    path.pop_back();
    color[j] = 2;
  };
  for (int j = 1; j <= n; ++j)
    if (color[j] == 0) dfs(j);

  // Clique-compatibility: every non-O father set chains to a unique member.
  for (int j = 1; j <= n; ++j) {
    if (all_roots(fathers[j - 1])) continue;
    auto candidates = father_candidates(fathers, j);
    if (candidates.empty())
      throw BadClique("F(v" + std::to_string(j) +
                      ") has no member whose father set overlaps in r-1 "
                      "vertices");
    if (candidates.size() > 1)
      throw BadClique("F(v" + std::to_string(j) + ") has " +
                      std::to_string(candidates.size()) +
                      " admissible fathers; expected exactly one");
  }
  return RTree{n, r, std::move(fathers)};
}

FTupleTable f_tuples(const RTree& t) {
  const int n = t.n, r = t.r;
  FTupleTable table;
  table.f.resize(n);
  table.p.assign(n, 0);
  table.q.assign(n, 0);

  for (int j = 1; j <= n; ++j) {
    if (all_roots(t.fathers[j - 1])) continue;
    auto candidates = father_candidates(t.fathers, j);
    if (candidates.size() != 1)
      throw BadClique("F(v" + std::to_string(j) + ") lacks a unique father");
    table.p[j - 1] = candidates.front();
  }

  std::vector<char> done(n + 1, 0);
  std::function<void(int)> compute = [&](int j) {
    if (done[j]) return;
    done[j] = 1;
    const int p = table.p[j - 1];
    if (p == 0) {
      for (int k = 1; k <= r; ++k) table.f[j - 1].push_back(root_vertex(k));
      return;
    }
    compute(p);
    // The dropped element is the one member of F(v_p) not kept in F(v_j).
    std::vector<Vertex> dropped;
    std::set_difference(t.fathers[p - 1].begin(), t.fathers[p - 1].end(),
                        t.fathers[j - 1].begin(), t.fathers[j - 1].end(),
                        std::back_inserter(dropped));
    if (dropped.size() != 1)
      throw BadClique("father sets of v" + std::to_string(j) + " and v" +
                      std::to_string(p) + " do not overlap in r-1 vertices");
    const auto& fp = table.f[p - 1];
    auto it = std::find(fp.begin(), fp.end(), dropped.front());
    if (it == fp.end())
      throw BadClique("dropped element missing from ordered tuple of v" +
                      std::to_string(p));
    const int q = static_cast<int>(it - fp.begin()) + 1;
    table.q[j - 1] = q;
    std::vector<Vertex> fj = fp;
    fj.erase(fj.begin() + (q - 1));
    fj.push_back(labeled_vertex(p));
    table.f[j - 1] = std::move(fj);
  };
  for (int j = 1; j <= n; ++j) compute(j);
  return table;
}

bool is_valid_order(const RTree& t, const std::vector<int>& order) {
  const int n = t.n;
  if (static_cast<int>(order.size()) != n)
    throw WrongDegree("order must list all n labeled vertices");
  std::vector<int> pos(n + 1, 0);
  for (int idx = 0; idx < n; ++idx) {
    const int j = order[idx];
    if (j < 1 || j > n || pos[j] != 0)
      throw WrongDegree("order is not a permutation of the labeled vertices");
    pos[j] = idx + 1;
  }
  // Linear extension of the father relation: fathers come first.
  for (int j = 1; j <= n; ++j)
    for (const Vertex& v : t.fathers[j - 1])
      if (!v.is_root && pos[v.index] >= pos[j]) return false;
  return true;
}

std::vector<int> childless(const RTree& t) {
  std::vector<char> has_child(t.n + 1, 0);
  for (const auto& f : t.fathers)
    for (const Vertex& v : f)
      if (!v.is_root) has_child[v.index] = 1;
  std::vector<int> out;
  for (int j = 1; j <= t.n; ++j)
    if (!has_child[j]) out.push_back(j);
  return out;
}

std::vector<RTree> enumerate_rtrees(int n, int r) {
  if (n < 1 || r < 1) throw DomainError("tree requires n >= 1 and r >= 1");
  // Per-vertex universe: all roots and labeled vertices except the vertex
  // itself, in canonical order.
  std::vector<std::vector<Vertex>> universe(n);
  for (int j = 1; j <= n; ++j) {
    for (int k = 1; k <= r; ++k) universe[j - 1].push_back(root_vertex(k));
    for (int i = 1; i <= n; ++i)
      if (i != j) universe[j - 1].push_back(labeled_vertex(i));
  }
  // All r-subsets of each universe in lexicographic index order.
  std::vector<std::vector<std::vector<Vertex>>> choices(n);
  for (int j = 0; j < n; ++j) {
    const auto& u = universe[j];
    std::vector<int> idx(r);
    for (int k = 0; k < r; ++k) idx[k] = k;
    while (true) {
      std::vector<Vertex> subset;
      for (int k : idx) subset.push_back(u[k]);
      choices[j].push_back(std::move(subset));
      int pos = r - 1;
      while (pos >= 0 &&
             idx[pos] == static_cast<int>(u.size()) - r + pos)
        --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int k = pos + 1; k < r; ++k) idx[k] = idx[k - 1] + 1;
    }
  }
  // Odometer over the choice tuples, last vertex fastest: lexicographic in
  // the father-map encoding.
  std::vector<RTree> out;
  std::vector<size_t> pick(n, 0);
  while (true) {
    std::vector<std::vector<Vertex>> fathers(n);
    for (int j = 0; j < n; ++j) fathers[j] = choices[j][pick[j]];
    try {
      out.push_back(validate(n, r, std::move(fathers)));
    } catch (const DomainError&) {
      // candidate rejected
    }
    int pos = n - 1;
    while (pos >= 0 && pick[pos] + 1 == choices[pos].size()) {
      pick[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++pick[pos];
  }
  return out;
}

std::vector<std::pair<Vertex, Vertex>> tree_edges(const RTree& t) {
  std::set<std::pair<Vertex, Vertex>> edges;
  auto add = [&edges](Vertex a, Vertex b) {
    if (b < a) std::swap(a, b);
    edges.insert({a, b});
  };
  for (int a = 1; a <= t.r; ++a)
    for (int b = a + 1; b <= t.r; ++b) add(root_vertex(a), root_vertex(b));
  for (int j = 1; j <= t.n; ++j) {
    const auto& f = t.fathers[j - 1];
    for (size_t a = 0; a < f.size(); ++a) {
      add(labeled_vertex(j), f[a]);
      for (size_t b = a + 1; b < f.size(); ++b) add(f[a], f[b]);
    }
  }
  return {edges.begin(), edges.end()};
}

std::string to_dot(const RTree& t) {
  std::ostringstream out;
  out << "graph rtree {\n";
  for (int k = 1; k <= t.r; ++k)
    out << "  o" << k << " [shape=doublecircle];\n";
  for (int j = 1; j <= t.n; ++j)
    out << "  v" << j << " [shape=circle];\n";
  for (const auto& [a, b] : tree_edges(t))
    out << "  " << to_string(a) << " -- " << to_string(b) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace arrangebij
