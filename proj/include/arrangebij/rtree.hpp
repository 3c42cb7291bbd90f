#pragma once

#include <string>
#include <vector>

#include "arrangebij/errors.hpp"

namespace arrangebij {

// A node of an O-rooted labeled r-tree: one of the r roots o_1..o_r or one of
// the n labeled vertices v_1..v_n. Roots order before labeled vertices.
struct Vertex {
  bool is_root = false;
  int index = 0;  // 1-based within its class

  bool operator==(const Vertex&) const = default;
  bool operator<(const Vertex& o) const {
    if (is_root != o.is_root) return is_root;  // roots first
    return index < o.index;
  }
};

Vertex root_vertex(int k);     // o_k
Vertex labeled_vertex(int j);  // v_j
std::string to_string(const Vertex& v);
Vertex vertex_from_string(const std::string& s);  // "o2" / "v11"

// An O-rooted labeled r-tree on roots {o_1..o_r} and vertices {v_1..v_n},
// stored as the father sets: fathers[j-1] = F(v_j), exactly r distinct
// vertices, kept sorted (roots first, then by index).
struct RTree {
  int n = 0;
  int r = 0;
  std::vector<std::vector<Vertex>> fathers;

  bool operator==(const RTree&) const = default;
  bool operator<(const RTree& o) const;  // lexicographic, for canonical order
};

// Validate a father map and return the tree. Throws:
//   WrongDegree - some F(v_j) has size != r, duplicates, or an out-of-range
//                 vertex reference;
//   Cyclic      - the "j -> labeled members of F(v_j)" digraph has a cycle
//                 (self-reference included); message carries a witness cycle;
//   BadClique   - some F(v_j) != O has no member v_i with
//                 |F(v_j) ∩ F(v_i)| = r - 1.
RTree validate(int n, int r, std::vector<std::vector<Vertex>> fathers);

// Analytic data of the tree: for each j, the f-tuple f(v_j) (an ordered
// r-tuple of vertices), the father vertex p_j (0 when F(v_j) = O, else the
// index i of the unique v_i as in the clique rule), and the removal position
// q_j in [1, r].
struct FTupleTable {
  std::vector<std::vector<Vertex>> f;  // f[j-1] = f(v_j), size r
  std::vector<int> p;                  // p[j-1] in [0, n]
  std::vector<int> q;                  // q[j-1] in [1, r]; 0 when p_j = 0
};

FTupleTable f_tuples(const RTree& t);

// Whether (v_{order[0]}, ..., v_{order[n-1]}) is a linear extension of the
// father relation on labeled vertices: fathers appear before their children.
bool is_valid_order(const RTree& t, const std::vector<int>& order);

// Labeled vertices with no children (nobody's father set contains them).
std::vector<int> childless(const RTree& t);

// All O-rooted labeled r-trees on n vertices, deterministically ordered
// (lexicographic in the sorted father-set encoding).
std::vector<RTree> enumerate_rtrees(int n, int r);

// Undirected edge list of the underlying graph: the clique on O plus, for
// each j, the edges from v_j to F(v_j) and among F(v_j) (already a clique).
// Edges are normalized (smaller vertex first) and sorted, duplicates removed.
std::vector<std::pair<Vertex, Vertex>> tree_edges(const RTree& t);

// Graphviz dot rendering; roots drawn as doublecircles.
std::string to_dot(const RTree& t);

}  // namespace arrangebij
