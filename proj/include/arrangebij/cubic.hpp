#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arrangebij/arrangement.hpp"
#include "arrangebij/rational.hpp"

namespace arrangebij {

// The n x n x r cubic matrix attached to a point.
// Shi flavor (entries c_ijk):
//   i < j : x_i - x_j - k
//   i = j : 0
//   i > j : x_i - x_j - k + 1
// Catalan flavor (entries d_ijk):
//   i != j: x_i - x_j - k
//   i = j : 0
// k runs over 1..r; indices are 1-based throughout.
class CubicMatrix {
 public:
  CubicMatrix(Kind kind, int n, int r, std::vector<Rat> entries);

  Kind kind() const { return kind_; }
  int n() const { return n_; }
  int r() const { return r_; }

  const Rat& at(int i, int j, int k) const;

 private:
  Kind kind_;
  int n_, r_;
  std::vector<Rat> entries_;  // [(i-1)*n + (j-1)] * r + (k-1)
};

CubicMatrix shi_cubic(const std::vector<Rat>& x, int r);
CubicMatrix catalan_cubic(const std::vector<Rat>& x, int r);

// Signs only: +1 / -1 / 0, same shape as CubicMatrix.
struct SignTensor {
  Kind kind = Kind::Shi;
  int n = 0, r = 0;
  std::vector<int> s;  // same layout as CubicMatrix entries

  int at(int i, int j, int k) const {
    return s[((i - 1) * n + (j - 1)) * r + (k - 1)];
  }
  int& at(int i, int j, int k) {
    return s[((i - 1) * n + (j - 1)) * r + (k - 1)];
  }

  bool operator==(const SignTensor&) const = default;
};

SignTensor signs_of(const CubicMatrix& m);

// Sign tensor of a region computed from its windows alone (no representative
// needed); by construction it is independent of the representative choice.
SignTensor sign_tensor(const Region& region);

// Position of a positive entry in a column slice.
struct MinPos {
  int p = 0;  // row index
  int q = 0;  // layer index
  bool operator==(const MinPos&) const = default;
};

// The unique minimal positive entry of column j (rows != j, all layers), or
// nullopt if every entry is <= 0. Throws TieOnMinimum when two positive
// entries tie for the minimum (the point is on a hyperplane in that case).
std::optional<MinPos> min_positive_in_column(const CubicMatrix& m, int j);

// min_positive_in_column for every j; entry j-1 is (0,0) when the column is
// all nonpositive (father is a root).
std::vector<MinPos> min_positive_columns(const CubicMatrix& m);

// Number of strictly positive entries in row i / column j (over all layers).
int row_positive_count(const SignTensor& t, int i);
int col_positive_count(const SignTensor& t, int j);

// Linear identities among entries: the six addition facts for i > j > k,
// s + t <= r (Shi flavor), or the single addition fact for the Catalan
// flavor. The *_violations form returns a human-readable list (empty = all
// hold); the bool forms are the public checks.
std::vector<std::string> linear_fact_violations(const CubicMatrix& m);
bool check_linear_facts(const CubicMatrix& m);
bool check_linear_facts(const std::vector<Rat>& x, int r);

// Parity of an index triple in the sign lemma: even iff i < j < p,
// p < i < j, or j < p < i.
bool even_parity(int i, int j, int p);

// Sign-lemma consistency: for each j with p_j != 0 and each i not in
// {j, p_j}, the sign of c_ijk must match the lemma's four-case table applied
// to (p_j, q_j).
std::vector<std::string> sign_relation_violations(const SignTensor& t,
                                                  const std::vector<MinPos>& mp);
bool check_sign_relations(const SignTensor& t, const std::vector<MinPos>& mp);
bool check_sign_relations(const Region& region);

// Pretty-print the r layers of the matrix as blocks (debug / CLI rendering).
std::string render_blocks(const CubicMatrix& m);

}  // namespace arrangebij
