#include <doctest.h>

#include <set>
#include <vector>

#include "arrangebij/arrangement.hpp"
#include "arrangebij/cubic.hpp"
#include "test_util.hpp"

using namespace arrangebij;

namespace {

Rat rat(long num, long den = 1) {
  Rat v(num, den);
  v.canonicalize();
  return v;
}

const std::vector<Rat> kBluePoint{rat(1, 5), rat(-1, 5), rat(0)};

std::vector<Rat> entries_of(const CubicMatrix& m) {
  std::vector<Rat> entries;
  entries.reserve(size_t(m.n()) * m.n() * m.r());
  for (int i = 1; i <= m.n(); ++i)
    for (int j = 1; j <= m.n(); ++j)
      for (int k = 1; k <= m.r(); ++k) entries.push_back(m.at(i, j, k));
  return entries;
}

}  // namespace

TEST_CASE("shi cubic matrix entries") {
  const CubicMatrix m = shi_cubic(kBluePoint, 1);
  CHECK(m.kind() == Kind::Shi);
  CHECK(m.n() == 3);
  CHECK(m.r() == 1);
  // Row by row: upper part x_i-x_j-k, diagonal 0, lower part x_i-x_j-k+1.
  CHECK(m.at(1, 1, 1) == rat(0));
  CHECK(m.at(1, 2, 1) == rat(-3, 5));
  CHECK(m.at(1, 3, 1) == rat(-4, 5));
  CHECK(m.at(2, 1, 1) == rat(-2, 5));
  CHECK(m.at(2, 2, 1) == rat(0));
  CHECK(m.at(2, 3, 1) == rat(-6, 5));
  CHECK(m.at(3, 1, 1) == rat(-1, 5));
  CHECK(m.at(3, 2, 1) == rat(1, 5));
  CHECK(m.at(3, 3, 1) == rat(0));

  const CubicMatrix deep = shi_cubic({rat(3, 2), rat(0)}, 2);
  CHECK(deep.at(1, 2, 1) == rat(1, 2));
  CHECK(deep.at(1, 2, 2) == rat(-1, 2));
  CHECK(deep.at(2, 1, 1) == rat(-3, 2));
  CHECK(deep.at(2, 1, 2) == rat(-5, 2));
}

TEST_CASE("catalan cubic matrix entries") {
  const CubicMatrix m = catalan_cubic({rat(2), rat(0)}, 1);
  CHECK(m.at(1, 2, 1) == rat(1));
  CHECK(m.at(2, 1, 1) == rat(-3));
  CHECK(m.at(1, 1, 1) == rat(0));
}

TEST_CASE("sign tensors from points and from windows agree") {
  const SignTensor blue = signs_of(shi_cubic(kBluePoint, 1));
  int positives = 0;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      if (blue.at(i, j, 1) > 0) ++positives;
      if (i == j) CHECK(blue.at(i, j, 1) == 0);
    }
  CHECK(positives == 1);
  CHECK(blue.at(3, 2, 1) == 1);

  for (const auto& spec : {ArrangementSpec{Kind::Shi, 3, 2},
                           ArrangementSpec{Kind::Catalan, 3, 1}}) {
    for (const Region& region : enumerate_regions(spec)) {
      const CubicMatrix m = spec.kind == Kind::Shi
                                ? shi_cubic(region.rep, spec.r)
                                : catalan_cubic(region.rep, spec.r);
      CHECK(sign_tensor(region) == signs_of(m));
    }
  }
}

TEST_CASE("sign tensor separates shi regions but not catalan ones") {
  for (const auto& spec : {ArrangementSpec{Kind::Shi, 3, 1},
                           ArrangementSpec{Kind::Shi, 3, 2},
                           ArrangementSpec{Kind::Shi, 4, 1}}) {
    const auto regions = enumerate_regions(spec);
    std::set<std::vector<int>> tensors;
    for (const Region& region : regions)
      tensors.insert(sign_tensor(region).s);
    CHECK(tensors.size() == regions.size());
  }
  // Catalan windows (-1,0) and (0,1) produce the same all-negative column,
  // so the four regions of the 2-coordinate arrangement give three tensors.
  const auto regions = enumerate_regions({Kind::Catalan, 2, 1});
  std::set<std::vector<int>> tensors;
  for (const Region& region : regions)
    tensors.insert(sign_tensor(region).s);
  CHECK(regions.size() == 4);
  CHECK(tensors.size() == 3);
}

TEST_CASE("minimal positive column entries") {
  const CubicMatrix blue = shi_cubic(kBluePoint, 1);
  CHECK(min_positive_in_column(blue, 1) == std::nullopt);
  CHECK(min_positive_in_column(blue, 2) == MinPos{3, 1});
  CHECK(min_positive_in_column(blue, 3) == std::nullopt);
  CHECK(min_positive_columns(blue) ==
        std::vector<MinPos>{{0, 0}, {3, 1}, {0, 0}});

  // x = (2, 0, 1): column 2 sees c_121 = 1 and c_321 = 1, a tie.
  const CubicMatrix tied = shi_cubic({rat(2), rat(0), rat(1)}, 1);
  CHECK_THROWS_AS((void)min_positive_in_column(tied, 2), TieOnMinimum);
  CHECK_THROWS_AS((void)min_positive_columns(tied), TieOnMinimum);

  CHECK(min_positive_columns(shi_cubic({rat(0)}, 2)) ==
        std::vector<MinPos>{{0, 0}});
}

TEST_CASE("row and column positive counts") {
  // The region x1 > x2+1, x1 > x3+1, x3 < x2+1 < x3+1... its tensor has
  // positives exactly at (1,2,1) and (1,3,1).
  const Region omega = region_from_windows({Kind::Shi, 3, 1},
                                           std::vector<int>{2, 2, 1});
  const SignTensor t = sign_tensor(omega);
  CHECK(row_positive_count(t, 1) == 2);
  CHECK(row_positive_count(t, 2) == 0);
  CHECK(row_positive_count(t, 3) == 0);
  CHECK(col_positive_count(t, 1) == 0);
  CHECK(col_positive_count(t, 2) == 1);
  CHECK(col_positive_count(t, 3) == 1);

  // Six-coordinate example: decreasing point whose column counts are the
  // height sequence (0,0,0,2,4,4).
  const std::vector<Rat> y{rat(11, 5), rat(21, 10), rat(7, 5),
                           rat(1, 2),  rat(-3, 5),  rat(-6, 5)};
  const SignTensor s = signs_of(catalan_cubic(y, 1));
  int positives = 0;
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j)
      if (s.at(i, j, 1) > 0) {
        ++positives;
        CHECK(i < j);
      }
  CHECK(positives == 10);
  const std::vector<int> heights{0, 0, 0, 2, 4, 4};
  for (int j = 1; j <= 6; ++j)
    CHECK(col_positive_count(s, j) == heights[j - 1]);
}

TEST_CASE("linear addition facts") {
  std::mt19937_64 rng(31);
  for (int n = 3; n <= 5; ++n)
    for (int r = 1; r <= 3; ++r)
      for (int trial = 0; trial < 5; ++trial) {
        const auto x = testutil::random_point(rng, n);
        CHECK(check_linear_facts(shi_cubic(x, r)));
        CHECK(check_linear_facts(catalan_cubic(x, r)));
        CHECK(check_linear_facts(x, r));
      }

  // Corrupting one entry breaks a fact that mentions it.
  const auto x = testutil::random_point(rng, 3);
  const CubicMatrix good = shi_cubic(x, 2);
  auto entries = entries_of(good);
  entries[(0 * 3 + 1) * 2 + 0] += 7;  // c_121
  const CubicMatrix bad(Kind::Shi, 3, 2, entries);
  CHECK_FALSE(check_linear_facts(bad));
  CHECK_FALSE(linear_fact_violations(bad).empty());

  const CubicMatrix cgood = catalan_cubic(x, 2);
  auto centries = entries_of(cgood);
  centries[(0 * 3 + 1) * 2 + 0] += 7;  // d_121
  CHECK_FALSE(check_linear_facts(CubicMatrix(Kind::Catalan, 3, 2, centries)));
}

TEST_CASE("index-triple parity") {
  CHECK(even_parity(2, 3, 1));
  CHECK(even_parity(1, 2, 3));
  CHECK(even_parity(3, 1, 2));
  CHECK_FALSE(even_parity(3, 2, 1));
  CHECK_FALSE(even_parity(2, 1, 3));
  CHECK_FALSE(even_parity(1, 3, 2));
}

TEST_CASE("sign lemma relations") {
  for (const auto& spec : {ArrangementSpec{Kind::Shi, 3, 1},
                           ArrangementSpec{Kind::Shi, 3, 2}})
    for (const Region& region : enumerate_regions(spec))
      CHECK(check_sign_relations(region));

  // Flipping one sign in a consistent tensor violates the lemma.
  const Region omega = region_from_windows({Kind::Shi, 3, 1},
                                           std::vector<int>{2, 2, 1});
  SignTensor t = sign_tensor(omega);
  const auto mp = min_positive_columns(shi_cubic(omega.rep, 1));
  CHECK(check_sign_relations(t, mp));
  t.at(2, 3, 1) = 1;
  CHECK_FALSE(check_sign_relations(t, mp));
  CHECK_FALSE(sign_relation_violations(t, mp).empty());
}

TEST_CASE("block rendering") {
  CHECK(render_blocks(shi_cubic(kBluePoint, 1)) ==
        "k=1\n"
        " 0/1 -3/5 -4/5\n"
        "-2/5  0/1 -6/5\n"
        "-1/5  1/5  0/1\n");
  CHECK(render_blocks(shi_cubic({rat(3, 2), rat(0)}, 2)) ==
        "k=1\n"
        " 0/1  1/2\n"
        "-3/2  0/1\n"
        "k=2\n"
        " 0/1 -1/2\n"
        "-5/2  0/1\n");
}
