#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "arrangebij/catalan_maps.hpp"
#include "arrangebij/cubic.hpp"
#include "test_util.hpp"

using namespace arrangebij;

namespace {

Rat rat(long num, long den = 1) {
  Rat v(num, den);
  v.canonicalize();
  return v;
}

// Six-coordinate worked example: x4 > x3 > x6 > x1 > x2 > x5 with prescribed
// unit-gap crossings.
const std::vector<Rat> kSixPoint{rat(1, 2),  rat(-3, 5), rat(21, 10),
                                 rat(11, 5), rat(-6, 5), rat(7, 5)};

}  // namespace

TEST_CASE("height sequences validate") {
  CHECK(heights_to_path(3, 1, {0, 0, 0}).heights ==
        std::vector<int>{0, 0, 0});
  CHECK(heights_to_path(6, 1, {0, 0, 0, 2, 4, 4}).n == 6);
  CHECK(heights_to_path(1, 2, {0}).heights == std::vector<int>{0});
  CHECK_THROWS_AS((void)heights_to_path(2, 1, {1, 1}), HeightBound);
  CHECK_THROWS_AS((void)heights_to_path(1, 1, {1}), HeightBound);
  CHECK_THROWS_AS((void)heights_to_path(3, 1, {0, -1, 0}), HeightBound);
  CHECK_THROWS_AS((void)heights_to_path(3, 2, {0, 1, 5}), HeightBound);
  CHECK_THROWS_AS((void)heights_to_path(3, 1, {0, 1, 0}), NotMonotone);
  CHECK_THROWS_AS((void)heights_to_path(3, 1, {0, 0}), WrongDegree);
}

TEST_CASE("step words") {
  CHECK(path_steps(heights_to_path(3, 1, {0, 0, 0})) == "E E E N N N");
  CHECK(path_steps(heights_to_path(2, 1, {0, 1})) == "E N E N");
  CHECK(path_steps(heights_to_path(6, 1, {0, 0, 0, 2, 4, 4})) ==
        "E E E N N E N N E E N N");

  for (auto [n, r] : {std::pair{4, 1}, {3, 2}})
    for (const DyckPath& p : enumerate_dyck_paths(n, r))
      CHECK(path_from_steps(n, r, path_steps(p)) == p);

  CHECK_THROWS_AS((void)path_from_steps(2, 1, "E X E"), DomainError);
  CHECK_THROWS_AS((void)path_from_steps(2, 1, "E E E"), WrongDegree);
  CHECK_THROWS_AS((void)path_from_steps(2, 1, "E E N"), WrongDegree);
  CHECK_THROWS_AS((void)path_from_steps(2, 1, "E N N E"), HeightBound);
}

TEST_CASE("sorting permutation") {
  const ArrangementSpec six{Kind::Catalan, 6, 1};
  CHECK(sort_permutation(region_of_point(six, kSixPoint)) ==
        std::vector<int>{4, 3, 6, 1, 2, 5});

  const ArrangementSpec three{Kind::Catalan, 3, 1};
  const Region decreasing =
      region_of_point(three, {rat(5, 2), rat(1, 2), rat(-3, 2)});
  CHECK(sort_permutation(decreasing) == std::vector<int>{1, 2, 3});

  for (const Region& region : enumerate_regions(three)) {
    const auto pi = sort_permutation(region);
    for (int k = 1; k < 3; ++k)
      CHECK(region.rep[pi[k - 1] - 1] > region.rep[pi[k] - 1]);
  }

  Region tied = decreasing;
  tied.rep = {rat(1), rat(1), rat(0)};
  CHECK_THROWS_AS((void)sort_permutation(tied), DomainError);
}

TEST_CASE("phi on landmark regions") {
  const ArrangementSpec six{Kind::Catalan, 6, 1};
  const auto [pi, path] = phi(region_of_point(six, kSixPoint));
  CHECK(pi == std::vector<int>{4, 3, 6, 1, 2, 5});
  CHECK(path.heights == std::vector<int>{0, 0, 0, 2, 4, 4});

  // x1 > x2 > x3, all gaps below 1: identity permutation, staircase path.
  const ArrangementSpec three{Kind::Catalan, 3, 1};
  const auto [id_pi, id_path] =
      phi(region_from_windows(three, std::vector<int>{2, 2, 2}));
  CHECK(id_pi == std::vector<int>{1, 2, 3});
  CHECK(id_path.heights == std::vector<int>{0, 0, 0});

  CHECK_THROWS_AS((void)phi(enumerate_regions({Kind::Shi, 2, 1})[0]),
                  DomainError);
}

TEST_CASE("phi is a bijection onto pairs") {
  const ArrangementSpec three{Kind::Catalan, 3, 1};
  std::map<std::vector<int>, std::set<std::vector<int>>> classes;
  int total = 0;
  for (const Region& region : enumerate_regions(three)) {
    const auto [pi, path] = phi(region);
    CHECK(classes[pi].insert(path.heights).second);  // distinct pairs
    ++total;
  }
  CHECK(total == 30);
  CHECK(classes.size() == 6);  // all of S_3
  const auto paths = enumerate_dyck_paths(3, 1);
  for (const auto& [pi, heights] : classes) {
    CHECK(heights.size() == 5);
    for (const DyckPath& p : paths) CHECK(heights.count(p.heights) == 1);
  }
}

TEST_CASE("permuted points have positives above the diagonal") {
  const ArrangementSpec spec{Kind::Catalan, 3, 2};
  for (const Region& region : enumerate_regions(spec)) {
    const auto pi = sort_permutation(region);
    std::vector<Rat> y;
    for (int k : pi) y.push_back(region.rep[k - 1]);
    const SignTensor s = signs_of(catalan_cubic(y, 2));
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j)
        for (int k = 1; k <= 2; ++k)
          if (s.at(i, j, k) > 0) CHECK(i < j);
  }
}

TEST_CASE("fuss-catalan numbers") {
  CHECK(fuss_catalan(3, 1) == 5);
  CHECK(fuss_catalan(4, 1) == 14);
  CHECK(fuss_catalan(6, 1) == 132);
  CHECK(fuss_catalan(3, 2) == 12);
  CHECK(fuss_catalan(4, 2) == 55);
  for (int r = 1; r <= 5; ++r) {
    CHECK(fuss_catalan(1, r) == 1);
    CHECK(fuss_catalan(2, r) == r + 1);
  }
  for (int n = 1; n <= 5; ++n)
    for (int r = 1; r <= 3; ++r)
      CHECK(fuss_catalan(n, r) == testutil::oracle_count_walks(n, r));
}

TEST_CASE("path enumeration") {
  const auto d21 = enumerate_dyck_paths(2, 1);
  REQUIRE(d21.size() == 2);
  CHECK(d21[0].heights == std::vector<int>{0, 0});
  CHECK(d21[1].heights == std::vector<int>{0, 1});
  CHECK(enumerate_dyck_paths(1, 2) ==
        std::vector<DyckPath>{{1, 2, {0}}});

  const auto d41 = enumerate_dyck_paths(4, 1);
  CHECK(d41.size() == 14);
  CHECK(std::is_sorted(d41.begin(), d41.end()));
  CHECK(std::adjacent_find(d41.begin(), d41.end()) == d41.end());
  CHECK(enumerate_dyck_paths(3, 2).size() == 12);
  for (const DyckPath& p : enumerate_dyck_paths(3, 2))
    CHECK(heights_to_path(3, 2, p.heights) == p);
}

TEST_CASE("ascii rendering") {
  CHECK(render_path_ascii(heights_to_path(2, 1, {0, 1})) ==
        ". . +\n"
        "    |\n"
        ". +-+\n"
        "  |\n"
        "+-+ .\n");
  CHECK(render_path_ascii(heights_to_path(2, 1, {0, 0})) ==
        ". . +\n"
        "    |\n"
        ". * +\n"
        "    |\n"
        "+-+-+\n");
}
