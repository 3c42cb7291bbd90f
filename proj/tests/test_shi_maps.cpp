#include <doctest.h>

#include <algorithm>
#include <set>

#include "arrangebij/shi_maps.hpp"
#include "test_util.hpp"

using namespace arrangebij;

namespace {

const Vertex o1 = root_vertex(1);
const Vertex o2 = root_vertex(2);
const Vertex v1 = labeled_vertex(1);
const Vertex v3 = labeled_vertex(3);

const ArrangementSpec kShi31{Kind::Shi, 3, 1};

Region shi31_region(std::vector<int> codes) {
  return region_from_windows(kShi31, codes);
}

}  // namespace

TEST_CASE("parking function membership") {
  CHECK(is_parking_function(1, {0, 1, 2}));
  CHECK(is_parking_function(1, {2, 0, 1}));
  CHECK(is_parking_function(1, {0, 0, 2}));
  CHECK_FALSE(is_parking_function(1, {1, 1, 1}));
  CHECK_FALSE(is_parking_function(1, {0, 2, 2}));
  CHECK(is_parking_function(2, {0, 2, 4}));
  CHECK(is_parking_function(2, {4, 0, 2}));
  CHECK_FALSE(is_parking_function(2, {0, 2, 5}));
  CHECK_FALSE(is_parking_function(2, {0, 3, 3}));
  CHECK_FALSE(is_parking_function(1, {-1, 0, 0}));
  CHECK(is_parking_function(3, {0}));
  CHECK(is_parking_function(1, {}));

  // Against the counting characterization, all of [0,6]^3 at r=2.
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b)
      for (int c = 0; c <= 6; ++c) {
        const std::vector<int> entries{a, b, c};
        CHECK(is_parking_function(2, entries) ==
              testutil::oracle_is_parking(2, entries));
      }
}

TEST_CASE("parking function enumeration") {
  const auto p31 = enumerate_parking_functions(3, 1);
  CHECK(p31.size() == 16);
  CHECK(p31.front().entries == std::vector<int>{0, 0, 0});
  CHECK(p31.back().entries == std::vector<int>{2, 1, 0});
  CHECK(std::is_sorted(p31.begin(), p31.end()));
  for (const ParkingFunction& p : p31) {
    CHECK(p.r == 1);
    CHECK(is_parking_function(1, p.entries));
  }
  CHECK(enumerate_parking_functions(2, 2).size() == 5);
  CHECK(enumerate_parking_functions(3, 2).size() == 49);
  CHECK(enumerate_parking_functions(1, 3).size() == 1);
}

TEST_CASE("psi on landmark regions") {
  // 0 < x1-x2 < 1, 0 < x1-x3 < 1, x2 < x3: v2 hangs off v3.
  const RTree red = psi(shi31_region({1, 1, 0}));
  CHECK(red.fathers ==
        std::vector<std::vector<Vertex>>{{o1}, {v3}, {o1}});

  // All differences in (0,1): every father set is O.
  const RTree all_o = psi(shi31_region({1, 1, 1}));
  CHECK(all_o.fathers ==
        std::vector<std::vector<Vertex>>{{o1}, {o1}, {o1}});

  // x1 more than 1 above both others, x2, x3 within distance 1: v2 and v3
  // both hang off v1.
  const RTree green = psi(shi31_region({2, 2, 1}));
  CHECK(green.fathers ==
        std::vector<std::vector<Vertex>>{{o1}, {v1}, {v1}});

  const auto lone = enumerate_regions({Kind::Shi, 1, 2});
  CHECK(psi(lone[0]).fathers ==
        std::vector<std::vector<Vertex>>{{o1, o2}});

  CHECK_THROWS_AS((void)psi(enumerate_regions({Kind::Catalan, 2, 1})[0]),
                  DomainError);
}

TEST_CASE("psi matches the flat-matrix special case at r=1") {
  for (const Region& region : enumerate_regions({Kind::Shi, 4, 1})) {
    const auto expected = testutil::matrix_psi_r1(region.rep);
    const RTree t = psi(region);
    for (int j = 1; j <= 4; ++j) {
      REQUIRE(t.fathers[j - 1].size() == 1);
      CHECK(t.fathers[j - 1][0] == expected[j - 1]);
    }
  }
}

TEST_CASE("labeled fathers sit above their children") {
  for (const Region& region : enumerate_regions({Kind::Shi, 3, 2})) {
    const RTree t = psi(region);
    for (int j = 1; j <= t.n; ++j)
      for (const Vertex& v : t.fathers[j - 1])
        if (!v.is_root) CHECK(region.rep[v.index - 1] > region.rep[j - 1]);
  }
}

TEST_CASE("psi_inverse on landmark trees") {
  const Region omega =
      psi_inverse(validate(3, 1, {{o1}, {v1}, {v1}}));
  CHECK(omega.windows == std::vector<int>{2, 2, 1});

  const Region delta0 =
      psi_inverse(validate(3, 1, {{o1}, {o1}, {o1}}));
  CHECK(delta0.windows == std::vector<int>{1, 1, 1});

  const Region lone = psi_inverse(validate(1, 2, {{o1, o2}}));
  CHECK(lone.spec == ArrangementSpec{Kind::Shi, 1, 2});
  CHECK(lone.windows.empty());
}

TEST_CASE("psi_inverse agrees with exhaustive search") {
  for (auto [n, r] : {std::pair{3, 1}, {2, 2}, {3, 2}}) {
    for (const RTree& t : enumerate_rtrees(n, r)) {
      const Region direct = psi_inverse(t);
      const auto scanned = testutil::exhaustive_psi_inverse(t);
      REQUIRE(scanned.has_value());
      CHECK(direct.windows == scanned->windows);
      CHECK(psi(direct).fathers == t.fathers);
    }
  }
}

TEST_CASE("round trips") {
  for (auto [n, r] : {std::pair{4, 1}, {3, 2}}) {
    const ArrangementSpec spec{Kind::Shi, n, r};
    for (const Region& region : enumerate_regions(spec))
      CHECK(psi_inverse(psi(region)).windows == region.windows);
  }
}

TEST_CASE("pak-stanley labels") {
  CHECK(pak_stanley(shi31_region({1, 1, 1})).entries ==
        std::vector<int>{0, 0, 0});
  CHECK(pak_stanley(shi31_region({1, 1, 0})).entries ==
        std::vector<int>{0, 0, 1});
  CHECK(pak_stanley(shi31_region({2, 2, 1})).entries ==
        std::vector<int>{2, 0, 0});
  CHECK(pak_stanley(shi31_region({1, 1, 1})).r == 1);
  CHECK_THROWS_AS(
      (void)pak_stanley(enumerate_regions({Kind::Catalan, 2, 1})[0]),
      DomainError);

  // The sixteen labels are distinct and exhaust the parking functions.
  std::set<std::vector<int>> labels;
  for (const Region& region : enumerate_regions(kShi31)) {
    const ParkingFunction p = pak_stanley(region);
    CHECK(is_parking_function(1, p.entries));
    labels.insert(p.entries);
  }
  CHECK(labels.size() == 16);
  for (const ParkingFunction& p : enumerate_parking_functions(3, 1))
    CHECK(labels.count(p.entries) == 1);
}

TEST_CASE("tree to parking composition") {
  CHECK(tree_to_parking(validate(3, 1, {{o1}, {o1}, {o1}})).entries ==
        std::vector<int>{0, 0, 0});
  CHECK(tree_to_parking(validate(3, 1, {{o1}, {v1}, {v1}})).entries ==
        std::vector<int>{2, 0, 0});
  std::set<std::vector<int>> images;
  for (const RTree& t : enumerate_rtrees(3, 1))
    images.insert(tree_to_parking(t).entries);
  CHECK(images.size() == 16);
}
