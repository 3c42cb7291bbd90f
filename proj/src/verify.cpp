#include "arrangebij/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "arrangebij/arrangement.hpp"
#include "arrangebij/catalan_maps.hpp"
#include "arrangebij/cubic.hpp"
#include "arrangebij/rtree.hpp"
#include "arrangebij/shi_maps.hpp"

namespace arrangebij {

namespace {

std::string grid_name(const char* what, int n, int r) {
  std::ostringstream s;
  s << what << " n=" << n << " r=" << r;
  return s.str();
}

CheckResult count_check(int criterion, const std::string& name, long got,
                        long expected) {
  std::ostringstream detail;
  detail << "got " << got << ", expected " << expected;
  return {criterion, name, got == expected, detail.str()};
}

struct GridPoint {
  int n, r;
  long expected;
};

}  // namespace

std::vector<CheckResult> verify_counts(int max_n, int max_r, int jobs) {
  std::vector<CheckResult> out;

  const std::vector<GridPoint> shi = {{2, 1, 3},  {3, 1, 16}, {4, 1, 125},
                                      {5, 1, 1296}, {2, 2, 5}, {3, 2, 49},
                                      {4, 2, 729}};
  for (const GridPoint& g : shi) {
    if (g.n > max_n || g.r > max_r) continue;
    ArrangementSpec spec{Kind::Shi, g.n, g.r};
    const long got = static_cast<long>(enumerate_regions(spec, jobs).size());
    CheckResult c = count_check(1, grid_name("shi regions", g.n, g.r), got,
                                g.expected);
    c.pass = c.pass && region_count_formula(spec) == g.expected;
    out.push_back(std::move(c));
  }

  const std::vector<GridPoint> cat = {
      {3, 1, 30}, {4, 1, 336}, {3, 2, 72}, {4, 2, 1320}};
  for (const GridPoint& g : cat) {
    if (g.n > max_n || g.r > max_r) continue;
    ArrangementSpec spec{Kind::Catalan, g.n, g.r};
    const long got = static_cast<long>(enumerate_regions(spec, jobs).size());
    CheckResult c = count_check(2, grid_name("catalan regions", g.n, g.r),
                                got, g.expected);
    c.pass = c.pass && region_count_formula(spec) == g.expected;
    out.push_back(std::move(c));
  }

  const std::vector<GridPoint> trees = {
      {2, 1, 3}, {3, 1, 16}, {4, 1, 125}, {2, 2, 5}, {3, 2, 49}};
  for (const GridPoint& g : trees) {
    if (g.n > max_n || g.r > max_r) continue;
    const long got = static_cast<long>(enumerate_rtrees(g.n, g.r).size());
    out.push_back(count_check(3, grid_name("labeled r-trees", g.n, g.r), got,
                              g.expected));
  }

  {
    bool pass = true;
    std::ostringstream detail;
    for (int n = 1; n <= std::min(6, max_n); ++n)
      for (int r = 1; r <= std::min(3, max_r); ++r) {
        const Int expected = fuss_catalan(n, r);
        const long got =
            static_cast<long>(enumerate_dyck_paths(n, r).size());
        if (expected != got) {
          pass = false;
          detail << " mismatch at n=" << n << " r=" << r;
        }
      }
    const std::vector<GridPoint> spots = {
        {3, 1, 5}, {4, 1, 14}, {6, 1, 132}, {3, 2, 12}, {4, 2, 55}};
    for (const GridPoint& g : spots)
      if (fuss_catalan(g.n, g.r) != g.expected) {
        pass = false;
        detail << " bad spot value at n=" << g.n << " r=" << g.r;
      }
    out.push_back({10, "fuss-catalan vs exhaustive path enumeration", pass,
                   pass ? "all n<=6, r<=3 grids agree" : detail.str()});
  }

  return out;
}

std::vector<CheckResult> verify_bijections(int max_n, int max_r, int jobs) {
  std::vector<CheckResult> out;

  const std::vector<std::pair<int, int>> psi_grid = {
      {2, 1}, {3, 1}, {4, 1}, {2, 2}, {3, 2}, {4, 2}};
  for (const auto& [n, r] : psi_grid) {
    if (n > max_n || r > max_r) continue;
    ArrangementSpec spec{Kind::Shi, n, r};
    const auto regions = enumerate_regions(spec, jobs);
    std::vector<RTree> images;
    images.reserve(regions.size());
    for (const Region& region : regions) images.push_back(psi(region));
    std::vector<RTree> sorted = images;
    std::sort(sorted.begin(), sorted.end());
    const bool distinct =
        std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    const bool image_matches = sorted == enumerate_rtrees(n, r);
    std::ostringstream detail;
    detail << regions.size() << " regions, "
           << (distinct ? "injective" : "NOT injective") << ", image "
           << (image_matches ? "equals" : "DIFFERS from")
           << " the enumerated trees";
    out.push_back({4, grid_name("psi bijective", n, r),
                   distinct && image_matches, detail.str()});
  }

  for (int n = 1; n <= std::min(4, max_n); ++n)
    for (int r = 1; r <= std::min(2, max_r); ++r) {
      ArrangementSpec spec{Kind::Shi, n, r};
      bool pass = true;
      std::ostringstream detail;
      try {
        for (const Region& region : enumerate_regions(spec, jobs))
          if (!(psi_inverse(psi(region)) == region)) {
            pass = false;
            detail << "region round trip failed; ";
            break;
          }
        for (const RTree& tree : enumerate_rtrees(n, r))
          if (!(psi(psi_inverse(tree)) == tree)) {
            pass = false;
            detail << "tree round trip failed; ";
            break;
          }
      } catch (const EmptyFiber& e) {
        pass = false;
        detail << "EmptyFiber raised: " << e.what();
      }
      if (pass) detail << "both directions are the identity";
      out.push_back(
          {5, grid_name("psi round trips", n, r), pass, detail.str()});
    }

  for (int n = 1; n <= std::min(4, max_n); ++n)
    for (int r = 1; r <= std::min(2, max_r); ++r) {
      ArrangementSpec spec{Kind::Shi, n, r};
      std::vector<std::vector<int>> labels;
      bool all_valid = true;
      for (const Region& region : enumerate_regions(spec, jobs)) {
        ParkingFunction p = pak_stanley(region);
        all_valid = all_valid && is_parking_function(r, p.entries);
        labels.push_back(std::move(p.entries));
      }
      std::sort(labels.begin(), labels.end());
      const bool distinct =
          std::adjacent_find(labels.begin(), labels.end()) == labels.end();
      std::vector<std::vector<int>> expected;
      for (ParkingFunction& p : enumerate_parking_functions(n, r))
        expected.push_back(std::move(p.entries));
      const bool exhausts = labels == expected;
      std::ostringstream detail;
      detail << labels.size() << " labels, "
             << (all_valid ? "all parking" : "NON-PARKING SEEN") << ", "
             << (distinct ? "distinct" : "DUPLICATES") << ", "
             << (exhausts ? "exhaust" : "DO NOT exhaust")
             << " the parking functions";
      out.push_back({6, grid_name("pak-stanley labels", n, r),
                     all_valid && distinct && exhausts, detail.str()});
    }

  const std::vector<std::pair<int, int>> phi_grid = {
      {2, 1}, {3, 1}, {4, 1}, {2, 2}, {3, 2}};
  for (const auto& [n, r] : phi_grid) {
    if (n > max_n || r > max_r) continue;
    ArrangementSpec spec{Kind::Catalan, n, r};
    const auto regions = enumerate_regions(spec, jobs);
    std::map<std::vector<int>, std::set<std::vector<int>>> classes;
    for (const Region& region : regions) {
      auto [pi, path] = phi(region);
      classes[pi].insert(path.heights);
    }
    Int fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
    const Int fuss = fuss_catalan(n, r);
    bool pass = Int(static_cast<long>(classes.size())) == fact;
    size_t total = 0;
    for (const auto& [pi, paths] : classes) {
      total += paths.size();
      if (Int(static_cast<long>(paths.size())) != fuss) pass = false;
    }
    pass = pass && total == regions.size();
    std::ostringstream detail;
    detail << regions.size() << " regions -> " << classes.size()
           << " permutation classes, each with "
           << (pass ? fuss.get_str() : std::string("UNEVEN")) << " paths";
    out.push_back({7, grid_name("phi bijective", n, r), pass, detail.str()});
  }

  return out;
}

std::vector<CheckResult> verify_identities(std::uint64_t seed, int jobs) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(seed);

  {
    std::uniform_int_distribution<int> numer(-60, 60);
    std::uniform_int_distribution<int> denom(1, 24);
    std::uniform_int_distribution<int> dims(3, 5);
    std::uniform_int_distribution<int> depth(1, 3);
    int failures = 0;
    for (int t = 0; t < 1000; ++t) {
      const int n = dims(rng), r = depth(rng);
      std::vector<Rat> x;
      x.reserve(n);
      for (int i = 0; i < n; ++i) {
        Rat v(numer(rng), denom(rng));
        v.canonicalize();
        x.push_back(std::move(v));
      }
      if (!check_linear_facts(x, r)) ++failures;
      if (!check_linear_facts(catalan_cubic(x, r))) ++failures;
    }
    std::ostringstream detail;
    detail << failures << " failures over 1000 random points (n<=5, r<=3)";
    out.push_back(
        {9, "linear facts F1-F6 on random points", failures == 0,
         detail.str()});
  }

  const ArrangementSpec spec{Kind::Shi, 4, 2};
  const auto regions = enumerate_regions(spec, jobs);

  {
    int failures = 0;
    for (const Region& region : regions)
      if (!check_sign_relations(region)) ++failures;
    std::ostringstream detail;
    detail << failures << " of " << regions.size()
           << " regions violate the sign lemma";
    out.push_back({9, "sign lemma on every region of S_4^2", failures == 0,
                   detail.str()});
  }

  {
    int failures = 0;
    for (const Region& region : regions) {
      const SignTensor expected = sign_tensor(region);
      for (int t = 0; t < 20; ++t) {
        const auto point = interior_sample(region, rng);
        if (!(signs_of(shi_cubic(point, spec.r)) == expected)) ++failures;
      }
    }
    std::ostringstream detail;
    detail << failures << " mismatches over " << regions.size()
           << " regions x 20 jitters";
    out.push_back({9, "sign tensors are representative-independent",
                   failures == 0, detail.str()});
  }

  return out;
}

std::vector<CheckResult> verify_golden() {
  std::vector<CheckResult> out;

  const std::vector<Rat> blue = {Rat(1, 5), Rat(-1, 5), Rat(0)};

  {
    const CubicMatrix m = shi_cubic(blue, 1);
    const std::vector<std::vector<Rat>> expected = {
        {Rat(0), Rat(-3, 5), Rat(-4, 5)},
        {Rat(-2, 5), Rat(0), Rat(-6, 5)},
        {Rat(-1, 5), Rat(1, 5), Rat(0)}};
    bool pass = true;
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j)
        if (m.at(i, j, 1) != expected[i - 1][j - 1]) pass = false;
    out.push_back({8, "cubic matrix at (1/5,-1/5,0) matches printed values",
                   pass, pass ? "9 entries equal" : "entry mismatch"});
  }

  {
    const Region region =
        region_of_point(ArrangementSpec{Kind::Shi, 3, 1}, blue);
    const RTree tree = psi(region);
    const std::vector<std::vector<Vertex>> fathers = {
        {root_vertex(1)}, {labeled_vertex(3)}, {root_vertex(1)}};
    const bool pass = tree.fathers == fathers;
    out.push_back({8, "psi of the blue region gives fathers (o1, v3, o1)",
                   pass, pass ? "fathers match" : "fathers differ"});
  }

  {
    const RTree green = validate(
        3, 1, {{root_vertex(1)}, {labeled_vertex(1)}, {labeled_vertex(1)}});
    const Region omega = psi_inverse(green);
    const SignTensor s = sign_tensor(omega);
    const bool signs_ok = s.at(1, 2, 1) == 1 && s.at(1, 3, 1) == 1 &&
                          s.at(2, 1, 1) == -1 && s.at(2, 3, 1) == -1 &&
                          s.at(3, 1, 1) == -1 && s.at(3, 2, 1) == -1;
    // windows (1,+inf), (1,+inf), (0,1) encode as codes 2, 2, 1
    const bool windows_ok = omega.windows == std::vector<int>{2, 2, 1};
    out.push_back({8, "psi_inverse of the green tree yields the region Omega",
                   signs_ok && windows_ok,
                   signs_ok && windows_ok ? "sign matrix and windows match"
                                          : "reconstruction differs"});
  }

  {
    const std::vector<Rat> x = {Rat(1, 2),  Rat(-3, 5), Rat(21, 10),
                                Rat(11, 5), Rat(-6, 5), Rat(7, 5)};
    const Region delta =
        region_of_point(ArrangementSpec{Kind::Catalan, 6, 1}, x);
    const auto [pi, path] = phi(delta);
    const bool pass = pi == std::vector<int>{4, 3, 6, 1, 2, 5} &&
                      path.heights == std::vector<int>{0, 0, 0, 2, 4, 4};
    out.push_back({8, "phi of the six-coordinate example region", pass,
                   pass ? "permutation 436125 and heights (0,0,0,2,4,4)"
                        : "pair differs"});
  }

  return out;
}

std::vector<CheckResult> verify_all(int max_n, int max_r, std::uint64_t seed,
                                    int jobs) {
  std::vector<CheckResult> out = verify_counts(max_n, max_r, jobs);
  auto more = verify_bijections(max_n, max_r, jobs);
  out.insert(out.end(), std::make_move_iterator(more.begin()),
             std::make_move_iterator(more.end()));
  more = verify_golden();
  out.insert(out.end(), std::make_move_iterator(more.begin()),
             std::make_move_iterator(more.end()));
  more = verify_identities(seed, jobs);
  out.insert(out.end(), std::make_move_iterator(more.begin()),
             std::make_move_iterator(more.end()));
  std::stable_sort(
      out.begin(), out.end(),
      [](const CheckResult& a, const CheckResult& b) {
        return a.criterion < b.criterion;
      });
  return out;
}

}  // namespace arrangebij
