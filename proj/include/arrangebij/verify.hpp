#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace arrangebij {

// One verification check, tagged with the acceptance criterion it feeds.
struct CheckResult {
  int criterion = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

// Criteria 1-3, 10 (and the Catalan/tree/path counting tables).
std::vector<CheckResult> verify_counts(int max_n, int max_r, int jobs = 1);

// Criteria 4-7: bijectivity of the region->tree map, inverse round trips,
// Pak-Stanley labeling, and the Catalan pair map.
std::vector<CheckResult> verify_bijections(int max_n, int max_r, int jobs = 1);

// Criterion 9: linear facts on random points, sign lemma on every region of
// the 4/2 grid, representative independence under jitter.
std::vector<CheckResult> verify_identities(std::uint64_t seed, int jobs = 1);

// Criterion 8: the two frozen worked examples, exact.
std::vector<CheckResult> verify_golden();

// Everything above.
std::vector<CheckResult> verify_all(int max_n, int max_r, std::uint64_t seed,
                                    int jobs = 1);

}  // namespace arrangebij
