// Acceptance gate: one line per criterion, exit 0 iff everything holds.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <vector>

#include "arrangebij/verify.hpp"

int main() {
  using namespace arrangebij;

  std::uint64_t seed = 12345;
  if (const char* env = std::getenv("ARRANGE_BIJ_SEED"))
    seed = std::strtoull(env, nullptr, 10);

  const auto start = std::chrono::steady_clock::now();
  const std::vector<CheckResult> results = verify_all(6, 3, seed);
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  const char* titles[10] = {
      "shi region counts",    "catalan region counts",
      "labeled r-tree counts", "region-to-tree bijectivity",
      "tree-to-region round trips", "pak-stanley labeling",
      "catalan pair bijectivity",   "worked examples",
      "sign and addition identities", "fuss-catalan path counts",
  };
  // The whole sweep must come in far under the region-count time budget.
  const double budget_seconds = 30.0;

  bool all_pass = true;
  for (int criterion = 1; criterion <= 10; ++criterion) {
    int checks = 0, failures = 0;
    std::vector<const CheckResult*> failed;
    for (const CheckResult& c : results) {
      if (c.criterion != criterion) continue;
      ++checks;
      if (!c.pass) {
        ++failures;
        failed.push_back(&c);
      }
    }
    bool pass = checks > 0 && failures == 0;
    if (criterion == 1 && elapsed >= budget_seconds) pass = false;
    all_pass = all_pass && pass;

    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << criterion
              << ": " << titles[criterion - 1] << " (" << checks
              << " checks";
    if (criterion == 1)
      std::cout << ", " << elapsed << "s of " << budget_seconds
                << "s budget";
    std::cout << ")\n";
    for (const CheckResult* c : failed)
      std::cout << "      " << c->name << ": " << c->detail << "\n";
  }
  return all_pass ? 0 : 1;
}
