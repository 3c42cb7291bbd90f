#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "arrangebij/arrangement.hpp"
#include "arrangebij/catalan_maps.hpp"
#include "arrangebij/json_io.hpp"
#include "arrangebij/rtree.hpp"
#include "arrangebij/shi_maps.hpp"
#include "arrangebij/verify.hpp"

namespace {

using arrangebij::Json;

// Input records: inline JSON (starts with '{'), a file of JSON Lines, or
// stdin when no --input is given.
std::vector<Json> read_records(const std::string& input) {
  std::vector<Json> records;
  long line_no = 0;
  auto take_line = [&records, &line_no](const std::string& line) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) return;
    try {
      records.push_back(Json::parse(line));
    } catch (const nlohmann::json::exception& e) {
      throw arrangebij::DomainError("malformed input at record " +
                                    std::to_string(line_no) + ": " + e.what());
    }
  };
  const auto first = input.find_first_not_of(" \t");
  if (first != std::string::npos && input[first] == '{') {
    records.push_back(Json::parse(input));
  } else if (input.empty()) {
    std::string line;
    while (std::getline(std::cin, line)) take_line(line);
  } else {
    std::ifstream file(input);
    if (!file)
      throw arrangebij::DomainError("cannot open input file: " + input);
    std::string line;
    while (std::getline(file, line)) take_line(line);
  }
  return records;
}

struct Options {
  std::string target;
  std::string format;
  std::string render_format;  // separate: render's default depends on target
  std::string input;
  int n = 0;
  int r = 0;
  int jobs = 1;
};

int run_enumerate(const Options& opt) {
  using namespace arrangebij;
  if (opt.format != "json") {
    std::cerr << "usage error: enumerate only emits --format json\n";
    return 2;
  }
  if (opt.target == "shi" || opt.target == "catalan") {
    ArrangementSpec spec{opt.target == "shi" ? Kind::Shi : Kind::Catalan,
                         opt.n, opt.r};
    for (const Region& region : enumerate_regions(spec, opt.jobs))
      std::cout << region_to_json(region).dump() << "\n";
  } else if (opt.target == "trees") {
    for (const RTree& tree : enumerate_rtrees(opt.n, opt.r))
      std::cout << tree_to_json(tree).dump() << "\n";
  } else {
    for (const DyckPath& path : enumerate_dyck_paths(opt.n, opt.r))
      std::cout << path_to_json(path).dump() << "\n";
  }
  return 0;
}

int run_map(const Options& opt) {
  using namespace arrangebij;
  if (opt.format != "json") {
    std::cerr << "usage error: map only emits --format json\n";
    return 2;
  }
  for (const Json& record : read_records(opt.input)) {
    const Region region = region_from_json(record);
    if (opt.target == "shi-to-tree") {
      std::cout << tree_to_json(psi(region)).dump() << "\n";
    } else if (opt.target == "shi-to-parking") {
      std::cout << parking_to_json(pak_stanley(region)).dump() << "\n";
    } else {
      auto [pi, path] = phi(region);
      Json out;
      out["perm"] = pi;
      out["path"] = path_to_json(path);
      std::cout << out.dump() << "\n";
    }
  }
  return 0;
}

int run_invert(const Options& opt) {
  using namespace arrangebij;
  if (opt.format != "json") {
    std::cerr << "usage error: invert only emits --format json\n";
    return 2;
  }
  for (const Json& record : read_records(opt.input))
    std::cout << region_to_json(psi_inverse(tree_from_json(record))).dump()
              << "\n";
  return 0;
}

int run_render(const Options& opt) {
  using namespace arrangebij;
  if (opt.target == "tree-dot") {
    if (opt.render_format != "dot") {
      std::cerr << "usage error: render tree-dot emits --format dot\n";
      return 2;
    }
    for (const Json& record : read_records(opt.input))
      std::cout << to_dot(tree_from_json(record));
  } else {
    if (opt.render_format != "ascii") {
      std::cerr << "usage error: render path-ascii emits --format ascii\n";
      return 2;
    }
    for (const Json& record : read_records(opt.input))
      std::cout << render_path_ascii(path_from_json(record));
  }
  return 0;
}

int run_verify(const Options& opt) {
  using namespace arrangebij;
  std::uint64_t seed = 12345;
  if (const char* env = std::getenv("ARRANGE_BIJ_SEED"))
    seed = std::strtoull(env, nullptr, 10);
  std::vector<CheckResult> results;
  if (opt.target == "counts")
    results = verify_counts(opt.n, opt.r, opt.jobs);
  else if (opt.target == "bijections")
    results = verify_bijections(opt.n, opt.r, opt.jobs);
  else if (opt.target == "identities")
    results = verify_identities(seed, opt.jobs);
  else
    results = verify_all(opt.n, opt.r, seed, opt.jobs);
  bool all_pass = true;
  for (const CheckResult& c : results) {
    all_pass = all_pass && c.pass;
    std::cout << (c.pass ? "PASS" : "FAIL") << "  C" << c.criterion << "  "
              << c.name << ": " << c.detail << "\n";
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact region enumeration and bijections for Shi and Catalan "
               "arrangements"};
  app.require_subcommand(1);

  Options opt;

  auto* enumerate =
      app.add_subcommand("enumerate", "list regions, trees, or paths");
  enumerate->add_option("target", opt.target, "shi|catalan|trees|paths")
      ->required()
      ->check(CLI::IsMember({"shi", "catalan", "trees", "paths"}));
  enumerate->add_option("-n", opt.n, "number of coordinates / vertices")
      ->required();
  enumerate->add_option("-r", opt.r, "deformation depth")->required();
  enumerate->add_option("--format", opt.format)->default_val("json");
  enumerate->add_option("--jobs", opt.jobs, "shard the search")
      ->default_val(1);

  auto* map = app.add_subcommand("map", "apply a forward bijection");
  map->add_option("target", opt.target,
                  "shi-to-tree|shi-to-parking|catalan-to-pair")
      ->required()
      ->check(CLI::IsMember({"shi-to-tree", "shi-to-parking",
                             "catalan-to-pair"}));
  map->add_option("--input", opt.input, "file of JSON lines or inline JSON");
  map->add_option("--format", opt.format)->default_val("json");

  auto* invert = app.add_subcommand("invert", "apply an inverse bijection");
  invert->add_option("target", opt.target, "tree-to-shi")
      ->required()
      ->check(CLI::IsMember({"tree-to-shi"}));
  invert->add_option("--input", opt.input,
                     "file of JSON lines or inline JSON");
  invert->add_option("--format", opt.format)->default_val("json");

  auto* verify = app.add_subcommand("verify", "run the acceptance checks");
  verify->add_option("target", opt.target,
                     "counts|bijections|identities|all")
      ->required()
      ->check(CLI::IsMember({"counts", "bijections", "identities", "all"}));
  verify->add_option("-n", opt.n, "largest dimension to check")
      ->default_val(4);
  verify->add_option("-r", opt.r, "largest depth to check")->default_val(2);
  verify->add_option("--jobs", opt.jobs, "shard the enumerations")
      ->default_val(1);

  auto* render = app.add_subcommand("render", "draw a tree or path");
  render->add_option("target", opt.target, "tree-dot|path-ascii")
      ->required()
      ->check(CLI::IsMember({"tree-dot", "path-ascii"}));
  render->add_option("--input", opt.input,
                     "file of JSON lines or inline JSON");
  render->add_option("--format", opt.render_format, "dot|ascii");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (render->parsed() && opt.render_format.empty())
    opt.render_format = opt.target == "tree-dot" ? "dot" : "ascii";

  try {
    if (enumerate->parsed()) return run_enumerate(opt);
    if (map->parsed()) return run_map(opt);
    if (invert->parsed()) return run_invert(opt);
    if (verify->parsed()) return run_verify(opt);
    return run_render(opt);
  } catch (const arrangebij::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
