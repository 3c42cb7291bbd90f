#include "arrangebij/json_io.hpp"

#include <string>

namespace arrangebij {

namespace {

int int_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw DomainError(std::string("missing or non-integer field '") + key +
                      "'");
  return j[key].get<int>();
}

Json endpoint_to_json(const std::optional<int>& v, const char* inf) {
  if (v) return *v;
  return std::string(inf);
}

std::optional<int> endpoint_from_json(const Json& j, const char* inf) {
  if (j.is_string()) {
    if (j.get<std::string>() == inf) return std::nullopt;
    throw DomainError("bad window endpoint '" + j.get<std::string>() + "'");
  }
  if (j.is_number_integer()) return j.get<int>();
  throw DomainError("window endpoint must be an integer or '" +
                    std::string(inf) + "'");
}

}  // namespace

Json region_to_json(const Region& region) {
  Json j;
  j["kind"] = region.spec.kind == Kind::Shi ? "shi" : "catalan";
  j["n"] = region.spec.n;
  j["r"] = region.spec.r;
  Json windows = Json::array();
  for (int idx = 0; idx < region.spec.pairs(); ++idx) {
    auto [i, jj] = pair_from_index(region.spec.n, idx);
    Window w = window_from_code(region.spec, region.windows[idx]);
    Json entry;
    entry["i"] = i;
    entry["j"] = jj;
    entry["lo"] = endpoint_to_json(w.lo, "-inf");
    entry["hi"] = endpoint_to_json(w.hi, "+inf");
    windows.push_back(std::move(entry));
  }
  j["windows"] = std::move(windows);
  Json rep = Json::array();
  for (const Rat& v : region.rep) rep.push_back(to_fraction(v));
  j["rep"] = std::move(rep);
  return j;
}

Region region_from_json(const Json& j) {
  if (!j.is_object()) throw DomainError("region record must be an object");
  if (!j.contains("kind") || !j["kind"].is_string())
    throw DomainError("region record needs a string 'kind'");
  const std::string kind = j["kind"].get<std::string>();
  if (kind != "shi" && kind != "catalan")
    throw DomainError("unknown arrangement kind '" + kind + "'");
  ArrangementSpec spec{kind == "shi" ? Kind::Shi : Kind::Catalan,
                       int_field(j, "n"), int_field(j, "r")};
  if (spec.n < 1 || spec.r < 1)
    throw DomainError("region record needs n >= 1 and r >= 1");

  if (!j.contains("windows") || !j["windows"].is_array())
    throw DomainError("region record needs a 'windows' array");
  std::vector<std::optional<Window>> slots(spec.pairs());
  for (const Json& entry : j["windows"]) {
    const int i = int_field(entry, "i"), jj = int_field(entry, "j");
    if (i < 1 || jj <= i || jj > spec.n)
      throw DomainError("window pair indices must satisfy 1 <= i < j <= n");
    const int idx = pair_index(spec.n, i, jj);
    if (slots[idx])
      throw DomainError("duplicate window for pair (" + std::to_string(i) +
                        "," + std::to_string(jj) + ")");
    if (!entry.contains("lo") || !entry.contains("hi"))
      throw DomainError("window entry needs 'lo' and 'hi'");
    slots[idx] = Window{endpoint_from_json(entry["lo"], "-inf"),
                        endpoint_from_json(entry["hi"], "+inf")};
  }
  std::vector<int> codes(spec.pairs());
  for (int idx = 0; idx < spec.pairs(); ++idx) {
    if (!slots[idx]) {
      auto [i, jj] = pair_from_index(spec.n, idx);
      throw DomainError("missing window for pair (" + std::to_string(i) +
                        "," + std::to_string(jj) + ")");
    }
    codes[idx] = window_code(spec, *slots[idx]);
  }

  if (!j.contains("rep")) return region_from_windows(spec, codes);

  if (!j["rep"].is_array() ||
      static_cast<int>(j["rep"].size()) != spec.n)
    throw DomainError("'rep' must list one rational per coordinate");
  std::vector<Rat> rep;
  for (const Json& v : j["rep"]) {
    if (!v.is_string())
      throw DomainError("'rep' entries must be 'p/q' strings");
    try {
      rep.push_back(fraction_from(v.get<std::string>()));
    } catch (const std::invalid_argument& e) {
      throw DomainError(e.what());
    }
  }
  Region check = region_of_point(spec, rep);
  if (check.windows != codes)
    throw DomainError("representative does not lie inside the windows");
  return check;
}

Json tree_to_json(const RTree& t) {
  Json j;
  j["n"] = t.n;
  j["r"] = t.r;
  Json fathers = Json::object();
  for (int v = 1; v <= t.n; ++v) {
    Json members = Json::array();
    for (const Vertex& m : t.fathers[v - 1]) members.push_back(to_string(m));
    fathers["v" + std::to_string(v)] = std::move(members);
  }
  j["fathers"] = std::move(fathers);
  return j;
}

RTree tree_from_json(const Json& j) {
  if (!j.is_object()) throw DomainError("tree record must be an object");
  const int n = int_field(j, "n"), r = int_field(j, "r");
  if (!j.contains("fathers") || !j["fathers"].is_object())
    throw DomainError("tree record needs a 'fathers' object");
  const Json& map = j["fathers"];
  if (static_cast<int>(map.size()) != n)
    throw DomainError("'fathers' must have exactly n entries");
  std::vector<std::vector<Vertex>> fathers(n);
  for (int v = 1; v <= n; ++v) {
    const std::string key = "v" + std::to_string(v);
    if (!map.contains(key))
      throw DomainError("'fathers' is missing key '" + key + "'");
    if (!map[key].is_array())
      throw DomainError("father set '" + key + "' must be an array");
    for (const Json& m : map[key]) {
      if (!m.is_string())
        throw DomainError("father names must be strings like 'o1' or 'v2'");
      fathers[v - 1].push_back(vertex_from_string(m.get<std::string>()));
    }
  }
  return validate(n, r, std::move(fathers));
}

Json parking_to_json(const ParkingFunction& p) {
  Json j;
  j["r"] = p.r;
  j["entries"] = p.entries;
  return j;
}

ParkingFunction parking_from_json(const Json& j) {
  if (!j.is_object()) throw DomainError("parking record must be an object");
  const int r = int_field(j, "r");
  if (!j.contains("entries") || !j["entries"].is_array())
    throw DomainError("parking record needs an 'entries' array");
  std::vector<int> entries;
  for (const Json& v : j["entries"]) {
    if (!v.is_number_integer())
      throw DomainError("parking entries must be integers");
    entries.push_back(v.get<int>());
  }
  if (!is_parking_function(r, entries))
    throw DomainError("sequence is not an r-parking function");
  return ParkingFunction{r, std::move(entries)};
}

Json path_to_json(const DyckPath& p) {
  Json j;
  j["n"] = p.n;
  j["r"] = p.r;
  j["heights"] = p.heights;
  return j;
}

DyckPath path_from_json(const Json& j) {
  if (!j.is_object()) throw DomainError("path record must be an object");
  const int n = int_field(j, "n"), r = int_field(j, "r");
  if (!j.contains("heights") || !j["heights"].is_array())
    throw DomainError("path record needs a 'heights' array");
  std::vector<int> heights;
  for (const Json& v : j["heights"]) {
    if (!v.is_number_integer())
      throw DomainError("path heights must be integers");
    heights.push_back(v.get<int>());
  }
  return heights_to_path(n, r, heights);
}

}  // namespace arrangebij
