#pragma once

#include <json.hpp>

#include "arrangebij/arrangement.hpp"
#include "arrangebij/catalan_maps.hpp"
#include "arrangebij/rtree.hpp"
#include "arrangebij/shi_maps.hpp"

namespace arrangebij {

// Deterministic key order on output.
using Json = nlohmann::ordered_json;

// {"kind":"shi","n":3,"r":1,
//  "windows":[{"i":1,"j":2,"lo":0,"hi":1},...],   lo/hi: int | "-inf" | "+inf"
//  "rep":["1/5","-1/5","0/1"]}
Json region_to_json(const Region& region);
// "rep" is optional on input: absent -> recomputed; present -> validated to
// lie inside the windows.
Region region_from_json(const Json& j);

// {"n":3,"r":1,"fathers":{"v1":["o1"],"v2":["v3"],"v3":["o1"]}}
Json tree_to_json(const RTree& t);
RTree tree_from_json(const Json& j);

// {"r":1,"entries":[0,0,1]}
Json parking_to_json(const ParkingFunction& p);
ParkingFunction parking_from_json(const Json& j);

// {"n":6,"r":1,"heights":[0,0,0,2,4,4]}
Json path_to_json(const DyckPath& p);
DyckPath path_from_json(const Json& j);

}  // namespace arrangebij
