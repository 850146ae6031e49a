#pragma once

#include <latq/lattice.hpp>

#include <json.hpp>

#include <string>

namespace latq {

using json = nlohmann::ordered_json;

json rat_json(const Rat& r);            // "p/q" (or "p" for integers)
Rat rat_from_json(const json& j);       // string or integer literal

json mat_json(const Mat& m);
Mat mat_from_json(const json& j);

// {"ambient_dim": m, "generators": [[..]]} or {"gram": [[..]]}
json lattice_json(const Lattice& l);
Lattice lattice_from_json(const json& doc);
Lattice lattice_from_file(const std::string& path);

}  // namespace latq
