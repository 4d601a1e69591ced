#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pburgers/cole_hopf.hpp"
#include "pburgers/field.hpp"
#include "pburgers/imex.hpp"
#include "pburgers/sobolev.hpp"
#include "pburgers/solver.hpp"
#include "pburgers/verification.hpp"

namespace pburgers {

using Json = nlohmann::ordered_json;

Json to_json(const EstimateReport& r);
Json to_json(const Branch& b);
Json to_json(const NormReport& r);
Json to_json(const GroundState& g);
Json to_json(const InvariantResult& r);
Json to_json(const std::vector<InvariantResult>& results);

// Serialization with every double printed at 17 significant digits;
// non-finite values become null. Output is byte-identical across runs.
std::string dump_deterministic(const Json& j, int indent = 2);
void write_json_file(const std::filesystem::path& path, const Json& j);

// Grid samples of u as CSV with header "t,x,u", one row per grid point.
void write_field_csv(const std::filesystem::path& path, const Field& u);
// Reads a CSV written by write_field_csv on the given grid and projects it
// onto the requested basis.
Field read_field_csv(const std::filesystem::path& path, const GridSpec& grid, Basis basis);

}  // namespace pburgers
