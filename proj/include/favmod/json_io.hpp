#ifndef FAVMOD_JSON_IO_HPP
#define FAVMOD_JSON_IO_HPP

#include <json.hpp>

#include <string>

#include "favmod/essential.hpp"
#include "favmod/polytope.hpp"
#include "favmod/repmod.hpp"
#include "favmod/rootsys.hpp"
#include "favmod/toric.hpp"

namespace favmod {

// Reports use ordered_json: field order is part of the output contract
// (byte-identical output for identical inputs).
using json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

json exponent_to_json(const MultiExponent& p);
MultiExponent exponent_from_json(const json& j);

json lattice_to_json(const LatticeSet& s);
LatticeSet lattice_from_json(const json& j);

json rational_to_json(const Rational& r);           // "num/den" string
json qvector_to_json(const QVector& v);

json polytope_to_json(const PolytopeSpec& p);
json essential_to_json(const EssentialResult& r, const std::vector<std::string>& labels);
json module_to_json(const RepModule& m);
json rays_to_json(const std::vector<Ray>& rays);
json demazure_to_json(const std::vector<DemazureRoot>& roots, const std::vector<Ray>& rays);

/// Report skeleton: command echo, inputs, version. Results are attached by
/// the caller under "result".
json make_report(const std::string& command, const json& inputs);

}  // namespace favmod

#endif
