#pragma once

// File formats:
//   polytope   {"n": 2, "forms": [{"u": [1, 0], "b": "0/1"}, ...]}
//   potential  {"polytope": <polytope>, "h": {"monomials": [{"exponents": [2, 0], "coeff": "1/100"}]}}
// Rationals are strings "p/q" (plain integers are accepted on input).

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "toric/soliton.hpp"

namespace toric {

using Json = nlohmann::ordered_json;

std::string rational_to_string(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const DelzantPolytope& p, bool with_vertices = false);
DelzantPolytope polytope_from_json(const Json& j);

Json to_json(const Polynomial& h);
Polynomial polynomial_from_json(const Json& j, Eigen::Index n);

Json to_json(const SymplecticPotential& pot);
SymplecticPotential potential_from_json(const Json& j);

/// Reads and parses a JSON file; ParseError on a missing file or bad syntax.
Json load_json(const std::filesystem::path& path);
DelzantPolytope load_polytope(const std::filesystem::path& path);
SymplecticPotential load_potential(const std::filesystem::path& path);

Json to_json(const DelzantReport& report, const DelzantPolytope& p);
Json to_json(const AffineFit& fit);
Json to_json(const SolitonData& data, double tolerance);
Json to_json(const TheoremVerdict& verdict);

/// Header x_1,...,x_n,<columns>; one row per point, 17 significant digits.
void write_csv(std::ostream& os, const std::vector<Vec<double>>& points, const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& values);

}  // namespace toric
