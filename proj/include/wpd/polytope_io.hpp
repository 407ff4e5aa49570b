#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wpd/polytope.hpp"

namespace wpd {

// [0, side]^n
Polytope hypercube(std::size_t n, const Rational& side = 1);
// { x >= 0, x_1 + ... + x_n <= d }
Polytope dilated_simplex(std::size_t n, const Rational& d = 1);
// [lo, hi] in R^1
Polytope interval(const Rational& lo, const Rational& hi);
// { x >= 0, y >= 0, y <= 1, x + y <= 2 }
Polytope trapezoid();
// standard triangle x [0, 1]
Polytope prism();
// triangle with vertices (0,0), (2,0), (0,1); simple and integral, not regular
Polytope skew_triangle();
// |x| + |y| + |z| <= 1 as eight half-spaces; not simple, so there is no
// Polytope for it
std::vector<HalfSpace> octahedron_facets();

// Builds a polytope from "name:params", e.g. "simplex:2,2", "cube:3", "interval:0,2",
// "trapezoid", "prism", "skew-triangle", "octahedron". Throws InputError on an
// unknown name or bad parameters.
Polytope builtin_polytope(std::string_view spec);
std::vector<std::string> builtin_names();

// Polytope file (JSON):
//   { "dim": n, "facets": [[u_1, ..., u_n, lambda], ...] }
// meaning <x, u> >= lambda. Every number is a JSON integer or a string
// holding an integer or "p/q"; floats are rejected.
std::vector<HalfSpace> parse_facets(std::string_view text);
Polytope polytope_from_text(std::string_view text);
Polytope polytope_from_file(const std::string& path);

// Canonical text of the facet data (same grammar as the file format).
std::string facets_to_text(const std::vector<HalfSpace>& facets);

} // namespace wpd
