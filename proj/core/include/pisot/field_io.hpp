#pragma once

// JSON field files, the quadratic-field generator and the bundled fields.
//
// File layout:
//   { "name", "r", "s", "precision_digits",
//     "integral_basis": n*n entries [re, im], row-major, row i = embedding i,
//     "unit_generators": [[ [re, im] x n ] x (r+s-1)],
//     "torsion_order",
//     "galois_perms": [[ 1-based image indices ] x n],
//     "regulator_hint" (optional) }
// Numbers are written as decimal strings; plain JSON numbers are accepted on
// input, as is a nested n x n integral_basis.

#include <cstdint>
#include <filesystem>
#include <string>

#include "pisot/field.hpp"

namespace pisot {

std::string field_to_json_text(const FieldData& field);

/// Parses and validates; errors are ValidationError naming the violated
/// invariant (or "parse error" for malformed JSON).
FieldData field_from_json_text(const std::string& text);

FieldData load_field_file(const std::filesystem::path& path);
void save_field_file(const FieldData& field, const std::filesystem::path& path);

/// Q(sqrt d) with integral basis {1, omega}, omega = sqrt d or (1 + sqrt d)/2,
/// the fundamental unit as generator and torsion {+1, -1}.
FieldData gen_quadratic_field(std::int64_t d);

/// Q(zeta_7)^+: basis {1, theta, theta^2}, theta = 2 cos(2 pi / 7), units
/// theta and theta^2 - 2.
FieldData zeta7_plus_field();

/// Q(zeta_5): basis {1, zeta, zeta^2, zeta^3}, unit 1 + zeta, torsion order 10.
FieldData zeta5_field();

/// "qsqrt2", "qsqrt3", "qsqrt5", "qsqrt13", "zeta7plus" or "zeta5".
FieldData builtin_field(const std::string& name);

}  // namespace pisot
