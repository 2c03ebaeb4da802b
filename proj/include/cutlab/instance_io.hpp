#pragma once

#include "cutlab/instance.hpp"

#include <string>

namespace cutlab {

// Schema: { "name": str, "n": int,
//           "vars": [{"kind": "int"|"cont", "lb": "p/q", "ub": "p/q"|"inf"}],
//           "rows": [{"coeffs": ["p/q",...], "sense": "<="|">="|"=", "rhs": "p/q"}],
//           "objective": ["p/q",...], "tags": [str] }
// Field order irrelevant; files UTF-8. Rationals are lossless "p/q" strings.
std::string instance_to_json(const MilpInstance& inst);

// Throws Error(parse) naming the offending row/field.
MilpInstance instance_from_json(const std::string& text);

MilpInstance read_instance(const std::string& path);
void write_instance(const MilpInstance& inst, const std::string& path);

}  // namespace cutlab
