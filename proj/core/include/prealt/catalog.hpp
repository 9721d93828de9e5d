#pragma once

#include "prealt/io.hpp"

namespace prealt {

// Built-in fixtures over Q: zero-<n>, n2, p2, p3-graded, octonion,
// halved-idempotent, halved-field-negative. A "<name>mod<p>" suffix reduces into GF(p).
// Throws UnknownName.
AlgebraFile catalog_entry(const std::string& name);
std::vector<std::string> catalog_names();

}  // namespace prealt
