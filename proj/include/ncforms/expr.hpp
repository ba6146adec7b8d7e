#pragma once

#include <string>

#include "ncforms/graded_algebra.hpp"

namespace ncf {

// Parse an element expression: a sum of optionally-scaled products of
// bracketed generators, e.g. "[12][23] - 2[13][12]" or "3/2[1,10]".
// Bracket points are single digits, or comma-separated for >= 10; [ji]
// denotes -[ij] in signed algebras and [ij] in unsigned ones. Builds the
// degrees the terms require. Throws std::invalid_argument on bad syntax.
AlgElement parse_element(GradedAlgebra& alg, const std::string& text);

}  // namespace ncf
