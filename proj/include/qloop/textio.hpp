#pragma once

#include <string>

#include "qloop/cartan.hpp"
#include "qloop/element.hpp"
#include "qloop/scalar.hpp"

namespace qloop {

/// Parse an element from the textual grammar:
///
///   element := ['-'] term (('+' | '-') term)*
///   term    := scalar '*' word | scalar | word
///   word    := gen+
///   gen     := E(i,l) | H(i,s) | xi(i,s) | chi(i,s) | theta(i,s) | b(i,[parts])
///   scalar  := sum of products/quotients/powers of integers and v
///
/// Node indices are validated against `rank`.  Degree-0 xi/chi/theta and
/// b(i,[]) denote the unit and disappear from the word; H(i,0) and negative
/// symmetric-function degrees are rejected.  Accepts every string produced by
/// serialize(), so parse(serialize(x)) == x.
Element parse_element(const std::string& text, int rank);

/// Parse a standalone scalar expression, e.g. "(1 - v^2)/(v^3)".
Scalar parse_scalar(const std::string& text);

/// Canonical text form (sorted monomials, canonical scalars).
std::string serialize(const Element& x);

/// Load a Cartan config file ("rank N" / "row ..." / "sym ..." lines).
CartanData load_cartan_file(const std::string& path);

}  // namespace qloop
