#pragma once

#include "dua/algebra.hpp"

#include <vector>

// Exact dense linear algebra over a coefficient field, sized for the bounded
// degree searches done here (a few hundred rows at most).

namespace dua::linalg {

using Vec = std::vector<FieldElem>;
using Mat = std::vector<Vec>;

// In-place reduced row echelon form; returns the pivot column of each
// nonzero row. The field provides exact division.
std::vector<std::size_t> rref(Mat& m);

std::size_t rank(Mat m);

// Basis of {x : m x = 0}, columns of m being the unknowns.
std::vector<Vec> nullspace(Mat m, const Field& field);

bool in_row_span(const Mat& m, const Vec& v);

bool same_row_space(const Mat& a, const Mat& b);

// Coordinate matrix of elements against a shared monomial index (built from
// the union of supports, in canonical order).
Mat coordinates(const std::vector<Element>& elems, std::vector<PBWMono>& index_out);

} // namespace dua::linalg
