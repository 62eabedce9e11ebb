#pragma once

#include <optional>
#include <vector>

#include "rootpoly/ints.hpp"

namespace rootpoly {

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;  // row-major

Int dot(const IntVec& a, const IntVec& b);

// gcd of absolute values of all entries; 0 for the zero vector.
Int content(const IntVec& v);

// Divide by the content (no-op on the zero vector).
IntVec primitive(IntVec v);

// Rank over the rationals, fraction-free Bareiss elimination.
int rank(IntMat a);

// Determinant of a square matrix, Bareiss.
Int determinant(IntMat a);

// Basis of the saturated integer kernel lattice {x : rows * x = 0}, computed
// by unimodular column reduction. Returned as a list of length-n vectors.
std::vector<IntVec> kernel_basis(const IntMat& rows, int n_cols);

// One integer solution of m * x = rhs, or nullopt when no integer solution
// exists (inconsistent system or non-integral solution set).
std::optional<IntVec> solve_integer(const IntMat& m, const IntVec& rhs);

// Primitive normal of the hyperplane through d affinely independent points in
// Z^d. Empty vector when the points are affinely dependent.
IntVec hyperplane_normal(const std::vector<IntVec>& points);

}  // namespace rootpoly
