#pragma once

#include "ellwall/rational.hpp"

#include <vector>

namespace ellwall {

/// Smith normal form of an integer matrix, A = U * S * V with U, V unimodular
/// and S diagonal with s_1 | s_2 | ... Row/column operations only; suitable
/// for the small dense matrices that arise here.
struct SmithResult {
    IntMat s;
    IntMat u; // row transform, |det| = 1
    IntMat v; // column transform, |det| = 1
};

SmithResult smith_normal_form(const IntMat& a);

/// Nonzero diagonal entries of the Smith form (the elementary divisors), in order.
std::vector<Int> elementary_divisors(const IntMat& a);

/// Saturated integer kernel basis of A (columns x with A x = 0), one column per
/// kernel dimension. Any integer solution of A x = 0 is an integer combination
/// of the returned columns.
IntMat integer_kernel(const IntMat& a);

/// Rank of a rational matrix (exact Gaussian elimination).
int rational_rank(RatMat m);

/// Solves A x = rhs exactly over the rationals. The system may be
/// underdetermined; free variables are set to zero (deterministic choice).
/// Throws std::domain_error if the system is inconsistent.
RatVec rational_solve(RatMat a, RatVec rhs);

/// Inverse of an integer matrix with |det| = 1. Throws std::domain_error if the
/// matrix is singular or the inverse is not integral.
IntMat unimodular_inverse(const IntMat& m);

/// True if the symmetric integer matrix is positive semidefinite, checked in
/// floating point with the given eigenvalue tolerance.
bool is_positive_semidefinite(const IntMat& g, double tol = 1e-9);

} // namespace ellwall
