#pragma once

#include <latq/rational.hpp>

#include <vector>

namespace latq {

// Exact determinant; fraction-free (Bareiss) elimination after clearing denominators.
Rat determinant(const Mat& m);

// Leading principal minors det(M[0..k][0..k]), k = 1..n.
std::vector<Rat> leading_minors(const Mat& m);

// Exact positive semidefiniteness by recursive pivoting: a zero diagonal pivot
// forces its whole row to vanish, a negative one refutes.
bool is_positive_semidefinite(const Mat& m);

// All leading principal minors > 0.
bool is_positive_definite(const Mat& m);

// Exact inverse by Gauss-Jordan; throws on a singular input.
Mat inverse(const Mat& m);

// Diagonal entries of a congruence diagonalization P^T M P (P rational,
// invertible). Requires M symmetric and nondegenerate.
std::vector<Rat> sym_diagonalize(const Mat& m);

}  // namespace latq
