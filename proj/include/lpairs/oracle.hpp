#pragma once

#include <cstdint>
#include <vector>

#include "lpairs/parameter_array.hpp"

namespace lpairs {

/// Eigenstructure of a multiplicity-free matrix: d+1 distinct eigenvalues,
/// one eigenvector each, and the basis-change matrix P whose columns are the
/// eigenvectors (in eigenvalue order).
struct EigenData {
    std::vector<FieldElement> eigenvalues;
    std::vector<std::vector<FieldElement>> eigenvectors;
    Matrix p;
};

struct LeonardPairCheck {
    bool is_pair = false;
    /// When is_pair: the standard eigenvalue orderings of a (exactly two,
    /// mutual reversals).
    std::vector<std::vector<FieldElement>> standard_orderings;
};

/// Characteristic polynomial det(xI - m) of a tridiagonal matrix, monic,
/// little-endian coefficients.
std::vector<FieldElement> char_poly_tridiagonal(const Matrix& m);

/// All roots of a polynomial in the coefficient field, with multiplicity.
/// Finite fields are scanned exhaustively; over the rationals the integer
/// reduction of the monic polynomial is factored by capped trial division
/// and EigenvalueNotInField is thrown if the factorization is incomplete.
std::vector<FieldElement> polynomial_roots(const std::vector<FieldElement>& poly, const FieldPtr& field);

/// Direct check of the defining property: a irreducible tridiagonal in the
/// standard basis, a_star diagonal with distinct entries, and the
/// eigenvector conjugate of a_star irreducible tridiagonal under some index
/// ordering (the nonzero pattern must form a Hamiltonian path). Throws
/// EigenvalueNotInField when a's spectrum does not lie in the field.
LeonardPairCheck is_leonard_pair(const Matrix& a, const Matrix& a_star);

/// Eigenstructure of an irreducible tridiagonal matrix with d+1 distinct
/// eigenvalues in the field.
EigenData eigen_data(const Matrix& a);

/// Exhaustive companion search over a small finite field: every diagonal K
/// with a - K, a_star a Leonard pair. Deterministically sorted by entry
/// tuple. The enumeration space |F|^{d+1} must not exceed cap.
std::vector<Matrix> all_companions_bruteforce(const Matrix& a, const Matrix& a_star,
                                              std::uint64_t cap = 10000000, int workers = 1);

/// Isomorphism inside Omega is equality.
bool isomorphic_in_omega(const Matrix& a, const Matrix& b, const Matrix& a_star);

/// The parameter arrays of the Leonard pair (a, a_star) with a in Omega:
/// one per standard ordering, verified to realize back to a.
std::vector<ParameterArray> parameter_arrays_of(const Matrix& a, const Matrix& a_star);

}  // namespace lpairs
