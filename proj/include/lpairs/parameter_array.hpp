#pragma once

#include <string>
#include <vector>

#include "lpairs/matrix.hpp"

namespace lpairs {

/// The classifying data of a Leonard system: eigenvalue sequence theta,
/// dual eigenvalue sequence theta_star (both length d+1), and the two split
/// sequences varphi, phi (length d, entry k holding index k+1).
struct ParameterArray {
    FieldPtr field;
    int d = 0;
    std::vector<FieldElement> theta;
    std::vector<FieldElement> theta_star;
    std::vector<FieldElement> varphi;
    std::vector<FieldElement> phi;

    const FieldElement& vphi(int i) const { return varphi[static_cast<std::size_t>(i - 1)]; }
    const FieldElement& ph(int i) const { return phi[static_cast<std::size_t>(i - 1)]; }

    bool operator==(const ParameterArray& rhs) const;
};

struct ValidationReport {
    bool valid = false;
    /// One tag per failing condition: "i", "ii", "iii:2", "iv:1", "v:3",
    /// where the suffix is the offending index.
    std::vector<std::string> violations;
};

/// Full membership test for the parameter-array conditions: distinct
/// eigenvalues, nonvanishing split sequences, the two summation identities,
/// and the i-independence of the eigenvalue ratio for d >= 3.
ValidationReport validate(const ParameterArray& p);

/// Throws InvalidInput if p fails validate (the message lists the tags).
void require_valid(const ParameterArray& p);

/// Length-consistency check only; throws LengthMismatch.
void require_shape(const ParameterArray& p);

struct InvariantData {
    FieldElement beta;
    FieldElement gamma;
    FieldElement varrho;
    FieldElement kappa;
};

/// The fundamental constant beta, the recurrence scalars gamma and varrho,
/// and the invariant value kappa = gamma^2 + (2-beta) varrho, cross-checked
/// against the direct quadratic expression at every admissible index.
/// Requires d >= 3.
InvariantData invariants(const ParameterArray& p);

/// Relatives of the underlying Leonard system.
///   Star  : dual system          (theta <-> theta_star swap)
///   Down  : "down",   reverses the dual eigenvalue order
///   DDown : "Down",   reverses the primal eigenvalue order
///   Vee   : bond relative, negates theta and both split sequences
enum class Relative { Star, Down, DDown, Vee };

ParameterArray relatives(const ParameterArray& p, Relative which);

/// (xi theta_i + zeta; xi* theta*_i + zeta*; xi xi* varphi_i; xi xi* phi_i).
ParameterArray affine(const ParameterArray& p, const FieldElement& xi, const FieldElement& zeta,
                      const FieldElement& xi_star, const FieldElement& zeta_star);

/// Normalized tridiagonal realization: a_matrix has diagonal a_i,
/// superdiagonal x_i, unit subdiagonal, and a_star = diag(theta_star).
struct LeonardRealization {
    Matrix a_matrix;
    Matrix a_star;
    std::vector<FieldElement> a;  // d+1
    std::vector<FieldElement> x;  // d, entry k holds x_{k+1}
};

/// Builds the realization; a_i is computed by two independent closed forms
/// and x_i by the split-polynomial quotient, with all cross-checks asserted.
LeonardRealization realize(const ParameterArray& p);

/// Lower-bidiagonal / upper-bidiagonal split presentation: a_split has
/// diagonal theta and unit subdiagonal, a_star_split has diagonal theta_star
/// and superdiagonal varphi.
struct SplitRealization {
    Matrix a_split;
    Matrix a_star_split;
};

SplitRealization split_realize(const ParameterArray& p);

/// Intersection numbers b_i, c_i together with the theta_0-eigenvector u
/// (normalized to u_0 = 1) that carries the dual eigenbasis.
struct DualBasisData {
    std::vector<FieldElement> b;        // b_0..b_{d-1}
    std::vector<FieldElement> c;        // entry k holds c_{k+1}
    std::vector<FieldElement> eigvec0;  // u_0..u_d
};

DualBasisData dual_basis_data(const LeonardRealization& r, const FieldElement& theta0);

/// Every a_i vanishes.
bool is_bipartite(const LeonardRealization& r);

/// The three low-index consequences of the summation identities, exposed as
/// a diagnostic record:
///   head:  varphi_1 - phi_1 = (theta*_1 - theta*_0)(theta_0 - theta_d)
///   tail:  varphi_d - phi_1 = (theta*_d - theta*_0)(theta_{d-1} - theta_d)
///   cross: phi_d - varphi_1 = (theta*_d - theta*_0)(theta_1 - theta_0)
struct OneDIdentities {
    bool head = false;
    bool tail = false;
    bool cross = false;
};

OneDIdentities one_d_identities(const ParameterArray& p);

/// theta-side profile sums vartheta_i = sum_{l<i} (theta_l - theta_{d-l}) /
/// (theta_0 - theta_d) for i = 0..d; equal to the starred version on valid
/// arrays.
std::vector<FieldElement> profile_sums(const std::vector<FieldElement>& theta);

}  // namespace lpairs
