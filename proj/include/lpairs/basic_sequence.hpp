#pragma once

#include <array>
#include <optional>
#include <string>

#include "lpairs/parameter_array.hpp"

namespace lpairs {

/// Classification of a parameter array by diameter, fundamental constant,
/// characteristic, and parity.
enum class LeonardType { O, I, II, IIIPlus, IIIMinus, IV };

const char* leonard_type_name(LeonardType t);  // "O", "I", "II", "III+", "III-", "IV"
LeonardType leonard_type_from_name(const std::string& name);

LeonardType classify_type(const ParameterArray& p);

/// The seven free scalars that parameterize a parameter array of the given
/// type in closed form. Entry order by type:
///   I, II : (delta, mu, h, delta*, mu*, h*, tau)      q stored for type I
///   III+- : (delta, s,  h, delta*, s*,  h*, tau)
///   IV    : (delta, h,  s, delta*, h*,  s*, r)
struct BasicSequence {
    LeonardType type = LeonardType::O;
    std::optional<FieldElement> q;
    std::array<FieldElement, 7> entries;

    const FieldPtr& field() const { return entries[0].field(); }

    const FieldElement& delta() const { return entries[0]; }
    const FieldElement& delta_star() const { return entries[3]; }
    /// Positional accessors resolved per type.
    const FieldElement& mu() const;
    const FieldElement& h() const;
    const FieldElement& mu_star() const;
    const FieldElement& h_star() const;
    const FieldElement& s() const;
    const FieldElement& s_star() const;
    const FieldElement& tau() const;
    const FieldElement& r() const;

    /// Entry names in serialization order, e.g. "delta","mu",...
    std::array<const char*, 7> entry_names() const;

    bool operator==(const BasicSequence& rhs) const;
};

/// Builds the parameter array of b in diameter d from the closed forms and
/// validates it; throws InvalidBasicSequence naming the violated condition,
/// TypeMismatch when the type's characteristic or parity preconditions fail.
ParameterArray array_from_basic(const BasicSequence& b, int d);

/// Candidate values of q with beta = q^2 + q^{-2} for a type-I array,
/// recovered by solving the quadratic in q^2 followed by square roots;
/// sorted, possibly empty.
std::vector<FieldElement> type1_q_candidates(const ParameterArray& p);

/// The unique basic sequence reproducing p (for type I, unique with respect
/// to q; when q is absent the smallest recoverable candidate is used and
/// MissingRoot is thrown if there is none).
BasicSequence basic_from_array(const ParameterArray& p, std::optional<FieldElement> q = std::nullopt);

/// Relative action on basic sequences; commutes with relatives() through
/// array_from_basic. Star is not representable (it swaps the primal and dual
/// sides), so only Down, DDown, Vee are accepted.
BasicSequence basic_relatives(const BasicSequence& b, Relative which);

BasicSequence basic_affine(const BasicSequence& b, const FieldElement& xi, const FieldElement& zeta,
                           const FieldElement& xi_star, const FieldElement& zeta_star);

/// Closed-form invariant value: type I mu h (q-1/q)^2 (q^2-1/q^2)^2,
/// types II and III 4h^2, type IV h^2.
FieldElement kappa_from_basic(const BasicSequence& b);

/// The coefficients of the three-term split-product identity.
struct RSTCoefficients {
    std::vector<FieldElement> R, S, T;  // entry k holds index k+1
};

RSTCoefficients rst_coefficients(LeonardType t, int d, const FieldPtr& field,
                                 const std::optional<FieldElement>& q = std::nullopt);

/// Exact check of the split-product identity
///   vphi_i phi_i / ((th*_{i-1}-th*_d)(th*_i-th*_0)) =
///   R_i vphi_1 phi_1 / ((th*_i-th*_0)(th*_0-th*_d)) +
///   S_i vphi_d phi_d / ((th*_d-th*_{i-1})(th*_0-th*_d)) + T_i kappa
/// at every i in 1..d. For type I a q must be recoverable (or supplied).
bool rst_identity_check(const ParameterArray& p, std::optional<FieldElement> q = std::nullopt);

}  // namespace lpairs
