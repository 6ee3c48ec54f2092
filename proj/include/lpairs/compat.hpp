#pragma once

#include <map>
#include <optional>
#include <string>

#include "lpairs/basic_sequence.hpp"

namespace lpairs {

/// Two parameter arrays presenting Leonard pairs that share the diagonal
/// member: same field, same diameter, identical theta_star sequences.
struct CompatInput {
    ParameterArray p;
    ParameterArray p_prime;
};

/// compatible iff vphi_i phi_i = vphi'_i phi'_i for all i; the equivalent
/// superdiagonal criterion x_i = x'_i is evaluated as a cross-check.
bool compatible_by_products(const CompatInput& c);

/// The endpoint refinement: d = 1 and d = 2 reduce to the products at the
/// ends; d >= 3 to kappa = kappa' plus the two endpoint products. The
/// intersection-number reformulation is evaluated as a cross-check.
bool compatible_by_endpoints(const CompatInput& c);

/// Definition-level test: realizes both arrays and compares the commutators
/// [A, A*] and [B, A*] entrywise.
bool compatible_direct(const CompatInput& c);

struct CompanionResult {
    Matrix k;         // diagonal, K = A - B
    Matrix b_matrix;  // realized B
    ParameterArray b_array;
    std::string family;  // set by materialize_family
};

/// K = A - B for a compatible pair, with K_{ii} = a_i - a'_i.
CompanionResult companion_of(const CompatInput& c);

/// zeta with B = A + zeta I, detected from the split sequences (equal or
/// swapped) and verified against the realized matrices; empty otherwise.
std::optional<FieldElement> detect_shift(const CompatInput& c);

/// zeta with B = A^vee + zeta I, detected from the negated split sequences
/// and verified against the bond mate of the realization; empty otherwise.
std::optional<FieldElement> detect_bond_shift(const CompatInput& c);

/// Closed-form companion entries for d = 1 and d = 2, checked against
/// companion_of.
std::vector<FieldElement> companion_entries_typeO(const CompatInput& c);

/// The type-specific three-equation compatibility test on basic sequences
/// sharing the starred variables (and q, for type I).
bool compat_conditions_basic(const BasicSequence& b, const BasicSequence& b_prime, int d);

/// A symbolic solution family for the primed basic sequence.
struct CompanionFamily {
    std::string id;  // e.g. "type2sol3"
    /// Closed-form assignments for primed variables, rendered as values.
    std::map<std::string, std::string> assignments;
    /// Unknowns a materialization may bind, with their defining constraints.
    std::map<std::string, std::string> free_parameters;
    bool requires_sqrt = false;
};

/// Every family applicable to b (guards on vanishing products decide which),
/// in a fixed order. The sol1-style family always realizes B = A up to a
/// scalar shift and the sol2-style family the bond mate.
std::vector<CompanionFamily> companion_families(const BasicSequence& b, int d);

/// Materializes one member of a family: builds the primed sequence from the
/// assignments, the bindings, and deterministic square roots for unbound
/// quadratic unknowns; realizes B; returns K = A - B. Closed-form companion
/// entries are evaluated and checked whenever the family has them.
CompanionResult materialize_family(const BasicSequence& b, const std::string& family_id,
                                   const std::map<std::string, FieldElement>& bindings, int d);

}  // namespace lpairs
