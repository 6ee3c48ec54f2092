#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "lpairs/error.hpp"

namespace lpairs {

class Field;
class FieldElement;

using FieldPtr = std::shared_ptr<Field>;

enum class FieldKind { Rational, Prime, Extension };

/// An exact coefficient field: the rationals, a prime field GF(p), or an
/// extension GF(p^m) presented by a monic irreducible modulus over GF(p).
/// Instances are immutable and shared; two descriptors denote the same field
/// iff they compare structurally equal.
class Field : public std::enable_shared_from_this<Field> {
public:
    static FieldPtr rationals();
    static FieldPtr prime(long p);
    /// modulus is little-endian, monic, degree >= 2; irreducibility is
    /// checked by exhaustive root / low-degree-factor search.
    static FieldPtr extension(long p, std::vector<long> modulus);

    FieldKind kind() const noexcept { return kind_; }
    long characteristic() const noexcept { return kind_ == FieldKind::Rational ? 0 : p_; }
    long prime_modulus() const noexcept { return p_; }
    const std::vector<long>& modulus() const noexcept { return modulus_; }
    /// Extension degree m (1 for GF(p), 0 for the rationals).
    int degree() const noexcept;

    bool finite() const noexcept { return kind_ != FieldKind::Rational; }
    /// Number of elements p^m; throws FieldTooLarge past 2^62 and
    /// InvalidInput for the rationals.
    std::uint64_t order() const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_integer(long n) const;
    /// Inverse of FieldElement::to_string.
    FieldElement parse(const std::string& text) const;
    /// k-th element in the canonical enumeration of a finite field
    /// (base-p digits of k, little-endian).
    FieldElement element_at(std::uint64_t k) const;

    bool operator==(const Field& other) const noexcept;
    bool operator!=(const Field& other) const noexcept { return !(*this == other); }

    std::string describe() const;

private:
    Field(FieldKind kind, long p, std::vector<long> modulus)
        : kind_(kind), p_(p), modulus_(std::move(modulus)) {}

    FieldKind kind_;
    long p_;
    std::vector<long> modulus_;

    friend class FieldElement;
};

/// A canonical element of a Field. Equality is representation equality;
/// all arithmetic is exact and total except division by zero.
class FieldElement {
public:
    FieldElement() = default;

    const FieldPtr& field() const noexcept { return field_; }

    bool is_zero() const;
    bool is_one() const;

    FieldElement operator-() const;
    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator/(const FieldElement& rhs) const;
    FieldElement& operator+=(const FieldElement& rhs) { return *this = *this + rhs; }
    FieldElement& operator-=(const FieldElement& rhs) { return *this = *this - rhs; }
    FieldElement& operator*=(const FieldElement& rhs) { return *this = *this * rhs; }
    FieldElement& operator/=(const FieldElement& rhs) { return *this = *this / rhs; }

    FieldElement inverse() const;
    /// Nonnegative integer power.
    FieldElement pow(std::uint64_t e) const;
    /// Signed integer power; negative exponents invert first.
    FieldElement pow_signed(long e) const;

    bool operator==(const FieldElement& rhs) const;
    bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }
    /// Total order inside one field: rationals by value, finite fields by
    /// enumeration index. Used for deterministic tie-breaking and sorting.
    bool operator<(const FieldElement& rhs) const;

    /// Enumeration index of a finite-field element.
    std::uint64_t index() const;

    std::string to_string() const;

    friend FieldElement operator*(long n, const FieldElement& x);

private:
    using Rep = std::variant<mpq_class, std::vector<long>>;

    FieldElement(FieldPtr field, Rep rep) : field_(std::move(field)), rep_(std::move(rep)) {}

    const mpq_class& rat() const { return std::get<mpq_class>(rep_); }
    const std::vector<long>& coeffs() const { return std::get<std::vector<long>>(rep_); }

    static void require_same_field(const FieldElement& a, const FieldElement& b);

    FieldPtr field_;
    Rep rep_;

    friend class Field;
    friend std::optional<FieldElement> sqrt(const FieldElement& a);
};

inline FieldElement operator+(long n, const FieldElement& x) { return x.field()->from_integer(n) + x; }
inline FieldElement operator-(long n, const FieldElement& x) { return x.field()->from_integer(n) - x; }
inline FieldElement operator+(const FieldElement& x, long n) { return x + x.field()->from_integer(n); }
inline FieldElement operator-(const FieldElement& x, long n) { return x - x.field()->from_integer(n); }
inline FieldElement operator*(const FieldElement& x, long n) { return x.field()->from_integer(n) * x; }
inline FieldElement operator/(const FieldElement& x, long n) { return x / x.field()->from_integer(n); }

/// A square root of a, if one exists in the field; ties between r and -r are
/// broken toward the smaller canonical representative.
std::optional<FieldElement> sqrt(const FieldElement& a);

/// All roots of x^2 + bx + c in the common field of b, c; in characteristic 2
/// with b != 0 the equation is solved through the Artin-Schreier substitution
/// x = by and a trace test on y^2 + y = c/b^2.
std::vector<FieldElement> solve_quadratic(const FieldElement& b, const FieldElement& c);

}  // namespace lpairs
