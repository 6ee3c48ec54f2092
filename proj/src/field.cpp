#include "lpairs/field.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace lpairs {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::NotIrreducibleTridiagonal: return "NotIrreducibleTridiagonal";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
        case ErrorCode::InternalInconsistency: return "InternalInconsistency";
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::ZeroScale: return "ZeroScale";
        case ErrorCode::TypeMismatch: return "TypeMismatch";
        case ErrorCode::InvalidBasicSequence: return "InvalidBasicSequence";
        case ErrorCode::TypeO: return "TypeO";
        case ErrorCode::MissingRoot: return "MissingRoot";
        case ErrorCode::MissingQ: return "MissingQ";
        case ErrorCode::ThetaStarMismatch: return "ThetaStarMismatch";
        case ErrorCode::NotCompatible: return "NotCompatible";
        case ErrorCode::WrongDegree: return "WrongDegree";
        case ErrorCode::ConstraintViolated: return "ConstraintViolated";
        case ErrorCode::NotDiagonal: return "NotDiagonal";
        case ErrorCode::EigenvalueNotInField: return "EigenvalueNotInField";
        case ErrorCode::FieldTooLarge: return "FieldTooLarge";
        case ErrorCode::NotInOmega: return "NotInOmega";
        case ErrorCode::ZeroCoordinate: return "ZeroCoordinate";
    }
    return "UnknownError";
}

namespace {

constexpr long kMaxPrime = 1L << 16;

long mod_pos(long a, long p) {
    long r = a % p;
    return r < 0 ? r + p : r;
}

long mul_mod(long a, long b, long p) { return (a * b) % p; }


long inv_mod(long a, long p) {
    a = mod_pos(a, p);
    if (a == 0) throw Error(ErrorCode::DivisionByZero, "zero has no inverse mod " + std::to_string(p));
    long t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        long q = r / new_r;
        long tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    return mod_pos(t, p);
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long f = 2; f * f <= p; ++f)
        if (p % f == 0) return false;
    return true;
}

// --- dense polynomials over GF(p), little-endian coefficients ---

using Poly = std::vector<long>;

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, long p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    poly_trim(c);
    return c;
}

// Remainder of a modulo monic m.
Poly poly_rem(Poly a, const Poly& m, long p) {
    poly_trim(a);
    const std::size_t deg_m = m.size() - 1;
    while (a.size() > deg_m) {
        long lead = a.back();
        std::size_t shift = a.size() - 1 - deg_m;
        if (lead != 0) {
            for (std::size_t i = 0; i < m.size(); ++i)
                a[shift + i] = mod_pos(a[shift + i] - lead * m[i], p);
        }
        a.pop_back();
        poly_trim(a);
        if (a.size() <= deg_m) break;
    }
    return a;
}

// Quotient-remainder division by an arbitrary nonzero divisor.
void poly_divmod(Poly a, const Poly& b, long p, Poly& quot, Poly& rem) {
    poly_trim(a);
    Poly bb = b;
    poly_trim(bb);
    if (bb.empty()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    long lead_inv = inv_mod(bb.back(), p);
    quot.assign(a.size() > bb.size() - 1 ? a.size() - bb.size() + 1 : 0, 0);
    while (a.size() >= bb.size() && !a.empty()) {
        long coef = mul_mod(a.back(), lead_inv, p);
        std::size_t shift = a.size() - bb.size();
        quot[shift] = coef;
        for (std::size_t i = 0; i < bb.size(); ++i)
            a[shift + i] = mod_pos(a[shift + i] - coef * bb[i], p);
        poly_trim(a);
    }
    poly_trim(quot);
    rem = a;
}


// Inverse of a modulo monic m via extended Euclid.
Poly poly_inv_mod(const Poly& a, const Poly& m, long p) {
    Poly r0 = m, r1 = poly_rem(a, m, p);
    Poly t0 = {}, t1 = {1};
    if (r1.empty()) throw Error(ErrorCode::DivisionByZero, "zero has no inverse");
    while (!r1.empty()) {
        Poly q, r2;
        poly_divmod(r0, r1, p, q, r2);
        Poly qt = poly_mul(q, t1, p);
        Poly t2(std::max(t0.size(), qt.size()), 0);
        for (std::size_t i = 0; i < t2.size(); ++i) {
            long x = i < t0.size() ? t0[i] : 0;
            long y = i < qt.size() ? qt[i] : 0;
            t2[i] = mod_pos(x - y, p);
        }
        poly_trim(t2);
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // r0 is the gcd; coprimality with an irreducible modulus forces degree 0.
    if (r0.size() != 1)
        throw Error(ErrorCode::InternalInconsistency, "element not invertible modulo the field modulus");
    long scale = inv_mod(r0[0], p);
    for (auto& c : t0) c = mul_mod(c, scale, p);
    poly_trim(t0);
    return t0;
}

bool modulus_is_irreducible(const Poly& m, long p) {
    const std::size_t deg = m.size() - 1;
    // Degree-one factors: exhaustive root scan.
    for (long x = 0; x < p; ++x) {
        long v = 0;
        for (std::size_t i = m.size(); i-- > 0;) v = mod_pos(v * x + m[i], p);
        if (v == 0) return false;
    }
    if (deg <= 3) return true;  // no root and deg <= 3 means irreducible
    // Trial division by all monic factors of degree 2..deg/2.
    for (std::size_t fd = 2; 2 * fd <= deg; ++fd) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < fd; ++i) {
            count *= static_cast<std::uint64_t>(p);
            if (count > 100000000ULL)
                throw Error(ErrorCode::FieldTooLarge, "modulus irreducibility scan exceeds desk scale");
        }
        Poly f(fd + 1, 0);
        f[fd] = 1;
        for (std::uint64_t k = 0; k < count; ++k) {
            std::uint64_t v = k;
            for (std::size_t i = 0; i < fd; ++i) {
                f[i] = static_cast<long>(v % static_cast<std::uint64_t>(p));
                v /= static_cast<std::uint64_t>(p);
            }
            Poly q, r;
            poly_divmod(m, f, p, q, r);
            if (r.empty()) return false;
        }
    }
    return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// Field

FieldPtr Field::rationals() {
    static FieldPtr instance(new Field(FieldKind::Rational, 0, {}));
    return instance;
}

FieldPtr Field::prime(long p) {
    if (p >= kMaxPrime)
        throw Error(ErrorCode::FieldTooLarge, "prime modulus exceeds desk scale 2^16");
    if (!is_prime(p))
        throw Error(ErrorCode::InvalidInput, std::to_string(p) + " is not prime");
    return FieldPtr(new Field(FieldKind::Prime, p, {}));
}

FieldPtr Field::extension(long p, std::vector<long> modulus) {
    if (p >= kMaxPrime)
        throw Error(ErrorCode::FieldTooLarge, "prime modulus exceeds desk scale 2^16");
    if (!is_prime(p))
        throw Error(ErrorCode::InvalidInput, std::to_string(p) + " is not prime");
    for (auto& c : modulus) c = mod_pos(c, p);
    poly_trim(modulus);
    if (modulus.size() < 3)
        throw Error(ErrorCode::InvalidInput, "extension modulus must have degree >= 2");
    if (modulus.back() != 1)
        throw Error(ErrorCode::InvalidInput, "extension modulus must be monic");
    if (!modulus_is_irreducible(modulus, p))
        throw Error(ErrorCode::InvalidInput, "extension modulus is reducible over GF(p)");
    return FieldPtr(new Field(FieldKind::Extension, p, std::move(modulus)));
}

int Field::degree() const noexcept {
    switch (kind_) {
        case FieldKind::Rational: return 0;
        case FieldKind::Prime: return 1;
        case FieldKind::Extension: return static_cast<int>(modulus_.size()) - 1;
    }
    return 0;
}

std::uint64_t Field::order() const {
    if (!finite()) throw Error(ErrorCode::InvalidInput, "the rationals are infinite");
    std::uint64_t n = 1;
    for (int i = 0; i < degree(); ++i) {
        if (n > (1ULL << 62) / static_cast<std::uint64_t>(p_))
            throw Error(ErrorCode::FieldTooLarge, "field order exceeds 2^62");
        n *= static_cast<std::uint64_t>(p_);
    }
    return n;
}

FieldElement Field::zero() const { return from_integer(0); }
FieldElement Field::one() const { return from_integer(1); }

FieldElement Field::from_integer(long n) const {
    FieldPtr self = std::const_pointer_cast<Field>(shared_from_this());
    switch (kind_) {
        case FieldKind::Rational: return FieldElement(self, mpq_class(n));
        case FieldKind::Prime: return FieldElement(self, std::vector<long>{mod_pos(n, p_)});
        case FieldKind::Extension: {
            std::vector<long> c(static_cast<std::size_t>(degree()), 0);
            c[0] = mod_pos(n, p_);
            return FieldElement(self, std::move(c));
        }
    }
    throw Error(ErrorCode::InternalInconsistency, "unreachable");
}

FieldElement Field::parse(const std::string& text) const {
    FieldPtr self = std::const_pointer_cast<Field>(shared_from_this());
    switch (kind_) {
        case FieldKind::Rational: {
            mpq_class v;
            if (v.set_str(text, 10) != 0)
                throw Error(ErrorCode::InvalidInput, "cannot parse rational '" + text + "'");
            v.canonicalize();
            return FieldElement(self, std::move(v));
        }
        case FieldKind::Prime: {
            try {
                return from_integer(std::stol(text));
            } catch (const std::exception&) {
                throw Error(ErrorCode::InvalidInput, "cannot parse residue '" + text + "'");
            }
        }
        case FieldKind::Extension: {
            if (text.empty() || text.front() != '[' || text.back() != ']')
                throw Error(ErrorCode::InvalidInput, "cannot parse field element '" + text + "'");
            std::vector<long> c;
            std::stringstream ss(text.substr(1, text.size() - 2));
            std::string item;
            while (std::getline(ss, item, ','))
                try {
                    c.push_back(mod_pos(std::stol(item), p_));
                } catch (const std::exception&) {
                    throw Error(ErrorCode::InvalidInput, "cannot parse coefficient '" + item + "'");
                }
            if (c.size() > static_cast<std::size_t>(degree()))
                throw Error(ErrorCode::InvalidInput, "coefficient list longer than field degree");
            c.resize(static_cast<std::size_t>(degree()), 0);
            return FieldElement(self, std::move(c));
        }
    }
    throw Error(ErrorCode::InternalInconsistency, "unreachable");
}

FieldElement Field::element_at(std::uint64_t k) const {
    if (!finite()) throw Error(ErrorCode::InvalidInput, "cannot enumerate the rationals");
    std::vector<long> c(static_cast<std::size_t>(degree()), 0);
    for (auto& coeff : c) {
        coeff = static_cast<long>(k % static_cast<std::uint64_t>(p_));
        k /= static_cast<std::uint64_t>(p_);
    }
    if (k != 0) throw Error(ErrorCode::InvalidInput, "element index out of range");
    return FieldElement(std::const_pointer_cast<Field>(shared_from_this()), std::move(c));
}

bool Field::operator==(const Field& other) const noexcept {
    return kind_ == other.kind_ && p_ == other.p_ && modulus_ == other.modulus_;
}

std::string Field::describe() const {
    switch (kind_) {
        case FieldKind::Rational: return "Q";
        case FieldKind::Prime: return "GF(" + std::to_string(p_) + ")";
        case FieldKind::Extension: {
            std::string s = "GF(" + std::to_string(p_) + "^" + std::to_string(degree()) + ")";
            return s;
        }
    }
    return "?";
}

// ---------------------------------------------------------------------------
// FieldElement

void FieldElement::require_same_field(const FieldElement& a, const FieldElement& b) {
    if (!a.field_ || !b.field_)
        throw Error(ErrorCode::FieldMismatch, "uninitialized field element");
    if (a.field_ != b.field_ && *a.field_ != *b.field_)
        throw Error(ErrorCode::FieldMismatch,
                    a.field_->describe() + " vs " + b.field_->describe());
}

bool FieldElement::is_zero() const {
    if (field_->kind() == FieldKind::Rational) return rat() == 0;
    for (long c : coeffs())
        if (c != 0) return false;
    return true;
}

bool FieldElement::is_one() const {
    if (field_->kind() == FieldKind::Rational) return rat() == 1;
    const auto& c = coeffs();
    if (c[0] != 1) return false;
    for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) return false;
    return true;
}

FieldElement FieldElement::operator-() const {
    if (field_->kind() == FieldKind::Rational) return FieldElement(field_, mpq_class(-rat()));
    const long p = field_->prime_modulus();
    std::vector<long> c = coeffs();
    for (auto& x : c) x = mod_pos(-x, p);
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    require_same_field(*this, rhs);
    if (field_->kind() == FieldKind::Rational) {
        mpq_class v = rat() + rhs.rat();
        return FieldElement(field_, std::move(v));
    }
    const long p = field_->prime_modulus();
    std::vector<long> c = coeffs();
    const auto& d = rhs.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod_pos(c[i] + d[i], p);
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
    require_same_field(*this, rhs);
    if (field_->kind() == FieldKind::Rational) {
        mpq_class v = rat() - rhs.rat();
        return FieldElement(field_, std::move(v));
    }
    const long p = field_->prime_modulus();
    std::vector<long> c = coeffs();
    const auto& d = rhs.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod_pos(c[i] - d[i], p);
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    require_same_field(*this, rhs);
    switch (field_->kind()) {
        case FieldKind::Rational: {
            mpq_class v = rat() * rhs.rat();
            return FieldElement(field_, std::move(v));
        }
        case FieldKind::Prime: {
            const long p = field_->prime_modulus();
            return FieldElement(field_, std::vector<long>{mul_mod(coeffs()[0], rhs.coeffs()[0], p)});
        }
        case FieldKind::Extension: {
            const long p = field_->prime_modulus();
            Poly c = poly_rem(poly_mul(coeffs(), rhs.coeffs(), p), field_->modulus(), p);
            c.resize(static_cast<std::size_t>(field_->degree()), 0);
            return FieldElement(field_, std::move(c));
        }
    }
    throw Error(ErrorCode::InternalInconsistency, "unreachable");
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    switch (field_->kind()) {
        case FieldKind::Rational: {
            mpq_class v = 1 / rat();
            return FieldElement(field_, std::move(v));
        }
        case FieldKind::Prime:
            return FieldElement(field_, std::vector<long>{inv_mod(coeffs()[0], field_->prime_modulus())});
        case FieldKind::Extension: {
            Poly c = poly_inv_mod(coeffs(), field_->modulus(), field_->prime_modulus());
            c.resize(static_cast<std::size_t>(field_->degree()), 0);
            return FieldElement(field_, std::move(c));
        }
    }
    throw Error(ErrorCode::InternalInconsistency, "unreachable");
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
    require_same_field(*this, rhs);
    if (rhs.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
    return *this * rhs.inverse();
}

FieldElement FieldElement::pow(std::uint64_t e) const {
    FieldElement r = field_->one();
    FieldElement base = *this;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

FieldElement FieldElement::pow_signed(long e) const {
    if (e >= 0) return pow(static_cast<std::uint64_t>(e));
    return inverse().pow(static_cast<std::uint64_t>(-e));
}

bool FieldElement::operator==(const FieldElement& rhs) const {
    require_same_field(*this, rhs);
    if (field_->kind() == FieldKind::Rational) return rat() == rhs.rat();
    return coeffs() == rhs.coeffs();
}

bool FieldElement::operator<(const FieldElement& rhs) const {
    require_same_field(*this, rhs);
    if (field_->kind() == FieldKind::Rational) return rat() < rhs.rat();
    return index() < rhs.index();
}

std::uint64_t FieldElement::index() const {
    if (!field_->finite()) throw Error(ErrorCode::InvalidInput, "rationals have no enumeration index");
    const auto& c = coeffs();
    std::uint64_t k = 0;
    for (std::size_t i = c.size(); i-- > 0;)
        k = k * static_cast<std::uint64_t>(field_->prime_modulus()) + static_cast<std::uint64_t>(c[i]);
    return k;
}

std::string FieldElement::to_string() const {
    switch (field_->kind()) {
        case FieldKind::Rational: return rat().get_str();
        case FieldKind::Prime: return std::to_string(coeffs()[0]);
        case FieldKind::Extension: {
            std::string s = "[";
            const auto& c = coeffs();
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(c[i]);
            }
            return s + "]";
        }
    }
    return "?";
}

FieldElement operator*(long n, const FieldElement& x) { return x.field()->from_integer(n) * x; }

// ---------------------------------------------------------------------------
// Square roots and quadratics

namespace {

// Deterministic Tonelli-Shanks over a finite field of odd order q.
std::optional<FieldElement> sqrt_odd_finite(const FieldElement& a) {
    const Field& f = *a.field();
    const std::uint64_t q = f.order();
    const FieldElement one = f.one();
    if (a.is_zero()) return a;
    FieldElement legendre = a.pow((q - 1) / 2);
    if (legendre != one) return std::nullopt;

    FieldElement r = f.zero();
    if (q % 4 == 3) {
        r = a.pow((q + 1) / 4);
    } else {
        std::uint64_t t = q - 1;
        int s = 0;
        while (t % 2 == 0) {
            t /= 2;
            ++s;
        }
        // Smallest non-residue in enumeration order.
        FieldElement z = f.zero();
        for (std::uint64_t k = 2; k < q; ++k) {
            z = f.element_at(k);
            if (z.pow((q - 1) / 2) != one) break;
        }
        FieldElement m_el = z.pow(t);
        FieldElement c = a.pow(t);
        r = a.pow((t + 1) / 2);
        int m = s;
        while (!c.is_one()) {
            FieldElement c2 = c;
            int i = 0;
            while (!c2.is_one()) {
                c2 *= c2;
                ++i;
            }
            FieldElement b = m_el;
            for (int j = 0; j < m - i - 1; ++j) b *= b;
            m_el = b * b;
            c = c * m_el;
            r = r * b;
            m = i;
        }
    }
    FieldElement neg = -r;
    return neg < r ? neg : r;
}

// Solve y^2 + y = u over GF(2^m) by Gaussian elimination on the
// GF(2)-linear map y -> y^2 + y in the power basis.
std::optional<FieldElement> artin_schreier_solve(const FieldElement& u) {
    const Field& f = *u.field();
    const int m = f.degree();
    // Column j holds the coefficients of basis_j^2 + basis_j.
    std::vector<std::vector<int>> col(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        FieldElement bj = f.element_at(1ULL << j);  // t^j
        FieldElement img = bj * bj + bj;
        std::uint64_t idx = img.index();
        col[static_cast<std::size_t>(j)].resize(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) col[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = (idx >> i) & 1;
    }
    std::vector<std::vector<int>> aug(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m) + 1, 0));
    std::uint64_t target = u.index();
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) aug[i][j] = col[j][i];
        aug[i][static_cast<std::size_t>(m)] = (target >> i) & 1;
    }
    std::vector<int> where(static_cast<std::size_t>(m), -1);
    int row = 0;
    for (int c = 0; c < m && row < m; ++c) {
        int pivot = -1;
        for (int r2 = row; r2 < m; ++r2)
            if (aug[r2][c]) {
                pivot = r2;
                break;
            }
        if (pivot < 0) continue;
        std::swap(aug[row], aug[static_cast<std::size_t>(pivot)]);
        for (int r2 = 0; r2 < m; ++r2)
            if (r2 != row && aug[r2][c])
                for (int k = c; k <= m; ++k) aug[r2][k] ^= aug[row][k];
        where[static_cast<std::size_t>(c)] = row;
        ++row;
    }
    for (int r2 = row; r2 < m; ++r2)
        if (aug[r2][static_cast<std::size_t>(m)]) return std::nullopt;
    std::uint64_t y = 0;
    for (int c = 0; c < m; ++c)
        if (where[static_cast<std::size_t>(c)] >= 0 && aug[where[static_cast<std::size_t>(c)]][static_cast<std::size_t>(m)])
            y |= 1ULL << c;
    return f.element_at(y);
}

}  // namespace

std::optional<FieldElement> sqrt(const FieldElement& a) {
    const Field& f = *a.field();
    switch (f.kind()) {
        case FieldKind::Rational: {
            const mpq_class& v = a.rat();
            if (v < 0) return std::nullopt;
            if (mpz_perfect_square_p(v.get_num_mpz_t()) == 0) return std::nullopt;
            if (mpz_perfect_square_p(v.get_den_mpz_t()) == 0) return std::nullopt;
            mpz_class num, den;
            mpz_sqrt(num.get_mpz_t(), v.get_num_mpz_t());
            mpz_sqrt(den.get_mpz_t(), v.get_den_mpz_t());
            mpq_class r(num, den);
            r.canonicalize();
            return FieldElement(a.field_, std::move(r));
        }
        case FieldKind::Prime:
        case FieldKind::Extension: {
            if (f.characteristic() == 2) {
                // Squaring is the Frobenius, so every element has the unique
                // root a^(2^(m-1)).
                const int m = f.degree();
                FieldElement r = a;
                for (int i = 0; i < m - 1; ++i) r *= r;
                return r;
            }
            return sqrt_odd_finite(a);
        }
    }
    return std::nullopt;
}

std::vector<FieldElement> solve_quadratic(const FieldElement& b, const FieldElement& c) {
    const FieldPtr& f = b.field();
    if (*f != *c.field())
        throw Error(ErrorCode::FieldMismatch, "quadratic coefficients from different fields");
    std::vector<FieldElement> roots;
    if (f->characteristic() == 2) {
        if (b.is_zero()) {
            // x^2 = c has the unique Frobenius preimage.
            auto r = sqrt(c);
            if (r) roots.push_back(*r);
        } else {
            FieldElement u = c / (b * b);
            auto y = artin_schreier_solve(u);
            if (y) {
                roots.push_back(b * *y);
                roots.push_back(b * *y + b);
            }
        }
    } else {
        FieldElement disc = b * b - 4 * c;
        auto r = sqrt(disc);
        if (r) {
            FieldElement two_inv = f->from_integer(2).inverse();
            roots.push_back((-b + *r) * two_inv);
            if (!r->is_zero()) roots.push_back((-b - *r) * two_inv);
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace lpairs
