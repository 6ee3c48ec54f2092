#include "lpairs/basic_sequence.hpp"

#include <algorithm>

namespace lpairs {

const char* leonard_type_name(LeonardType t) {
    switch (t) {
        case LeonardType::O: return "O";
        case LeonardType::I: return "I";
        case LeonardType::II: return "II";
        case LeonardType::IIIPlus: return "III+";
        case LeonardType::IIIMinus: return "III-";
        case LeonardType::IV: return "IV";
    }
    return "?";
}

LeonardType leonard_type_from_name(const std::string& name) {
    if (name == "O") return LeonardType::O;
    if (name == "I") return LeonardType::I;
    if (name == "II") return LeonardType::II;
    if (name == "III+") return LeonardType::IIIPlus;
    if (name == "III-") return LeonardType::IIIMinus;
    if (name == "IV") return LeonardType::IV;
    throw Error(ErrorCode::InvalidInput, "unknown type name '" + name + "'");
}

LeonardType classify_type(const ParameterArray& p) {
    require_valid(p);
    if (p.d <= 2) return LeonardType::O;
    const long ch = p.field->characteristic();
    FieldElement beta = invariants(p).beta;
    FieldElement two = p.field->from_integer(2);
    if (beta == two) {
        if (ch == 2) {
            if (p.d != 3)
                throw Error(ErrorCode::InternalInconsistency, "type IV forces d = 3");
            return LeonardType::IV;
        }
        if (ch != 0 && ch <= p.d)
            throw Error(ErrorCode::InternalInconsistency, "type II forces Char(F) = 0 or > d");
        return LeonardType::II;
    }
    if (beta == -two) {
        // ch != 2 here, since beta = -2 = 2 was handled above.
        if (p.d % 2 == 0) {
            if (ch != 0 && 2 * ch <= p.d)
                throw Error(ErrorCode::InternalInconsistency, "type III+ forces Char(F) = 0 or > d/2");
            return LeonardType::IIIPlus;
        }
        if (ch != 0 && 2 * ch <= p.d - 1)
            throw Error(ErrorCode::InternalInconsistency, "type III- forces Char(F) = 0 or > (d-1)/2");
        return LeonardType::IIIMinus;
    }
    return LeonardType::I;
}

// ---------------------------------------------------------------------------
// BasicSequence accessors

namespace {

[[noreturn]] void wrong_variable(const char* name, LeonardType t) {
    throw Error(ErrorCode::TypeMismatch,
                std::string("variable ") + name + " is not part of a type " + leonard_type_name(t) + " sequence");
}

}  // namespace

const FieldElement& BasicSequence::mu() const {
    if (type == LeonardType::I || type == LeonardType::II) return entries[1];
    wrong_variable("mu", type);
}

const FieldElement& BasicSequence::h() const {
    switch (type) {
        case LeonardType::I:
        case LeonardType::II:
        case LeonardType::IIIPlus:
        case LeonardType::IIIMinus: return entries[2];
        case LeonardType::IV: return entries[1];
        default: wrong_variable("h", type);
    }
}

const FieldElement& BasicSequence::mu_star() const {
    if (type == LeonardType::I || type == LeonardType::II) return entries[4];
    wrong_variable("mu_star", type);
}

const FieldElement& BasicSequence::h_star() const {
    switch (type) {
        case LeonardType::I:
        case LeonardType::II:
        case LeonardType::IIIPlus:
        case LeonardType::IIIMinus: return entries[5];
        case LeonardType::IV: return entries[4];
        default: wrong_variable("h_star", type);
    }
}

const FieldElement& BasicSequence::s() const {
    switch (type) {
        case LeonardType::IIIPlus:
        case LeonardType::IIIMinus: return entries[1];
        case LeonardType::IV: return entries[2];
        default: wrong_variable("s", type);
    }
}

const FieldElement& BasicSequence::s_star() const {
    switch (type) {
        case LeonardType::IIIPlus:
        case LeonardType::IIIMinus: return entries[4];
        case LeonardType::IV: return entries[5];
        default: wrong_variable("s_star", type);
    }
}

const FieldElement& BasicSequence::tau() const {
    if (type != LeonardType::IV && type != LeonardType::O) return entries[6];
    wrong_variable("tau", type);
}

const FieldElement& BasicSequence::r() const {
    if (type == LeonardType::IV) return entries[6];
    wrong_variable("r", type);
}

std::array<const char*, 7> BasicSequence::entry_names() const {
    switch (type) {
        case LeonardType::I:
        case LeonardType::II:
            return {"delta", "mu", "h", "delta_star", "mu_star", "h_star", "tau"};
        case LeonardType::IIIPlus:
        case LeonardType::IIIMinus:
            return {"delta", "s", "h", "delta_star", "s_star", "h_star", "tau"};
        case LeonardType::IV:
            return {"delta", "h", "s", "delta_star", "h_star", "s_star", "r"};
        default:
            throw Error(ErrorCode::TypeO, "type O has no basic sequence");
    }
}

bool BasicSequence::operator==(const BasicSequence& rhs) const {
    if (type != rhs.type) return false;
    if (q.has_value() != rhs.q.has_value()) return false;
    if (q && *q != *rhs.q) return false;
    return entries == rhs.entries;
}

// ---------------------------------------------------------------------------
// array_from_basic

namespace {

void require_type_preconditions(const BasicSequence& b, int d) {
    if (b.type == LeonardType::O)
        throw Error(ErrorCode::TypeO, "type O has no basic parameterization");
    if (d < 3) throw Error(ErrorCode::TypeMismatch, "basic parameterizations need d >= 3");
    const long ch = b.field()->characteristic();
    switch (b.type) {
        case LeonardType::I: {
            if (!b.q) throw Error(ErrorCode::MissingQ, "type I needs q");
            if (b.q->is_zero()) throw Error(ErrorCode::InvalidBasicSequence, "q must be nonzero");
            if (b.q->pow(4).is_one())
                throw Error(ErrorCode::InvalidBasicSequence, "q^4 must differ from 1");
            break;
        }
        case LeonardType::II:
            if (ch == 2) throw Error(ErrorCode::TypeMismatch, "type II needs odd or zero characteristic");
            if (ch != 0 && ch <= d)
                throw Error(ErrorCode::TypeMismatch, "type II needs Char(F) = 0 or > d");
            break;
        case LeonardType::IIIPlus:
            if (ch == 2) throw Error(ErrorCode::TypeMismatch, "type III+ needs odd or zero characteristic");
            if (d % 2 != 0) throw Error(ErrorCode::TypeMismatch, "type III+ needs even d");
            if (ch != 0 && 2 * ch <= d)
                throw Error(ErrorCode::TypeMismatch, "type III+ needs Char(F) = 0 or > d/2");
            break;
        case LeonardType::IIIMinus:
            if (ch == 2) throw Error(ErrorCode::TypeMismatch, "type III- needs odd or zero characteristic");
            if (d % 2 != 1) throw Error(ErrorCode::TypeMismatch, "type III- needs odd d");
            if (ch != 0 && 2 * ch <= d - 1)
                throw Error(ErrorCode::TypeMismatch, "type III- needs Char(F) = 0 or > (d-1)/2");
            break;
        case LeonardType::IV:
            if (ch != 2) throw Error(ErrorCode::TypeMismatch, "type IV needs characteristic 2");
            if (d != 3) throw Error(ErrorCode::TypeMismatch, "type IV needs d = 3");
            break;
        default: break;
    }
}

}  // namespace

ParameterArray array_from_basic(const BasicSequence& b, int d) {
    require_type_preconditions(b, d);
    const FieldPtr& f = b.field();
    auto fe = [&](long n) { return f->from_integer(n); };

    ParameterArray p;
    p.field = f;
    p.d = d;

    switch (b.type) {
        case LeonardType::I: {
            const FieldElement& q = *b.q;
            auto qp = [&](long e) { return q.pow_signed(e); };
            const FieldElement &de = b.delta(), &mu = b.mu(), &h = b.h();
            const FieldElement &ds = b.delta_star(), &mus = b.mu_star(), &hs = b.h_star();
            const FieldElement& tau = b.tau();
            for (int i = 0; i <= d; ++i) {
                p.theta.push_back(de + mu * qp(2 * i - d) + h * qp(d - 2 * i));
                p.theta_star.push_back(ds + mus * qp(2 * i - d) + hs * qp(d - 2 * i));
            }
            for (int i = 1; i <= d; ++i) {
                FieldElement pre = (qp(i) - qp(-i)) * (qp(d - i + 1) - qp(i - d - 1));
                p.varphi.push_back(pre * (tau - mu * mus * qp(2 * i - d - 1) - h * hs * qp(d - 2 * i + 1)));
                p.phi.push_back(pre * (tau - h * mus * qp(2 * i - d - 1) - mu * hs * qp(d - 2 * i + 1)));
            }
            break;
        }
        case LeonardType::II: {
            const FieldElement &de = b.delta(), &mu = b.mu(), &h = b.h();
            const FieldElement &ds = b.delta_star(), &mus = b.mu_star(), &hs = b.h_star();
            const FieldElement& tau = b.tau();
            const FieldElement half = fe(2).inverse();
            const FieldElement dhalf = fe(d) * half;
            const FieldElement d1half = fe(d + 1) * half;
            for (int i = 0; i <= d; ++i) {
                FieldElement shift = fe(i) - dhalf;
                FieldElement quad = fe(i) * fe(d - i);
                p.theta.push_back(de + mu * shift + h * quad);
                p.theta_star.push_back(ds + mus * shift + hs * quad);
            }
            for (int i = 1; i <= d; ++i) {
                FieldElement pre = fe(i) * fe(d - i + 1);
                FieldElement mid = fe(i) - d1half;
                FieldElement corner = h * hs * fe(i - 1) * fe(d - i);
                p.varphi.push_back(pre * (tau - mu * mus * half + (h * mus + mu * hs) * mid + corner));
                p.phi.push_back(pre * (tau + mu * mus * half + (h * mus - mu * hs) * mid + corner));
            }
            break;
        }
        case LeonardType::IIIPlus: {
            const FieldElement &de = b.delta(), &s = b.s(), &h = b.h();
            const FieldElement &ds = b.delta_star(), &ss = b.s_star(), &hs = b.h_star();
            const FieldElement& tau = b.tau();
            const FieldElement half = fe(2).inverse();
            const FieldElement dhalf = fe(d) * half;
            const FieldElement d1half = fe(d + 1) * half;
            for (int i = 0; i <= d; ++i) {
                FieldElement shift = fe(i) - dhalf;
                if (i % 2 == 0) {
                    p.theta.push_back(de + s + h * shift);
                    p.theta_star.push_back(ds + ss + hs * shift);
                } else {
                    p.theta.push_back(de - s - h * shift);
                    p.theta_star.push_back(ds - ss - hs * shift);
                }
            }
            for (int i = 1; i <= d; ++i) {
                FieldElement mid = h * hs * (fe(i) - d1half);
                if (i % 2 == 0) {
                    p.varphi.push_back(fe(i) * (tau - s * hs - ss * h - mid));
                    p.phi.push_back(fe(i) * (tau - s * hs + ss * h + mid));
                } else {
                    p.varphi.push_back(fe(d - i + 1) * (tau + s * hs + ss * h + mid));
                    p.phi.push_back(fe(d - i + 1) * (tau + s * hs - ss * h - mid));
                }
            }
            break;
        }
        case LeonardType::IIIMinus: {
            const FieldElement &de = b.delta(), &s = b.s(), &h = b.h();
            const FieldElement &ds = b.delta_star(), &ss = b.s_star(), &hs = b.h_star();
            const FieldElement& tau = b.tau();
            const FieldElement half = fe(2).inverse();
            const FieldElement dhalf = fe(d) * half;
            for (int i = 0; i <= d; ++i) {
                FieldElement shift = fe(i) - dhalf;
                if (i % 2 == 0) {
                    p.theta.push_back(de + s + h * shift);
                    p.theta_star.push_back(ds + ss + hs * shift);
                } else {
                    p.theta.push_back(de - s - h * shift);
                    p.theta_star.push_back(ds - ss - hs * shift);
                }
            }
            for (int i = 1; i <= d; ++i) {
                FieldElement quad = h * hs * fe(i) * fe(d - i + 1);
                if (i % 2 == 0) {
                    p.varphi.push_back(quad);
                    p.phi.push_back(quad);
                } else {
                    FieldElement swing = fe(2 * i - d - 1);
                    p.varphi.push_back(tau - 2 * (s * ss) + quad - (s * hs + ss * h) * swing);
                    p.phi.push_back(tau + 2 * (s * ss) + quad + (s * hs - ss * h) * swing);
                }
            }
            break;
        }
        case LeonardType::IV: {
            const FieldElement &de = b.delta(), &h = b.h(), &s = b.s();
            const FieldElement &ds = b.delta_star(), &hs = b.h_star(), &ss = b.s_star();
            const FieldElement& r = b.r();
            const FieldElement one = f->one();
            p.theta = {de, de + h * (s + one), de + h, de + h * s};
            p.theta_star = {ds, ds + hs * (ss + one), ds + hs, ds + hs * ss};
            FieldElement hh = h * hs;
            p.varphi = {hh * r, hh, hh * (r + s + ss)};
            p.phi = {hh * (r + s + s * ss), hh, hh * (r + ss + s * ss)};
            break;
        }
        default:
            throw Error(ErrorCode::TypeO, "type O has no basic parameterization");
    }

    ValidationReport rep = validate(p);
    if (!rep.valid) {
        std::string msg = "basic sequence yields an invalid array; violations:";
        for (const auto& v : rep.violations) msg += " (" + v + ")";
        throw Error(ErrorCode::InvalidBasicSequence, msg);
    }
    return p;
}

// ---------------------------------------------------------------------------
// Recovery of basic sequences

std::vector<FieldElement> type1_q_candidates(const ParameterArray& p) {
    FieldElement beta = invariants(p).beta;
    const FieldPtr& f = p.field;
    std::vector<FieldElement> out;
    // q^4 - beta q^2 + 1 = 0, solved as a quadratic in q^2.
    for (const FieldElement& q2 : solve_quadratic(-beta, f->one())) {
        auto root = sqrt(q2);
        if (!root) continue;
        for (FieldElement cand : {*root, -*root}) {
            if (cand.is_zero() || cand.pow(4).is_one()) continue;
            bool ok = true;
            for (int i = 1; i <= p.d && ok; ++i) ok = !cand.pow(static_cast<std::uint64_t>(2 * i)).is_one();
            if (ok) out.push_back(cand);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

BasicSequence basic_from_array(const ParameterArray& p, std::optional<FieldElement> q) {
    LeonardType t = classify_type(p);
    if (t == LeonardType::O) throw Error(ErrorCode::TypeO, "type O arrays have no basic sequence");
    const FieldPtr& f = p.field;
    const int d = p.d;
    auto fe = [&](long n) { return f->from_integer(n); };
    const auto& th = p.theta;
    const auto& ts = p.theta_star;

    BasicSequence b;
    b.type = t;

    switch (t) {
        case LeonardType::I: {
            if (!q) {
                auto cands = type1_q_candidates(p);
                if (cands.empty())
                    throw Error(ErrorCode::MissingRoot, "no q with beta = q^2 + q^{-2} exists in this field");
                q = cands.front();
            }
            if (q->is_zero() || q->pow(4).is_one())
                throw Error(ErrorCode::InvalidInput, "supplied q is degenerate");
            FieldElement beta = invariants(p).beta;
            if (q->pow(2) + q->pow_signed(-2) != beta)
                throw Error(ErrorCode::InvalidInput, "supplied q does not match the fundamental constant");
            b.q = *q;
            auto qp = [&](long e) { return q->pow_signed(e); };
            // Two-by-two linear solve for (mu, h) from consecutive theta gaps.
            auto solve_pair = [&](const std::vector<FieldElement>& v) {
                FieldElement a11 = qp(-d) - qp(2 - d), a12 = qp(d) - qp(d - 2);
                FieldElement a21 = qp(2 - d) - qp(4 - d), a22 = qp(d - 2) - qp(d - 4);
                FieldElement b1 = v[0] - v[1], b2 = v[1] - v[2];
                FieldElement det = a11 * a22 - a12 * a21;
                FieldElement mu = (b1 * a22 - a12 * b2) / det;
                FieldElement h = (a11 * b2 - b1 * a21) / det;
                FieldElement delta = v[0] - mu * qp(-d) - h * qp(d);
                return std::array<FieldElement, 3>{delta, mu, h};
            };
            auto [de, mu, h] = solve_pair(th);
            auto [ds, mus, hs] = solve_pair(ts);
            FieldElement tau = p.vphi(1) / ((qp(1) - qp(-1)) * (qp(d) - qp(-d))) +
                               mu * mus * qp(1 - d) + h * hs * qp(d - 1);
            b.entries = {de, mu, h, ds, mus, hs, tau};
            break;
        }
        case LeonardType::II: {
            auto solve_triple = [&](const std::vector<FieldElement>& v) {
                FieldElement h = ((v[1] - v[0]) - (v[2] - v[1])) / fe(2);
                FieldElement mu = (v[1] - v[0]) - h * fe(d - 1);
                FieldElement delta = v[0] + mu * fe(d) / fe(2);
                return std::array<FieldElement, 3>{delta, mu, h};
            };
            auto [de, mu, h] = solve_triple(th);
            auto [ds, mus, hs] = solve_triple(ts);
            FieldElement tau = p.vphi(1) / fe(d) + mu * mus / fe(2) + (h * mus + mu * hs) * fe(d - 1) / fe(2);
            b.entries = {de, mu, h, ds, mus, hs, tau};
            break;
        }
        case LeonardType::IIIPlus:
        case LeonardType::IIIMinus: {
            auto solve_triple = [&](const std::vector<FieldElement>& v) {
                FieldElement h = (v[2] - v[0]) / fe(2);
                FieldElement even_part = v[0] + h * fe(d) / fe(2);        // delta + s
                FieldElement odd_part = v[1] + h * (fe(1) - fe(d) / fe(2));  // delta - s
                FieldElement delta = (even_part + odd_part) / fe(2);
                FieldElement s = (even_part - odd_part) / fe(2);
                return std::array<FieldElement, 3>{delta, s, h};
            };
            auto [de, s, h] = solve_triple(th);
            auto [ds, ss, hs] = solve_triple(ts);
            FieldElement tau;
            if (t == LeonardType::IIIPlus)
                tau = p.vphi(1) / fe(d) - s * hs - ss * h - h * hs * (fe(1 - d) / fe(2));
            else
                tau = p.vphi(1) + 2 * (s * ss) - fe(d) * (h * hs) + (s * hs + ss * h) * fe(1 - d);
            b.entries = {de, s, h, ds, ss, hs, tau};
            break;
        }
        case LeonardType::IV: {
            FieldElement de = th[0];
            FieldElement h = th[2] - de;
            FieldElement s = (th[3] - de) / h;
            FieldElement ds = ts[0];
            FieldElement hs = ts[2] - ds;
            FieldElement ss = (ts[3] - ds) / hs;
            FieldElement r = p.vphi(1) / (h * hs);
            b.entries = {de, h, s, ds, hs, ss, r};
            break;
        }
        default:
            throw Error(ErrorCode::TypeO, "unreachable");
    }

    if (array_from_basic(b, d) != p)
        throw Error(ErrorCode::InternalInconsistency, "recovered basic sequence does not reproduce the array");
    return b;
}

// ---------------------------------------------------------------------------
// Relatives and affine action

BasicSequence basic_relatives(const BasicSequence& b, Relative which) {
    if (b.type == LeonardType::O) throw Error(ErrorCode::TypeO, "type O has no basic sequence");
    if (which == Relative::Star)
        throw Error(ErrorCode::InvalidInput, "the star relative swaps the primal and dual sides");
    BasicSequence r = b;
    auto& e = r.entries;
    switch (b.type) {
        case LeonardType::I:
        case LeonardType::II:
        case LeonardType::IIIPlus:
        case LeonardType::IIIMinus:
            if (which == Relative::Vee) {
                e[0] = -e[0];
                e[1] = -e[1];
                e[2] = -e[2];
                e[6] = -e[6];
            } else if (b.type == LeonardType::I) {
                // q-side: swap the two geometric coefficients.
                if (which == Relative::Down) std::swap(e[4], e[5]);
                else std::swap(e[1], e[2]);
            } else if (b.type == LeonardType::II) {
                if (which == Relative::Down) e[4] = -e[4];
                else e[1] = -e[1];
            } else if (b.type == LeonardType::IIIPlus) {
                if (which == Relative::Down) e[5] = -e[5];
                else e[2] = -e[2];
            } else {  // IIIMinus: the parity split moves the step sign onto s
                if (which == Relative::Down) e[4] = -e[4];
                else e[1] = -e[1];
            }
            break;
        case LeonardType::IV: {
            const FieldElement &h = b.h(), &s = b.s(), &hs = b.h_star(), &ss = b.s_star();
            if (which == Relative::Down) {
                e[3] = e[3] + hs * ss;
                e[6] = e[6] + ss + s * ss;
            } else if (which == Relative::DDown) {
                e[0] = e[0] + h * s;
                e[6] = e[6] + s + s * ss;
            }
            // Vee is the identity in characteristic 2.
            break;
        }
        default: break;
    }
    return r;
}

BasicSequence basic_affine(const BasicSequence& b, const FieldElement& xi, const FieldElement& zeta,
                           const FieldElement& xi_star, const FieldElement& zeta_star) {
    if (b.type == LeonardType::O) throw Error(ErrorCode::TypeO, "type O has no basic sequence");
    if (xi.is_zero() || xi_star.is_zero())
        throw Error(ErrorCode::ZeroScale, "affine scale factors must be nonzero");
    BasicSequence r = b;
    auto& e = r.entries;
    if (b.type == LeonardType::IV) {
        e[0] = xi * e[0] + zeta;
        e[1] = xi * e[1];
        e[3] = xi_star * e[3] + zeta_star;
        e[4] = xi_star * e[4];
        // s, s_star, r are scale-free.
    } else {
        e[0] = xi * e[0] + zeta;
        e[1] = xi * e[1];
        e[2] = xi * e[2];
        e[3] = xi_star * e[3] + zeta_star;
        e[4] = xi_star * e[4];
        e[5] = xi_star * e[5];
        e[6] = xi * xi_star * e[6];
    }
    return r;
}

FieldElement kappa_from_basic(const BasicSequence& b) {
    switch (b.type) {
        case LeonardType::I: {
            const FieldElement& q = *b.q;
            FieldElement u = q - q.inverse();
            FieldElement v = q.pow(2) - q.pow(2).inverse();
            return b.mu() * b.h() * u * u * v * v;
        }
        case LeonardType::II:
        case LeonardType::IIIPlus:
        case LeonardType::IIIMinus:
            return 4 * (b.h() * b.h());
        case LeonardType::IV:
            return b.h() * b.h();
        default:
            throw Error(ErrorCode::TypeO, "type O has no invariant value");
    }
}

// ---------------------------------------------------------------------------
// RST coefficients and the split-product identity

RSTCoefficients rst_coefficients(LeonardType t, int d, const FieldPtr& field,
                                 const std::optional<FieldElement>& q) {
    if (t == LeonardType::O) throw Error(ErrorCode::TypeO, "type O has no RST coefficients");
    if (d < 3) throw Error(ErrorCode::DegreeTooSmall, "RST coefficients need d >= 3");
    auto fe = [&](long n) { return field->from_integer(n); };
    RSTCoefficients out;
    switch (t) {
        case LeonardType::I: {
            if (!q) throw Error(ErrorCode::MissingQ, "type I RST coefficients need q");
            auto qp = [&](long e) { return q->pow_signed(e); };
            auto g = [&](long e) { return qp(e) - qp(-e); };
            FieldElement den_rs = g(1) * g(1) * g(d) * g(d - 1);
            FieldElement den_t = g(1) * g(1) * g(2) * g(2);
            for (int i = 1; i <= d; ++i) {
                out.R.push_back(g(i) * g(i) * g(d - i) * g(d - i + 1) / den_rs);
                out.S.push_back(g(d - i + 1) * g(d - i + 1) * g(i) * g(i - 1) / den_rs);
                out.T.push_back(g(i) * g(i - 1) * g(d - i) * g(d - i + 1) / den_t);
            }
            break;
        }
        case LeonardType::II: {
            FieldElement den = fe(d) * fe(d - 1);
            for (int i = 1; i <= d; ++i) {
                out.R.push_back(fe(i) * fe(i) * fe(d - i) * fe(d - i + 1) / den);
                out.S.push_back(fe(i) * fe(i - 1) * fe(d - i + 1) * fe(d - i + 1) / den);
                out.T.push_back(fe(i) * fe(i - 1) * fe(d - i) * fe(d - i + 1) / fe(4));
            }
            break;
        }
        case LeonardType::IIIPlus: {
            for (int i = 1; i <= d; ++i) {
                if (i % 2 == 0) {
                    out.R.push_back(field->zero());
                    out.S.push_back(fe(i) / fe(d));
                    out.T.push_back(-(fe(i) * fe(d - i)) / fe(4));
                } else {
                    out.R.push_back(fe(d - i + 1) / fe(d));
                    out.S.push_back(field->zero());
                    out.T.push_back(-(fe(i - 1) * fe(d - i + 1)) / fe(4));
                }
            }
            break;
        }
        case LeonardType::IIIMinus: {
            for (int i = 1; i <= d; ++i) {
                if (i % 2 == 0) {
                    out.R.push_back(field->zero());
                    out.S.push_back(field->zero());
                    out.T.push_back(fe(i) * fe(d - i + 1) / fe(4));
                } else {
                    out.R.push_back(fe(d - i) / fe(d - 1));
                    out.S.push_back(fe(i - 1) / fe(d - 1));
                    out.T.push_back(fe(i - 1) * fe(d - i) / fe(4));
                }
            }
            break;
        }
        case LeonardType::IV: {
            out.R = {fe(1), fe(0), fe(0)};
            out.S = {fe(0), fe(0), fe(1)};
            out.T = {fe(0), fe(1), fe(0)};
            break;
        }
        default: break;
    }
    return out;
}

bool rst_identity_check(const ParameterArray& p, std::optional<FieldElement> q) {
    require_valid(p);
    if (p.d < 3) throw Error(ErrorCode::InvalidInput, "the identity needs d >= 3");
    LeonardType t = classify_type(p);
    if (t == LeonardType::I && !q) {
        auto cands = type1_q_candidates(p);
        if (cands.empty())
            throw Error(ErrorCode::MissingRoot, "no q recoverable in this field");
        q = cands.front();
    }
    RSTCoefficients rst = rst_coefficients(t, p.d, p.field, q);
    FieldElement kappa = invariants(p).kappa;
    const auto& ts = p.theta_star;
    const int d = p.d;
    FieldElement span = ts[0] - ts[static_cast<std::size_t>(d)];
    for (int i = 1; i <= d; ++i) {
        FieldElement lhs = p.vphi(i) * p.ph(i) /
                           ((ts[static_cast<std::size_t>(i - 1)] - ts[static_cast<std::size_t>(d)]) *
                            (ts[static_cast<std::size_t>(i)] - ts[0]));
        FieldElement rhs = rst.R[static_cast<std::size_t>(i - 1)] * p.vphi(1) * p.ph(1) /
                               ((ts[static_cast<std::size_t>(i)] - ts[0]) * span) +
                           rst.S[static_cast<std::size_t>(i - 1)] * p.vphi(d) * p.ph(d) /
                               ((ts[static_cast<std::size_t>(d)] - ts[static_cast<std::size_t>(i - 1)]) * span) +
                           rst.T[static_cast<std::size_t>(i - 1)] * kappa;
        if (lhs != rhs) return false;
    }
    return true;
}

}  // namespace lpairs
