#include "lpairs/parameter_array.hpp"

#include <algorithm>

namespace lpairs {

bool ParameterArray::operator==(const ParameterArray& rhs) const {
    return d == rhs.d && *field == *rhs.field && theta == rhs.theta &&
           theta_star == rhs.theta_star && varphi == rhs.varphi && phi == rhs.phi;
}

void require_shape(const ParameterArray& p) {
    if (!p.field) throw Error(ErrorCode::InvalidInput, "parameter array has no field");
    if (p.d < 1) throw Error(ErrorCode::InvalidInput, "diameter d must be at least 1");
    const auto n = static_cast<std::size_t>(p.d);
    if (p.theta.size() != n + 1 || p.theta_star.size() != n + 1)
        throw Error(ErrorCode::LengthMismatch, "eigenvalue sequences must have length d+1");
    if (p.varphi.size() != n || p.phi.size() != n)
        throw Error(ErrorCode::LengthMismatch, "split sequences must have length d");
}

std::vector<FieldElement> profile_sums(const std::vector<FieldElement>& theta) {
    const int d = static_cast<int>(theta.size()) - 1;
    const FieldElement span = theta[0] - theta[static_cast<std::size_t>(d)];
    std::vector<FieldElement> sums;
    sums.reserve(theta.size());
    FieldElement acc = theta[0].field()->zero();
    sums.push_back(acc);
    for (int l = 0; l < d; ++l) {
        acc += (theta[static_cast<std::size_t>(l)] - theta[static_cast<std::size_t>(d - l)]) / span;
        sums.push_back(acc);
    }
    return sums;
}

ValidationReport validate(const ParameterArray& p) {
    require_shape(p);
    ValidationReport rep;
    const int d = p.d;

    bool distinct = true;
    for (int i = 0; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j)
            if (p.theta[static_cast<std::size_t>(i)] == p.theta[static_cast<std::size_t>(j)] ||
                p.theta_star[static_cast<std::size_t>(i)] == p.theta_star[static_cast<std::size_t>(j)]) {
                if (distinct)
                    rep.violations.push_back("i:" + std::to_string(i) + "," + std::to_string(j));
                distinct = false;
            }

    for (int i = 1; i <= d; ++i)
        if (p.vphi(i).is_zero() || p.ph(i).is_zero())
            rep.violations.push_back("ii:" + std::to_string(i));

    if (distinct) {
        // Summation identities need the profile sums, which divide by
        // theta_0 - theta_d; distinctness guarantees the denominators.
        auto vartheta = profile_sums(p.theta);
        for (int i = 1; i <= d; ++i) {
            FieldElement expect = p.ph(1) * vartheta[static_cast<std::size_t>(i)] +
                                  (p.theta_star[static_cast<std::size_t>(i)] - p.theta_star[0]) *
                                      (p.theta[static_cast<std::size_t>(i - 1)] - p.theta[static_cast<std::size_t>(d)]);
            if (p.vphi(i) != expect) rep.violations.push_back("iii:" + std::to_string(i));
        }
        for (int i = 1; i <= d; ++i) {
            FieldElement expect = p.vphi(1) * vartheta[static_cast<std::size_t>(i)] +
                                  (p.theta_star[static_cast<std::size_t>(i)] - p.theta_star[0]) *
                                      (p.theta[static_cast<std::size_t>(d - i + 1)] - p.theta[0]);
            if (p.ph(i) != expect) rep.violations.push_back("iv:" + std::to_string(i));
        }
        if (d >= 3) {
            FieldElement ratio = (p.theta[0] - p.theta[3]) / (p.theta[1] - p.theta[2]);
            for (int i = 2; i <= d - 1; ++i) {
                FieldElement r = (p.theta[static_cast<std::size_t>(i - 2)] - p.theta[static_cast<std::size_t>(i + 1)]) /
                                 (p.theta[static_cast<std::size_t>(i - 1)] - p.theta[static_cast<std::size_t>(i)]);
                FieldElement rs = (p.theta_star[static_cast<std::size_t>(i - 2)] - p.theta_star[static_cast<std::size_t>(i + 1)]) /
                                  (p.theta_star[static_cast<std::size_t>(i - 1)] - p.theta_star[static_cast<std::size_t>(i)]);
                if (r != ratio || rs != ratio) rep.violations.push_back("v:" + std::to_string(i));
            }
        }
    }

    rep.valid = rep.violations.empty();
    return rep;
}

void require_valid(const ParameterArray& p) {
    ValidationReport rep = validate(p);
    if (!rep.valid) {
        std::string msg = "parameter array violates";
        for (const auto& v : rep.violations) msg += " (" + v + ")";
        throw Error(ErrorCode::InvalidInput, msg);
    }
}

InvariantData invariants(const ParameterArray& p) {
    require_valid(p);
    const int d = p.d;
    if (d <= 2) throw Error(ErrorCode::DegreeTooSmall, "invariants need d >= 3");
    const auto& th = p.theta;

    FieldElement beta = (th[0] - th[3]) / (th[1] - th[2]) - p.field->one();
    FieldElement gamma = th[0] - beta * th[1] + th[2];
    for (int i = 2; i <= d - 1; ++i) {
        FieldElement g = th[static_cast<std::size_t>(i - 1)] - beta * th[static_cast<std::size_t>(i)] +
                         th[static_cast<std::size_t>(i + 1)];
        if (g != gamma)
            throw Error(ErrorCode::InternalInconsistency, "gamma is not i-independent");
    }
    FieldElement varrho = th[0] * th[0] - beta * th[0] * th[1] + th[1] * th[1] - gamma * (th[0] + th[1]);
    for (int i = 2; i <= d; ++i) {
        const FieldElement& a = th[static_cast<std::size_t>(i - 1)];
        const FieldElement& b = th[static_cast<std::size_t>(i)];
        FieldElement r = a * a - beta * a * b + b * b - gamma * (a + b);
        if (r != varrho)
            throw Error(ErrorCode::InternalInconsistency, "varrho is not i-independent");
    }
    FieldElement kappa = gamma * gamma + (2 - beta) * varrho;
    for (int i = 1; i <= d - 1; ++i) {
        FieldElement lhs = (th[static_cast<std::size_t>(i - 1)] - th[static_cast<std::size_t>(i + 1)]) *
                           (th[static_cast<std::size_t>(i - 1)] - th[static_cast<std::size_t>(i + 1)]);
        FieldElement rhs = (beta + 2) * (th[static_cast<std::size_t>(i)] - th[static_cast<std::size_t>(i - 1)]) *
                           (th[static_cast<std::size_t>(i)] - th[static_cast<std::size_t>(i + 1)]);
        if (lhs + rhs != kappa)
            throw Error(ErrorCode::InternalInconsistency, "the two kappa expressions disagree");
    }
    return InvariantData{std::move(beta), std::move(gamma), std::move(varrho), std::move(kappa)};
}

ParameterArray relatives(const ParameterArray& p, Relative which) {
    require_valid(p);
    const int d = p.d;
    ParameterArray r;
    r.field = p.field;
    r.d = d;
    auto rev = [](const std::vector<FieldElement>& v) {
        return std::vector<FieldElement>(v.rbegin(), v.rend());
    };
    auto neg = [](const std::vector<FieldElement>& v) {
        std::vector<FieldElement> out;
        out.reserve(v.size());
        for (const auto& x : v) out.push_back(-x);
        return out;
    };
    switch (which) {
        case Relative::Star:
            r.theta = p.theta_star;
            r.theta_star = p.theta;
            r.varphi = p.varphi;
            r.phi = rev(p.phi);
            break;
        case Relative::Down:
            r.theta = p.theta;
            r.theta_star = rev(p.theta_star);
            r.varphi = rev(p.phi);
            r.phi = rev(p.varphi);
            break;
        case Relative::DDown:
            r.theta = rev(p.theta);
            r.theta_star = p.theta_star;
            r.varphi = p.phi;
            r.phi = p.varphi;
            break;
        case Relative::Vee:
            r.theta = neg(p.theta);
            r.theta_star = p.theta_star;
            r.varphi = neg(p.varphi);
            r.phi = neg(p.phi);
            break;
    }
    require_valid(r);
    return r;
}

ParameterArray affine(const ParameterArray& p, const FieldElement& xi, const FieldElement& zeta,
                      const FieldElement& xi_star, const FieldElement& zeta_star) {
    require_valid(p);
    if (xi.is_zero() || xi_star.is_zero())
        throw Error(ErrorCode::ZeroScale, "affine scale factors must be nonzero");
    ParameterArray r;
    r.field = p.field;
    r.d = p.d;
    for (const auto& t : p.theta) r.theta.push_back(xi * t + zeta);
    for (const auto& t : p.theta_star) r.theta_star.push_back(xi_star * t + zeta_star);
    FieldElement scale = xi * xi_star;
    for (const auto& v : p.varphi) r.varphi.push_back(scale * v);
    for (const auto& v : p.phi) r.phi.push_back(scale * v);
    require_valid(r);
    return r;
}

namespace {

// Split-basis polynomial products evaluated at dual eigenvalues:
// tau*_i(x) = (x - th*_0)...(x - th*_{i-1}) and
// eta*_i(x) = (x - th*_d)...(x - th*_{d-i+1}).
FieldElement tau_star_at(const ParameterArray& p, int i, const FieldElement& x) {
    FieldElement r = p.field->one();
    for (int k = 0; k < i; ++k) r *= x - p.theta_star[static_cast<std::size_t>(k)];
    return r;
}

FieldElement eta_star_at(const ParameterArray& p, int i, const FieldElement& x) {
    FieldElement r = p.field->one();
    for (int k = 0; k < i; ++k) r *= x - p.theta_star[static_cast<std::size_t>(p.d - k)];
    return r;
}

}  // namespace

LeonardRealization realize(const ParameterArray& p) {
    require_valid(p);
    const int d = p.d;
    const auto& th = p.theta;
    const auto& ts = p.theta_star;

    std::vector<FieldElement> a;
    a.reserve(static_cast<std::size_t>(d) + 1);
    a.push_back(th[0] + p.vphi(1) / (ts[0] - ts[1]));
    for (int i = 1; i <= d - 1; ++i)
        a.push_back(th[static_cast<std::size_t>(i)] +
                    p.vphi(i) / (ts[static_cast<std::size_t>(i)] - ts[static_cast<std::size_t>(i - 1)]) +
                    p.vphi(i + 1) / (ts[static_cast<std::size_t>(i)] - ts[static_cast<std::size_t>(i + 1)]));
    a.push_back(th[static_cast<std::size_t>(d)] + p.vphi(d) / (ts[static_cast<std::size_t>(d)] - ts[static_cast<std::size_t>(d - 1)]));

    // Independent route through the second split sequence.
    std::vector<FieldElement> a_check;
    a_check.push_back(th[static_cast<std::size_t>(d)] + p.ph(1) / (ts[0] - ts[1]));
    for (int i = 1; i <= d - 1; ++i)
        a_check.push_back(th[static_cast<std::size_t>(d - i)] +
                          p.ph(i) / (ts[static_cast<std::size_t>(i)] - ts[static_cast<std::size_t>(i - 1)]) +
                          p.ph(i + 1) / (ts[static_cast<std::size_t>(i)] - ts[static_cast<std::size_t>(i + 1)]));
    a_check.push_back(th[0] + p.ph(d) / (ts[static_cast<std::size_t>(d)] - ts[static_cast<std::size_t>(d - 1)]));
    if (a != a_check)
        throw Error(ErrorCode::InternalInconsistency, "the two intersection-number routes disagree");

    // a_d from a_0 alone.
    FieldElement ad = (a[0] * (ts[0] - ts[1]) +
                       th[static_cast<std::size_t>(d)] * (ts[1] - ts[static_cast<std::size_t>(d - 1)]) +
                       th[static_cast<std::size_t>(d - 1)] * (ts[static_cast<std::size_t>(d)] - ts[0])) /
                      (ts[static_cast<std::size_t>(d)] - ts[static_cast<std::size_t>(d - 1)]);
    if (ad != a[static_cast<std::size_t>(d)])
        throw Error(ErrorCode::InternalInconsistency, "endpoint intersection number disagrees");

    FieldElement trace_a = p.field->zero(), trace_th = p.field->zero();
    for (int i = 0; i <= d; ++i) {
        trace_a += a[static_cast<std::size_t>(i)];
        trace_th += th[static_cast<std::size_t>(i)];
    }
    if (trace_a != trace_th)
        throw Error(ErrorCode::InternalInconsistency, "intersection numbers do not sum to the eigenvalue trace");

    std::vector<FieldElement> x;
    x.reserve(static_cast<std::size_t>(d));
    for (int i = 1; i <= d; ++i) {
        FieldElement num = tau_star_at(p, i - 1, ts[static_cast<std::size_t>(i - 1)]) *
                           eta_star_at(p, d - i, ts[static_cast<std::size_t>(i)]);
        FieldElement den = tau_star_at(p, i, ts[static_cast<std::size_t>(i)]) *
                           eta_star_at(p, d - i + 1, ts[static_cast<std::size_t>(i - 1)]);
        if (den.is_zero())
            throw Error(ErrorCode::InternalInconsistency, "vanishing split denominator on a valid array");
        x.push_back(p.vphi(i) * p.ph(i) * num / den);
        if (x.back().is_zero())
            throw Error(ErrorCode::InternalInconsistency, "vanishing superdiagonal on a valid array");
    }

    Matrix m(p.field, d + 1);
    for (int i = 0; i <= d; ++i) m.set(i, i, a[static_cast<std::size_t>(i)]);
    for (int i = 1; i <= d; ++i) {
        m.set(i, i - 1, p.field->one());
        m.set(i - 1, i, x[static_cast<std::size_t>(i - 1)]);
    }
    Matrix a_star = Matrix::diagonal(p.field, ts);
    return LeonardRealization{std::move(m), std::move(a_star), std::move(a), std::move(x)};
}

SplitRealization split_realize(const ParameterArray& p) {
    require_valid(p);
    const int d = p.d;
    Matrix a_split(p.field, d + 1);
    Matrix a_star_split(p.field, d + 1);
    for (int i = 0; i <= d; ++i) {
        a_split.set(i, i, p.theta[static_cast<std::size_t>(i)]);
        a_star_split.set(i, i, p.theta_star[static_cast<std::size_t>(i)]);
    }
    for (int i = 1; i <= d; ++i) {
        a_split.set(i, i - 1, p.field->one());
        a_star_split.set(i - 1, i, p.vphi(i));
    }
    return SplitRealization{std::move(a_split), std::move(a_star_split)};
}

DualBasisData dual_basis_data(const LeonardRealization& r, const FieldElement& theta0) {
    const Matrix& m = r.a_matrix;
    const int n = m.size();
    const int d = n - 1;
    const FieldPtr& f = m.field();

    // Solve A u = theta0 u by forward recurrence with u_0 = 1; the last row
    // certifies that theta0 is an eigenvalue.
    std::vector<FieldElement> u;
    u.push_back(f->one());
    for (int i = 0; i + 1 <= d; ++i) {
        FieldElement rhs = (theta0 - m.at(i, i)) * u[static_cast<std::size_t>(i)];
        if (i > 0) rhs -= u[static_cast<std::size_t>(i - 1)];
        u.push_back(rhs / m.at(i, i + 1));
    }
    FieldElement last = u[static_cast<std::size_t>(d - 1)] + m.at(d, d) * u[static_cast<std::size_t>(d)];
    if (last != theta0 * u[static_cast<std::size_t>(d)])
        throw Error(ErrorCode::InvalidInput, "theta0 is not an eigenvalue of the realization");
    for (const auto& ui : u)
        if (ui.is_zero())
            throw Error(ErrorCode::ZeroCoordinate, "eigenvector has a zero coordinate");

    DualBasisData out;
    out.eigvec0 = u;
    for (int i = 0; i < d; ++i)
        out.b.push_back(m.at(i, i + 1) * u[static_cast<std::size_t>(i + 1)] / u[static_cast<std::size_t>(i)]);
    for (int i = 1; i <= d; ++i)
        out.c.push_back(u[static_cast<std::size_t>(i - 1)] / u[static_cast<std::size_t>(i)]);

    for (int i = 0; i <= d; ++i) {
        FieldElement row = m.at(i, i);
        if (i > 0) row += out.c[static_cast<std::size_t>(i - 1)];
        if (i < d) row += out.b[static_cast<std::size_t>(i)];
        if (row != theta0)
            throw Error(ErrorCode::InternalInconsistency, "dual-basis row sums disagree with theta0");
    }
    for (int i = 1; i <= d; ++i)
        if (out.b[static_cast<std::size_t>(i - 1)] * out.c[static_cast<std::size_t>(i - 1)] != r.x[static_cast<std::size_t>(i - 1)])
            throw Error(ErrorCode::InternalInconsistency, "b c products disagree with x");
    return out;
}

bool is_bipartite(const LeonardRealization& r) {
    return std::all_of(r.a.begin(), r.a.end(), [](const FieldElement& v) { return v.is_zero(); });
}

OneDIdentities one_d_identities(const ParameterArray& p) {
    require_valid(p);
    const int d = p.d;
    const auto& th = p.theta;
    const auto& ts = p.theta_star;
    OneDIdentities out;
    out.head = p.vphi(1) - p.ph(1) == (ts[1] - ts[0]) * (th[0] - th[static_cast<std::size_t>(d)]);
    out.tail = p.vphi(d) - p.ph(1) ==
               (ts[static_cast<std::size_t>(d)] - ts[0]) * (th[static_cast<std::size_t>(d - 1)] - th[static_cast<std::size_t>(d)]);
    out.cross = p.ph(d) - p.vphi(1) == (ts[static_cast<std::size_t>(d)] - ts[0]) * (th[1] - th[0]);
    return out;
}

}  // namespace lpairs
