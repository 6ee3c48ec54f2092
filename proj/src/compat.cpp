#include "lpairs/compat.hpp"

#include <algorithm>

namespace lpairs {

namespace {

void require_shared_theta_star(const CompatInput& c) {
    require_valid(c.p);
    require_valid(c.p_prime);
    if (*c.p.field != *c.p_prime.field || c.p.d != c.p_prime.d ||
        c.p.theta_star != c.p_prime.theta_star)
        throw Error(ErrorCode::ThetaStarMismatch, "the pair must share field, diameter, and theta_star");
}

std::vector<FieldElement> split_products(const ParameterArray& p) {
    std::vector<FieldElement> out;
    for (int i = 1; i <= p.d; ++i) out.push_back(p.vphi(i) * p.ph(i));
    return out;
}

FieldElement a_head(const ParameterArray& p) {
    return p.theta[0] + p.vphi(1) / (p.theta_star[0] - p.theta_star[1]);
}

FieldElement a_tail(const ParameterArray& p) {
    const auto d = static_cast<std::size_t>(p.d);
    return p.theta[d] + p.vphi(p.d) / (p.theta_star[d] - p.theta_star[d - 1]);
}

}  // namespace

bool compatible_by_products(const CompatInput& c) {
    require_shared_theta_star(c);
    bool by_products = split_products(c.p) == split_products(c.p_prime);
    bool by_superdiagonal = realize(c.p).x == realize(c.p_prime).x;
    if (by_products != by_superdiagonal)
        throw Error(ErrorCode::InternalInconsistency,
                    "split products and superdiagonals disagree on compatibility");
    return by_products;
}

bool compatible_by_endpoints(const CompatInput& c) {
    require_shared_theta_star(c);
    const int d = c.p.d;
    auto prod = [](const ParameterArray& p, int i) { return p.vphi(i) * p.ph(i); };
    bool head = prod(c.p, 1) == prod(c.p_prime, 1);
    bool tail = prod(c.p, d) == prod(c.p_prime, d);
    bool result = head && tail;
    if (d >= 3) result = result && invariants(c.p).kappa == invariants(c.p_prime).kappa;

    // Reformulation through the boundary intersection numbers.
    auto corner = [](const ParameterArray& p, const FieldElement& a) {
        return (a - p.theta[0]) * (a - p.theta[static_cast<std::size_t>(p.d)]);
    };
    bool head2 = corner(c.p, a_head(c.p)) == corner(c.p_prime, a_head(c.p_prime));
    bool tail2 = corner(c.p, a_tail(c.p)) == corner(c.p_prime, a_tail(c.p_prime));
    if (head != head2 || tail != tail2)
        throw Error(ErrorCode::InternalInconsistency,
                    "endpoint products and intersection-number corners disagree");
    return result;
}

bool compatible_direct(const CompatInput& c) {
    require_shared_theta_star(c);
    LeonardRealization ra = realize(c.p);
    LeonardRealization rb = realize(c.p_prime);
    bool direct = commutator(ra.a_matrix, ra.a_star) == commutator(rb.a_matrix, rb.a_star);
    if (direct != (split_products(c.p) == split_products(c.p_prime)))
        throw Error(ErrorCode::InternalInconsistency, "commutator test and product test disagree");
    return direct;
}

CompanionResult companion_of(const CompatInput& c) {
    if (!compatible_by_products(c))
        throw Error(ErrorCode::NotCompatible, "the arrays are not compatible");
    LeonardRealization ra = realize(c.p);
    LeonardRealization rb = realize(c.p_prime);
    Matrix k = ra.a_matrix - rb.a_matrix;
    if (!k.is_diagonal())
        throw Error(ErrorCode::InternalInconsistency, "companion of a compatible pair must be diagonal");
    for (int i = 0; i <= c.p.d; ++i)
        if (k.at(i, i) != ra.a[static_cast<std::size_t>(i)] - rb.a[static_cast<std::size_t>(i)])
            throw Error(ErrorCode::InternalInconsistency, "companion entries disagree with a_i - a'_i");
    // -K is a companion of B: B - (-K) = A realizes the first array.
    if (rb.a_matrix - k.scaled(-c.p.field->one()) != ra.a_matrix)
        throw Error(ErrorCode::InternalInconsistency, "negated companion fails to return to A");
    return CompanionResult{std::move(k), std::move(rb.a_matrix), c.p_prime, ""};
}

std::optional<FieldElement> detect_shift(const CompatInput& c) {
    require_shared_theta_star(c);
    const auto d = static_cast<std::size_t>(c.p.d);
    std::optional<FieldElement> zeta;
    bool reversed = false;
    if (c.p_prime.varphi == c.p.varphi && c.p_prime.phi == c.p.phi) {
        zeta = c.p_prime.theta[d] - c.p.theta[d];
    } else if (c.p_prime.varphi == c.p.phi && c.p_prime.phi == c.p.varphi) {
        zeta = c.p_prime.theta[d] - c.p.theta[0];
        reversed = true;
    }
    if (!zeta) return std::nullopt;
    for (std::size_t i = 0; i <= d; ++i) {
        const FieldElement& base = reversed ? c.p.theta[d - i] : c.p.theta[i];
        if (c.p_prime.theta[i] != base + *zeta)
            throw Error(ErrorCode::InternalInconsistency, "shift detection disagrees with theta");
    }
    if (realize(c.p_prime).a_matrix != realize(c.p).a_matrix.plus_scalar_identity(*zeta))
        throw Error(ErrorCode::InternalInconsistency, "shift detection disagrees with realization");
    return zeta;
}

std::optional<FieldElement> detect_bond_shift(const CompatInput& c) {
    require_shared_theta_star(c);
    const auto d = static_cast<std::size_t>(c.p.d);
    auto negated = [](const std::vector<FieldElement>& v) {
        std::vector<FieldElement> out;
        out.reserve(v.size());
        for (const auto& x : v) out.push_back(-x);
        return out;
    };
    std::vector<FieldElement> neg_vphi = negated(c.p.varphi);
    std::vector<FieldElement> neg_phi = negated(c.p.phi);
    std::optional<FieldElement> zeta;
    bool reversed = false;
    if (c.p_prime.varphi == neg_vphi && c.p_prime.phi == neg_phi) {
        zeta = c.p_prime.theta[d] + c.p.theta[d];
    } else if (c.p_prime.varphi == neg_phi && c.p_prime.phi == neg_vphi) {
        zeta = c.p_prime.theta[d] + c.p.theta[0];
        reversed = true;
    }
    if (!zeta) return std::nullopt;
    for (std::size_t i = 0; i <= d; ++i) {
        const FieldElement& base = reversed ? c.p.theta[d - i] : c.p.theta[i];
        if (c.p_prime.theta[i] != *zeta - base)
            throw Error(ErrorCode::InternalInconsistency, "bond-shift detection disagrees with theta");
    }
    if (realize(c.p_prime).a_matrix != bond_mate(realize(c.p).a_matrix).plus_scalar_identity(*zeta))
        throw Error(ErrorCode::InternalInconsistency, "bond-shift detection disagrees with realization");
    return zeta;
}

std::vector<FieldElement> companion_entries_typeO(const CompatInput& c) {
    if (c.p.d > 2) throw Error(ErrorCode::WrongDegree, "closed companion entries exist for d = 1, 2");
    CompanionResult full = companion_of(c);  // throws NotCompatible when needed
    const auto& th = c.p.theta;
    const auto& tp = c.p_prime.theta;
    const auto& ts = c.p.theta_star;
    FieldElement a0 = a_head(c.p);
    FieldElement a0p = a_head(c.p_prime);
    std::vector<FieldElement> k;
    if (c.p.d == 1) {
        k.push_back(a0 - a0p);
        k.push_back(th[0] + th[1] - a0 - tp[0] - tp[1] + a0p);
    } else {
        FieldElement gap12 = ts[1] - ts[2];
        k.push_back(a0 - a0p);
        k.push_back(th[0] + th[2] - a0 - tp[0] - tp[2] + a0p +
                    (a0 - a0p - th[1] + tp[1]) * (ts[0] - ts[1]) / gap12);
        k.push_back(((th[1] - tp[1]) * (ts[0] - ts[2]) - (a0 - a0p) * (ts[0] - ts[1])) / gap12);
    }
    for (std::size_t i = 0; i < k.size(); ++i)
        if (k[i] != full.k.at(static_cast<int>(i), static_cast<int>(i)))
            throw Error(ErrorCode::InternalInconsistency, "closed companion entries disagree with A - B");
    return k;
}

// ---------------------------------------------------------------------------
// Basic-sequence compatibility conditions

bool compat_conditions_basic(const BasicSequence& b, const BasicSequence& bp, int d) {
    if (b.type != bp.type) throw Error(ErrorCode::TypeMismatch, "sequences have different types");
    if (b.type == LeonardType::O) throw Error(ErrorCode::TypeO, "type O has no basic conditions");
    if (b.delta_star() != bp.delta_star() || b.entries[4] != bp.entries[4] || b.entries[5] != bp.entries[5])
        throw Error(ErrorCode::TypeMismatch, "sequences must share the starred variables");
    const FieldPtr& f = b.field();
    auto fe = [&](long n) { return f->from_integer(n); };

    switch (b.type) {
        case LeonardType::I: {
            if (!b.q || !bp.q || *b.q != *bp.q)
                throw Error(ErrorCode::TypeMismatch, "type I sequences must share q");
            const FieldElement &mu = b.mu(), &h = b.h(), &tau = b.tau();
            const FieldElement &mup = bp.mu(), &hp = bp.h(), &taup = bp.tau();
            FieldElement mshs = b.mu_star() * b.h_star();
            return mu * h == mup * hp && tau * (mu + h) == taup * (mup + hp) &&
                   tau * tau + (mu + h) * (mu + h) * mshs == taup * taup + (mup + hp) * (mup + hp) * mshs;
        }
        case LeonardType::II: {
            const FieldElement &mu = b.mu(), &h = b.h(), &tau = b.tau();
            const FieldElement &mup = bp.mu(), &hp = bp.h(), &taup = bp.tau();
            const FieldElement &mus = b.mu_star(), &hs = b.h_star();
            FieldElement w = mus * mus + fe((d - 1) * (d - 1)) * hs * hs;
            return h * h == hp * hp &&
                   2 * (h * tau) + mu * mu * hs == 2 * (hp * taup) + mup * mup * hs &&
                   4 * (tau * tau) - mu * mu * w == 4 * (taup * taup) - mup * mup * w;
        }
        case LeonardType::IIIPlus: {
            const FieldElement &s = b.s(), &h = b.h(), &tau = b.tau();
            const FieldElement &sp = bp.s(), &hp = bp.h(), &taup = bp.tau();
            const FieldElement& hs = b.h_star();
            FieldElement l1 = tau + s * hs, r1 = taup + sp * hs;
            FieldElement l2 = tau - s * hs, r2 = taup - sp * hs;
            return h * h == hp * hp && l1 * l1 == r1 * r1 && l2 * l2 == r2 * r2;
        }
        case LeonardType::IIIMinus: {
            const FieldElement &s = b.s(), &h = b.h(), &tau = b.tau();
            const FieldElement &sp = bp.s(), &hp = bp.h(), &taup = bp.tau();
            const FieldElement &ss = b.s_star(), &hs = b.h_star();
            FieldElement w = 4 * (ss * ss) + fe((d + 1) * (d + 1)) * hs * hs;
            return h * h == hp * hp &&
                   h * tau + 2 * (hs * s * s) == hp * taup + 2 * (hs * sp * sp) &&
                   2 * (hs * tau * tau) + w * h * tau == 2 * (hs * taup * taup) + w * hp * taup;
        }
        case LeonardType::IV: {
            const FieldElement &h = b.h(), &s = b.s(), &r = b.r();
            const FieldElement &hp = bp.h(), &sp = bp.s(), &rp = bp.r();
            const FieldElement& ss = b.s_star();
            FieldElement one = f->one();
            return h == hp && s * (one + s + ss) == sp * (one + sp + ss) &&
                   r * (r + s + s * ss) == rp * (rp + sp + sp * ss);
        }
        default:
            throw Error(ErrorCode::TypeO, "unreachable");
    }
}

// ---------------------------------------------------------------------------
// Companion families

namespace {

struct FamilyContext {
    const BasicSequence& b;
    int d;
    const FieldPtr& f;
    long ch;
};

std::vector<CompanionFamily> list_type1_families(const FamilyContext& ctx) {
    const BasicSequence& b = ctx.b;
    std::vector<CompanionFamily> out;
    FieldElement prod_star = b.mu_star() * b.h_star();
    const bool char2 = ctx.ch == 2;
    {
        CompanionFamily f1;
        f1.id = char2 ? "type1sol1b" : "type1sol1";
        f1.assignments = {{"tau_prime", b.tau().to_string()},
                          {"(mu_prime,h_prime)", "permutation of (" + b.mu().to_string() + "," + b.h().to_string() + ")"}};
        out.push_back(std::move(f1));
    }
    if (!char2) {
        CompanionFamily f2;
        f2.id = "type1sol2";
        f2.assignments = {{"tau_prime", (-b.tau()).to_string()},
                          {"(mu_prime,h_prime)", "permutation of (" + (-b.mu()).to_string() + "," + (-b.h()).to_string() + ")"}};
        out.push_back(std::move(f2));
    }
    if (!prod_star.is_zero()) {
        CompanionFamily f3;
        f3.id = char2 ? "type1sol3b" : "type1sol3";
        f3.requires_sqrt = true;
        f3.assignments = {{"mu_prime*h_prime", (b.mu() * b.h()).to_string()},
                          {"mu_prime+h_prime", "tau*(mu_star*h_star)^(-1/2)"},
                          {"tau_prime", "(mu+h)*(mu_star*h_star)^(1/2)"}};
        out.push_back(std::move(f3));
        if (!char2) {
            CompanionFamily f4;
            f4.id = "type1sol4";
            f4.requires_sqrt = true;
            f4.assignments = {{"mu_prime*h_prime", (b.mu() * b.h()).to_string()},
                              {"mu_prime+h_prime", "-tau*(mu_star*h_star)^(-1/2)"},
                              {"tau_prime", "-(mu+h)*(mu_star*h_star)^(1/2)"}};
            out.push_back(std::move(f4));
        }
    } else {
        CompanionFamily f5;
        f5.id = char2 ? "type1sol5b" : "type1sol5";
        f5.assignments = {{"tau_prime", "0 (needs tau = 0)"}};
        f5.free_parameters = {{"mu_prime", "mu_prime*h_prime = " + (b.mu() * b.h()).to_string()},
                              {"h_prime", "determined by mu_prime when nonzero"}};
        out.push_back(std::move(f5));
    }
    return out;
}

std::vector<CompanionFamily> list_type2_families(const FamilyContext& ctx) {
    const BasicSequence& b = ctx.b;
    std::vector<CompanionFamily> out;
    {
        CompanionFamily f1;
        f1.id = "type2sol1";
        f1.assignments = {{"h_prime", b.h().to_string()},
                          {"tau_prime", b.tau().to_string()},
                          {"mu_prime^2", (b.mu() * b.mu()).to_string()}};
        out.push_back(std::move(f1));
        CompanionFamily f2;
        f2.id = "type2sol2";
        f2.assignments = {{"h_prime", (-b.h()).to_string()},
                          {"tau_prime", (-b.tau()).to_string()},
                          {"mu_prime^2", (b.mu() * b.mu()).to_string()}};
        out.push_back(std::move(f2));
    }
    if (!b.h_star().is_zero() && !b.h().is_zero()) {
        for (const char* id : {"type2sol3", "type2sol4"}) {
            CompanionFamily fam;
            fam.id = id;
            fam.assignments = {{"h_prime", std::string(id) == "type2sol3" ? b.h().to_string() : (-b.h()).to_string()},
                               {"tau_prime", "closed form in h, tau, mu_star, h_star"},
                               {"mu_prime^2", "closed form in mu, h, tau, mu_star, h_star"}};
            out.push_back(std::move(fam));
        }
    }
    if (b.h_star().is_zero()) {
        CompanionFamily f5;
        f5.id = "type2sol5";
        f5.assignments = {{"h_prime", "0 (needs h = 0)"}};
        f5.free_parameters = {{"tau_prime", "4(tau^2 - tau_prime^2) = (mu^2 - mu_prime^2) mu_star^2"},
                              {"mu_prime", "bound by the same relation"}};
        out.push_back(std::move(f5));
    }
    return out;
}

std::vector<CompanionFamily> list_type3_families(const FamilyContext& ctx, bool plus) {
    const BasicSequence& b = ctx.b;
    std::vector<CompanionFamily> out;
    auto add = [&](const char* id, std::map<std::string, std::string> as) {
        CompanionFamily fam;
        fam.id = id;
        fam.assignments = std::move(as);
        out.push_back(std::move(fam));
    };
    if (plus) {
        add("type3+sol1", {{"s_prime", b.s().to_string()}, {"tau_prime", b.tau().to_string()}, {"h_prime^2", (b.h() * b.h()).to_string()}});
        add("type3+sol2", {{"s_prime", (-b.s()).to_string()}, {"tau_prime", (-b.tau()).to_string()}, {"h_prime^2", (b.h() * b.h()).to_string()}});
        add("type3+sol3", {{"s_prime", (b.tau() / b.h_star()).to_string()}, {"tau_prime", (b.s() * b.h_star()).to_string()}, {"h_prime^2", (b.h() * b.h()).to_string()}});
        add("type3+sol4", {{"s_prime", (-(b.tau() / b.h_star())).to_string()}, {"tau_prime", (-(b.s() * b.h_star())).to_string()}, {"h_prime^2", (b.h() * b.h()).to_string()}});
    } else {
        add("type3-sol1", {{"h_prime", b.h().to_string()}, {"tau_prime", b.tau().to_string()}, {"s_prime^2", (b.s() * b.s()).to_string()}});
        add("type3-sol2", {{"h_prime", (-b.h()).to_string()}, {"tau_prime", (-b.tau()).to_string()}, {"s_prime^2", (b.s() * b.s()).to_string()}});
        add("type3-sol3", {{"h_prime", b.h().to_string()}, {"tau_prime", "closed form in s, h, tau, s_star, h_star"}, {"s_prime^2", "closed form in s, h, tau, s_star, h_star"}});
        add("type3-sol4", {{"h_prime", (-b.h()).to_string()}, {"tau_prime", "closed form in s, h, tau, s_star, h_star"}, {"s_prime^2", "closed form in s, h, tau, s_star, h_star"}});
    }
    return out;
}

std::vector<CompanionFamily> list_type4_families(const FamilyContext& ctx) {
    const BasicSequence& b = ctx.b;
    std::vector<CompanionFamily> out;
    {
        CompanionFamily f1;
        f1.id = "type4sol1";
        f1.assignments = {{"h_prime", b.h().to_string()}, {"s_prime", b.s().to_string()}};
        f1.free_parameters = {{"r_prime", "one of " + b.r().to_string() + ", " +
                                              (b.r() + b.s() + b.s() * b.s_star()).to_string()}};
        out.push_back(std::move(f1));
        CompanionFamily f3;
        f3.id = "type4sol3";
        f3.assignments = {{"h_prime", b.h().to_string()},
                          {"s_prime", (b.field()->one() + b.s() + b.s_star()).to_string()}};
        f3.free_parameters = {{"r_prime",
                               "(r+r_prime)/(1+s_star) + r_prime(1+s_star)/(r+r_prime) = s, r_prime + r != 0"}};
        out.push_back(std::move(f3));
    }
    return out;
}

}  // namespace

std::vector<CompanionFamily> companion_families(const BasicSequence& b, int d) {
    if (b.type == LeonardType::O) throw Error(ErrorCode::TypeO, "type O has no solution families");
    array_from_basic(b, d);  // validates b for this diameter
    FamilyContext ctx{b, d, b.field(), b.field()->characteristic()};
    switch (b.type) {
        case LeonardType::I: return list_type1_families(ctx);
        case LeonardType::II: return list_type2_families(ctx);
        case LeonardType::IIIPlus: return list_type3_families(ctx, true);
        case LeonardType::IIIMinus: return list_type3_families(ctx, false);
        case LeonardType::IV: return list_type4_families(ctx);
        default: throw Error(ErrorCode::TypeO, "unreachable");
    }
}

// ---------------------------------------------------------------------------
// Materialization

namespace {

std::optional<FieldElement> lookup(const std::map<std::string, FieldElement>& bindings,
                                   const std::string& name) {
    auto it = bindings.find(name);
    if (it == bindings.end()) return std::nullopt;
    return it->second;
}

FieldElement sqrt_or_throw(const FieldElement& v, const char* what) {
    auto r = sqrt(v);
    if (!r) throw Error(ErrorCode::MissingRoot, std::string("no square root for ") + what);
    return *r;
}

// Resolves an unknown with constraint x^2 = value: an explicit binding is
// verified, otherwise the canonical square root is taken.
FieldElement resolve_quadratic_unknown(const std::map<std::string, FieldElement>& bindings,
                                       const std::string& name, const FieldElement& value) {
    if (auto bound = lookup(bindings, name)) {
        if (*bound * *bound != value)
            throw Error(ErrorCode::ConstraintViolated, name + " fails its quadratic constraint");
        return *bound;
    }
    return sqrt_or_throw(value, name.c_str());
}

struct Materialization {
    BasicSequence primed;
    // Reduced-coordinate closed-form companion entries (before the
    // (delta - delta_prime) I correction), when a published form applies.
    std::optional<std::vector<FieldElement>> closed_form;
    bool closed_form_unreduced = false;  // entries already include the shift
};

Materialization build_primed(const BasicSequence& b, const std::string& id,
                             const std::map<std::string, FieldElement>& bindings, int d) {
    const FieldPtr& f = b.field();
    auto fe = [&](long n) { return f->from_integer(n); };
    Materialization out{b, std::nullopt, false};
    BasicSequence& bp = out.primed;
    const bool vee_like = id == "type1sol2" || id == "type2sol2" || id == "type3+sol2" || id == "type3-sol2";
    FieldElement delta_prime = vee_like ? -b.delta() : b.delta();
    if (auto bound = lookup(bindings, "delta_prime")) delta_prime = *bound;
    bp.entries[0] = delta_prime;
    const FieldElement shift = b.delta() - delta_prime;  // contributes shift * I to K

    auto constant_k = [&](const FieldElement& v) {
        out.closed_form = std::vector<FieldElement>(static_cast<std::size_t>(d) + 1, v);
    };

    if (id == "type1sol1" || id == "type1sol1b" || id == "type2sol1" || id == "type3+sol1" ||
        id == "type3-sol1") {
        // B = A + (delta_prime - delta) I; all other variables unchanged.
        if (auto mp = lookup(bindings, "mu_prime")) {
            if ((b.type == LeonardType::I && !((*mp == b.mu() ) || (*mp == b.h()))) ||
                (b.type == LeonardType::II && *mp * *mp != b.mu() * b.mu()))
                throw Error(ErrorCode::ConstraintViolated, "mu_prime fails the family constraint");
        }
        constant_k(f->zero());
    } else if (id == "type1sol2" || id == "type2sol2" || id == "type3+sol2" || id == "type3-sol2") {
        switch (b.type) {
            case LeonardType::I:
                bp.entries[1] = -b.mu();
                bp.entries[2] = -b.h();
                break;
            case LeonardType::II:
                bp.entries[2] = -b.h();  // mu_prime stays mu (same realization)
                break;
            case LeonardType::IIIPlus:
                bp.entries[1] = -b.s();
                break;
            case LeonardType::IIIMinus:
                bp.entries[2] = -b.h();
                break;
            default: break;
        }
        bp.entries[6] = -b.tau();
        // B = bond mate + (delta_prime + delta) I, so K_i = 2 a_i - (delta + delta_prime).
    } else if (id == "type1sol3" || id == "type1sol4" || id == "type1sol3b") {
        const bool minus = id == "type1sol4";
        FieldElement prod_star = b.mu_star() * b.h_star();
        if (prod_star.is_zero())
            throw Error(ErrorCode::ConstraintViolated, "family needs mu_star h_star nonzero");
        FieldElement omega = sqrt_or_throw(prod_star, "mu_star*h_star");
        if (minus) omega = -omega;
        FieldElement sum = b.tau() / omega;
        FieldElement tau_prime = (b.mu() + b.h()) * omega;
        auto roots = solve_quadratic(-sum, b.mu() * b.h());
        if (roots.empty())
            throw Error(ErrorCode::MissingRoot, "mu_prime, h_prime do not exist in this field");
        bp.entries[1] = roots.front();
        bp.entries[2] = roots.back();
        bp.entries[6] = tau_prime;

        // Published entries under the normalization mu_star h_star = 1.
        const FieldElement& q = *b.q;
        auto qp = [&](long e) { return q.pow_signed(e); };
        FieldElement ms = b.mu_star() / omega;
        FieldElement taun = b.tau() / omega;
        FieldElement core = b.mu() + b.h() - taun;  // (mu + h - tau) with the family's omega sign
        std::vector<FieldElement> k;
        k.push_back(qp(d) * (ms - qp(-d - 1)) * core / (ms - qp(d - 1)));
        for (int i = 1; i <= d - 1; ++i)
            k.push_back(qp(d - 2 * i) * (ms - qp(-d - 1)) * (ms - qp(d + 1)) * core /
                        ((ms - qp(d - 2 * i - 1)) * (ms - qp(d - 2 * i + 1))));
        k.push_back(qp(-d) * (ms - qp(d + 1)) * core / (ms - qp(1 - d)));
        out.closed_form = std::move(k);
    } else if (id == "type1sol5" || id == "type1sol5b") {
        if (!(b.mu_star() * b.h_star()).is_zero())
            throw Error(ErrorCode::ConstraintViolated, "family needs mu_star h_star = 0");
        if (!b.tau().is_zero())
            throw Error(ErrorCode::ConstraintViolated, "family needs tau = 0");
        bp.entries[6] = f->zero();
        FieldElement target = b.mu() * b.h();
        auto mp = lookup(bindings, "mu_prime");
        auto hp = lookup(bindings, "h_prime");
        if (mp && hp) {
            if (*mp * *hp != target)
                throw Error(ErrorCode::ConstraintViolated, "mu_prime h_prime must equal mu h");
        } else if (mp && !mp->is_zero()) {
            hp = target / *mp;
        } else {
            throw Error(ErrorCode::ConstraintViolated,
                        "bind mu_prime (nonzero) or both mu_prime and h_prime");
        }
        bp.entries[1] = *mp;
        bp.entries[2] = *hp;
        const FieldElement& q = *b.q;
        FieldElement gap = b.mu() + b.h() - *mp - *hp;
        std::vector<FieldElement> k;
        for (int i = 0; i <= d; ++i)
            k.push_back(b.mu_star().is_zero() ? q.pow_signed(2 * i - d) * gap
                                              : q.pow_signed(d - 2 * i) * gap);
        out.closed_form = std::move(k);
    } else if (id == "type2sol3" || id == "type2sol4") {
        const bool flip = id == "type2sol4";
        const FieldElement &mu = b.mu(), &h = b.h(), &tau = b.tau();
        const FieldElement &ms = b.mu_star(), &hs = b.h_star();
        if (hs.is_zero() || h.is_zero())
            throw Error(ErrorCode::ConstraintViolated, "family needs h and h_star nonzero");
        FieldElement w = ms * ms + fe((d - 1) * (d - 1)) * hs * hs;
        FieldElement drive = 4 * (hs * tau) + h * w;
        FieldElement tau_prime = flip ? tau + h * w / (2 * hs) : -tau - h * w / (2 * hs);
        FieldElement mu2 = mu * mu + h * drive / (hs * hs);
        bp.entries[1] = resolve_quadratic_unknown(bindings, "mu_prime", mu2);
        bp.entries[2] = flip ? -h : h;
        bp.entries[6] = tau_prime;

        std::vector<FieldElement> k;
        if (!flip) {
            FieldElement denom0 = 2 * (hs * (ms + fe(d - 1) * hs));
            k.push_back(-(fe(d) * drive) / denom0);
            for (int i = 1; i <= d - 1; ++i) {
                FieldElement num = (fe(d - 2 * i) * ms + fe(d * (d + 1) - 2 * i * (d - i)) * hs) * drive;
                FieldElement den = 2 * (hs * (ms + fe(d - 2 * i - 1) * hs) * (ms + fe(d - 2 * i + 1) * hs));
                k.push_back(-(num / den));
            }
            k.push_back(-(fe(d) * drive) / (2 * (hs * (-ms + fe(d - 1) * hs))));
        } else {
            k.push_back(fe(d) * h * (ms + fe(d - 1) * hs) / (2 * hs));
            for (int i = 1; i <= d - 1; ++i)
                k.push_back(h * (fe(d - 2 * i) * ms + fe(d * (d - 1) - 2 * i * (d - i)) * hs) / (2 * hs));
            k.push_back(fe(d) * h * (-ms + fe(d - 1) * hs) / (2 * hs));
        }
        out.closed_form = std::move(k);
    } else if (id == "type2sol5") {
        const FieldElement &mu = b.mu(), &tau = b.tau();
        const FieldElement& ms = b.mu_star();
        if (!b.h_star().is_zero() || !b.h().is_zero())
            throw Error(ErrorCode::ConstraintViolated, "family needs h = h_star = 0");
        auto tp = lookup(bindings, "tau_prime");
        auto mp = lookup(bindings, "mu_prime");
        if (!tp && !mp)
            throw Error(ErrorCode::ConstraintViolated, "bind tau_prime or mu_prime");
        if (tp && mp) {
            if (4 * (tau * tau - *tp * *tp) != (mu * mu - *mp * *mp) * ms * ms)
                throw Error(ErrorCode::ConstraintViolated, "bindings violate the family relation");
        } else if (tp) {
            FieldElement mu2 = mu * mu - 4 * (tau * tau - *tp * *tp) / (ms * ms);
            mp = sqrt_or_throw(mu2, "mu_prime");
        } else {
            FieldElement tau2 = tau * tau - (mu * mu - *mp * *mp) * ms * ms / fe(4);
            tp = sqrt_or_throw(tau2, "tau_prime");
        }
        bp.entries[1] = *mp;
        bp.entries[6] = *tp;
        std::vector<FieldElement> k;
        for (int i = 0; i <= d; ++i) k.push_back(-(fe(d - 2 * i) * (tau - *tp)) / ms);
        out.closed_form = std::move(k);
    } else if (id == "type3+sol3" || id == "type3+sol4") {
        const bool minus = id == "type3+sol4";
        const FieldElement &s = b.s(), &h = b.h(), &tau = b.tau();
        const FieldElement &ss = b.s_star(), &hs = b.h_star();
        bp.entries[1] = minus ? -(tau / hs) : tau / hs;
        bp.entries[2] = h;
        bp.entries[6] = minus ? -(s * hs) : s * hs;

        std::vector<FieldElement> k;
        if (!minus) {
            FieldElement core = s - tau / hs;
            FieldElement swing = 2 * ss - fe(d + 1) * hs;
            k.push_back(core);
            for (int i = 1; i <= d; ++i) {
                if (i % 2 == 0)
                    k.push_back(core * swing / (2 * ss - fe(d - 2 * i + 1) * hs));
                else
                    k.push_back(-(core * swing / (2 * ss - fe(d - 2 * i - 1) * hs)));
            }
        } else {
            FieldElement core = s + tau / hs;
            FieldElement swing = 2 * ss + fe(d + 1) * hs;
            for (int i = 0; i <= d - 1; ++i) {
                if (i % 2 == 0)
                    k.push_back(core * swing / (2 * ss - fe(d - 2 * i - 1) * hs));
                else
                    k.push_back(-(core * swing / (2 * ss - fe(d - 2 * i + 1) * hs)));
            }
            k.push_back(core);
        }
        out.closed_form = std::move(k);
    } else if (id == "type3-sol3" || id == "type3-sol4") {
        const bool flip = id == "type3-sol4";
        const FieldElement &s = b.s(), &h = b.h(), &tau = b.tau();
        const FieldElement &ss = b.s_star(), &hs = b.h_star();
        FieldElement ratio = ss / hs;
        FieldElement half_d1 = fe(d + 1) / fe(2);
        FieldElement w = ratio * ratio + half_d1 * half_d1;
        FieldElement tau_prime = flip ? tau + 2 * (h * hs * w) : -tau - 2 * (h * hs * w);
        FieldElement s2 = s * s + (h / hs) * tau + h * h * w;
        bp.entries[1] = resolve_quadratic_unknown(bindings, "s_prime", s2);
        bp.entries[2] = flip ? -h : h;
        bp.entries[6] = tau_prime;

        std::vector<FieldElement> k;
        FieldElement half_dm1 = fe(d - 1) / fe(2);
        if (!flip) {
            FieldElement num = tau + h * hs * w;
            for (int i = 0; i <= d; ++i) {
                if (i % 2 == 0)
                    k.push_back(num / (ss - (half_dm1 - fe(i)) * hs));
                else
                    k.push_back(-(num / (ss - (half_d1 - fe(i)) * hs)));
            }
        } else {
            FieldElement num = h * hs * (ratio * ratio - half_d1 * half_d1);
            k.push_back(-(h * (ratio + half_d1)));
            for (int i = 1; i <= d - 1; ++i) {
                if (i % 2 == 0)
                    k.push_back(-(num / (ss - (half_d1 - fe(i)) * hs)));
                else
                    k.push_back(num / (ss - (half_dm1 - fe(i)) * hs));
            }
            k.push_back(h * (ratio - half_d1));
        }
        out.closed_form = std::move(k);
    } else if (id == "type4sol1") {
        const FieldElement &s = b.s(), &ss = b.s_star(), &r = b.r();
        FieldElement alt = r + s + s * ss;
        FieldElement r_prime = r;
        if (auto bound = lookup(bindings, "r_prime")) {
            if (*bound != r && *bound != alt)
                throw Error(ErrorCode::ConstraintViolated, "r_prime must be r or r + s + s s_star");
            r_prime = *bound;
        }
        bp.entries[6] = r_prime;
        constant_k(r_prime == r ? f->zero() : b.h() * s);
    } else if (id == "type4sol3") {
        const FieldElement &h = b.h(), &s = b.s(), &ss = b.s_star(), &r = b.r();
        FieldElement one = f->one();
        FieldElement s_prime = one + s + ss;
        FieldElement lin = (one + ss) * (one + s + ss);
        FieldElement con = r * (r + s + s * ss);
        FieldElement r_prime = f->zero();
        if (auto bound = lookup(bindings, "r_prime")) {
            if (*bound * *bound + lin * *bound + con != f->zero() || (*bound + r).is_zero())
                throw Error(ErrorCode::ConstraintViolated, "r_prime fails the family quadratic");
            r_prime = *bound;
        } else {
            auto roots = solve_quadratic(lin, con);
            roots.erase(std::remove_if(roots.begin(), roots.end(),
                                       [&](const FieldElement& x) { return (x + r).is_zero(); }),
                        roots.end());
            if (roots.empty())
                throw Error(ErrorCode::MissingRoot, "no admissible r_prime in this field");
            r_prime = roots.front();
        }
        bp.entries[2] = s_prime;
        bp.entries[6] = r_prime;

        FieldElement gap = h * (r + r_prime) / (ss + one);
        std::vector<FieldElement> k{shift + gap, shift + h * (one + ss) + gap, shift + h + gap,
                                    shift + h * ss + gap};
        out.closed_form = std::move(k);
        out.closed_form_unreduced = true;
    } else {
        throw Error(ErrorCode::InvalidInput, "unknown family id '" + id + "'");
    }
    return out;
}

}  // namespace

CompanionResult materialize_family(const BasicSequence& b, const std::string& family_id,
                                   const std::map<std::string, FieldElement>& bindings, int d) {
    ParameterArray p = array_from_basic(b, d);
    Materialization mat = build_primed(b, family_id, bindings, d);
    ParameterArray pp = array_from_basic(mat.primed, d);  // throws InvalidBasicSequence when degenerate

    if (!compat_conditions_basic(b, mat.primed, d))
        throw Error(ErrorCode::InternalInconsistency, "family member violates the compatibility conditions");

    LeonardRealization ra = realize(p);
    LeonardRealization rb = realize(pp);
    Matrix k = ra.a_matrix - rb.a_matrix;
    if (!k.is_diagonal())
        throw Error(ErrorCode::InternalInconsistency, "family companion is not diagonal");

    if (mat.closed_form) {
        const FieldElement shift = b.delta() - mat.primed.delta();
        for (int i = 0; i <= d; ++i) {
            FieldElement expect = (*mat.closed_form)[static_cast<std::size_t>(i)];
            if (!mat.closed_form_unreduced) expect += shift;
            if (k.at(i, i) != expect)
                throw Error(ErrorCode::InternalInconsistency,
                            "closed-form companion entries disagree with A - B for " + family_id);
        }
    } else {
        const bool vee_like = family_id == "type1sol2" || family_id == "type2sol2" ||
                              family_id == "type3+sol2" || family_id == "type3-sol2";
        if (vee_like) {
            // Such members satisfy B = bond(A) + (delta + delta_prime) I.
            FieldElement zeta = b.delta() + mat.primed.delta();
            for (int i = 0; i <= d; ++i) {
                FieldElement expect = 2 * ra.a[static_cast<std::size_t>(i)] - zeta;
                if (k.at(i, i) != expect)
                    throw Error(ErrorCode::InternalInconsistency,
                                "bond companion entries disagree with 2 a_i for " + family_id);
            }
        }
    }

    return CompanionResult{std::move(k), std::move(rb.a_matrix), std::move(pp), family_id};
}

}  // namespace lpairs
