#include "lpairs/oracle.hpp"

#include <algorithm>
#include <thread>

#include <gmpxx.h>

namespace lpairs {

namespace {

using Poly = std::vector<FieldElement>;  // little-endian

FieldElement poly_eval(const Poly& p, const FieldElement& x) {
    FieldElement v = x.field()->zero();
    for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

// Synthetic division of p by (x - r); p must vanish at r.
Poly poly_deflate(const Poly& p, const FieldElement& r) {
    Poly q(p.size() - 1, r.field()->zero());
    FieldElement carry = r.field()->zero();
    for (std::size_t i = p.size(); i-- > 1;) {
        carry = p[i] + carry * r;
        q[i - 1] = carry;
    }
    return q;
}

// Integer divisors of |n| by capped trial-division factoring; empty return
// signals the cap was hit.
std::vector<mpz_class> capped_divisors(mpz_class n) {
    n = abs(n);
    if (n == 0) return {};
    std::vector<std::pair<mpz_class, int>> factors;
    auto push = [&](const mpz_class& f) {
        int e = 0;
        while (mpz_divisible_p(n.get_mpz_t(), f.get_mpz_t())) {
            n /= f;
            ++e;
        }
        if (e) factors.emplace_back(f, e);
    };
    push(2);
    for (mpz_class f = 3; f * f <= n && f < 2000000; f += 2) push(f);
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 32)) {
            factors.emplace_back(n, 1);
        } else {
            return {};  // incomplete factorization at desk scale
        }
    }
    std::vector<mpz_class> divisors{1};
    for (const auto& [f, e] : factors) {
        std::size_t base = divisors.size();
        mpz_class fe = 1;
        for (int k = 1; k <= e; ++k) {
            fe *= f;
            for (std::size_t i = 0; i < base; ++i) {
                divisors.push_back(divisors[i] * fe);
                if (divisors.size() > 200000) return {};
            }
        }
    }
    return divisors;
}

// Rational roots of a monic polynomial over Q, with multiplicity, by the
// integer-root test on the denominator-cleared polynomial.
std::vector<FieldElement> rational_roots(Poly p, const FieldPtr& field) {
    std::vector<FieldElement> roots;
    while (p.size() > 1) {
        // Strip roots at zero.
        if (p[0].is_zero()) {
            roots.push_back(field->zero());
            p.erase(p.begin());
            continue;
        }
        // Clear denominators: y = L x turns the monic p into a monic integer
        // polynomial in y whose integer roots are L * (rational roots of p).
        mpz_class lcm = 1;
        std::vector<mpq_class> coeffs;
        coeffs.reserve(p.size());
        for (const auto& c : p) {
            mpq_class v(c.to_string());
            v.canonicalize();
            coeffs.push_back(v);
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
        }
        const std::size_t n = p.size() - 1;
        mpz_class scale = 1;
        mpz_class constant;  // q(0) = c_0 * L^n
        {
            for (std::size_t k = 0; k < n; ++k) scale *= lcm;
            mpq_class c0 = coeffs[0] * mpq_class(scale);
            constant = c0.get_num();  // denominator is 1 by construction
        }
        auto divisors = capped_divisors(constant);
        if (divisors.empty())
            throw Error(ErrorCode::EigenvalueNotInField,
                        "integer factorization exceeded the desk-scale cap");
        bool found = false;
        for (const auto& dv : divisors) {
            for (int sign : {1, -1}) {
                mpq_class cand(sign * dv, lcm);
                cand.canonicalize();
                FieldElement x = field->parse(cand.get_str());
                if (poly_eval(p, x).is_zero()) {
                    roots.push_back(x);
                    p = poly_deflate(p, x);
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        if (!found) break;  // remaining factor has no rational root
    }
    return roots;
}

}  // namespace

std::vector<FieldElement> char_poly_tridiagonal(const Matrix& m) {
    const FieldPtr& f = m.field();
    const int n = m.size();
    // Continuant recurrence on leading principal minors of xI - m.
    Poly prev{f->one()};  // D_{-1}
    Poly cur{-m.at(0, 0), f->one()};
    for (int i = 1; i < n; ++i) {
        Poly next(cur.size() + 1, f->zero());
        for (std::size_t k = 0; k < cur.size(); ++k) {
            next[k + 1] += cur[k];
            next[k] -= m.at(i, i) * cur[k];
        }
        FieldElement w = m.at(i, i - 1) * m.at(i - 1, i);
        for (std::size_t k = 0; k < prev.size(); ++k) next[k] -= w * prev[k];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::vector<FieldElement> polynomial_roots(const std::vector<FieldElement>& poly, const FieldPtr& field) {
    if (field->finite()) {
        std::vector<FieldElement> roots;
        Poly p = poly;
        const std::uint64_t q = field->order();
        for (std::uint64_t k = 0; k < q && p.size() > 1; ++k) {
            FieldElement x = field->element_at(k);
            while (p.size() > 1 && poly_eval(p, x).is_zero()) {
                roots.push_back(x);
                p = poly_deflate(p, x);
            }
        }
        if (p.size() > 1)
            throw Error(ErrorCode::EigenvalueNotInField, "polynomial does not split over the field");
        return roots;
    }
    Poly p = poly;
    std::vector<FieldElement> roots = rational_roots(p, field);
    if (roots.size() < poly.size() - 1) {
        // Determine whether the unfactored part genuinely lacks rational
        // roots or whether we gave up: rational_roots throws on the cap, so
        // reaching here with missing roots means the residual is irrational.
        throw Error(ErrorCode::EigenvalueNotInField, "polynomial has irrational eigenvalues");
    }
    return roots;
}

EigenData eigen_data(const Matrix& a) {
    TridiagonalClass cls = tridiagonal_class(a);
    if (!cls.irreducible)
        throw Error(ErrorCode::NotIrreducibleTridiagonal, "eigen data needs an irreducible tridiagonal matrix");
    const FieldPtr& f = a.field();
    const int n = a.size();
    Poly cp = char_poly_tridiagonal(a);
    std::vector<FieldElement> eigs = polynomial_roots(cp, f);
    std::sort(eigs.begin(), eigs.end());
    for (std::size_t i = 1; i < eigs.size(); ++i)
        if (eigs[i] == eigs[i - 1])
            throw Error(ErrorCode::InvalidInput, "matrix is not multiplicity-free");

    EigenData out{std::move(eigs), {}, Matrix(f, n)};
    for (int c = 0; c < n; ++c) {
        const FieldElement& lambda = out.eigenvalues[static_cast<std::size_t>(c)];
        // Eigenvector by forward recurrence; superdiagonal entries are
        // nonzero, so v is determined by v_0 = 1.
        std::vector<FieldElement> v{f->one()};
        for (int i = 0; i + 1 < n; ++i) {
            FieldElement rhs = (lambda - a.at(i, i)) * v[static_cast<std::size_t>(i)];
            if (i > 0) rhs -= a.at(i, i - 1) * v[static_cast<std::size_t>(i - 1)];
            v.push_back(rhs / a.at(i, i + 1));
        }
        FieldElement last = a.at(n - 1, n - 2) * v[static_cast<std::size_t>(n - 2)] +
                            a.at(n - 1, n - 1) * v[static_cast<std::size_t>(n - 1)];
        if (last != lambda * v[static_cast<std::size_t>(n - 1)])
            throw Error(ErrorCode::InternalInconsistency, "eigenvector recurrence failed at the last row");
        for (int i = 0; i < n; ++i) out.p.set(i, c, v[static_cast<std::size_t>(i)]);
        out.eigenvectors.push_back(std::move(v));
    }
    return out;
}

namespace {

Matrix inverse(const Matrix& m) {
    const FieldPtr& f = m.field();
    const int n = m.size();
    Matrix a = m;
    Matrix inv = Matrix::identity(f, n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!a.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw Error(ErrorCode::InvalidInput, "matrix is singular");
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                FieldElement t = a.at(col, j);
                a.set(col, j, a.at(pivot, j));
                a.set(pivot, j, t);
                t = inv.at(col, j);
                inv.set(col, j, inv.at(pivot, j));
                inv.set(pivot, j, t);
            }
        FieldElement scale = a.at(col, col).inverse();
        for (int j = 0; j < n; ++j) {
            a.set(col, j, scale * a.at(col, j));
            inv.set(col, j, scale * inv.at(col, j));
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a.at(r, col).is_zero()) continue;
            FieldElement factor = a.at(r, col);
            for (int j = 0; j < n; ++j) {
                a.set(r, j, a.at(r, j) - factor * a.at(col, j));
                inv.set(r, j, inv.at(r, j) - factor * inv.at(col, j));
            }
        }
    }
    return inv;
}

// Orders the vertices of the nonzero off-diagonal pattern of m along a
// Hamiltonian path, if the pattern is one (every degree <= 2, two endpoints,
// connected, acyclic). Returns the vertex order or empty.
std::vector<int> path_order(const Matrix& m) {
    const int n = m.size();
    if (n == 1) return {0};
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!m.at(i, j).is_zero() || !m.at(j, i).is_zero()) {
                adj[static_cast<std::size_t>(i)].push_back(j);
                adj[static_cast<std::size_t>(j)].push_back(i);
            }
    std::vector<int> ends;
    for (int i = 0; i < n; ++i) {
        if (adj[static_cast<std::size_t>(i)].size() > 2 || adj[static_cast<std::size_t>(i)].empty()) return {};
        if (adj[static_cast<std::size_t>(i)].size() == 1) ends.push_back(i);
    }
    if (ends.size() != 2) return {};
    std::vector<int> order{ends[0]};
    int prev = -1, cur = ends[0];
    while (static_cast<int>(order.size()) < n) {
        int next = -1;
        for (int cand : adj[static_cast<std::size_t>(cur)])
            if (cand != prev) {
                next = cand;
                break;
            }
        if (next < 0) return {};
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    return order;
}

bool diagonal_distinct(const Matrix& m) {
    const int n = m.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (m.at(i, i) == m.at(j, j)) return false;
    return true;
}

}  // namespace

LeonardPairCheck is_leonard_pair(const Matrix& a, const Matrix& a_star) {
    if (a.size() != a_star.size() || *a.field() != *a_star.field())
        throw Error(ErrorCode::LengthMismatch, "pair members disagree in size or field");
    if (a.size() < 2) throw Error(ErrorCode::InvalidInput, "need dimension d+1 >= 2");
    if (!a_star.is_diagonal())
        throw Error(ErrorCode::NotDiagonal, "the second matrix must be diagonal");
    if (!diagonal_distinct(a_star))
        throw Error(ErrorCode::NotDiagonal, "the second matrix must have distinct diagonal entries");

    LeonardPairCheck out;
    if (!tridiagonal_class(a).irreducible) return out;  // condition (i) fails in this basis

    std::optional<EigenData> ed;
    try {
        ed = eigen_data(a);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::EigenvalueNotInField) throw;
        return out;  // repeated eigenvalues: not multiplicity-free
    }

    Matrix conj = inverse(ed->p) * a_star * ed->p;
    std::vector<int> order = path_order(conj);
    if (order.empty()) return out;

    // Verify the permuted conjugate really is irreducible tridiagonal.
    const int n = a.size();
    Matrix permuted(a.field(), n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            permuted.set(i, j, conj.at(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]));
    if (!tridiagonal_class(permuted).irreducible) return out;

    out.is_pair = true;
    std::vector<FieldElement> seq;
    seq.reserve(static_cast<std::size_t>(n));
    for (int idx : order) seq.push_back(ed->eigenvalues[static_cast<std::size_t>(idx)]);
    std::vector<FieldElement> rev(seq.rbegin(), seq.rend());
    out.standard_orderings = {std::move(seq), std::move(rev)};
    return out;
}

std::vector<Matrix> all_companions_bruteforce(const Matrix& a, const Matrix& a_star,
                                              std::uint64_t cap, int workers) {
    const FieldPtr& f = a.field();
    if (!f->finite()) throw Error(ErrorCode::FieldTooLarge, "companion enumeration needs a finite field");
    if (!tridiagonal_class(a).normalized)
        throw Error(ErrorCode::NotInOmega, "the base matrix must be normalized irreducible tridiagonal");
    if (!is_leonard_pair(a, a_star).is_pair)
        throw Error(ErrorCode::NotInOmega, "the base pair is not a Leonard pair");

    const int n = a.size();
    const std::uint64_t q = f->order();
    std::uint64_t space = 1;
    for (int i = 0; i < n; ++i) {
        if (space > cap / q) throw Error(ErrorCode::FieldTooLarge, "enumeration space exceeds the cap");
        space *= q;
    }
    if (space > cap) throw Error(ErrorCode::FieldTooLarge, "enumeration space exceeds the cap");

    workers = std::max(1, workers);
    std::vector<std::vector<Matrix>> found(static_cast<std::size_t>(workers));
    auto run = [&](int w) {
        std::uint64_t lo = space * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(workers);
        std::uint64_t hi = space * static_cast<std::uint64_t>(w + 1) / static_cast<std::uint64_t>(workers);
        for (std::uint64_t code = lo; code < hi; ++code) {
            std::vector<FieldElement> diag;
            diag.reserve(static_cast<std::size_t>(n));
            std::uint64_t rest = code;
            for (int i = 0; i < n; ++i) {
                diag.push_back(f->element_at(rest % q));
                rest /= q;
            }
            Matrix k = Matrix::diagonal(f, diag);
            try {
                if (is_leonard_pair(a - k, a_star).is_pair) found[static_cast<std::size_t>(w)].push_back(std::move(k));
            } catch (const Error& e) {
                if (e.code() != ErrorCode::EigenvalueNotInField) throw;
                // Spectrum escapes the field: not a Leonard pair on F^{d+1}.
            }
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    std::vector<Matrix> out;
    for (auto& chunk : found)
        for (auto& m : chunk) out.push_back(std::move(m));
    std::sort(out.begin(), out.end());
    return out;
}

bool isomorphic_in_omega(const Matrix& a, const Matrix& b, const Matrix& a_star) {
    for (const Matrix* m : {&a, &b}) {
        if (!tridiagonal_class(*m).normalized)
            throw Error(ErrorCode::NotInOmega, "matrix is not normalized irreducible tridiagonal");
        if (!is_leonard_pair(*m, a_star).is_pair)
            throw Error(ErrorCode::NotInOmega, "matrix does not form a Leonard pair with the diagonal");
    }
    return a == b;
}

std::vector<ParameterArray> parameter_arrays_of(const Matrix& a, const Matrix& a_star) {
    LeonardPairCheck chk = is_leonard_pair(a, a_star);
    if (!chk.is_pair || !tridiagonal_class(a).normalized)
        throw Error(ErrorCode::NotInOmega, "not a normalized Leonard pair");
    const FieldPtr& f = a.field();
    const int d = a.size() - 1;
    std::vector<FieldElement> theta_star = a_star.diagonal_entries();
    auto vartheta = profile_sums(theta_star);

    std::vector<ParameterArray> out;
    for (const auto& theta : chk.standard_orderings) {
        ParameterArray p;
        p.field = f;
        p.d = d;
        p.theta = theta;
        p.theta_star = theta_star;
        const FieldElement& a0 = a.at(0, 0);
        FieldElement gap01 = theta_star[0] - theta_star[1];
        FieldElement vphi1 = (a0 - theta[0]) * gap01;
        FieldElement phi1 = (a0 - theta[static_cast<std::size_t>(d)]) * gap01;
        for (int i = 1; i <= d; ++i) {
            p.varphi.push_back(phi1 * vartheta[static_cast<std::size_t>(i)] +
                               (theta_star[static_cast<std::size_t>(i)] - theta_star[0]) *
                                   (theta[static_cast<std::size_t>(i - 1)] - theta[static_cast<std::size_t>(d)]));
            p.phi.push_back(vphi1 * vartheta[static_cast<std::size_t>(i)] +
                            (theta_star[static_cast<std::size_t>(i)] - theta_star[0]) *
                                (theta[static_cast<std::size_t>(d - i + 1)] - theta[0]));
        }
        require_valid(p);
        if (realize(p).a_matrix != a)
            throw Error(ErrorCode::InternalInconsistency, "recovered array does not realize the matrix");
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace lpairs
