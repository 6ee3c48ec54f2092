#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "lpairs/parameter_array.hpp"

using namespace lpairs;
using namespace fixtures;

namespace {

// Direct d = 1 / d = 2 generator: pick eigenvalues and one split entry, then
// force the summation identities; retry until the nonvanishing conditions
// hold. Independent of the type machinery.
ParameterArray random_low_degree_array(const FieldPtr& f, int d, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> dist(-8, 8);
    auto fe = [&](long n) { return f->from_integer(n); };
    for (;;) {
        std::vector<FieldElement> th, ts;
        for (int i = 0; i <= d; ++i) {
            th.push_back(fe(dist(rng)));
            ts.push_back(fe(dist(rng)));
        }
        FieldElement phi1 = fe(dist(rng));
        ParameterArray p;
        p.field = f;
        p.d = d;
        p.theta = th;
        p.theta_star = ts;
        bool distinct = true;
        for (int i = 0; i <= d && distinct; ++i)
            for (int j = i + 1; j <= d; ++j)
                if (th[static_cast<std::size_t>(i)] == th[static_cast<std::size_t>(j)] ||
                    ts[static_cast<std::size_t>(i)] == ts[static_cast<std::size_t>(j)])
                    distinct = false;
        if (!distinct || phi1.is_zero()) continue;
        auto vartheta = profile_sums(th);
        std::vector<FieldElement> vphi, phi;
        for (int i = 1; i <= d; ++i)
            vphi.push_back(phi1 * vartheta[static_cast<std::size_t>(i)] +
                           (ts[static_cast<std::size_t>(i)] - ts[0]) *
                               (th[static_cast<std::size_t>(i - 1)] - th[static_cast<std::size_t>(d)]));
        for (int i = 1; i <= d; ++i)
            phi.push_back(vphi[0] * vartheta[static_cast<std::size_t>(i)] +
                          (ts[static_cast<std::size_t>(i)] - ts[0]) *
                              (th[static_cast<std::size_t>(d - i + 1)] - th[0]));
        p.varphi = vphi;
        p.phi = phi;
        if (validate(p).valid) return p;
    }
}

}  // namespace

TEST_CASE("validation of the d = 1 fixture and its mutations") {
    ParameterArray p = p1();
    CHECK(validate(p).valid);

    ParameterArray bad_phi = p;
    bad_phi.phi[0] = p.field->zero();
    auto rep1 = validate(bad_phi);
    CHECK_FALSE(rep1.valid);
    REQUIRE(rep1.violations.size() >= 1);
    CHECK(rep1.violations[0].substr(0, 2) == "ii");

    ParameterArray bad_theta = p;
    bad_theta.theta[1] = bad_theta.theta[0];
    auto rep2 = validate(bad_theta);
    CHECK_FALSE(rep2.valid);
    CHECK(rep2.violations[0].substr(0, 2) == "i:");
}

TEST_CASE("validation catches broken summation identities") {
    ParameterArray p = q1();
    CHECK(validate(p).valid);
    ParameterArray broken = p;
    broken.varphi[1] = broken.varphi[1] + p.field->one();
    auto rep = validate(broken);
    CHECK_FALSE(rep.valid);
    bool has_iii = false;
    for (const auto& v : rep.violations) has_iii = has_iii || v.substr(0, 3) == "iii";
    CHECK(has_iii);
}

TEST_CASE("invariants of the type II fixture") {
    ParameterArray p = q1();
    FieldPtr f = p.field;
    CHECK(p.theta == els(f, {"-21/2", "-3/2", "11/2", "21/2"}));
    CHECK(p.theta_star == els(f, {"-15/2", "-1/2", "9/2", "15/2"}));
    CHECK(p.varphi[0] == el(f, "-177/2"));
    InvariantData inv = invariants(p);
    CHECK(inv.beta == el(f, "2"));
    CHECK(inv.kappa == el(f, "4"));
    CHECK(inv.kappa == inv.gamma * inv.gamma + (2 - inv.beta) * inv.varrho);
    CHECK_THROWS_AS(invariants(p1()), Error);

    // Scaling theta by 2 scales kappa by 4.
    ParameterArray scaled = affine(p, el(f, "2"), f->zero(), f->one(), f->zero());
    CHECK(invariants(scaled).kappa == el(f, "16"));
}

TEST_CASE("kappa equals the squared second difference when beta = 2") {
    ParameterArray p = q1();
    InvariantData inv = invariants(p);
    for (int i = 1; i <= p.d - 1; ++i) {
        FieldElement second_diff = p.theta[static_cast<std::size_t>(i - 1)] -
                                   2 * p.theta[static_cast<std::size_t>(i)] +
                                   p.theta[static_cast<std::size_t>(i + 1)];
        CHECK(inv.kappa == second_diff * second_diff);
    }
}

TEST_CASE("relatives act as stated on the d = 1 fixtures") {
    ParameterArray p = p1();
    FieldPtr f = p.field;

    ParameterArray down2 = relatives(p, Relative::DDown);
    CHECK(down2 == p2());

    ParameterArray vee = relatives(p, Relative::Vee);
    CHECK(vee.theta == els(f, {"0", "-1"}));
    CHECK(vee.theta_star == els(f, {"0", "1"}));
    CHECK(vee.varphi == els(f, {"-1"}));
    CHECK(vee.phi == els(f, {"-2"}));

    CHECK(relatives(relatives(p, Relative::Star), Relative::Star) == p);
}

TEST_CASE("relatives are involutions and commute appropriately") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        int d = 1 + static_cast<int>(rng() % 2);
        ParameterArray p = random_low_degree_array(Field::rationals(), d, rng);
        for (Relative r : {Relative::Star, Relative::Down, Relative::DDown, Relative::Vee})
            CHECK(relatives(relatives(p, r), r) == p);
        CHECK(relatives(relatives(p, Relative::Down), Relative::DDown) ==
              relatives(relatives(p, Relative::DDown), Relative::Down));
    }
    ParameterArray q = q1();
    for (Relative r : {Relative::Star, Relative::Down, Relative::DDown, Relative::Vee})
        CHECK(relatives(relatives(q, r), r) == q);
}

TEST_CASE("affine transforms") {
    ParameterArray p = p1();
    FieldPtr f = p.field;
    ParameterArray t = affine(p, el(f, "2"), el(f, "3"), f->one(), f->zero());
    CHECK(t.theta == els(f, {"3", "5"}));
    CHECK(t.theta_star == els(f, {"0", "1"}));
    CHECK(t.varphi == els(f, {"2"}));
    CHECK(t.phi == els(f, {"4"}));

    CHECK(affine(p, f->one(), f->zero(), f->one(), f->zero()) == p);
    CHECK(affine(p, el(f, "-1"), f->zero(), f->one(), f->zero()) == relatives(p, Relative::Vee));
    CHECK_THROWS_AS(affine(p, f->zero(), f->zero(), f->one(), f->zero()), Error);
}

TEST_CASE("realization of the d = 1 fixtures") {
    ParameterArray p = p1();
    FieldPtr f = p.field;
    LeonardRealization r = realize(p);
    CHECK(r.a == els(f, {"-1", "2"}));
    CHECK(r.x == els(f, {"-2"}));
    CHECK(r.a_matrix.at(0, 0) == el(f, "-1"));
    CHECK(r.a_matrix.at(0, 1) == el(f, "-2"));
    CHECK(r.a_matrix.at(1, 0) == el(f, "1"));
    CHECK(r.a_matrix.at(1, 1) == el(f, "2"));
    CHECK(r.a_star == Matrix::diagonal(f, els(f, {"0", "1"})));

    // The double-down relative realizes to the same matrix.
    LeonardRealization r2 = realize(p2());
    CHECK(r2.a_matrix == r.a_matrix);

    // The vee relative realizes to the bond mate.
    LeonardRealization r3 = realize(relatives(p, Relative::Vee));
    CHECK(r3.a_matrix == bond_mate(r.a_matrix));
    CHECK(r3.a == els(f, {"1", "-2"}));
    CHECK(r3.x == els(f, {"-2"}));
}

TEST_CASE("realization invariants on random arrays") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 150; ++trial) {
        int d = 1 + static_cast<int>(rng() % 2);
        ParameterArray p = random_low_degree_array(Field::rationals(), d, rng);
        LeonardRealization r = realize(p);
        FieldElement sum_a = p.field->zero(), sum_th = p.field->zero();
        for (int i = 0; i <= d; ++i) {
            sum_a += r.a[static_cast<std::size_t>(i)];
            sum_th += p.theta[static_cast<std::size_t>(i)];
        }
        CHECK(sum_a == sum_th);

        LeonardRealization rD = realize(relatives(p, Relative::DDown));
        CHECK(rD.a_matrix == r.a_matrix);

        LeonardRealization rd = realize(relatives(p, Relative::Down));
        for (int i = 0; i <= d; ++i)
            CHECK(rd.a[static_cast<std::size_t>(i)] == r.a[static_cast<std::size_t>(d - i)]);
        for (int i = 1; i <= d; ++i)
            CHECK(rd.x[static_cast<std::size_t>(i - 1)] == r.x[static_cast<std::size_t>(d - i + 1 - 1)]);

        LeonardRealization rv = realize(relatives(p, Relative::Vee));
        CHECK(rv.a_matrix == bond_mate(r.a_matrix));

        // Boundary relations between split entries and intersection numbers.
        const auto& th = p.theta;
        const auto& ts = p.theta_star;
        auto D = static_cast<std::size_t>(d);
        CHECK(p.vphi(1) == (r.a[0] - th[0]) * (ts[0] - ts[1]));
        CHECK(p.ph(1) == (r.a[0] - th[D]) * (ts[0] - ts[1]));
        CHECK(p.vphi(d) == (r.a[D] - th[D]) * (ts[D] - ts[D - 1]));
        CHECK(p.ph(d) == (r.a[D] - th[0]) * (ts[D] - ts[D - 1]));
    }
}

TEST_CASE("closed forms for d = 2 intersection numbers") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 100; ++trial) {
        ParameterArray p = random_low_degree_array(Field::rationals(), 2, rng);
        LeonardRealization r = realize(p);
        const auto& th = p.theta;
        const auto& ts = p.theta_star;
        FieldElement a1 = th[0] + th[2] - r.a[0] + (r.a[0] - th[1]) * (ts[0] - ts[1]) / (ts[1] - ts[2]);
        FieldElement a2 = (th[1] * (ts[0] - ts[2]) - r.a[0] * (ts[0] - ts[1])) / (ts[1] - ts[2]);
        CHECK(r.a[1] == a1);
        CHECK(r.a[2] == a2);
    }
}

TEST_CASE("split realization") {
    FieldPtr f = Field::rationals();
    SplitRealization s = split_realize(p1());
    CHECK(s.a_split.at(0, 0) == el(f, "0"));
    CHECK(s.a_split.at(0, 1) == el(f, "0"));
    CHECK(s.a_split.at(1, 0) == el(f, "1"));
    CHECK(s.a_split.at(1, 1) == el(f, "1"));
    CHECK(s.a_star_split.at(0, 0) == el(f, "0"));
    CHECK(s.a_star_split.at(0, 1) == el(f, "1"));
    CHECK(s.a_star_split.at(1, 0) == el(f, "0"));
    CHECK(s.a_star_split.at(1, 1) == el(f, "1"));

    SplitRealization s2 = split_realize(p2());
    CHECK(s2.a_split.at(0, 0) == el(f, "1"));
    CHECK(s2.a_split.at(1, 1) == el(f, "0"));
    CHECK(s2.a_star_split.at(0, 1) == el(f, "2"));

    ParameterArray q = q1();
    SplitRealization s3 = split_realize(q);
    for (int i = 0; i <= 3; ++i) CHECK(s3.a_split.at(i, i) == q.theta[static_cast<std::size_t>(i)]);
}

TEST_CASE("dual basis data for the d = 1 fixture") {
    ParameterArray p = p1();
    FieldPtr f = p.field;
    LeonardRealization r = realize(p);
    DualBasisData db = dual_basis_data(r, p.theta[0]);
    // u normalized to u_0 = 1; proportional to (2, -1).
    CHECK(db.eigvec0 == els(f, {"1", "-1/2"}));
    CHECK(db.b == els(f, {"1"}));
    CHECK(db.c == els(f, {"-2"}));
    CHECK(db.b[0] * db.c[0] == r.x[0]);

    // Same procedure on the vee relative; the row-sum law against its
    // theta_0 = 0 is asserted inside dual_basis_data.
    ParameterArray pv = relatives(p, Relative::Vee);
    LeonardRealization rv = realize(pv);
    DualBasisData dv = dual_basis_data(rv, pv.theta[0]);
    CHECK(dv.b[0] * dv.c[0] == rv.x[0]);
}

TEST_CASE("dual basis data satisfies the row-sum and product laws") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 80; ++trial) {
        int d = 1 + static_cast<int>(rng() % 2);
        ParameterArray p = random_low_degree_array(Field::rationals(), d, rng);
        LeonardRealization r = realize(p);
        DualBasisData db = dual_basis_data(r, p.theta[0]);
        for (int i = 1; i <= d; ++i)
            CHECK(db.b[static_cast<std::size_t>(i - 1)] * db.c[static_cast<std::size_t>(i - 1)] ==
                  r.x[static_cast<std::size_t>(i - 1)]);
        for (const auto& bi : db.b) CHECK_FALSE(bi.is_zero());
        for (const auto& ci : db.c) CHECK_FALSE(ci.is_zero());
    }
}

TEST_CASE("bipartite detection") {
    ParameterArray p = p1();
    CHECK_FALSE(is_bipartite(realize(p)));

    // A zero-diagonal realization is bipartite and self-bonded.
    FieldPtr f = Field::rationals();
    LeonardRealization r = realize(p);
    LeonardRealization z = r;
    Matrix m(f, 2);
    m.set(0, 1, el(f, "5"));
    m.set(1, 0, el(f, "1"));
    z.a_matrix = m;
    z.a = {f->zero(), f->zero()};
    CHECK(is_bipartite(z));
    CHECK(bond_mate(z.a_matrix) == z.a_matrix);
}

TEST_CASE("low-index identities") {
    for (const ParameterArray& p : {p1(), q1()}) {
        OneDIdentities ids = one_d_identities(p);
        CHECK(ids.head);
        CHECK(ids.tail);
        CHECK(ids.cross);
    }
}

TEST_CASE("profile sums match between the two eigenvalue sequences") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        int d = 1 + static_cast<int>(rng() % 2);
        ParameterArray p = random_low_degree_array(Field::rationals(), d, rng);
        CHECK(profile_sums(p.theta) == profile_sums(p.theta_star));
    }
    ParameterArray q = q1();
    CHECK(profile_sums(q.theta) == profile_sums(q.theta_star));
}

TEST_CASE("forced eigenvalue patterns from swapped or negated split sequences") {
    // Reconstructing theta' from the summation identity: for a valid primed
    // array sharing theta_star, theta'_{i-1} - theta'_d is determined by
    // vphi'_i, phi'_1, and the shared profile sums.
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        int d = 1 + static_cast<int>(rng() % 2);
        ParameterArray p = random_low_degree_array(Field::rationals(), d, rng);
        auto vartheta = profile_sums(p.theta_star);
        auto reconstruct_gaps = [&](const ParameterArray& pp) {
            std::vector<FieldElement> gaps;  // theta'_{i-1} - theta'_d
            for (int i = 1; i <= d; ++i)
                gaps.push_back((pp.vphi(i) - pp.ph(1) * vartheta[static_cast<std::size_t>(i)]) /
                               (pp.theta_star[static_cast<std::size_t>(i)] - pp.theta_star[0]));
            return gaps;
        };
        // Swapped split sequences force theta' = theta reversed + zeta.
        ParameterArray swapped = relatives(p, Relative::DDown);
        auto gaps = reconstruct_gaps(swapped);
        for (int i = 1; i <= d; ++i)
            CHECK(gaps[static_cast<std::size_t>(i - 1)] ==
                  p.theta[static_cast<std::size_t>(d - i + 1)] - p.theta[0]);
        // Negated split sequences force theta' = zeta - theta.
        ParameterArray negated = relatives(p, Relative::Vee);
        auto gaps2 = reconstruct_gaps(negated);
        for (int i = 1; i <= d; ++i)
            CHECK(gaps2[static_cast<std::size_t>(i - 1)] ==
                  p.theta[static_cast<std::size_t>(d)] - p.theta[static_cast<std::size_t>(i - 1)]);
    }
}
