#pragma once

#include <string>
#include <vector>

#include "lpairs/basic_sequence.hpp"

namespace fixtures {

using namespace lpairs;

inline FieldElement el(const FieldPtr& f, const std::string& s) { return f->parse(s); }

inline std::vector<FieldElement> els(const FieldPtr& f, const std::vector<std::string>& ss) {
    std::vector<FieldElement> out;
    out.reserve(ss.size());
    for (const auto& s : ss) out.push_back(f->parse(s));
    return out;
}

inline ParameterArray make_array(const FieldPtr& f, int d, const std::vector<std::string>& theta,
                                 const std::vector<std::string>& theta_star,
                                 const std::vector<std::string>& varphi,
                                 const std::vector<std::string>& phi) {
    ParameterArray p;
    p.field = f;
    p.d = d;
    p.theta = els(f, theta);
    p.theta_star = els(f, theta_star);
    p.varphi = els(f, varphi);
    p.phi = els(f, phi);
    return p;
}

// d = 1 trio over Q sharing theta_star; P2 = P1 double-down, P3 a bond shift of P1.
inline ParameterArray p1() {
    return make_array(Field::rationals(), 1, {"0", "1"}, {"0", "1"}, {"1"}, {"2"});
}
inline ParameterArray p2() {
    return make_array(Field::rationals(), 1, {"1", "0"}, {"0", "1"}, {"2"}, {"1"});
}
inline ParameterArray p3() {
    return make_array(Field::rationals(), 1, {"1", "0"}, {"0", "1"}, {"-1"}, {"-2"});
}

inline BasicSequence q1_basic() {
    FieldPtr f = Field::rationals();
    BasicSequence b;
    b.type = LeonardType::II;
    b.entries = {el(f, "0"), el(f, "7"), el(f, "1"), el(f, "0"), el(f, "5"), el(f, "1"), el(f, "0")};
    return b;
}

// Type II, d = 3, over Q: theta = (-21/2, -3/2, 11/2, 21/2), kappa = 4.
inline ParameterArray q1() { return array_from_basic(q1_basic(), 3); }

inline FieldPtr gf4() { return Field::extension(2, {1, 1, 1}); }

inline BasicSequence r1_basic() {
    FieldPtr f = gf4();
    BasicSequence b;
    b.type = LeonardType::IV;
    // (delta, h, s, delta*, h*, s*, r) with s = s* = r = the generator.
    b.entries = {el(f, "[0,0]"), el(f, "[1,0]"), el(f, "[0,1]"),
                 el(f, "[0,0]"), el(f, "[1,0]"), el(f, "[0,1]"), el(f, "[0,1]")};
    return b;
}

// Type IV over GF(4): theta = theta_star = (0, w+1, 1, w), varphi = (w, 1, w).
inline ParameterArray r1() { return array_from_basic(r1_basic(), 3); }

}  // namespace fixtures
