#pragma once

#include "stw/gl_group.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace stw {

// Finitely supported F_p-linear combination of GL_n(F_p) elements.
struct GroupAlgebraElement {
    const GLGroup* group = nullptr;
    std::map<int, int> coeffs; // element id -> nonzero coefficient in [1, p)

    int p() const { return group->p; }

    void add_term(int g, long long c) {
        int v = mod_reduce((coeffs.count(g) ? coeffs[g] : 0) + c, p());
        if (v == 0) coeffs.erase(g);
        else coeffs[g] = v;
    }

    friend GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
        if (a.group != b.group) throw std::invalid_argument("GroupAlgebraElement: different groups");
        GroupAlgebraElement r = a;
        for (auto& [g, c] : b.coeffs) r.add_term(g, c);
        return r;
    }

    friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
        if (a.group != b.group) throw std::invalid_argument("GroupAlgebraElement: different groups");
        GroupAlgebraElement r;
        r.group = a.group;
        for (auto& [g, cg] : a.coeffs)
            for (auto& [h, ch] : b.coeffs)
                r.add_term(a.group->op(g, h), (long long)cg * ch);
        return r;
    }

    GroupAlgebraElement scaled(long long s) const {
        GroupAlgebraElement r;
        r.group = group;
        for (auto& [g, c] : coeffs) r.add_term(g, (long long)c * mod_reduce(s, p()));
        return r;
    }

    friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
        return a.group == b.group && a.coeffs == b.coeffs;
    }
};

inline GroupAlgebraElement algebra_identity(const GLGroup& G) {
    GroupAlgebraElement e;
    e.group = &G;
    e.coeffs[G.identity] = 1;
    return e;
}

// Unsigned sum over the Borel subgroup.
inline GroupAlgebraElement borel_sum(const GLGroup& G) {
    GroupAlgebraElement r;
    r.group = &G;
    for (int b : G.borel) r.add_term(b, 1);
    return r;
}

// Signed sum of permutation matrices.
inline GroupAlgebraElement signed_perm_sum(const GLGroup& G) {
    GroupAlgebraElement r;
    r.group = &G;
    for (size_t i = 0; i < G.perm_ids.size(); ++i) r.add_term(G.perm_ids[i], G.perm_sign[i]);
    return r;
}

enum class SteinbergVariant {
    SigmaB, // x = Sigma-bar * B-bar, normalizing to the Steinberg idempotent e_n
    BSigma, // x = B-bar * Sigma-bar, normalizing to the conjugate idempotent e-hat_n
};

struct SteinbergData {
    int n = 0, p = 2;
    SteinbergVariant variant = SteinbergVariant::SigmaB;
    GroupAlgebraElement x;  // unnormalized product
    int c = 0;              // x*x = c*x, a unit mod p
    GroupAlgebraElement e;  // x / c, verified idempotent
};

// Solve x*x = c*x coefficientwise; every coefficient must give the same c.
inline int solve_idempotency_constant(const GroupAlgebraElement& x) {
    GroupAlgebraElement xx = x * x;
    const int p = x.p();
    int c = -1;
    for (auto& [g, cf] : x.coeffs) {
        int target = xx.coeffs.count(g) ? xx.coeffs.at(g) : 0;
        int cand = mod_reduce((long long)target * mod_inverse(cf, p), p);
        if (c < 0) c = cand;
        else if (c != cand) throw std::logic_error("steinberg: inconsistent idempotency constant");
    }
    // terms of x*x outside supp(x) must vanish
    for (auto& [g, cf] : xx.coeffs)
        if (!x.coeffs.count(g)) throw std::logic_error("steinberg: x*x not supported on x");
    if (c < 0) throw std::logic_error("steinberg: x = 0");
    if (c == 0) throw std::logic_error("steinberg: constant vanishes mod p");
    return c;
}

inline SteinbergData steinberg(const GLGroup& G, SteinbergVariant variant = SteinbergVariant::SigmaB) {
    SteinbergData d;
    d.n = G.n;
    d.p = G.p;
    d.variant = variant;
    GroupAlgebraElement B = borel_sum(G), S = signed_perm_sum(G);
    d.x = variant == SteinbergVariant::SigmaB ? S * B : B * S;
    d.c = solve_idempotency_constant(d.x);
    d.e = d.x.scaled(mod_inverse(d.c, G.p));
    if (!(d.e * d.e == d.e)) throw std::logic_error("steinberg: normalized element is not idempotent");
    return d;
}

// Image of e-variant_{n-s} (x) e-variant_s under the block inclusion
// GL_{n-s} x GL_s -> GL_n; supported on block-diagonal matrices.
inline GroupAlgebraElement block_idempotent(const GLGroup& G, int s,
                                            SteinbergVariant variant = SteinbergVariant::BSigma) {
    if (s < 0 || s > G.n) throw std::invalid_argument("block_idempotent: s out of range");
    GLGroup G1 = build_gl(G.n - s, G.p, true);
    GLGroup G2 = build_gl(s, G.p, true);
    SteinbergData d1 = steinberg(G1, variant), d2 = steinberg(G2, variant);
    GroupAlgebraElement r;
    r.group = &G;
    for (auto& [g1, c1] : d1.e.coeffs)
        for (auto& [g2, c2] : d2.e.coeffs)
            r.add_term(block_embed(G, G1.elements[g1], G2.elements[g2]), (long long)c1 * c2);
    if (!(r * r == r)) throw std::logic_error("block_idempotent: not idempotent");
    return r;
}

} // namespace stw
