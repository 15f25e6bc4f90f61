#pragma once

#include "stw/subgroup_lattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace stw {

// Finite pointed G-set: points 0..n-1 with a designated basepoint fixed by
// all of G, and an action table act[g][x].
struct PointedGSet {
    const FiniteGroup* group = nullptr;
    int npoints = 0;
    int basepoint = 0;
    std::vector<std::vector<int>> act;

    void validate() const {
        const FiniteGroup& G = *group;
        for (int x = 0; x < npoints; ++x)
            if (act[G.identity][x] != x) throw std::invalid_argument("PointedGSet: identity must act trivially");
        for (int g = 0; g < G.order; ++g)
            for (int h = 0; h < G.order; ++h)
                for (int x = 0; x < npoints; ++x)
                    if (act[G.op(g, h)][x] != act[g][act[h][x]])
                        throw std::invalid_argument("PointedGSet: not an action");
        for (int g = 0; g < G.order; ++g)
            if (act[g][basepoint] != basepoint) throw std::invalid_argument("PointedGSet: basepoint moves");
    }
};

// Disjoint union of coset spaces G/H_i plus a basepoint.
inline PointedGSet coset_gset(const FiniteGroup& G, const std::vector<std::vector<int>>& subgroup_elems) {
    PointedGSet X;
    X.group = &G;
    X.basepoint = 0;
    std::vector<std::vector<int>> cosets_flat; // per point, the coset as element set
    std::vector<int> block_of;
    for (auto& H : subgroup_elems) {
        std::vector<int> seen(G.order, -1);
        for (int g = 0; g < G.order; ++g) {
            if (seen[g] >= 0) continue;
            std::vector<int> coset;
            for (int h : H) coset.push_back(G.op(g, h));
            std::sort(coset.begin(), coset.end());
            for (int c : coset) seen[c] = 1;
            cosets_flat.push_back(coset);
            block_of.push_back((int)(&H - subgroup_elems.data()));
        }
    }
    X.npoints = 1 + (int)cosets_flat.size();
    X.act.assign(G.order, std::vector<int>(X.npoints));
    for (int g = 0; g < G.order; ++g) {
        X.act[g][0] = 0;
        for (size_t c = 0; c < cosets_flat.size(); ++c) {
            std::vector<int> moved;
            for (int x : cosets_flat[c]) moved.push_back(G.op(g, x));
            std::sort(moved.begin(), moved.end());
            int target = -1;
            for (size_t d = 0; d < cosets_flat.size(); ++d)
                if (block_of[d] == block_of[c] && cosets_flat[d] == moved) { target = (int)d; break; }
            if (target < 0) throw std::logic_error("coset_gset: coset escaped");
            X.act[g][1 + c] = 1 + target;
        }
    }
    X.validate();
    return X;
}

inline std::vector<int> fixed_points(const PointedGSet& X, const std::vector<int>& H_elems) {
    std::vector<int> out;
    for (int x = 0; x < X.npoints; ++x) {
        bool fixed = true;
        for (int h : H_elems)
            if (X.act[h][x] != x) { fixed = false; break; }
        if (fixed) out.push_back(x);
    }
    return out;
}

inline std::vector<int> isotropy(const PointedGSet& X, int x) {
    std::vector<int> out;
    for (int g = 0; g < X.group->order; ++g)
        if (X.act[g][x] == x) out.push_back(g);
    return out;
}

// Points with isotropy exactly H (basepoint excluded here).
inline std::vector<int> stratum(const PointedGSet& X, const std::vector<int>& H_elems) {
    std::vector<int> out;
    for (int x = 0; x < X.npoints; ++x) {
        if (x == X.basepoint) continue;
        if (isotropy(X, x) == H_elems) out.push_back(x);
    }
    return out;
}

struct Primitives {
    int size = 0;                        // 1 + number of free Weyl orbits on the stratum
    std::vector<std::vector<int>> orbits; // Weyl orbits of stratum points
};

// Pr^{G/H}(X): the exactly-H stratum modulo the free Weyl group action,
// with the basepoint adjoined.
inline Primitives primitives(const PointedGSet& X, const SubgroupLattice& L, int hi) {
    std::vector<int> strat = stratum(X, L.subgroups[hi].elements);
    std::vector<char> in_strat(X.npoints, 0);
    for (int x : strat) in_strat[x] = 1;
    const std::vector<int>& normalizer = L.normalizers[hi].elements;

    Primitives P;
    std::vector<char> seen(X.npoints, 0);
    for (int x : strat) {
        if (seen[x]) continue;
        std::set<int> orbit;
        for (int n : normalizer) orbit.insert(X.act[n][x]);
        for (int y : orbit) {
            if (!in_strat[y]) throw std::logic_error("primitives: Weyl action left the stratum");
            seen[y] = 1;
        }
        // freeness of the Weyl action: orbit size = |W|
        if ((int)orbit.size() != L.weyl_orders[hi])
            throw std::logic_error("primitives: Weyl action on the stratum is not free");
        P.orbits.push_back(std::vector<int>(orbit.begin(), orbit.end()));
    }
    P.size = 1 + (int)P.orbits.size();
    return P;
}

// A formal sum: multiplicity per non-basepoint point, canonicalized.
using FormalSum = std::vector<int>; // length npoints, basepoint slot unused (0)

// G-fixed elements of Sp^n(X) (mod_p = 0) or of Sp^n_{Z/p}(X) (mod_p = p).
// Elements are multiplicity functions with total mass <= n; in the mod p
// case multiplicities live in [0, p-1] (canonical representatives a_i in
// {1,...,p-1} on the support).
inline std::vector<FormalSum> sym_power_fixed_points(const PointedGSet& X, int n, int mod_p = 0,
                                                     long long budget = 2000000) {
    const FiniteGroup& G = *X.group;
    // orbits of non-basepoint points
    std::vector<int> orbit_of(X.npoints, -1);
    std::vector<std::vector<int>> orbits;
    for (int x = 0; x < X.npoints; ++x) {
        if (x == X.basepoint || orbit_of[x] >= 0) continue;
        std::set<int> orb;
        for (int g = 0; g < G.order; ++g) orb.insert(X.act[g][x]);
        for (int y : orb) orbit_of[y] = (int)orbits.size();
        orbits.push_back(std::vector<int>(orb.begin(), orb.end()));
    }
    // G-fixed sums are constant on orbits: choose a multiplicity per orbit
    int cap = mod_p ? mod_p - 1 : n;
    long long space = 1;
    for (size_t i = 0; i < orbits.size(); ++i) {
        space *= cap + 1;
        if (space > budget) throw std::domain_error("sym_power_fixed_points: enumeration exceeds budget");
    }
    std::vector<FormalSum> out;
    std::vector<int> mult(orbits.size(), 0);
    while (true) {
        long long mass = 0;
        for (size_t i = 0; i < orbits.size(); ++i) mass += (long long)mult[i] * orbits[i].size();
        if (mass <= n) {
            FormalSum s(X.npoints, 0);
            for (size_t i = 0; i < orbits.size(); ++i)
                for (int x : orbits[i]) s[x] = mult[i];
            out.push_back(std::move(s));
        }
        size_t t = 0;
        while (t < mult.size() && mult[t] == cap) mult[t++] = 0;
        if (t == mult.size()) break;
        ++mult[t];
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace stw
