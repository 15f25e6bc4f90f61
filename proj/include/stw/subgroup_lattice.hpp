#pragma once

#include "stw/group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace stw {

struct Subgroup {
    std::vector<int> elements; // sorted
    int order() const { return (int)elements.size(); }
    bool contains(int g) const { return std::binary_search(elements.begin(), elements.end(), g); }
    friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements == b.elements; }
    friend bool operator<(const Subgroup& a, const Subgroup& b) { return a.elements < b.elements; }
};

inline bool subgroup_subset(const Subgroup& a, const Subgroup& b) {
    return std::includes(b.elements.begin(), b.elements.end(), a.elements.begin(), a.elements.end());
}

inline Subgroup conjugate_subgroup(const FiniteGroup& G, const Subgroup& H, int g) {
    Subgroup out;
    out.elements.reserve(H.elements.size());
    int gi = G.inv(g);
    for (int h : H.elements) out.elements.push_back(G.op(G.op(g, h), gi));
    std::sort(out.elements.begin(), out.elements.end());
    return out;
}

// All subgroups by breadth-first closure over cyclic extensions.
inline std::vector<Subgroup> all_subgroups(const FiniteGroup& G, int order_budget = 64) {
    if (G.order > order_budget)
        throw std::domain_error("all_subgroups: group order exceeds budget");
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> queue;
    std::vector<int> triv{G.identity};
    seen.insert(triv);
    queue.push_back(triv);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        std::vector<int> base = queue[qi];
        for (int g = 0; g < G.order; ++g) {
            if (std::binary_search(base.begin(), base.end(), g)) continue;
            std::vector<int> gens = base;
            gens.push_back(g);
            std::vector<int> cl = subgroup_closure(G, gens);
            if (seen.insert(cl).second) queue.push_back(cl);
        }
    }
    std::vector<Subgroup> out;
    for (auto& e : seen) out.push_back({e});
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        return a.order() != b.order() ? a.order() < b.order() : a.elements < b.elements;
    });
    return out;
}

struct SubgroupLattice {
    FiniteGroup group; // owned copy; lattices outlive their construction context
    std::vector<Subgroup> subgroups;                 // sorted by (order, elements)
    std::vector<std::vector<char>> inclusion;        // inclusion[i][j]: subgroup i <= subgroup j
    std::vector<std::vector<int>> conjugacy_classes; // partition of subgroup indices
    std::vector<int> class_of;
    std::vector<char> normal_flags;
    std::vector<Subgroup> normalizers;
    std::vector<int> weyl_orders;
    int full_index = -1;
    int trivial_index = -1;
    int frattini_index = -1;
    std::vector<int> poset_C;  // indices of H normal with G/H elementary abelian
    std::vector<int> d_of;     // d(H) = rank of G/H for H in C, else -1
    int p = 0;                 // set when the group is a p-group

    int index_of(const Subgroup& H) const {
        auto it = std::lower_bound(subgroups.begin(), subgroups.end(), H,
                                   [](const Subgroup& a, const Subgroup& b) {
                                       return a.order() != b.order() ? a.order() < b.order() : a.elements < b.elements;
                                   });
        if (it == subgroups.end() || !(*it == H)) throw std::logic_error("SubgroupLattice: unknown subgroup");
        return (int)(it - subgroups.begin());
    }

    bool in_C(int i) const { return d_of[i] >= 0; }
};

inline SubgroupLattice subgroup_lattice(const FiniteGroup& G, int order_budget = 64) {
    SubgroupLattice L;
    L.group = G;
    L.subgroups = all_subgroups(G, order_budget);
    int m = (int)L.subgroups.size();

    L.inclusion.assign(m, std::vector<char>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            L.inclusion[i][j] = subgroup_subset(L.subgroups[i], L.subgroups[j]);

    // conjugacy classes
    L.class_of.assign(m, -1);
    for (int i = 0; i < m; ++i) {
        if (L.class_of[i] >= 0) continue;
        int cid = (int)L.conjugacy_classes.size();
        std::vector<int> cls;
        for (int g = 0; g < G.order; ++g) {
            Subgroup c = conjugate_subgroup(G, L.subgroups[i], g);
            int j = L.index_of(c);
            if (L.class_of[j] < 0) { L.class_of[j] = cid; cls.push_back(j); }
        }
        std::sort(cls.begin(), cls.end());
        L.conjugacy_classes.push_back(cls);
    }

    L.normal_flags.assign(m, 0);
    L.normalizers.resize(m);
    L.weyl_orders.assign(m, 0);
    for (int i = 0; i < m; ++i) {
        L.normal_flags[i] = L.conjugacy_classes[L.class_of[i]].size() == 1;
        std::vector<int> nz;
        for (int g = 0; g < G.order; ++g)
            if (conjugate_subgroup(G, L.subgroups[i], g) == L.subgroups[i]) nz.push_back(g);
        std::sort(nz.begin(), nz.end());
        L.normalizers[i] = {nz};
        L.weyl_orders[i] = (int)nz.size() / L.subgroups[i].order();
    }

    for (int i = 0; i < m; ++i) {
        if (L.subgroups[i].order() == 1) L.trivial_index = i;
        if (L.subgroups[i].order() == G.order) L.full_index = i;
    }

    // Frattini = intersection of all maximal proper subgroups
    std::vector<int> maximals;
    for (int i = 0; i < m; ++i) {
        if (i == L.full_index) continue;
        bool maximal = true;
        for (int j = 0; j < m && maximal; ++j)
            if (j != i && j != L.full_index && L.inclusion[i][j]) maximal = false;
        if (maximal) maximals.push_back(i);
    }
    std::vector<int> frat;
    if (maximals.empty()) {
        frat = L.subgroups[L.full_index].elements; // G trivial
    } else {
        for (int g = 0; g < G.order; ++g) {
            bool in_all = true;
            for (int mi : maximals)
                if (!L.subgroups[mi].contains(g)) { in_all = false; break; }
            if (in_all) frat.push_back(g);
        }
    }
    L.frattini_index = L.index_of({frat});

    // prime of the p-group, if any
    int n = G.order, pr = 0;
    for (int q = 2; q <= n; ++q)
        if (n % q == 0) { pr = q; break; }
    if (pr && G.is_p_group(pr)) L.p = pr;

    // C = normal subgroups with elementary abelian quotient, d(H) = rank
    L.d_of.assign(m, -1);
    if (L.p || G.order == 1) {
        for (int i = 0; i < m; ++i) {
            if (!L.normal_flags[i]) continue;
            const Subgroup& H = L.subgroups[i];
            bool elem_ab = true;
            for (int a = 0; a < G.order && elem_ab; ++a) {
                int ap = a;
                for (int t = 1; t < std::max(L.p, 2); ++t) ap = G.op(ap, a);
                if (!H.contains(ap)) elem_ab = false; // a^p must die in G/H
                for (int b = 0; b < G.order && elem_ab; ++b) {
                    int comm = G.op(G.op(a, b), G.inv(G.op(b, a)));
                    if (!H.contains(comm)) elem_ab = false;
                }
            }
            if (!elem_ab) continue;
            int idx = G.order / H.order();
            int d = 0;
            long long q = 1;
            while (q < idx) { q *= std::max(L.p, 2); ++d; }
            if (q != idx) throw std::logic_error("subgroup_lattice: [G:H] not a p-power for H in C");
            L.poset_C.push_back(i);
            L.d_of[i] = d;
        }
        // minimal element of C must be the Frattini subgroup (p-groups)
        if (L.p && std::find(L.poset_C.begin(), L.poset_C.end(), L.frattini_index) == L.poset_C.end())
            throw std::logic_error("subgroup_lattice: Frattini not in C");
    }
    return L;
}

// Conjugacy-class representatives ordered so that no earlier class
// subconjugates into a later one. Decreasing order already guarantees this;
// ties are broken by class size then element-set order.
inline std::vector<int> subgroup_ordering(const SubgroupLattice& L) {
    std::vector<int> reps;
    for (auto& cls : L.conjugacy_classes) reps.push_back(cls.front());
    std::sort(reps.begin(), reps.end(), [&](int a, int b) {
        int oa = L.subgroups[a].order(), ob = L.subgroups[b].order();
        if (oa != ob) return oa > ob;
        size_t ca = L.conjugacy_classes[L.class_of[a]].size(), cb = L.conjugacy_classes[L.class_of[b]].size();
        if (ca != cb) return ca < cb;
        return L.subgroups[a].elements < L.subgroups[b].elements;
    });
    return reps;
}

inline Subgroup subgroup_intersection(const Subgroup& a, const Subgroup& b) {
    Subgroup out;
    std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(), b.elements.end(),
                          std::back_inserter(out.elements));
    return out;
}

// H, K in C are transverse iff d(H) + d(K) = d(H intersect K).
inline bool transverse(const SubgroupLattice& L, int hi, int ki) {
    if (!L.in_C(hi) || !L.in_C(ki)) throw std::invalid_argument("transverse: subgroups must lie in C");
    int ii = L.index_of(subgroup_intersection(L.subgroups[hi], L.subgroups[ki]));
    if (!L.in_C(ii)) throw std::logic_error("transverse: intersection left C");
    return L.d_of[hi] + L.d_of[ki] == L.d_of[ii];
}

// Subgroups of a direct product A x B via Goursat's lemma: each subgroup
// corresponds to a section P/P0 of A, a section Q/Q0 of B, and an isomorphism
// between the quotients. Avoids running closure on the big product.
// Elements are encoded as product_encode(B, a, b).
inline std::vector<std::vector<int>> product_subgroups(const FiniteGroup& A, const FiniteGroup& B) {
    auto subsA = all_subgroups(A, 256);
    auto subsB = all_subgroups(B, 256);
    std::vector<std::vector<int>> out;
    std::set<std::vector<int>> seen;

    for (auto& P : subsA) {
        FiniteGroup Pg = subgroup_as_group(A, P.elements);
        auto normalsP = all_subgroups(Pg, 256);
        for (auto& N : normalsP) {
            // N must be normal in P
            bool nrm = true;
            for (int g = 0; g < Pg.order && nrm; ++g)
                nrm = conjugate_subgroup(Pg, N, g) == N;
            if (!nrm) continue;
            std::vector<int> cosetP;
            FiniteGroup QP = quotient_group(Pg, N.elements, &cosetP);
            for (auto& Q : subsB) {
                FiniteGroup Qg = subgroup_as_group(B, Q.elements);
                auto normalsQ = all_subgroups(Qg, 256);
                for (auto& M : normalsQ) {
                    // quotient orders must match: |P|/|N| == |Q|/|M|
                    if ((long long)P.order() * M.order() != (long long)Q.order() * N.order()) continue;
                    bool nrmq = true;
                    for (int g = 0; g < Qg.order && nrmq; ++g)
                        nrmq = conjugate_subgroup(Qg, M, g) == M;
                    if (!nrmq) continue;
                    std::vector<int> cosetQ;
                    FiniteGroup QQ = quotient_group(Qg, M.elements, &cosetQ);
                    // enumerate all isomorphisms QP -> QQ
                    std::vector<std::vector<int>> isos = [&]() {
                        std::vector<std::vector<int>> res;
                        std::vector<int> gens = generating_sequence(QP);
                        std::vector<int> img(gens.size());
                        std::function<void(size_t)> rec = [&](size_t k) {
                            if (k == gens.size()) {
                                // build map by closure words
                                std::vector<int> phi(QP.order, -1);
                                phi[QP.identity] = QQ.identity;
                                std::vector<int> bfs{QP.identity};
                                for (size_t i = 0; i < bfs.size(); ++i)
                                    for (size_t gi = 0; gi < gens.size(); ++gi) {
                                        int y = QP.op(bfs[i], gens[gi]);
                                        if (phi[y] < 0) {
                                            phi[y] = QQ.op(phi[bfs[i]], img[gi]);
                                            bfs.push_back(y);
                                        }
                                    }
                                std::vector<char> hit(QQ.order, 0);
                                for (int x = 0; x < QP.order; ++x) {
                                    if (phi[x] < 0 || hit[phi[x]]) return;
                                    hit[phi[x]] = 1;
                                }
                                for (int x = 0; x < QP.order; ++x)
                                    for (int y = 0; y < QP.order; ++y)
                                        if (phi[QP.op(x, y)] != QQ.op(phi[x], phi[y])) return;
                                res.push_back(phi);
                                return;
                            }
                            for (int b = 0; b < QQ.order; ++b) {
                                if (QQ.element_order(b) != QP.element_order(gens[k])) continue;
                                img[k] = b;
                                rec(k + 1);
                            }
                        };
                        rec(0);
                        return res;
                    }();
                    for (auto& phi : isos) {
                        std::vector<int> elems;
                        for (int ai = 0; ai < Pg.order; ++ai)
                            for (int bi = 0; bi < Qg.order; ++bi)
                                if (phi[cosetP[ai]] == cosetQ[bi])
                                    elems.push_back(product_encode(B, P.elements[ai], Q.elements[bi]));
                        std::sort(elems.begin(), elems.end());
                        if (seen.insert(elems).second) out.push_back(elems);
                    }
                }
            }
        }
    }
    return out;
}

} // namespace stw
