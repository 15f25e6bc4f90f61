#pragma once

#include "stw/simplicial.hpp"
#include "stw/subgroup_lattice.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace stw {

// The poset P(G)_{>H}: proper subgroups of G strictly containing H.
// Returns the poset plus the lattice indices of its elements.
inline FinitePoset subgroup_poset_above(const SubgroupLattice& L, int hi, std::vector<int>* members = nullptr) {
    std::vector<int> elems;
    for (size_t j = 0; j < L.subgroups.size(); ++j) {
        if ((int)j == hi) continue;
        if ((int)j == L.full_index) continue;
        if (L.inclusion[hi][j]) elems.push_back((int)j);
    }
    FinitePoset P((int)elems.size());
    for (size_t a = 0; a < elems.size(); ++a)
        for (size_t b = 0; b < elems.size(); ++b)
            P.leq[a][b] = L.inclusion[elems[a]][elems[b]];
    if (members) *members = elems;
    return P;
}

// Homology profile of the unreduced suspension P(G)_{>H}^diamond.
// For H = G the poset is empty and the S^{-1} convention applies:
// the diamond of P(G)_{>G} is S^{-1}, so this returns the S^{-1} profile
// (betti_{-1} = 1) rather than the honest suspension S^0. For H != G the
// honest suspension is returned (empty poset -> S^0).
inline HomologyProfile diamond_profile(const SubgroupLattice& L, int hi, int p) {
    if (hi == L.full_index) {
        HomologyProfile h;
        h.p = p;
        h.betti[-1] = 1;
        h.euler_reduced = -1;
        return h;
    }
    FinitePoset P = subgroup_poset_above(L, hi);
    return unreduced_suspension_profile(reduced_homology(order_complex(P), p));
}

struct FrattiniCheckRecord {
    bool skipped = false;      // vacuous when F is contained in H
    bool acyclic = false;      // all reduced betti of P(G)_{>H} vanish
    bool certificate = false;  // the closure-operator certificate of the proof
    int poset_size = 0;
    HomologyProfile profile;
};

// If the Frattini subgroup F is not contained in H, the poset of
// proper subgroups strictly containing H is contractible. Two independent
// certificates: (a) F_p-acyclicity of the order complex, (b) the closure
// operator K -> KF is a well-defined monotone increasing poset map whose
// image has minimum HF (which forces contractibility).
inline FrattiniCheckRecord frattini_check(const SubgroupLattice& L, int hi, int p) {
    FrattiniCheckRecord rec;
    const FiniteGroup& G = L.group;
    const Subgroup& F = L.subgroups[L.frattini_index];
    if (subgroup_subset(F, L.subgroups[hi])) {
        rec.skipped = true;
        return rec;
    }
    std::vector<int> members;
    FinitePoset P = subgroup_poset_above(L, hi, &members);
    rec.poset_size = P.n;
    rec.profile = reduced_homology(order_complex(P), p);
    rec.acyclic = rec.profile.all_zero();

    // (b) closure certificate
    auto closure_with_F = [&](int li) {
        std::vector<int> gens = L.subgroups[li].elements;
        gens.insert(gens.end(), F.elements.begin(), F.elements.end());
        return L.index_of({subgroup_closure(G, gens)});
    };
    std::vector<int> pos_of(L.subgroups.size(), -1);
    for (size_t k = 0; k < members.size(); ++k) pos_of[members[k]] = (int)k;

    // HF must itself be a member of the poset and a fixed point of the map
    std::vector<int> hf_gens = L.subgroups[hi].elements;
    hf_gens.insert(hf_gens.end(), F.elements.begin(), F.elements.end());
    int hf = L.index_of({subgroup_closure(G, hf_gens)});
    bool ok = pos_of[hf] >= 0 && closure_with_F(hf) == hf;

    for (size_t k = 0; k < members.size() && ok; ++k) {
        int img = closure_with_F(members[k]);
        // lands in the poset
        ok = pos_of[img] >= 0;
        if (!ok) break;
        // increasing: K <= KF; image dominated below by HF
        ok = L.inclusion[members[k]][img] && L.inclusion[hf][img];
        // monotone
        for (size_t l = 0; l < members.size() && ok; ++l)
            if (P.leq[k][l]) ok = L.inclusion[img][closure_with_F(members[l])];
    }
    rec.certificate = ok;
    return rec;
}

// Reduced homology of the poset of proper nonzero subspaces of F_p^d
// (the Tits building / flag complex). Concentrated in degree d - 2 with
// dimension p^C(d,2); concentration failure is a hard error.
inline HomologyProfile tits_profile(int d, int p) {
    if (d < 1) throw std::invalid_argument("tits_profile: rank must be >= 1");
    if ((d > 3 && p == 2) || (d > 2 && p > 2)) throw std::domain_error("tits_profile: out of budget");
    auto subs = enumerate_subspaces(d, p);
    std::vector<Subspace> proper;
    for (auto& s : subs)
        if (s.dim() > 0 && s.dim() < d) proper.push_back(s);
    FinitePoset P((int)proper.size());
    for (size_t a = 0; a < proper.size(); ++a)
        for (size_t b = 0; b < proper.size(); ++b) {
            bool inc = proper[a].dim() <= proper[b].dim();
            if (inc)
                for (int i = 0; i < proper[a].dim() && inc; ++i) {
                    std::vector<int> row(proper[a].ambient_dim);
                    for (int j = 0; j < proper[a].ambient_dim; ++j) row[j] = proper[a].basis.at(i, j);
                    inc = proper[b].contains(row);
                }
            P.leq[a][b] = inc;
        }
    HomologyProfile h = reduced_homology(order_complex(P), p);
    long long expect = 1;
    for (int t = 0; t < d * (d - 1) / 2; ++t) expect *= p;
    if (h.betti.size() != 1 || h.betti_at(d - 2) != expect)
        throw std::logic_error("tits_profile: homology not concentrated as expected");
    return h;
}

struct SubgroupComplexProductResult {
    // Walker model of the join: the order complex of
    //   ([H,G] x [K,G]) minus its bottom (H,K) and top (G,G),
    // whose suspension is P(G)_{>H}^diamond * P(G)_{>K}^diamond.
    HomologyProfile source_profile;  // of the Walker model
    HomologyProfile target_profile;  // of P(G)_{>H cap K}
    int model_degree = 0;            // degree in the Walker model carrying the top class
    int suspended_degree = 0;        // corresponding degree in the suspended picture
    FpMatrix matrix;                 // induced map on homology in model_degree
    bool kunneth_consistent = false; // Walker model profile matches the join Kunneth count
};

// The subgroup complex product for transverse H, K in C: the intersection map
// (H', K') -> H' cap K' realizes the product
//   Sigma P(G)_{>H}^dia ^ Sigma P(G)_{>K}^dia -> Sigma P(G)_{>H cap K}^dia
// after suspension; the induced map is computed on the Walker model and
// reported in top homology.
inline SubgroupComplexProductResult subgroup_complex_product(const SubgroupLattice& L, int hi, int ki, int p) {
    if (!L.in_C(hi) || !L.in_C(ki)) throw std::invalid_argument("subgroup_complex_product: H, K must lie in C");
    if (!transverse(L, hi, ki)) throw std::invalid_argument("subgroup_complex_product: H, K must be transverse");
    const int g_idx = L.full_index;
    int li = L.index_of(subgroup_intersection(L.subgroups[hi], L.subgroups[ki]));

    // intervals [H, G] and [K, G] in the lattice
    auto interval = [&](int lo) {
        std::vector<int> iv;
        for (size_t j = 0; j < L.subgroups.size(); ++j)
            if (L.inclusion[lo][j]) iv.push_back((int)j);
        return iv;
    };
    std::vector<int> ivH = interval(hi), ivK = interval(ki);

    // Walker model: pairs minus the two extremes
    std::vector<std::pair<int, int>> pairs;
    for (int a : ivH)
        for (int b : ivK) {
            if (a == hi && b == ki) continue;
            if (a == g_idx && b == g_idx) continue;
            pairs.push_back({a, b});
        }
    FinitePoset W((int)pairs.size());
    for (size_t x = 0; x < pairs.size(); ++x)
        for (size_t y = 0; y < pairs.size(); ++y)
            W.leq[x][y] = L.inclusion[pairs[x].first][pairs[y].first] &&
                          L.inclusion[pairs[x].second][pairs[y].second];

    // target poset P(G)_{> H cap K}
    std::vector<int> tgt_members;
    FinitePoset T = subgroup_poset_above(L, li, &tgt_members);
    std::vector<int> tgt_pos(L.subgroups.size(), -1);
    for (size_t k = 0; k < tgt_members.size(); ++k) tgt_pos[tgt_members[k]] = (int)k;

    // vertex map (H', K') -> H' cap K'; transversality keeps it off the
    // endpoints, so it lands in the open target poset
    std::vector<int> vmap(pairs.size());
    for (size_t x = 0; x < pairs.size(); ++x) {
        int inter = L.index_of(subgroup_intersection(L.subgroups[pairs[x].first], L.subgroups[pairs[x].second]));
        if (inter == li || inter == g_idx)
            throw std::logic_error("subgroup_complex_product: intersection hit an excluded endpoint");
        vmap[x] = tgt_pos[inter];
        if (vmap[x] < 0) throw std::logic_error("subgroup_complex_product: image outside target poset");
    }

    SimplicialComplex src = order_complex(W);
    SimplicialComplex tgt = order_complex(T);

    SubgroupComplexProductResult res;
    res.source_profile = reduced_homology(src, p);
    res.target_profile = reduced_homology(tgt, p);
    res.model_degree = res.source_profile.top_degree();
    // the suspension of the Walker model is the join of the two diamonds,
    // except when both factors are the S^{-1} unit (H = K = G)
    int shift = (hi == g_idx && ki == g_idx) ? 0 : 1;
    res.suspended_degree = res.model_degree + shift;

    // Kunneth count for the join of the two diamonds, shifted down to the model
    HomologyProfile dh = diamond_profile(L, hi, p), dk = diamond_profile(L, ki, p);
    std::map<int, long long> expect;
    for (auto& [a, ba] : dh.betti)
        for (auto& [b, bb] : dk.betti) expect[a + b + 1 - shift] += ba * bb;
    std::map<int, long long> got;
    for (auto& [d, b] : res.source_profile.betti) got[d] = b;
    res.kunneth_consistent = expect == got;

    auto induced = induced_homology_map(src, tgt, vmap, res.model_degree, p);
    res.matrix = induced.matrix;
    return res;
}

} // namespace stw
