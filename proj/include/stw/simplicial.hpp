#pragma once

#include "stw/fp_matrix.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace stw {

// Finite poset on elements 0..n-1.
struct FinitePoset {
    int n = 0;
    std::vector<std::vector<char>> leq; // leq[a][b]: a <= b

    explicit FinitePoset(int size = 0) : n(size), leq(size, std::vector<char>(size, 0)) {
        for (int i = 0; i < size; ++i) leq[i][i] = 1;
    }

    void validate() const {
        for (int a = 0; a < n; ++a) {
            if (!leq[a][a]) throw std::logic_error("FinitePoset: not reflexive");
            for (int b = 0; b < n; ++b) {
                if (a != b && leq[a][b] && leq[b][a]) throw std::logic_error("FinitePoset: not antisymmetric");
                for (int c = 0; c < n; ++c)
                    if (leq[a][b] && leq[b][c] && !leq[a][c]) throw std::logic_error("FinitePoset: not transitive");
            }
        }
    }
};

// Simplicial complex with faces listed per dimension (vertex lists sorted).
// The empty simplex is implicit: homology below is always reduced.
struct SimplicialComplex {
    int nverts = 0;
    std::vector<std::vector<std::vector<int>>> faces; // faces[d], each sorted

    int dimension() const { return (int)faces.size() - 1; }

    bool empty() const { return faces.empty() || faces[0].empty(); }

    static SimplicialComplex from_facets(int nverts, std::vector<std::vector<int>> facets) {
        SimplicialComplex c;
        c.nverts = nverts;
        std::set<std::vector<int>> all;
        // downward closure
        for (auto f : facets) {
            std::sort(f.begin(), f.end());
            int k = (int)f.size();
            for (int mask = 1; mask < (1 << k); ++mask) {
                std::vector<int> sub;
                for (int i = 0; i < k; ++i)
                    if (mask >> i & 1) sub.push_back(f[i]);
                all.insert(sub);
            }
        }
        for (auto& f : all) {
            int d = (int)f.size() - 1;
            if ((int)c.faces.size() <= d) c.faces.resize(d + 1);
            c.faces[d].push_back(f);
        }
        for (auto& fs : c.faces) std::sort(fs.begin(), fs.end());
        return c;
    }
};

// Nerve of a poset: k-faces are chains of k+1 elements.
inline SimplicialComplex order_complex(const FinitePoset& P) {
    SimplicialComplex c;
    c.nverts = P.n;
    std::vector<std::vector<std::vector<int>>> byd;
    std::vector<std::vector<int>> cur;
    for (int v = 0; v < P.n; ++v) cur.push_back({v});
    while (!cur.empty()) {
        byd.push_back(cur);
        std::vector<std::vector<int>> next;
        for (auto& ch : cur)
            for (int v = 0; v < P.n; ++v)
                if (v != ch.back() && P.leq[ch.back()][v]) {
                    auto ext = ch;
                    ext.push_back(v);
                    next.push_back(std::move(ext));
                }
        cur = std::move(next);
    }
    c.faces = std::move(byd);
    for (auto& fs : c.faces) std::sort(fs.begin(), fs.end());
    return c;
}

// Reduced F_p homology profile. The degree -1 slot follows the augmented
// chain complex: the empty complex reports betti_{-1} = 1 (the S^{-1}
// convention), any nonempty complex has betti_{-1} = 0.
struct HomologyProfile {
    int p = 2;
    std::map<int, long long> betti; // degree -> dimension, zero entries omitted
    long long euler_reduced = 0;    // sum (-1)^d betti_d

    long long betti_at(int d) const {
        auto it = betti.find(d);
        return it == betti.end() ? 0 : it->second;
    }
    bool all_zero() const { return betti.empty(); }
    int top_degree() const { return betti.empty() ? -2 : betti.rbegin()->first; }

    friend bool operator==(const HomologyProfile& a, const HomologyProfile& b) {
        return a.p == b.p && a.betti == b.betti;
    }
};

namespace detail {

// boundary matrix from d-faces to (d-1)-faces, over F_p; d = 0 maps to the
// empty simplex (augmentation)
inline FpMatrix boundary_matrix(const SimplicialComplex& C, int d, int p) {
    const auto& rows_faces = d == 0 ? std::vector<std::vector<int>>{{}} : C.faces[d - 1];
    const auto& cols_faces = C.faces[d];
    std::map<std::vector<int>, int> row_index;
    for (size_t i = 0; i < rows_faces.size(); ++i) row_index[rows_faces[i]] = (int)i;
    FpMatrix m((int)rows_faces.size(), (int)cols_faces.size(), p);
    for (size_t j = 0; j < cols_faces.size(); ++j) {
        const auto& f = cols_faces[j];
        for (size_t k = 0; k < f.size(); ++k) {
            std::vector<int> sub = f;
            sub.erase(sub.begin() + k);
            m.at(row_index.at(sub), (int)j) = mod_reduce(k % 2 == 0 ? 1 : -1, p);
        }
    }
    return m;
}

} // namespace detail

inline HomologyProfile reduced_homology(const SimplicialComplex& C, int p, long long face_budget = 500000) {
    HomologyProfile h;
    h.p = p;
    if (C.empty()) {
        h.betti[-1] = 1;
        h.euler_reduced = -1;
        return h;
    }
    long long nfaces = 0;
    for (auto& fs : C.faces) nfaces += (long long)fs.size();
    if (nfaces > face_budget) throw std::domain_error("reduced_homology: face count exceeds budget");
    int top = C.dimension();
    // rank of each boundary map, including the augmentation
    std::vector<long long> rk(top + 2, 0);
    for (int d = 0; d <= top; ++d) rk[d] = rank(detail::boundary_matrix(C, d, p));
    // betti_{-1} = 1 - rank d_0; betti_d = #faces_d - rk_d - rk_{d+1}
    long long bm1 = 1 - rk[0];
    if (bm1) h.betti[-1] = bm1;
    for (int d = 0; d <= top; ++d) {
        long long b = (long long)C.faces[d].size() - rk[d] - (d + 1 <= top ? rk[d + 1] : 0);
        if (b) h.betti[d] = b;
    }
    long long eu = 0;
    for (auto& [d, b] : h.betti) eu += (d % 2 == 0 ? b : -b);
    h.euler_reduced = eu;

    // cross-check: reduced Euler characteristic from face counts
    long long eu_faces = -1;
    for (int d = 0; d <= top; ++d)
        eu_faces += (d % 2 == 0 ? 1 : -1) * (long long)C.faces[d].size();
    if (eu != eu_faces) throw std::logic_error("reduced_homology: Euler characteristic mismatch");
    return h;
}

// Unreduced suspension at the profile level: a uniform degree shift by one.
// S^{-1} (empty input) goes to S^0.
inline HomologyProfile unreduced_suspension_profile(const HomologyProfile& h) {
    HomologyProfile out;
    out.p = h.p;
    for (auto& [d, b] : h.betti) out.betti[d + 1] = b;
    out.euler_reduced = -h.euler_reduced;
    return out;
}

// Chain map induced by a vertex map (simplices with repeated image vertices
// die), then the induced map on reduced homology in a fixed degree d.
// Returns the matrix with columns indexed by a homology basis of the source.
struct InducedMapResult {
    long long source_dim = 0;
    long long target_dim = 0;
    FpMatrix matrix; // target_dim x source_dim
};

inline InducedMapResult induced_homology_map(const SimplicialComplex& src, const SimplicialComplex& tgt,
                                             const std::vector<int>& vertex_map, int d, int p) {
    InducedMapResult res;

    auto faces_at = [](const SimplicialComplex& C, int k) -> std::vector<std::vector<int>> {
        if (k == -1) return {{}}; // the empty simplex
        if (k < -1 || k > C.dimension()) return {};
        return C.faces[k];
    };

    auto src_d = faces_at(src, d), src_d1 = faces_at(src, d + 1);
    auto tgt_d = faces_at(tgt, d), tgt_d1 = faces_at(tgt, d + 1);

    // cycles of the source in degree d
    FpMatrix bd_src = d <= -1 || src_d.empty() ? FpMatrix(0, (int)src_d.size(), p)
                                               : detail::boundary_matrix(src, d, p);
    Subspace zsrc = nullspace(bd_src);
    // boundaries: image of d+1 boundary
    std::vector<std::vector<int>> bdry_cols;
    if (!src_d1.empty() && d >= -1) {
        FpMatrix b1 = d + 1 == 0 ? detail::boundary_matrix(src, 0, p) : detail::boundary_matrix(src, d + 1, p);
        for (int j = 0; j < b1.cols; ++j) {
            std::vector<int> col(b1.rows);
            for (int i = 0; i < b1.rows; ++i) col[i] = b1.at(i, j);
            bdry_cols.push_back(std::move(col));
        }
    }
    RankAccumulator src_bdry((int)src_d.size(), p);
    for (auto& c : bdry_cols) src_bdry.add(c);
    // homology basis: cycles completing the boundary space
    std::vector<std::vector<int>> hom_basis;
    {
        RankAccumulator acc = src_bdry;
        for (int i = 0; i < zsrc.dim(); ++i) {
            std::vector<int> v(zsrc.ambient_dim);
            for (int j = 0; j < zsrc.ambient_dim; ++j) v[j] = zsrc.basis.at(i, j);
            if (acc.add(v)) hom_basis.push_back(std::move(v));
        }
    }
    res.source_dim = (long long)hom_basis.size();

    // target homology data in degree d
    FpMatrix bd_tgt = d <= -1 || tgt_d.empty() ? FpMatrix(0, (int)tgt_d.size(), p)
                                               : detail::boundary_matrix(tgt, d, p);
    Subspace ztgt = nullspace(bd_tgt);
    std::vector<std::vector<int>> tgt_bdry;
    if (!tgt_d1.empty()) {
        FpMatrix b1 = d + 1 == 0 ? detail::boundary_matrix(tgt, 0, p) : detail::boundary_matrix(tgt, d + 1, p);
        for (int j = 0; j < b1.cols; ++j) {
            std::vector<int> col(b1.rows);
            for (int i = 0; i < b1.rows; ++i) col[i] = b1.at(i, j);
            tgt_bdry.push_back(std::move(col));
        }
    }
    RankAccumulator tgt_bdry_acc((int)tgt_d.size(), p);
    for (auto& c : tgt_bdry) tgt_bdry_acc.add(c);
    std::vector<std::vector<int>> tgt_hom_basis;
    {
        RankAccumulator acc = tgt_bdry_acc;
        for (int i = 0; i < ztgt.dim(); ++i) {
            std::vector<int> v(ztgt.ambient_dim);
            for (int j = 0; j < ztgt.ambient_dim; ++j) v[j] = ztgt.basis.at(i, j);
            if (acc.add(v)) tgt_hom_basis.push_back(std::move(v));
        }
    }
    res.target_dim = (long long)tgt_hom_basis.size();

    // index the target d-faces
    std::map<std::vector<int>, int> tgt_index;
    for (size_t i = 0; i < tgt_d.size(); ++i) tgt_index[tgt_d[i]] = (int)i;

    // push each homology basis vector through the chain map
    res.matrix = FpMatrix((int)res.target_dim, (int)res.source_dim, p);
    for (size_t col = 0; col < hom_basis.size(); ++col) {
        std::vector<int> image(tgt_d.size(), 0);
        for (size_t f = 0; f < src_d.size(); ++f) {
            int coef = hom_basis[col][f];
            if (!coef) continue;
            // map the simplex
            std::vector<int> img;
            for (int v : src_d[f]) img.push_back(vertex_map[v]);
            // degenerate (repeated vertex) -> 0
            std::vector<int> sorted = img;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
            // sign of the sorting permutation
            int sgn = 1;
            std::vector<int> tmp = img;
            for (size_t i = 0; i + 1 < tmp.size(); ++i)
                for (size_t j = 0; j + 1 < tmp.size() - i; ++j)
                    if (tmp[j] > tmp[j + 1]) { std::swap(tmp[j], tmp[j + 1]); sgn = -sgn; }
            auto it = tgt_index.find(sorted);
            if (it == tgt_index.end()) throw std::logic_error("induced_homology_map: simplex not in target");
            image[it->second] = mod_reduce(image[it->second] + (long long)coef * sgn, p);
        }
        // express image in the target homology basis: solve over
        // [tgt_hom_basis | tgt_boundaries] = image
        int nb = (int)tgt_hom_basis.size();
        FpMatrix sys((int)tgt_d.size(), nb + (int)tgt_bdry.size(), p);
        for (int j = 0; j < nb; ++j)
            for (size_t i = 0; i < tgt_d.size(); ++i) sys.at((int)i, j) = tgt_hom_basis[j][i];
        for (size_t j = 0; j < tgt_bdry.size(); ++j)
            for (size_t i = 0; i < tgt_d.size(); ++i) sys.at((int)i, nb + (int)j) = tgt_bdry[j][i];
        // solve sys * x = image by rref of [sys | image]
        FpMatrix aug(sys.rows, sys.cols + 1, p);
        for (int i = 0; i < sys.rows; ++i) {
            for (int j = 0; j < sys.cols; ++j) aug.at(i, j) = sys.at(i, j);
            aug.at(i, sys.cols) = image[i];
        }
        auto rr = rref(aug);
        // back-substitute: read off coefficients of the homology basis columns
        std::vector<int> x(sys.cols, 0);
        for (int i = 0; i < rr.rank; ++i) {
            int pc = rr.pivot_cols[i];
            if (pc == sys.cols) throw std::logic_error("induced_homology_map: image is not a cycle mod boundaries");
            x[pc] = rr.r.at(i, sys.cols);
        }
        for (int i = 0; i < nb; ++i) res.matrix.at(i, (int)col) = x[i];
    }
    return res;
}

} // namespace stw
