#pragma once

#include "stw/gl_group.hpp"
#include "stw/linear_rep.hpp"
#include "stw/series.hpp"
#include "stw/strata.hpp"
#include "stw/subgroup_complex.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace stw {

// Graded F_p-cohomology of B(Z/p)^n as a GL_n-representation:
// polynomial on n degree-1 generators at p = 2, exterior (degree 1) tensor
// polynomial (degree 2) at odd p. Generators transform by x_i -> sum_j g_ji x_j;
// the exterior part picks up minor determinants.
struct GradedRep {
    int n = 0, p = 2;
    const GLGroup* gl = nullptr; // may be null when only dimensions are needed

    struct Monomial {
        std::vector<char> ext;  // exterior exponents (0/1), odd p only
        std::vector<int> poly;  // polynomial exponents
    };

    mutable std::map<int, std::vector<Monomial>> basis_cache;
    mutable std::map<int, std::map<std::vector<int>, int>> index_cache; // degree -> key -> index
    mutable std::map<std::pair<int, int>, FpMatrix> action_cache;       // (g, degree) -> matrix

    GradedRep(int nn, int pp, const GLGroup* g = nullptr) : n(nn), p(pp), gl(g) {}

    static std::vector<int> key_of(const Monomial& m) {
        std::vector<int> k(m.ext.begin(), m.ext.end());
        k.insert(k.end(), m.poly.begin(), m.poly.end());
        return k;
    }

    const std::vector<Monomial>& basis(int degree) const {
        auto it = basis_cache.find(degree);
        if (it != basis_cache.end()) return it->second;
        std::vector<Monomial> out;
        if (degree >= 0) {
            if (p == 2) {
                std::vector<int> exp(n, 0);
                std::function<void(int, int)> rec = [&](int i, int left) {
                    if (i == n) {
                        if (left == 0) out.push_back({{}, exp});
                        return;
                    }
                    for (int e = 0; e <= left; ++e) {
                        exp[i] = e;
                        rec(i + 1, left - e);
                        exp[i] = 0;
                    }
                };
                if (n == 0) {
                    if (degree == 0) out.push_back({{}, {}});
                } else {
                    rec(0, degree);
                }
            } else {
                for (int mask = 0; mask < (1 << n); ++mask) {
                    int e1 = __builtin_popcount((unsigned)mask);
                    int rest = degree - e1;
                    if (rest < 0 || rest % 2) continue;
                    std::vector<char> ext(n, 0);
                    for (int i = 0; i < n; ++i) ext[i] = mask >> i & 1;
                    std::vector<int> exp(n, 0);
                    std::function<void(int, int)> rec = [&](int i, int left) {
                        if (i == n) {
                            if (left == 0) out.push_back({ext, exp});
                            return;
                        }
                        for (int e = 0; e <= left; ++e) {
                            exp[i] = e;
                            rec(i + 1, left - e);
                            exp[i] = 0;
                        }
                    };
                    if (n == 0) {
                        if (rest == 0) out.push_back({ext, exp});
                    } else {
                        rec(0, rest / 2);
                    }
                }
            }
        }
        auto& slot = basis_cache[degree];
        slot = std::move(out);
        auto& idx = index_cache[degree];
        for (size_t i = 0; i < slot.size(); ++i) idx[key_of(slot[i])] = (int)i;
        return slot;
    }

    long long dim_at(int degree) const { return (long long)basis(degree).size(); }

    PoincareSeries dimension_series(int trunc) const {
        PoincareSeries s(trunc);
        for (int d = 0; d <= trunc; ++d) s.set(d, dim_at(d));
        return s;
    }

    // substitution matrix of group element g on the degree-d graded piece
    const FpMatrix& action(int g, int degree) const {
        if (!gl) throw std::logic_error("GradedRep: no GL group attached");
        auto key = std::make_pair(g, degree);
        auto it = action_cache.find(key);
        if (it != action_cache.end()) return it->second;
        const auto& B = basis(degree);
        const FpMatrix& M = gl->elements[g];
        FpMatrix out((int)B.size(), (int)B.size(), p);

        for (size_t j = 0; j < B.size(); ++j) {
            // polynomial part: multiply out prod_i (sum_k M_ki y_k)^{e_i}
            // as a coefficient map keyed by exponent vector
            std::map<std::vector<int>, int> polypart;
            polypart[std::vector<int>(n, 0)] = 1;
            for (int i = 0; i < n; ++i)
                for (int rep = 0; rep < B[j].poly[i]; ++rep) {
                    std::map<std::vector<int>, int> next;
                    for (auto& [expv, c] : polypart)
                        for (int k = 0; k < n; ++k) {
                            if (!M.at(k, i)) continue;
                            std::vector<int> e2 = expv;
                            ++e2[k];
                            next[e2] = mod_reduce(next[e2] + (long long)c * M.at(k, i), p);
                        }
                    polypart = std::move(next);
                }
            // exterior part: wedge of images picks up minor determinants
            std::vector<int> scols;
            if (p != 2)
                for (int i = 0; i < n; ++i)
                    if (B[j].ext[i]) scols.push_back(i);
            std::vector<std::pair<std::vector<char>, int>> extpart;
            if (scols.empty()) {
                extpart.push_back({std::vector<char>(n, 0), 1});
            } else {
                int m = (int)scols.size();
                std::vector<int> rows(m);
                std::function<void(int, int)> choose = [&](int start, int got) {
                    if (got == m) {
                        FpMatrix minor(m, m, p);
                        for (int a = 0; a < m; ++a)
                            for (int b = 0; b < m; ++b) minor.at(a, b) = M.at(rows[a], scols[b]);
                        // determinant by elimination over F_p
                        int det = 1;
                        {
                            FpMatrix w = minor;
                            for (int col = 0, pr = 0; col < m && pr < m; ++col) {
                                int sel = -1;
                                for (int i2 = pr; i2 < m; ++i2)
                                    if (w.at(i2, col)) { sel = i2; break; }
                                if (sel < 0) { det = 0; break; }
                                if (sel != pr) {
                                    for (int j2 = 0; j2 < m; ++j2) std::swap(w.at(pr, j2), w.at(sel, j2));
                                    det = mod_reduce(-det, p);
                                }
                                det = mod_reduce((long long)det * w.at(pr, col), p);
                                int inv = mod_inverse(w.at(pr, col), p);
                                for (int i2 = pr + 1; i2 < m; ++i2) {
                                    int f = mod_reduce((long long)w.at(i2, col) * inv, p);
                                    if (!f) continue;
                                    for (int j2 = 0; j2 < m; ++j2)
                                        w.at(i2, j2) = mod_reduce(w.at(i2, j2) - (long long)f * w.at(pr, j2), p);
                                }
                                ++pr;
                            }
                        }
                        if (det) {
                            std::vector<char> ext(n, 0);
                            for (int r2 : rows) ext[r2] = 1;
                            extpart.push_back({ext, det});
                        }
                        return;
                    }
                    for (int r2 = start; r2 <= n - (m - got); ++r2) {
                        rows[got] = r2;
                        choose(r2 + 1, got + 1);
                    }
                };
                choose(0, 0);
            }
            for (auto& [expv, pc] : polypart)
                for (auto& [ext, ec] : extpart) {
                    std::vector<int> k(ext.begin(), ext.end());
                    if (p == 2) k.clear();
                    k.insert(k.end(), expv.begin(), expv.end());
                    int row = index_cache.at(degree).at(k);
                    out.at(row, (int)j) = mod_reduce(out.at(row, (int)j) + (long long)pc * ec, p);
                }
        }
        return action_cache.emplace(key, std::move(out)).first->second;
    }
};

// The degree-d piece of the graded module as a LinearRep.
struct GradedDegreeRep final : LinearRep {
    const GradedRep* graded;
    int degree;
    GradedDegreeRep(const GradedRep& g, int d) : graded(&g), degree(d) {}
    int dim() const override { return (int)graded->dim_at(degree); }
    int prime() const override { return graded->p; }
    void apply_basis(int g, int j, int coeff, int* out) const override {
        const FpMatrix& M = graded->action(g, degree);
        for (int i = 0; i < M.rows; ++i)
            if (M.at(i, j)) out[i] += coeff * M.at(i, j);
    }
};

// (+)_{Mat_{n,r}} degree-d part of the graded module, GL_n acting on the
// index set by left multiplication and on the module by substitution.
struct MatGradedRep final : LinearRep {
    const MatrixStratification* strat;
    GradedDegreeRep inner;
    MatGradedRep(const MatrixStratification& s, const GradedRep& g, int d) : strat(&s), inner(g, d) {}
    int dim() const override { return (int)strat->matrices.size() * inner.dim(); }
    int prime() const override { return strat->p; }
    void apply_basis(int g, int j, int coeff, int* out) const override {
        int block = j / inner.dim(), jj = j % inner.dim();
        int target = strat->gl_action[g][block];
        inner.apply_basis(g, jj, coeff, out + (size_t)target * inner.dim());
    }
};

// dims of the reduced homology of M(k) = e_k B(Z/p)^k_+ : the rank of e_k on
// each graded degree of the unreduced homology of the classifying space.
inline PoincareSeries m_series(int k, int p, int trunc, bool allow_large = false) {
    if (k == 0) return PoincareSeries::one(trunc);
    GLGroup gl = build_gl(k, p, allow_large);
    GradedRep graded(k, p, &gl);
    SteinbergData e = steinberg(gl, SteinbergVariant::SigmaB);
    PoincareSeries s(trunc);
    for (int d = 0; d <= trunc; ++d) {
        GradedDegreeRep rep(graded, d);
        s.set(d, idempotent_rank(e.e, rep));
    }
    return s;
}

// number of admissible sequences I = (i_1,...,i_n), i_j >= 2 i_{j+1},
// i_n >= 1, of total degree d (p = 2 only)
inline PoincareSeries admissible_series(int n, int trunc) {
    PoincareSeries s(trunc);
    // A(m, d, lo): sequences of length m, last entry >= lo, admissible, sum d
    std::map<std::tuple<int, int, int>, long long> memo;
    std::function<long long(int, int, int)> A = [&](int m, int d, int lo) -> long long {
        if (m == 0) return d == 0 ? 1 : 0;
        if (d < lo) return 0;
        auto key = std::make_tuple(m, d, lo);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        long long total = 0;
        // choose the last entry i_m = t >= lo, then the remaining sequence has
        // length m-1 with its last entry >= 2t
        for (int t = lo; t <= d; ++t) total += A(m - 1, d - t, 2 * t);
        memo[key] = total;
        return total;
    };
    for (int d = 0; d <= trunc; ++d) s.set(d, A(n, d, 1));
    return s;
}

// the unique shift aligning admissible_series(1) with m_series(1, 2),
// determined on degrees <= window and spot-checked at length 2
inline int calibrate_shift(int window = 8) {
    PoincareSeries adm = admissible_series(1, window);
    PoincareSeries m1 = m_series(1, 2, window);
    int first_adm = -1, first_m = -1;
    for (int d = 0; d <= window; ++d) {
        if (first_adm < 0 && adm.coeff(d)) first_adm = d;
        if (first_m < 0 && m1.coeff(d)) first_m = d;
    }
    if (first_adm < 0 || first_m < 0) throw std::logic_error("calibrate_shift: empty series");
    int sigma = first_adm - first_m;
    for (int d = 0; d + sigma <= window; ++d)
        if (d + sigma >= 0 && m1.coeff(d) != adm.coeff(d + sigma))
            throw std::logic_error("calibrate_shift: no consistent shift");
    // spot check at length 2 with sigma_2 = 2 sigma_1 before the full suite runs
    PoincareSeries adm2 = admissible_series(2, window);
    PoincareSeries m2 = m_series(2, 2, window);
    int probe = -1;
    for (int d = 0; d <= window; ++d)
        if (d + 2 * sigma <= window && adm2.coeff(d + 2 * sigma) > 0) { probe = d; break; }
    if (probe < 0 || m2.coeff(probe) != adm2.coeff(probe + 2 * sigma))
        throw std::logic_error("calibrate_shift: length-2 spot check failed");
    return sigma;
}

struct LayerSeries {
    std::map<int, PoincareSeries> per_H; // keyed by lattice subgroup index, H in C only
    PoincareSeries total;
};

// Left side of the layer-series identity: the wedge over H in C of
//   M(n - d(H))  ^  Sigma^{1-d(H)} P(G)_{>H}^diamond  ^  B(G/H)_+,
// assembled degreewise. H with n - d(H) < 0 contributes nothing.
inline LayerSeries phi_lhs_series(const SubgroupLattice& L, int n, int trunc, bool allow_large = false) {
    int p = L.p ? L.p : 2;
    LayerSeries out;
    out.total = PoincareSeries::zero(trunc);
    for (int hi : L.poset_C) {
        int d = L.d_of[hi];
        if (n - d < 0) continue;
        PoincareSeries layers = m_series(n - d, p, trunc, allow_large);
        HomologyProfile dia = diamond_profile(L, hi, p);
        PoincareSeries dia_series(trunc);
        for (auto& [deg, b] : dia.betti) dia_series.set(deg, b);
        PoincareSeries b_series = GradedRep(d, p).dimension_series(trunc);
        PoincareSeries per = layers * dia_series.shifted(1 - d) * b_series;
        out.per_H.emplace(hi, per);
        out.total = out.total + per;
    }
    return out;
}

// Right side: the coefficient at degree d is the rank of e_n acting on
// (+)_{Mat_{n,r}} H_d(B(Z/p)^n; F_p), r = rank of G/Frattini.
inline PoincareSeries phi_rhs_series(const SubgroupLattice& L, int n, int trunc, bool allow_large = false) {
    if (n == 0) return PoincareSeries::one(trunc);
    int p = L.p ? L.p : 2;
    int r = L.d_of[L.frattini_index];
    GLGroup gl = build_gl(n, p, allow_large);
    MatrixStratification S = stratify(n, r, p, gl);
    GradedRep graded(n, p, &gl);
    SteinbergData e = steinberg(gl, SteinbergVariant::SigmaB);
    PoincareSeries s(trunc);
    for (int d = 0; d <= trunc; ++d) {
        MatGradedRep rep(S, graded, d);
        s.set(d, idempotent_rank(e.e, rep));
    }
    return s;
}

// Per-H dimensions of Phi^G(H F_p-underline): the H-summand is
// Sigma P(G)_{>H}^diamond ^ B(G/H)_+ for H in C.
inline LayerSeries hfp_fixed_report(const SubgroupLattice& L, int trunc) {
    int p = L.p ? L.p : 2;
    LayerSeries out;
    out.total = PoincareSeries::zero(trunc);
    for (int hi : L.poset_C) {
        int d = L.d_of[hi];
        HomologyProfile dia = diamond_profile(L, hi, p);
        PoincareSeries dia_series(trunc);
        for (auto& [deg, b] : dia.betti) dia_series.set(deg, b);
        PoincareSeries per = dia_series.shifted(1) * GradedRep(d, p).dimension_series(trunc);
        out.per_H.emplace(hi, per);
        out.total = out.total + per;
    }
    return out;
}

} // namespace stw
