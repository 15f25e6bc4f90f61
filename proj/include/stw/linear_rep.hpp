#pragma once

#include "stw/fp_matrix.hpp"
#include "stw/group_algebra.hpp"

#include <memory>
#include <vector>

namespace stw {

// Finite-dimensional F_p[GL_n]-module, exposed through the action of single
// group elements on basis vectors. Operators for algebra elements and their
// ranks are assembled column by column, so large modules never need full
// per-element matrices.
struct LinearRep {
    virtual ~LinearRep() = default;
    virtual int dim() const = 0;
    virtual int prime() const = 0;
    // out[0..dim) += coeff * rho(g) e_j  (unreduced accumulation)
    virtual void apply_basis(int g, int j, int coeff, int* out) const = 0;
};

// Column j of the operator for an algebra element.
inline std::vector<int> operator_column(const LinearRep& rep, const GroupAlgebraElement& a, int j) {
    std::vector<int> col(rep.dim(), 0);
    for (auto& [g, c] : a.coeffs) rep.apply_basis(g, j, c, col.data());
    for (int& v : col) v = mod_reduce(v, rep.prime());
    return col;
}

// out += e * v for a whole vector, reduced mod p.
inline std::vector<int> apply_element(const LinearRep& rep, const GroupAlgebraElement& a,
                                      const std::vector<int>& v) {
    std::vector<int> out(rep.dim(), 0);
    const int p = rep.prime();
    for (int k = 0; k < rep.dim(); ++k) {
        if (!v[k]) continue;
        for (auto& [g, c] : a.coeffs) rep.apply_basis(g, k, mod_reduce((long long)c * v[k], p), out.data());
    }
    for (int& x : out) x = mod_reduce(x, p);
    return out;
}

inline FpMatrix operator_matrix(const LinearRep& rep, const GroupAlgebraElement& a) {
    FpMatrix m(rep.dim(), rep.dim(), rep.prime());
    for (int j = 0; j < rep.dim(); ++j) {
        std::vector<int> col = operator_column(rep, a, j);
        for (int i = 0; i < rep.dim(); ++i) m.at(i, j) = col[i];
    }
    return m;
}

// rank of the linear operator given by the element acting on the module
inline int idempotent_rank(const GroupAlgebraElement& a, const LinearRep& rep) {
    RankAccumulator acc(rep.dim(), rep.prime());
    for (int j = 0; j < rep.dim(); ++j) acc.add(operator_column(rep, a, j));
    return acc.rank();
}

// The regular module F_p[GL_n] with the left translation action.
struct RegularRep final : LinearRep {
    const GLGroup* G;
    explicit RegularRep(const GLGroup& g) : G(&g) {}
    int dim() const override { return G->order(); }
    int prime() const override { return G->p; }
    void apply_basis(int g, int j, int coeff, int* out) const override {
        out[G->op(g, j)] += coeff;
    }
};

// The one-dimensional trivial module.
struct TrivialRep final : LinearRep {
    int p;
    explicit TrivialRep(int prime) : p(prime) {}
    int dim() const override { return 1; }
    int prime() const override { return p; }
    void apply_basis(int, int, int coeff, int* out) const override { out[0] += coeff; }
};

} // namespace stw
