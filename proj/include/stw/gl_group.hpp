#pragma once

#include "stw/fp_matrix.hpp"
#include "stw/group.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace stw {

// GL_n(F_p), fully enumerated, with Borel and permutation subgroups marked.
struct GLGroup {
    int n = 0;
    int p = 2;
    std::vector<FpMatrix> elements;
    std::map<std::vector<int>, int> index; // matrix entries -> element id
    std::vector<int> mult;                 // full Cayley table
    std::vector<int> inverse;
    int identity = 0;
    std::vector<int> borel;      // ids of invertible upper-triangular matrices
    std::vector<char> in_borel;
    std::vector<int> perm_ids;   // ids of permutation matrices
    std::vector<int> perm_sign;  // sign per permutation id position
    std::vector<char> is_perm;

    int order() const { return (int)elements.size(); }
    int op(int a, int b) const { return mult[(size_t)a * elements.size() + b]; }
    int inv(int a) const { return inverse[a]; }

    int id_of(const FpMatrix& m) const {
        auto it = index.find(m.a);
        if (it == index.end()) throw std::invalid_argument("GLGroup: matrix not invertible / not found");
        return it->second;
    }
};

inline long long gl_order(int n, int p) {
    long long o = 1, pn = 1;
    for (int t = 0; t < n; ++t) pn *= p;
    long long pi = 1;
    for (int i = 0; i < n; ++i) {
        o *= pn - pi;
        pi *= p;
    }
    return o;
}

inline long long borel_order(int n, int p) {
    long long o = 1;
    for (int i = 0; i < n; ++i) o *= p - 1;
    for (int i = 0; i < n * (n - 1) / 2; ++i) o *= p;
    return o;
}

inline GLGroup build_gl(int n, int p, bool allow_large = false) {
    if (!is_prime(p)) throw std::invalid_argument("build_gl: p must be prime");
    long long ord = gl_order(n, p);
    // defaults admit (n<=3, p=2), (n<=2, p=3), (n=1, p=5)
    if (!allow_large && ord > 500)
        throw std::domain_error("build_gl: group order " + std::to_string(ord) + " exceeds default budget");
    if (ord > 2000) throw std::domain_error("build_gl: group order too large");

    GLGroup G;
    G.n = n;
    G.p = p;
    // enumerate all n x n matrices, keep invertible ones
    long long total = 1;
    for (int t = 0; t < n * n; ++t) total *= p;
    for (long long code = 0; code < total; ++code) {
        FpMatrix m(n, n, p);
        long long c = code;
        for (int t = 0; t < n * n; ++t) {
            m.a[t] = int(c % p);
            c /= p;
        }
        if (rank(m) == n) {
            G.index[m.a] = (int)G.elements.size();
            G.elements.push_back(std::move(m));
        }
    }
    if ((long long)G.elements.size() != ord) throw std::logic_error("build_gl: enumeration mismatch");

    int N = G.order();
    G.mult.resize((size_t)N * N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            G.mult[(size_t)i * N + j] = G.id_of(G.elements[i] * G.elements[j]);
    G.identity = G.id_of(FpMatrix::identity(n, p));
    G.inverse.assign(N, -1);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            if (G.op(i, j) == G.identity) { G.inverse[i] = j; break; }

    G.in_borel.assign(N, 0);
    G.is_perm.assign(N, 0);
    for (int i = 0; i < N; ++i) {
        const FpMatrix& m = G.elements[i];
        bool upper = true;
        for (int r = 1; r < n && upper; ++r)
            for (int c = 0; c < r; ++c)
                if (m.at(r, c)) { upper = false; break; }
        if (upper) {
            G.in_borel[i] = 1;
            G.borel.push_back(i);
        }
        // permutation matrix: each row and column exactly one 1
        bool perm = true;
        std::vector<int> sigma(n, -1);
        for (int r = 0; r < n && perm; ++r) {
            int ones = 0, pos = -1;
            for (int c = 0; c < n; ++c) {
                if (m.at(r, c) == 1) { ++ones; pos = c; }
                else if (m.at(r, c) != 0) perm = false;
            }
            if (ones != 1) perm = false;
            sigma[r] = pos;
        }
        if (perm) {
            G.is_perm[i] = 1;
            G.perm_ids.push_back(i);
            G.perm_sign.push_back(permutation_sign(sigma));
        }
    }
    if ((long long)G.borel.size() != borel_order(n, p)) throw std::logic_error("build_gl: Borel count mismatch");
    long long fact = 1;
    for (int t = 2; t <= n; ++t) fact *= t;
    if ((long long)G.perm_ids.size() != fact) throw std::logic_error("build_gl: permutation count mismatch");
    return G;
}

// Block-diagonal embedding GL_{n-s} x GL_s -> GL_n: id of diag(a, b).
inline int block_embed(const GLGroup& G, const FpMatrix& a, const FpMatrix& b) {
    FpMatrix m(G.n, G.n, G.p);
    int k = a.rows;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows; ++i)
        for (int j = 0; j < b.rows; ++j) m.at(k + i, k + j) = b.at(i, j);
    return G.id_of(m);
}

// Membership in the block subgroup B_{n-s} x B_s of the Borel: upper
// triangular with vanishing off-diagonal block (rows 1..n-s, cols n-s+1..n).
inline bool in_block_borel(const GLGroup& G, int id, int s) {
    if (!G.in_borel[id]) return false;
    const FpMatrix& m = G.elements[id];
    for (int i = 0; i < G.n - s; ++i)
        for (int j = G.n - s; j < G.n; ++j)
            if (m.at(i, j)) return false;
    return true;
}

// Membership in Sigma_{n-s} x Sigma_s (same vanishing block condition).
inline bool in_block_perm(const GLGroup& G, int id, int s) {
    if (!G.is_perm[id]) return false;
    const FpMatrix& m = G.elements[id];
    for (int i = 0; i < G.n - s; ++i)
        for (int j = G.n - s; j < G.n; ++j)
            if (m.at(i, j)) return false;
    return true;
}

} // namespace stw
