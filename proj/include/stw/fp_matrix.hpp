#pragma once

#include "stw/fp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace stw {

// Dense matrix over F_p. Entries live in [0, p). The p = 2 elimination paths
// below switch to a bit-packed representation (64 columns per word).
struct FpMatrix {
    int rows = 0;
    int cols = 0;
    int p = 2;
    std::vector<int> a; // row-major

    FpMatrix() = default;
    FpMatrix(int r, int c, int prime) : rows(r), cols(c), p(prime), a((size_t)r * c, 0) {
        if (!is_prime(prime)) throw std::invalid_argument("FpMatrix: modulus must be prime");
    }

    int& at(int i, int j) { return a[(size_t)i * cols + j]; }
    int at(int i, int j) const { return a[(size_t)i * cols + j]; }

    static FpMatrix identity(int n, int prime) {
        FpMatrix m(n, n, prime);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    friend bool operator==(const FpMatrix& x, const FpMatrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.p == y.p && x.a == y.a;
    }
    friend bool operator!=(const FpMatrix& x, const FpMatrix& y) { return !(x == y); }
    friend bool operator<(const FpMatrix& x, const FpMatrix& y) {
        return std::tie(x.rows, x.cols, x.p, x.a) < std::tie(y.rows, y.cols, y.p, y.a);
    }

    friend FpMatrix operator*(const FpMatrix& x, const FpMatrix& y) {
        if (x.p != y.p) throw std::invalid_argument("FpMatrix: mixed moduli");
        if (x.cols != y.rows) throw std::invalid_argument("FpMatrix: shape mismatch");
        FpMatrix z(x.rows, y.cols, x.p);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k) {
                int v = x.at(i, k);
                if (!v) continue;
                for (int j = 0; j < y.cols; ++j)
                    z.at(i, j) = mod_reduce(z.at(i, j) + (long long)v * y.at(k, j), x.p);
            }
        return z;
    }
};

struct RrefResult {
    FpMatrix r;
    int rank = 0;
    std::vector<int> pivot_cols;
};

namespace detail {

inline RrefResult rref_generic(FpMatrix m) {
    const int p = m.p;
    std::vector<int> pivots;
    int pr = 0;
    for (int pc = 0; pc < m.cols && pr < m.rows; ++pc) {
        int sel = -1;
        for (int i = pr; i < m.rows; ++i)
            if (m.at(i, pc)) { sel = i; break; }
        if (sel < 0) continue;
        for (int j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(sel, j));
        int inv = mod_inverse(m.at(pr, pc), p);
        for (int j = 0; j < m.cols; ++j) m.at(pr, j) = mod_reduce((long long)m.at(pr, j) * inv, p);
        for (int i = 0; i < m.rows; ++i) {
            if (i == pr) continue;
            int f = m.at(i, pc);
            if (!f) continue;
            for (int j = 0; j < m.cols; ++j)
                m.at(i, j) = mod_reduce(m.at(i, j) - (long long)f * m.at(pr, j), p);
        }
        pivots.push_back(pc);
        ++pr;
    }
    return {std::move(m), (int)pivots.size(), std::move(pivots)};
}

inline RrefResult rref_gf2(const FpMatrix& m) {
    const int w = (m.cols + 63) / 64;
    std::vector<uint64_t> bits((size_t)m.rows * w, 0);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (m.at(i, j)) bits[(size_t)i * w + j / 64] |= uint64_t(1) << (j % 64);

    std::vector<int> pivots;
    int pr = 0;
    for (int pc = 0; pc < m.cols && pr < m.rows; ++pc) {
        const int wd = pc / 64, bt = pc % 64;
        int sel = -1;
        for (int i = pr; i < m.rows; ++i)
            if (bits[(size_t)i * w + wd] >> bt & 1) { sel = i; break; }
        if (sel < 0) continue;
        if (sel != pr)
            for (int k = 0; k < w; ++k) std::swap(bits[(size_t)pr * w + k], bits[(size_t)sel * w + k]);
        for (int i = 0; i < m.rows; ++i) {
            if (i == pr) continue;
            if (bits[(size_t)i * w + wd] >> bt & 1)
                for (int k = 0; k < w; ++k) bits[(size_t)i * w + k] ^= bits[(size_t)pr * w + k];
        }
        pivots.push_back(pc);
        ++pr;
    }
    FpMatrix r(m.rows, m.cols, 2);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            r.at(i, j) = int(bits[(size_t)i * w + j / 64] >> (j % 64) & 1);
    return {std::move(r), (int)pivots.size(), std::move(pivots)};
}

} // namespace detail

inline RrefResult rref(const FpMatrix& m) {
    return m.p == 2 ? detail::rref_gf2(m) : detail::rref_generic(m);
}

inline int rank(const FpMatrix& m) { return rref(m).rank; }

// Canonical subspace of F_p^{ambient_dim}: basis rows in RREF, full row rank.
// Equal subspaces compare equal entry-for-entry.
struct Subspace {
    int ambient_dim = 0;
    int p = 2;
    FpMatrix basis; // dim x ambient_dim, RREF, no zero rows

    Subspace() = default;
    Subspace(int ambient, int prime) : ambient_dim(ambient), p(prime), basis(0, ambient, prime) {}

    int dim() const { return basis.rows; }
    int codim() const { return ambient_dim - basis.rows; }

    static Subspace span(const FpMatrix& vectors) {
        auto rr = rref(vectors);
        Subspace s(vectors.cols, vectors.p);
        s.basis = FpMatrix(rr.rank, vectors.cols, vectors.p);
        for (int i = 0; i < rr.rank; ++i)
            for (int j = 0; j < vectors.cols; ++j)
                s.basis.at(i, j) = rr.r.at(i, j);
        return s;
    }

    bool contains(const std::vector<int>& v) const {
        if ((int)v.size() != ambient_dim) throw std::invalid_argument("Subspace::contains: wrong length");
        // reduce v against the RREF basis
        std::vector<int> w = v;
        for (int i = 0; i < basis.rows; ++i) {
            int pc = -1;
            for (int j = 0; j < ambient_dim; ++j)
                if (basis.at(i, j)) { pc = j; break; }
            int f = w[pc];
            if (!f) continue;
            for (int j = 0; j < ambient_dim; ++j)
                w[j] = mod_reduce(w[j] - (long long)f * basis.at(i, j), p);
        }
        return std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
    }

    friend bool operator==(const Subspace& x, const Subspace& y) {
        return x.ambient_dim == y.ambient_dim && x.p == y.p && x.basis == y.basis;
    }
    friend bool operator<(const Subspace& x, const Subspace& y) {
        return std::tie(x.ambient_dim, x.p, x.basis) < std::tie(y.ambient_dim, y.p, y.basis);
    }
};

// Solution space {v : Mv = 0}, canonical basis.
inline Subspace nullspace(const FpMatrix& m) {
    auto rr = rref(m);
    std::vector<char> is_pivot(m.cols, 0);
    for (int c : rr.pivot_cols) is_pivot[c] = 1;
    FpMatrix gens(m.cols - rr.rank, m.cols, m.p);
    int g = 0;
    for (int fc = 0; fc < m.cols; ++fc) {
        if (is_pivot[fc]) continue;
        gens.at(g, fc) = 1;
        for (int i = 0; i < rr.rank; ++i)
            gens.at(g, rr.pivot_cols[i]) = mod_reduce(-rr.r.at(i, fc), m.p);
        ++g;
    }
    return Subspace::span(gens);
}

inline long long gaussian_binomial(int n, int k, int p) {
    if (k < 0 || k > n) return 0;
    // prod_{i=0}^{k-1} (p^{n-i} - 1) / (p^{k-i} - 1), exact integer arithmetic
    __int128 num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        long long pn = 1, pk = 1;
        for (int t = 0; t < n - i; ++t) pn *= p;
        for (int t = 0; t < k - i; ++t) pk *= p;
        num *= pn - 1;
        den *= pk - 1;
    }
    if (num % den != 0) throw std::logic_error("gaussian_binomial: inexact division");
    return (long long)(num / den);
}

// All subspaces of F_p^{ambient_dim}, one canonical representative each,
// generated directly in RREF form. Guard keeps p^ambient_dim enumerable.
inline std::vector<Subspace> enumerate_subspaces(int ambient_dim, int p, int budget_bits = 20) {
    double bits = ambient_dim * std::log2((double)p);
    if (bits > budget_bits)
        throw std::domain_error("enumerate_subspaces: p^ambient_dim exceeds budget");
    std::vector<Subspace> out;
    for (int r = 0; r <= ambient_dim; ++r) {
        // choose pivot columns c_0 < ... < c_{r-1}
        std::vector<int> piv(r);
        std::iota(piv.begin(), piv.end(), 0);
        while (true) {
            // free entries: row i, non-pivot column j > piv[i]
            std::vector<std::pair<int, int>> free_pos;
            std::vector<char> is_piv(ambient_dim, 0);
            for (int c : piv) is_piv[c] = 1;
            for (int i = 0; i < r; ++i)
                for (int j = piv[i] + 1; j < ambient_dim; ++j)
                    if (!is_piv[j]) free_pos.push_back({i, j});
            std::vector<int> vals(free_pos.size(), 0);
            while (true) {
                Subspace s(ambient_dim, p);
                s.basis = FpMatrix(r, ambient_dim, p);
                for (int i = 0; i < r; ++i) s.basis.at(i, piv[i]) = 1;
                for (size_t t = 0; t < free_pos.size(); ++t)
                    s.basis.at(free_pos[t].first, free_pos[t].second) = vals[t];
                out.push_back(std::move(s));
                // next assignment
                size_t t = 0;
                while (t < vals.size() && vals[t] == p - 1) vals[t++] = 0;
                if (t == vals.size()) break;
                ++vals[t];
            }
            // next pivot combination
            int i = r - 1;
            while (i >= 0 && piv[i] == ambient_dim - r + i) --i;
            if (i < 0) break;
            ++piv[i];
            for (int j = i + 1; j < r; ++j) piv[j] = piv[j - 1] + 1;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Incremental rank over F_p: feed columns (or rows), get the rank so far.
// Used where image matrices are produced lazily.
struct RankAccumulator {
    int n = 0; // vector length
    int p = 2;
    std::vector<std::vector<int>> reduced; // echelonized vectors
    std::vector<int> pivot_of;             // pivot index per stored vector
    std::vector<uint64_t> packed;          // p == 2 path, one row per stored vector
    int words = 0;

    RankAccumulator(int len, int prime) : n(len), p(prime), words((len + 63) / 64) {}

    int rank() const { return p == 2 ? (int)(packed.size() / std::max(words, 1)) : (int)reduced.size(); }

    // returns true if the vector enlarged the span
    bool add(const std::vector<int>& v_in) {
        if ((int)v_in.size() != n) throw std::invalid_argument("RankAccumulator: wrong length");
        if (p == 2) {
            std::vector<uint64_t> w(words, 0);
            for (int j = 0; j < n; ++j)
                if (v_in[j] & 1) w[j / 64] |= uint64_t(1) << (j % 64);
            size_t nrows = packed.size() / std::max(words, 1);
            for (size_t r = 0; r < nrows; ++r) {
                int pv = pivot_of[r];
                if (w[pv / 64] >> (pv % 64) & 1)
                    for (int k = 0; k < words; ++k) w[k] ^= packed[r * words + k];
            }
            int pv = -1;
            for (int j = 0; j < n; ++j)
                if (w[j / 64] >> (j % 64) & 1) { pv = j; break; }
            if (pv < 0) return false;
            pivot_of.push_back(pv);
            packed.insert(packed.end(), w.begin(), w.end());
            return true;
        }
        std::vector<int> v = v_in;
        for (size_t r = 0; r < reduced.size(); ++r) {
            int f = v[pivot_of[r]];
            if (!f) continue;
            for (int j = 0; j < n; ++j)
                v[j] = mod_reduce(v[j] - (long long)f * reduced[r][j], p);
        }
        int pv = -1;
        for (int j = 0; j < n; ++j)
            if (v[j]) { pv = j; break; }
        if (pv < 0) return false;
        int inv = mod_inverse(v[pv], p);
        for (int j = 0; j < n; ++j) v[j] = mod_reduce((long long)v[j] * inv, p);
        pivot_of.push_back(pv);
        reduced.push_back(std::move(v));
        return true;
    }

    // is v in the accumulated span?
    bool contains(const std::vector<int>& v_in) const {
        RankAccumulator tmp = *this;
        return !tmp.add(v_in);
    }
};

} // namespace stw
