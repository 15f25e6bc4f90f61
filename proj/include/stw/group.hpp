#pragma once

#include "stw/fp.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace stw {

// Finite group as a full Cayley table. Group axioms are checked at
// construction; everything downstream may assume a valid table.
struct FiniteGroup {
    int order = 0;
    std::vector<int> mult;     // order x order, row-major
    std::vector<int> inverse;  // per element
    int identity = 0;
    std::vector<std::string> labels;       // optional
    std::vector<int> generators;           // optional hint
    std::vector<std::vector<int>> perms;   // optional: permutation realization (symmetric groups)
    std::string name;

    FiniteGroup() = default;
    explicit FiniteGroup(std::vector<int> table, std::string group_name = "")
        : mult(std::move(table)), name(std::move(group_name)) {
        order = 0;
        while ((long long)order * order < (long long)mult.size()) ++order;
        if ((long long)order * order != (long long)mult.size())
            throw std::invalid_argument("FiniteGroup: table is not square");
        validate();
    }

    int op(int a, int b) const { return mult[(size_t)a * order + b]; }
    int inv(int a) const { return inverse[a]; }

    int element_order(int g) const {
        int x = g, k = 1;
        while (x != identity) { x = op(x, g); ++k; }
        return k;
    }

    int exponent() const {
        long long e = 1;
        for (int g = 0; g < order; ++g) e = std::lcm(e, (long long)element_order(g));
        return (int)e;
    }

    std::vector<int> center() const {
        std::vector<int> z;
        for (int g = 0; g < order; ++g) {
            bool central = true;
            for (int h = 0; h < order && central; ++h) central = op(g, h) == op(h, g);
            if (central) z.push_back(g);
        }
        return z;
    }

    bool is_abelian() const {
        for (int g = 0; g < order; ++g)
            for (int h = g + 1; h < order; ++h)
                if (op(g, h) != op(h, g)) return false;
        return true;
    }

    // true iff |G| is a power of p
    bool is_p_group(int p) const {
        int n = order;
        while (n % p == 0) n /= p;
        return n == 1;
    }

    std::string label(int g) const {
        return g < (int)labels.size() ? labels[g] : "g" + std::to_string(g);
    }

private:
    void validate() {
        for (int v : mult)
            if (v < 0 || v >= order) throw std::invalid_argument("FiniteGroup: entry out of range");
        identity = -1;
        for (int e = 0; e < order; ++e) {
            bool ok = true;
            for (int g = 0; g < order && ok; ++g) ok = op(e, g) == g && op(g, e) == g;
            if (ok) { identity = e; break; }
        }
        if (identity < 0) throw std::invalid_argument("FiniteGroup: no identity");
        inverse.assign(order, -1);
        for (int g = 0; g < order; ++g) {
            for (int h = 0; h < order; ++h)
                if (op(g, h) == identity && op(h, g) == identity) { inverse[g] = h; break; }
            if (inverse[g] < 0) throw std::invalid_argument("FiniteGroup: missing inverse");
        }
        for (int a = 0; a < order; ++a)
            for (int b = 0; b < order; ++b)
                for (int c = 0; c < order; ++c)
                    if (op(op(a, b), c) != op(a, op(b, c)))
                        throw std::invalid_argument("FiniteGroup: associativity fails");
    }
};

namespace detail {

// Build a group from an abstract multiplication on arbitrary element keys.
template <typename Elem, typename Mul>
FiniteGroup group_from_elements(const std::vector<Elem>& elems, Mul mul, std::string name) {
    std::map<Elem, int> index;
    for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = (int)i;
    int n = (int)elems.size();
    std::vector<int> table((size_t)n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto it = index.find(mul(elems[i], elems[j]));
            if (it == index.end()) throw std::logic_error("group_from_elements: not closed");
            table[(size_t)i * n + j] = it->second;
        }
    return FiniteGroup(std::move(table), std::move(name));
}

} // namespace detail

inline FiniteGroup trivial_group() { return FiniteGroup({0}, "1"); }

inline FiniteGroup cyclic_group(int n) {
    std::vector<int> t((size_t)n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[(size_t)i * n + j] = (i + j) % n;
    return FiniteGroup(std::move(t), "Z/" + std::to_string(n));
}

inline FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B) {
    int n = A.order * B.order;
    std::vector<int> t((size_t)n * n);
    auto enc = [&](int a, int b) { return a * B.order + b; };
    for (int a1 = 0; a1 < A.order; ++a1)
        for (int b1 = 0; b1 < B.order; ++b1)
            for (int a2 = 0; a2 < A.order; ++a2)
                for (int b2 = 0; b2 < B.order; ++b2)
                    t[(size_t)enc(a1, b1) * n + enc(a2, b2)] = enc(A.op(a1, a2), B.op(b1, b2));
    FiniteGroup g(std::move(t), A.name + "x" + B.name);
    return g;
}

inline int product_encode(const FiniteGroup& B, int a, int b) { return a * B.order + b; }
inline std::pair<int, int> product_decode(const FiniteGroup& B, int x) { return {x / B.order, x % B.order}; }

inline FiniteGroup elementary_abelian_group(int p, int k) {
    FiniteGroup g = cyclic_group(p);
    for (int i = 1; i < k; ++i) g = direct_product(g, cyclic_group(p));
    if (k == 0) g = trivial_group();
    g.name = "(Z/" + std::to_string(p) + ")^" + std::to_string(k);
    return g;
}

inline FiniteGroup symmetric_group(int n) {
    std::vector<std::vector<int>> elems;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do elems.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
    auto mul = [](const std::vector<int>& s, const std::vector<int>& t) {
        // (s*t)(i) = s(t(i))
        std::vector<int> r(s.size());
        for (size_t i = 0; i < s.size(); ++i) r[i] = s[t[i]];
        return r;
    };
    FiniteGroup g = detail::group_from_elements(elems, mul, "S" + std::to_string(n));
    g.perms = std::move(elems);
    return g;
}

inline int permutation_sign(const std::vector<int>& s) {
    int sgn = 1;
    std::vector<char> seen(s.size(), 0);
    for (size_t i = 0; i < s.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = s[j]) { seen[j] = 1; ++len; }
        if (len % 2 == 0) sgn = -sgn;
    }
    return sgn;
}

// Affine transformations x -> ax + b of the F_p line, order p(p-1).
// Realized as permutations of {0..p-1}.
inline FiniteGroup affine_line_group(int p) {
    if (!is_prime(p)) throw std::invalid_argument("affine_line_group: p must be prime");
    std::vector<std::vector<int>> elems;
    for (int a = 1; a < p; ++a)
        for (int b = 0; b < p; ++b) {
            std::vector<int> perm(p);
            for (int x = 0; x < p; ++x) perm[x] = (a * x + b) % p;
            elems.push_back(perm);
        }
    auto mul = [](const std::vector<int>& s, const std::vector<int>& t) {
        std::vector<int> r(s.size());
        for (size_t i = 0; i < s.size(); ++i) r[i] = s[t[i]];
        return r;
    };
    FiniteGroup g = detail::group_from_elements(elems, mul, "Aff1(" + std::to_string(p) + ")");
    g.perms = std::move(elems);
    return g;
}

// Upper unitriangular 3x3 matrices over F_p, order p^3 (extraspecial for odd p).
inline FiniteGroup heisenberg_group(int p) {
    struct E { int x, y, z; bool operator<(const E& o) const { return std::tie(x, y, z) < std::tie(o.x, o.y, o.z); } };
    std::vector<E> elems;
    for (int x = 0; x < p; ++x)
        for (int y = 0; y < p; ++y)
            for (int z = 0; z < p; ++z) elems.push_back({x, y, z});
    auto mul = [p](const E& a, const E& b) {
        // [[1,x,z],[0,1,y],[0,0,1]] multiplication
        return E{(a.x + b.x) % p, (a.y + b.y) % p, (a.z + b.z + a.x * b.y) % p};
    };
    return detail::group_from_elements(elems, mul, "Heis(" + std::to_string(p) + ")");
}

inline FiniteGroup dihedral_group_8() {
    // <r, s | r^4 = s^2 = 1, srs = r^-1>, elements r^i s^j
    struct E { int i, j; bool operator<(const E& o) const { return std::tie(i, j) < std::tie(o.i, o.j); } };
    std::vector<E> elems;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 2; ++j) elems.push_back({i, j});
    auto mul = [](const E& a, const E& b) {
        // (r^i s^j)(r^k s^l) = r^{i + k*(-1)^j} s^{j+l}
        int k = a.j ? (4 - b.i) % 4 : b.i;
        return E{(a.i + k) % 4, (a.j + b.j) % 2};
    };
    return detail::group_from_elements(elems, mul, "D8");
}

inline FiniteGroup quaternion_group_8() {
    // {1,-1,i,-i,j,-j,k,-k} indexed 0..7 as pairs (axis, sign)
    struct E { int axis, sign; bool operator<(const E& o) const { return std::tie(axis, sign) < std::tie(o.axis, o.sign); } };
    std::vector<E> elems;
    for (int a = 0; a < 4; ++a)
        for (int s = 0; s < 2; ++s) elems.push_back({a, s});
    auto mul = [](const E& a, const E& b) {
        // axis 0 = 1, 1 = i, 2 = j, 3 = k; sign 0 = +, 1 = -
        // i*i = j*j = k*k = -1, i*j = k, j*k = i, k*i = j
        static const int ax[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int sg[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
        return E{ax[a.axis][b.axis], (a.sign + b.sign + sg[a.axis][b.axis]) % 2};
    };
    return detail::group_from_elements(elems, mul, "Q8");
}

// Quotient G/N by a normal subgroup given as a sorted element list.
// Cosets are indexed by their minimal representative order.
inline FiniteGroup quotient_group(const FiniteGroup& G, const std::vector<int>& N,
                                  std::vector<int>* coset_of = nullptr) {
    std::vector<int> cls(G.order, -1);
    std::vector<int> reps;
    for (int g = 0; g < G.order; ++g) {
        if (cls[g] >= 0) continue;
        int id = (int)reps.size();
        reps.push_back(g);
        for (int n : N) cls[G.op(g, n)] = id;
    }
    int m = (int)reps.size();
    std::vector<int> t((size_t)m * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) t[(size_t)i * m + j] = cls[G.op(reps[i], reps[j])];
    if (coset_of) *coset_of = cls;
    return FiniteGroup(std::move(t), G.name + "/N");
}

// Subgroup (given by sorted element list) as a standalone group.
inline FiniteGroup subgroup_as_group(const FiniteGroup& G, const std::vector<int>& elems,
                                     std::vector<int>* index_in_G = nullptr) {
    std::map<int, int> idx;
    for (size_t i = 0; i < elems.size(); ++i) idx[elems[i]] = (int)i;
    int m = (int)elems.size();
    std::vector<int> t((size_t)m * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            auto it = idx.find(G.op(elems[i], elems[j]));
            if (it == idx.end()) throw std::invalid_argument("subgroup_as_group: not closed");
            t[(size_t)i * m + j] = it->second;
        }
    if (index_in_G) *index_in_G = elems;
    return FiniteGroup(std::move(t));
}

// Closure of a set of elements, returned sorted.
inline std::vector<int> subgroup_closure(const FiniteGroup& G, std::vector<int> gens) {
    std::vector<char> in(G.order, 0);
    std::vector<int> work{G.identity};
    in[G.identity] = 1;
    for (int g : gens)
        if (!in[g]) { in[g] = 1; work.push_back(g); }
    gens.push_back(G.identity);
    for (size_t k = 0; k < work.size(); ++k)
        for (int g : gens) {
            int y = G.op(work[k], g);
            if (!in[y]) { in[y] = 1; work.push_back(y); }
            y = G.op(g, work[k]);
            if (!in[y]) { in[y] = 1; work.push_back(y); }
        }
    std::sort(work.begin(), work.end());
    return work;
}

// Greedy small generating sequence.
inline std::vector<int> generating_sequence(const FiniteGroup& G) {
    std::vector<int> gens;
    std::vector<int> closed{G.identity};
    while ((int)closed.size() < G.order) {
        int best = -1;
        size_t best_gain = 0;
        for (int g = 0; g < G.order; ++g) {
            if (std::binary_search(closed.begin(), closed.end(), g)) continue;
            std::vector<int> trial = gens;
            trial.push_back(g);
            size_t gain = subgroup_closure(G, trial).size();
            if (gain > best_gain) { best_gain = gain; best = g; }
            if (gain == (size_t)G.order) break;
        }
        gens.push_back(best);
        closed = subgroup_closure(G, gens);
    }
    return gens;
}

// Brute-force isomorphism search by generator images; adequate for the tiny
// groups in the catalog. Returns one isomorphism (as image-of-element table)
// or empty if none exists.
inline std::vector<int> find_isomorphism(const FiniteGroup& A, const FiniteGroup& B) {
    if (A.order != B.order) return {};
    std::vector<int> gens = generating_sequence(A);
    // express every element of A as a word in gens via BFS
    std::vector<int> built_from(A.order, -1), built_gen(A.order, -1);
    std::vector<int> bfs{A.identity};
    std::vector<char> seen(A.order, 0);
    seen[A.identity] = 1;
    for (size_t i = 0; i < bfs.size(); ++i)
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            int y = A.op(bfs[i], gens[gi]);
            if (!seen[y]) {
                seen[y] = 1;
                built_from[y] = bfs[i];
                built_gen[y] = (int)gi;
                bfs.push_back(y);
            }
        }
    std::vector<int> img(gens.size(), -1);
    std::vector<int> phi(A.order, -1);
    std::vector<int> ordA(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) ordA[i] = A.element_order(gens[i]);

    std::function<bool(size_t)> rec = [&](size_t k) -> bool {
        if (k == gens.size()) {
            phi.assign(A.order, -1);
            phi[A.identity] = B.identity;
            for (size_t i = 1; i < bfs.size(); ++i) {
                int a = bfs[i];
                phi[a] = B.op(phi[built_from[a]], img[built_gen[a]]);
            }
            std::vector<char> hit(B.order, 0);
            for (int a = 0; a < A.order; ++a) {
                if (hit[phi[a]]) return false;
                hit[phi[a]] = 1;
            }
            for (int a = 0; a < A.order; ++a)
                for (int b = 0; b < A.order; ++b)
                    if (phi[A.op(a, b)] != B.op(phi[a], phi[b])) return false;
            return true;
        }
        for (int b = 0; b < B.order; ++b) {
            if (B.element_order(b) != ordA[k]) continue;
            img[k] = b;
            if (rec(k + 1)) return true;
        }
        return false;
    };
    if (!rec(0)) return {};
    return phi;
}

inline bool is_isomorphic(const FiniteGroup& A, const FiniteGroup& B) {
    return !find_isomorphism(A, B).empty();
}

// Catalog dispatch. Supported names:
//   cyclic:n  elem:p,k  zpzp2:p  heisenberg:p  dihedral:8  quaternion:8
//   symmetric:n  affine:p  trivial
inline FiniteGroup build_catalog(const std::string& name, const std::vector<int>& params) {
    auto want = [&](size_t k) {
        if (params.size() != k)
            throw std::invalid_argument("build_catalog: '" + name + "' expects " + std::to_string(k) + " parameter(s)");
    };
    if (name == "trivial") { want(0); return trivial_group(); }
    if (name == "cyclic") { want(1); if (params[0] < 1 || params[0] > 128) throw std::invalid_argument("cyclic: order out of range"); return cyclic_group(params[0]); }
    if (name == "elem" || name == "elementary_abelian") {
        want(2);
        if (!is_prime(params[0]) || params[1] < 0) throw std::invalid_argument("elem: bad parameters");
        double sz = std::pow((double)params[0], params[1]);
        if (sz > 128) throw std::invalid_argument("elem: order out of range");
        return elementary_abelian_group(params[0], params[1]);
    }
    if (name == "zpzp2") {
        want(1);
        int p = params[0];
        if (!is_prime(p) || p * p * p > 128) throw std::invalid_argument("zpzp2: bad p");
        FiniteGroup g = direct_product(cyclic_group(p), cyclic_group(p * p));
        g.name = "Z/" + std::to_string(p) + "xZ/" + std::to_string(p * p);
        return g;
    }
    if (name == "heisenberg") {
        want(1);
        if (!is_prime(params[0]) || params[0] > 5) throw std::invalid_argument("heisenberg: bad p");
        return heisenberg_group(params[0]);
    }
    if (name == "dihedral") { want(1); if (params[0] != 8) throw std::invalid_argument("dihedral: only order 8 supported"); return dihedral_group_8(); }
    if (name == "quaternion") { want(1); if (params[0] != 8) throw std::invalid_argument("quaternion: only order 8 supported"); return quaternion_group_8(); }
    if (name == "symmetric") { want(1); if (params[0] < 1 || params[0] > 5) throw std::invalid_argument("symmetric: n must be 1..5"); return symmetric_group(params[0]); }
    if (name == "affine" || name == "affine_line") { want(1); if (!is_prime(params[0]) || params[0] > 11) throw std::invalid_argument("affine: bad p"); return affine_line_group(params[0]); }
    throw std::invalid_argument("build_catalog: unknown name '" + name + "'");
}

} // namespace stw
