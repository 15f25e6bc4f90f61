#pragma once

#include "stw/group.hpp"
#include "stw/subgroup_lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace stw {

// All homomorphisms G -> L, each as an image-of-element table, verified
// pointwise on the Cayley table.
inline std::vector<std::vector<int>> enumerate_homs(const FiniteGroup& G, const FiniteGroup& L,
                                                    long long budget = 400000000LL) {
    std::vector<int> gens = generating_sequence(G);
    long long cost = 1;
    for (size_t i = 0; i < gens.size(); ++i) {
        cost *= L.order;
        if (cost > budget) throw std::domain_error("enumerate_homs: search space exceeds budget");
    }
    // BFS words over the generators
    std::vector<int> built_from(G.order, -1), built_gen(G.order, -1);
    std::vector<int> bfs{G.identity};
    {
        std::vector<char> seen(G.order, 0);
        seen[G.identity] = 1;
        for (size_t i = 0; i < bfs.size(); ++i)
            for (size_t gi = 0; gi < gens.size(); ++gi) {
                int y = G.op(bfs[i], gens[gi]);
                if (!seen[y]) {
                    seen[y] = 1;
                    built_from[y] = bfs[i];
                    built_gen[y] = (int)gi;
                    bfs.push_back(y);
                }
            }
    }
    std::vector<int> ordG(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) ordG[i] = G.element_order(gens[i]);

    std::vector<std::vector<int>> homs;
    std::vector<int> img(gens.size());
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == gens.size()) {
            std::vector<int> f(G.order, -1);
            f[G.identity] = L.identity;
            for (size_t i = 1; i < bfs.size(); ++i) {
                int a = bfs[i];
                f[a] = L.op(f[built_from[a]], img[built_gen[a]]);
            }
            for (int a = 0; a < G.order; ++a)
                for (int b = 0; b < G.order; ++b)
                    if (f[G.op(a, b)] != L.op(f[a], f[b])) return;
            homs.push_back(std::move(f));
            return;
        }
        for (int b = 0; b < L.order; ++b) {
            if (ordG[k] % L.element_order(b) != 0) continue; // order of image divides order of source
            img[k] = b;
            rec(k + 1);
        }
    };
    rec(0);
    std::sort(homs.begin(), homs.end());
    return homs;
}

struct HomClassReport {
    std::vector<std::vector<int>> homs;
    std::vector<std::vector<int>> classes;   // partition of hom indices under L-conjugacy
    std::vector<int> centralizer_orders;     // |C_L(im f)| per class representative
};

inline std::vector<int> hom_image(const std::vector<int>& f) {
    std::set<int> im(f.begin(), f.end());
    return std::vector<int>(im.begin(), im.end());
}

inline HomClassReport hom_enumeration(const FiniteGroup& G, const FiniteGroup& L) {
    HomClassReport rep;
    rep.homs = enumerate_homs(G, L);
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < rep.homs.size(); ++i) index[rep.homs[i]] = (int)i;

    std::vector<int> cls(rep.homs.size(), -1);
    for (size_t i = 0; i < rep.homs.size(); ++i) {
        if (cls[i] >= 0) continue;
        int cid = (int)rep.classes.size();
        std::vector<int> members;
        for (int s = 0; s < L.order; ++s) {
            std::vector<int> conj(G.order);
            for (int g = 0; g < G.order; ++g) conj[g] = L.op(L.op(s, rep.homs[i][g]), L.inv(s));
            auto it = index.find(conj);
            if (it == index.end()) throw std::logic_error("hom_enumeration: conjugate escaped hom set");
            if (cls[it->second] < 0) { cls[it->second] = cid; members.push_back(it->second); }
        }
        std::sort(members.begin(), members.end());
        rep.classes.push_back(members);
    }
    for (auto& members : rep.classes) {
        const std::vector<int>& f = rep.homs[members.front()];
        std::vector<int> im = hom_image(f);
        int cz = 0;
        for (int s = 0; s < L.order; ++s) {
            bool central = true;
            for (int x : im)
                if (L.op(s, x) != L.op(x, s)) { central = false; break; }
            if (central) ++cz;
        }
        rep.centralizer_orders.push_back(cz);
    }
    return rep;
}

struct GraphSubgroup {
    std::vector<int> hom;      // f : G -> L
    std::vector<int> elements; // {(h, f(h))} inside G x L, sorted product codes
};

// Graphs of every homomorphism G -> L inside the product G x L.
// Each is verified to be a subgroup with injective projection to G.
inline std::vector<GraphSubgroup> graph_subgroups(const FiniteGroup& G, const FiniteGroup& L) {
    std::vector<GraphSubgroup> out;
    for (auto& f : enumerate_homs(G, L)) {
        GraphSubgroup gs;
        gs.hom = f;
        for (int g = 0; g < G.order; ++g) gs.elements.push_back(product_encode(L, g, f[g]));
        std::sort(gs.elements.begin(), gs.elements.end());
        // closure check inside the product
        for (int a : gs.elements)
            for (int b : gs.elements) {
                auto [g1, l1] = product_decode(L, a);
                auto [g2, l2] = product_decode(L, b);
                int prod = product_encode(L, G.op(g1, g2), L.op(l1, l2));
                if (!std::binary_search(gs.elements.begin(), gs.elements.end(), prod))
                    throw std::logic_error("graph_subgroups: graph not closed");
            }
        out.push_back(std::move(gs));
    }
    return out;
}

// dim over Q of the Gamma-fixed subspace of rho_G (x) reduced standard rep of
// Sigma_n, for Gamma a subgroup of G x Sigma_n. Two independent routes:
//   (a) exact character averaging over Gamma,
//   (b) closed form |G||Psi|/|Gamma| * (orbits(Psi) - 1), Psi = Gamma cap Sigma_n.
// Both are computed; disagreement or inexact division is a hard error.
inline long long fixed_dim_rho_tensor(const FiniteGroup& G, int n, const FiniteGroup& Sn,
                                      const std::vector<int>& gamma_elements) {
    if (Sn.perms.empty() || (int)Sn.perms[0].size() != n)
        throw std::invalid_argument("fixed_dim_rho_tensor: Sn must be symmetric_group(n)");
    // verify Gamma is a subgroup of the product
    for (int a : gamma_elements)
        for (int b : gamma_elements) {
            auto [g1, s1] = product_decode(Sn, a);
            auto [g2, s2] = product_decode(Sn, b);
            int prod = product_encode(Sn, G.op(g1, g2), Sn.op(s1, s2));
            if (!std::binary_search(gamma_elements.begin(), gamma_elements.end(), prod))
                throw std::invalid_argument("fixed_dim_rho_tensor: not a subgroup");
        }

    // (a) character sum: chi_{rho_G}(g) = |G| if g = e else 0; chi_{Rbar^n}(s) = fix(s) - 1
    long long char_sum = 0;
    for (int x : gamma_elements) {
        auto [g, s] = product_decode(Sn, x);
        if (g != G.identity) continue;
        int fix = 0;
        for (int i = 0; i < n; ++i)
            if (Sn.perms[s][i] == i) ++fix;
        char_sum += (long long)G.order * (fix - 1);
    }
    long long gamma_order = (long long)gamma_elements.size();
    if (char_sum % gamma_order != 0)
        throw std::logic_error("fixed_dim_rho_tensor: character average not integral");
    long long dim_a = char_sum / gamma_order;

    // (b) closed form via Psi = Gamma cap (1 x Sigma_n)
    std::vector<int> psi;
    for (int x : gamma_elements) {
        auto [g, s] = product_decode(Sn, x);
        if (g == G.identity) psi.push_back(s);
    }
    std::vector<int> comp(n);
    for (int i = 0; i < n; ++i) comp[i] = i;
    std::function<int(int)> find = [&](int i) { return comp[i] == i ? i : comp[i] = find(comp[i]); };
    for (int s : psi)
        for (int i = 0; i < n; ++i) {
            int a = find(i), b = find(Sn.perms[s][i]);
            if (a != b) comp[a] = b;
        }
    int orbits = 0;
    for (int i = 0; i < n; ++i)
        if (find(i) == i) ++orbits;
    long long num = (long long)G.order * (long long)psi.size() * (orbits - 1);
    if (num % gamma_order != 0)
        throw std::logic_error("fixed_dim_rho_tensor: closed form not integral");
    long long dim_b = num / gamma_order;

    if (dim_a != dim_b) throw std::logic_error("fixed_dim_rho_tensor: the two routes disagree");
    return dim_a;
}

// Is Psi (a set of Sigma_n elements) transitive on {0..n-1}?
inline bool permutations_transitive(const FiniteGroup& Sn, const std::vector<int>& psi, int n) {
    std::vector<int> comp(n);
    for (int i = 0; i < n; ++i) comp[i] = i;
    std::function<int(int)> find = [&](int i) { return comp[i] == i ? i : comp[i] = find(comp[i]); };
    for (int s : psi)
        for (int i = 0; i < n; ++i) {
            int a = find(i), b = find(Sn.perms[s][i]);
            if (a != b) comp[a] = b;
        }
    int orbits = 0;
    for (int i = 0; i < n; ++i)
        if (find(i) == i) ++orbits;
    return orbits == 1;
}

} // namespace stw
