#include "stw/fp_matrix.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

using namespace stw;

namespace {

FpMatrix from_rows(const std::vector<std::vector<int>>& rows, int p) {
    FpMatrix m((int)rows.size(), rows.empty() ? 0 : (int)rows[0].size(), p);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = mod_reduce(rows[i][j], p);
    return m;
}

// All points of a subspace, by enumerating coefficient tuples of the basis.
std::set<std::vector<int>> point_set(const Subspace& s) {
    std::set<std::vector<int>> pts;
    int d = s.dim();
    std::vector<int> coeff(d, 0);
    while (true) {
        std::vector<int> v(s.ambient_dim, 0);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < s.ambient_dim; ++j)
                v[j] = mod_reduce(v[j] + (long long)coeff[i] * s.basis.at(i, j), s.p);
        pts.insert(v);
        int t = 0;
        while (t < d && coeff[t] == s.p - 1) coeff[t++] = 0;
        if (t == d) break;
        ++coeff[t];
    }
    return pts;
}

} // namespace

TEST_CASE("rref on the stated examples") {
    auto id3 = FpMatrix::identity(3, 2);
    auto r = rref(id3);
    CHECK(r.r == id3);
    CHECK(r.rank == 3);

    FpMatrix z(2, 2, 3);
    auto rz = rref(z);
    CHECK(rz.r == z);
    CHECK(rz.rank == 0);

    auto m = from_rows({{1, 1}, {1, 1}}, 2);
    auto rm = rref(m);
    CHECK(rm.rank == 1);
    CHECK(rm.r == from_rows({{1, 1}, {0, 0}}, 2));
}

TEST_CASE("rref is idempotent and rank-nullity holds") {
    std::mt19937 rng(12345);
    for (int p : {2, 3, 5}) {
        for (int iter = 0; iter < 60; ++iter) {
            int r = 1 + rng() % 5, c = 1 + rng() % 5;
            FpMatrix m(r, c, p);
            for (int& v : m.a) v = rng() % p;
            auto rr = rref(m);
            CHECK(rref(rr.r).r == rr.r);
            CHECK(rr.rank + nullspace(m).dim() == c);
        }
    }
}

TEST_CASE("bit-packed GF(2) elimination agrees with the generic path") {
    std::mt19937 rng(999);
    for (int iter = 0; iter < 120; ++iter) {
        int r = 1 + rng() % 8, c = 1 + rng() % 70; // spill past one machine word
        FpMatrix m(r, c, 2);
        for (int& v : m.a) v = rng() % 2;
        auto fast = detail::rref_gf2(m);
        auto slow = detail::rref_generic(m);
        CHECK(fast.r == slow.r);
        CHECK(fast.rank == slow.rank);
        CHECK(fast.pivot_cols == slow.pivot_cols);
    }
}

TEST_CASE("nullspace examples") {
    auto id = FpMatrix::identity(3, 5);
    CHECK(nullspace(id).dim() == 0);

    FpMatrix z(2, 3, 2);
    CHECK(nullspace(z).dim() == 3);

    auto m = from_rows({{1, 0}, {0, 0}}, 2);
    Subspace s = nullspace(m);
    REQUIRE(s.dim() == 1);
    CHECK(s.basis.at(0, 0) == 0);
    CHECK(s.basis.at(0, 1) == 1);
    // Mv = 0 for every point of the nullspace
    for (auto& v : point_set(s)) CHECK((v[0] == 0));
}

TEST_CASE("subspace canonical form: same point set, same basis") {
    std::mt19937 rng(4242);
    for (int p : {2, 3}) {
        for (int iter = 0; iter < 40; ++iter) {
            int c = 2 + rng() % 3;
            FpMatrix m(2, c, p);
            for (int& v : m.a) v = rng() % p;
            Subspace s = Subspace::span(m);
            // re-span from an enumerated point set in shuffled order
            auto pts = point_set(s);
            std::vector<std::vector<int>> rows(pts.begin(), pts.end());
            std::shuffle(rows.begin(), rows.end(), rng);
            CHECK(Subspace::span(from_rows(rows, p)) == s);
        }
    }
}

TEST_CASE("enumerate_subspaces counts match the Gaussian binomial") {
    CHECK(enumerate_subspaces(1, 2).size() == 2);
    CHECK(enumerate_subspaces(2, 2).size() == 5);
    CHECK(enumerate_subspaces(3, 2).size() == 16); // 1 + 7 + 7 + 1

    for (int p : {2, 3, 5}) {
        for (int n = 0; n <= 3; ++n) {
            long long expect = 0;
            for (int k = 0; k <= n; ++k) expect += gaussian_binomial(n, k, p);
            auto subs = enumerate_subspaces(n, p);
            CHECK((long long)subs.size() == expect);
            // all distinct (canonical representatives)
            std::set<Subspace> dedup(subs.begin(), subs.end());
            CHECK(dedup.size() == subs.size());
        }
    }
    CHECK_THROWS_AS(enumerate_subspaces(40, 5), std::domain_error);
}

TEST_CASE("mixed moduli are a hard error") {
    Fp a(1, 2), b(1, 3);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    FpMatrix m2(2, 2, 2), m3(2, 2, 3);
    CHECK_THROWS_AS(m2 * m3, std::invalid_argument);
}

TEST_CASE("rank accumulator matches batch rank") {
    std::mt19937 rng(777);
    for (int p : {2, 3}) {
        for (int iter = 0; iter < 30; ++iter) {
            int n = 3 + rng() % 6, k = 1 + rng() % 8;
            FpMatrix m(k, n, p);
            for (int& v : m.a) v = rng() % p;
            RankAccumulator acc(n, p);
            for (int i = 0; i < k; ++i) {
                std::vector<int> row(m.a.begin() + (size_t)i * n, m.a.begin() + (size_t)(i + 1) * n);
                acc.add(row);
            }
            CHECK(acc.rank() == rank(m));
        }
    }
}
