#include "stw/group.hpp"
#include "stw/group_spec.hpp"
#include "stw/subgroup_lattice.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <sstream>

using namespace stw;

TEST_CASE("catalog basics") {
    FiniteGroup c4 = build_catalog("cyclic", {4});
    CHECK(c4.order == 4);
    int order4 = 0;
    for (int g = 0; g < 4; ++g)
        if (c4.element_order(g) == 4) ++order4;
    CHECK(order4 == 2); // 1 and 3 generate

    FiniteGroup aff3 = build_catalog("affine", {3});
    CHECK(aff3.order == 6);
    CHECK_FALSE(aff3.is_abelian());
    CHECK(is_isomorphic(aff3, symmetric_group(3)));

    FiniteGroup h3 = build_catalog("heisenberg", {3});
    CHECK(h3.order == 27);
    CHECK(h3.exponent() == 3);
    CHECK(h3.center().size() == 3);

    FiniteGroup q8 = build_catalog("quaternion", {8});
    CHECK(q8.order == 8);
    CHECK(q8.center().size() == 2);
    CHECK_FALSE(is_isomorphic(q8, dihedral_group_8()));

    CHECK_THROWS_AS(build_catalog("nosuch", {}), std::invalid_argument);
    CHECK_THROWS_AS(build_catalog("symmetric", {9}), std::invalid_argument);
}

TEST_CASE("subgroup lattices of small groups") {
    {
        FiniteGroup g = cyclic_group(4);
        SubgroupLattice L = subgroup_lattice(g);
        CHECK(L.subgroups.size() == 3);
        CHECK(L.subgroups[L.frattini_index].order() == 2);
    }
    {
        FiniteGroup g = elementary_abelian_group(2, 2);
        SubgroupLattice L = subgroup_lattice(g);
        CHECK(L.subgroups.size() == 5);
        CHECK(L.subgroups[L.frattini_index].order() == 1);
    }
    {
        FiniteGroup g = quaternion_group_8();
        SubgroupLattice L = subgroup_lattice(g);
        CHECK(L.subgroups.size() == 6);
        auto z = g.center();
        CHECK(L.subgroups[L.frattini_index].elements == z);
    }
}

TEST_CASE("C-poset membership is exactly containment of the Frattini subgroup") {
    for (auto& g : {cyclic_group(8), elementary_abelian_group(2, 3), quaternion_group_8(),
                    dihedral_group_8(), heisenberg_group(3), cyclic_group(9)}) {
        SubgroupLattice L = subgroup_lattice(g);
        const Subgroup& F = L.subgroups[L.frattini_index];
        for (size_t i = 0; i < L.subgroups.size(); ++i) {
            bool contains_f = subgroup_subset(F, L.subgroups[i]);
            CHECK(L.in_C((int)i) == contains_f);
            if (L.in_C((int)i)) {
                long long q = 1;
                for (int t = 0; t < L.d_of[i]; ++t) q *= L.p;
                CHECK(q == g.order / L.subgroups[i].order());
            }
        }
    }
}

TEST_CASE("subgroup orderings satisfy the two defining properties") {
    for (auto& g : {cyclic_group(2), cyclic_group(4), elementary_abelian_group(2, 2),
                    quaternion_group_8(), dihedral_group_8(), symmetric_group(3), heisenberg_group(3)}) {
        SubgroupLattice L = subgroup_lattice(g);
        std::vector<int> ord = subgroup_ordering(L);
        // (1) every subgroup conjugate to exactly one listed representative
        CHECK(ord.size() == L.conjugacy_classes.size());
        std::set<int> classes;
        for (int i : ord) classes.insert(L.class_of[i]);
        CHECK(classes.size() == ord.size());
        // (2) i < j implies no conjugate of H_i is contained in H_j
        for (size_t i = 0; i < ord.size(); ++i)
            for (size_t j = i + 1; j < ord.size(); ++j)
                for (int ci : L.conjugacy_classes[L.class_of[ord[i]]])
                    CHECK_FALSE(L.inclusion[ci][ord[j]]);
        // endpoints forced by (1) + (2)
        CHECK(L.subgroups[ord.front()].order() == g.order);
        CHECK(L.subgroups[ord.back()].order() == 1);
    }
}

TEST_CASE("ordering examples") {
    SubgroupLattice L = subgroup_lattice(cyclic_group(9));
    std::vector<int> ord = subgroup_ordering(L);
    REQUIRE(ord.size() == 3);
    CHECK(L.subgroups[ord[0]].order() == 9);
    CHECK(L.subgroups[ord[1]].order() == 3);
    CHECK(L.subgroups[ord[2]].order() == 1);
}

TEST_CASE("transversality") {
    {
        FiniteGroup g = elementary_abelian_group(3, 2);
        SubgroupLattice L = subgroup_lattice(g);
        // two distinct order-3 subgroups are complementary lines
        std::vector<int> lines;
        for (size_t i = 0; i < L.subgroups.size(); ++i)
            if (L.subgroups[i].order() == 3) lines.push_back((int)i);
        REQUIRE(lines.size() == 4);
        CHECK(transverse(L, lines[0], lines[1]));
        CHECK_FALSE(transverse(L, lines[0], lines[0]));
    }
    {
        FiniteGroup g = elementary_abelian_group(2, 3);
        SubgroupLattice L = subgroup_lattice(g);
        std::vector<int> planes;
        for (size_t i = 0; i < L.subgroups.size(); ++i)
            if (L.subgroups[i].order() == 4) planes.push_back((int)i);
        REQUIRE(planes.size() == 7);
        CHECK(transverse(L, planes[0], planes[1])); // d = 1 + 1 = 2 = d(intersection)
    }
}

TEST_CASE("group definition files round-trip through the parser") {
    // serialize S3 and parse it back
    FiniteGroup s3 = symmetric_group(3);
    std::ostringstream os;
    os << "order " << s3.order << "\n";
    for (int i = 0; i < s3.order; ++i) {
        for (int j = 0; j < s3.order; ++j) os << (j ? " " : "") << s3.op(i, j);
        os << "\n";
    }
    os << "labels\ne a b c d f\n";
    std::istringstream in(os.str());
    FiniteGroup parsed = parse_group_file(in);
    CHECK(parsed.order == 6);
    CHECK(parsed.mult == s3.mult);
    CHECK(parsed.labels.size() == 6);
    CHECK(parsed.label(0) == "e");

    std::istringstream bad("order 2\n0 1\n1 1\n");
    CHECK_THROWS(parse_group_file(bad));
}

TEST_CASE("Goursat product subgroup enumeration matches closure enumeration") {
    struct Pair { FiniteGroup a, b; };
    std::vector<Pair> cases;
    cases.push_back({cyclic_group(4), symmetric_group(3)});
    cases.push_back({quaternion_group_8(), symmetric_group(3)});
    cases.push_back({elementary_abelian_group(2, 2), symmetric_group(4)});
    for (auto& [A, B] : cases) {
        FiniteGroup P = direct_product(A, B);
        auto direct = all_subgroups(P, 100);
        auto goursat = product_subgroups(A, B);
        std::set<std::vector<int>> s1, s2;
        for (auto& h : direct) s1.insert(h.elements);
        for (auto& e : goursat) s2.insert(e);
        INFO(A.name << " x " << B.name);
        CHECK(s1 == s2);
    }
}
