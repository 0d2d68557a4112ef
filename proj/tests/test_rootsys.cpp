#include <catch2/catch_amalgamated.hpp>

#include "lie/rootsys.hpp"

using namespace lie;

static GroupSpec simple_spec(Letter l, int rank, Isogeny iso = Isogeny::adjoint) {
    GroupSpec s;
    s.factors = {{l, rank}};
    s.isogeny = iso;
    return s;
}

TEST_CASE("A1 basics") {
    RootSystem rs(simple_spec(Letter::A, 1));
    CHECK(rs.num_positive() == 1);
    CHECK(rs.dim_g() == 3);
    CHECK(rs.marks(0) == std::vector<int>{1});
    int a = rs.simple_root_index(0, 1);
    CHECK(rs.reflect(a, a) == rs.negate(a));
}

TEST_CASE("C2 roots and marks") {
    RootSystem rs(simple_spec(Letter::C, 2));
    CHECK(rs.num_positive() == 4);
    CHECK(rs.dim_g() == 10);
    // highest root 2a1 + a2, marks (2, 1)
    CHECK(rs.marks(0) == std::vector<int>{2, 1});
    int a1 = rs.simple_root_index(0, 1);
    int a2 = rs.simple_root_index(0, 2);
    CHECK(rs.is_root(Root{0, {1, 1}}));
    CHECK(rs.is_root(Root{0, {2, 1}}));
    CHECK_FALSE(rs.is_root(Root{0, {1, 2}}));
    // lengths: a1 short, a2 long
    CHECK(rs.norm2(a1) == 2);
    CHECK(rs.norm2(a2) == 4);
    CHECK(rs.pairing(a1, a2) == -1);
    CHECK(rs.pairing(a2, a1) == -2);
}

TEST_CASE("reflections are involutive permutations") {
    RootSystem rs(simple_spec(Letter::B, 3));
    for (int b = 0; b < rs.num_roots(); ++b) {
        const auto& p = rs.reflection_perm(b);
        for (int g = 0; g < rs.num_roots(); ++g) CHECK(p[p[g]] == g);
        CHECK(p[b] == rs.negate(b));
    }
}

TEST_CASE("root counts across types") {
    struct Row { Letter l; int rank; int npos; };
    Row rows[] = {
        {Letter::A, 4, 10}, {Letter::B, 3, 9},  {Letter::C, 4, 16}, {Letter::D, 4, 12},
        {Letter::G, 2, 6},  {Letter::F, 4, 24}, {Letter::E, 6, 36}, {Letter::E, 7, 63},
    };
    for (auto r : rows) {
        RootSystem rs(simple_spec(r.l, r.rank));
        INFO(type_string({r.l, r.rank}));
        CHECK(rs.num_positive() == r.npos);
    }
}

TEST_CASE("E8 has 120 positive roots, dim 248") {
    RootSystem rs(simple_spec(Letter::E, 8));
    CHECK(rs.num_positive() == 120);
    CHECK(rs.dim_g() == 248);
    // marks of the highest root (Bourbaki): 2 3 4 6 5 4 3 2
    CHECK(rs.marks(0) == std::vector<int>{2, 3, 4, 6, 5, 4, 3, 2});
}

TEST_CASE("product groups and central torus") {
    GroupSpec s;
    s.factors = {{Letter::A, 2}, {Letter::B, 3}};
    s.central_torus_rank = 2;
    RootSystem rs(s);
    CHECK(rs.num_components() == 2);
    CHECK(rs.total_rank() == 7);
    CHECK(rs.dim_g() == 6 + 18 + 7);
    int a = rs.simple_root_index(0, 1);
    int b = rs.simple_root_index(1, 1);
    CHECK(rs.bilinear(a, b) == 0);
    CHECK(rs.reflect(a, b) == a);
}

TEST_CASE("D2 spec splits into A1 x A1") {
    GroupSpec s;
    s.factors = {{Letter::D, 2}};
    RootSystem rs(s);
    CHECK(rs.num_components() == 2);
    CHECK(rs.num_positive() == 2);
}

TEST_CASE("long A1+A1 in C2 is reflection-closed but not Q-closed") {
    RootSystem rs(simple_spec(Letter::C, 2));
    int a2 = rs.simple_root_index(0, 2);
    int theta = rs.highest_root(0);
    auto cl = rs.reflection_closure({a2, theta});
    CHECK(cl.size() == 4);
    auto sub = rs.analyze_subsystem(cl);
    CHECK(sub.rank == 2);
    REQUIRE(sub.factors.size() == 2);
    CHECK(sub.factors[0].type == SimpleType{Letter::A, 1});
    CHECK(sub.factors[0].tag == LengthTag::long_);
    CHECK(sub.factors[1].tag == LengthTag::long_);
    // its Q-span meets all of C2: the defining non-Levi pseudo-Levi
    CHECK(static_cast<int>(rs.q_closure(cl).roots.size()) == rs.num_roots());
}

TEST_CASE("q_closure of a spanning set is everything") {
    RootSystem rs(simple_spec(Letter::C, 2));
    int a1 = rs.simple_root_index(0, 1);
    int theta = rs.highest_root(0);
    auto sub = rs.q_closure({a1, theta});
    CHECK(static_cast<int>(sub.roots.size()) == rs.num_roots());
    REQUIRE(sub.factors.size() == 1);
    CHECK(sub.factors[0].type == SimpleType{Letter::C, 2});
}

TEST_CASE("reflection_closure of extended-diagram subsets") {
    RootSystem rs(simple_spec(Letter::C, 2));
    // {alpha_0, alpha_2}: mutually orthogonal long roots -> closed, 4 roots
    int a0 = rs.extended_node(0);
    int a2 = rs.simple_root_index(0, 2);
    auto cl = rs.reflection_closure({a0, a2});
    CHECK(cl.size() == 4);
    auto sub = rs.analyze_subsystem(cl);
    CHECK(sub.rank == 2);
    CHECK(sub.factors.size() == 2);
    // not Q-closed: its Q-span meets more roots
    auto qc = rs.q_closure(cl);
    CHECK(qc.roots.size() == 8);
}

TEST_CASE("subsystem_basis recovers the simple roots") {
    for (auto t : {SimpleType{Letter::B, 3}, SimpleType{Letter::G, 2}, SimpleType{Letter::D, 4}}) {
        RootSystem rs(simple_spec(t.letter, t.rank));
        std::vector<int> all(rs.num_roots());
        std::iota(all.begin(), all.end(), 0);
        auto basis = rs.subsystem_basis(all);
        std::vector<int> expect;
        for (int i = 1; i <= t.rank; ++i) expect.push_back(rs.simple_root_index(0, i));
        std::sort(expect.begin(), expect.end());
        CHECK(basis == expect);
        auto factors = rs.cartan_type_of(basis);
        REQUIRE(factors.size() == 1);
        CHECK(factors[0].type == t);
    }
}

TEST_CASE("cartan_type_of recognizes B2 presented either way as C2") {
    RootSystem rs(simple_spec(Letter::B, 2));
    std::vector<int> all(rs.num_roots());
    std::iota(all.begin(), all.end(), 0);
    auto basis = rs.subsystem_basis(all);
    auto factors = rs.cartan_type_of(basis);
    REQUIRE(factors.size() == 1);
    CHECK(factors[0].type == SimpleType{Letter::C, 2});
    // short root first in the canonical ordering
    CHECK(rs.norm2(factors[0].nodes[0]) < rs.norm2(factors[0].nodes[1]));
}

TEST_CASE("cartan_type_of inside D4: A3 subsystems") {
    RootSystem rs(simple_spec(Letter::D, 4));
    std::vector<int> set = {rs.simple_root_index(0, 1), rs.simple_root_index(0, 2),
                            rs.simple_root_index(0, 3)};
    auto sub = rs.q_closure(set);
    REQUIRE(sub.factors.size() == 1);
    CHECK(sub.factors[0].type == SimpleType{Letter::A, 3});
}

TEST_CASE("weyl_canonical: orbit of a single short root in C2") {
    RootSystem rs(simple_spec(Letter::C, 2));
    int a1 = rs.simple_root_index(0, 1);
    auto sub = rs.q_closure({a1});
    auto oc = weyl_canonical(rs, sub.roots);
    CHECK(oc.orbit_size == 2);  // {short A1 through a1} and its W-translate
    // the canonical set is reachable by the stored word
    std::vector<int> cur = sub.roots;
    for (int g : oc.word)
        for (auto& r : cur) r = rs.simple_reflection_perms()[g][r];
    std::sort(cur.begin(), cur.end());
    CHECK(cur == oc.canonical);
    // stabilizer words fix the canonical set
    for (const auto& w : oc.stab_words) {
        std::vector<int> c2 = oc.canonical;
        for (int g : w)
            for (auto& r : c2) r = rs.simple_reflection_perms()[g][r];
        std::sort(c2.begin(), c2.end());
        CHECK(c2 == oc.canonical);
    }
}

TEST_CASE("weyl_canonical separates long and short A1 in C2") {
    RootSystem rs(simple_spec(Letter::C, 2));
    auto s1 = rs.q_closure({rs.simple_root_index(0, 1)});
    auto s2 = rs.q_closure({rs.simple_root_index(0, 2)});
    auto c1 = weyl_canonical(rs, s1.roots);
    auto c2 = weyl_canonical(rs, s2.roots);
    CHECK(c1.canonical != c2.canonical);
}

TEST_CASE("weyl_canonical identifies conjugate subsystems") {
    RootSystem rs(simple_spec(Letter::A, 3));
    // {a1} and {a3} are W-conjugate
    auto s1 = rs.q_closure({rs.simple_root_index(0, 1)});
    auto s3 = rs.q_closure({rs.simple_root_index(0, 3)});
    CHECK(weyl_canonical(rs, s1.roots).canonical == weyl_canonical(rs, s3.roots).canonical);
    // {a1, a3} vs {a1, a2}: different types, different canonical forms
    auto s13 = rs.q_closure({rs.simple_root_index(0, 1), rs.simple_root_index(0, 3)});
    auto s12 = rs.q_closure({rs.simple_root_index(0, 1), rs.simple_root_index(0, 2)});
    CHECK(weyl_canonical(rs, s13.roots).canonical != weyl_canonical(rs, s12.roots).canonical);
}

TEST_CASE("orbit budget raises ResourceError") {
    RootSystem rs(simple_spec(Letter::A, 3));
    auto s = rs.q_closure({rs.simple_root_index(0, 1)});
    CHECK_THROWS_AS(weyl_canonical(rs, s.roots, 2), ResourceError);
}

TEST_CASE("weight coordinates and reflection matrices") {
    RootSystem rs(simple_spec(Letter::C, 2));
    int a1 = rs.simple_root_index(0, 1);
    int a2 = rs.simple_root_index(0, 2);
    CHECK(rs.weight_coords(a1) == std::vector<int>{2, -1});
    CHECK(rs.weight_coords(a2) == std::vector<int>{-2, 2});
    // s_{a1} on weight coords agrees with the root permutation
    auto m = rs.reflection_weight_matrix(a1);
    for (int r = 0; r < rs.num_roots(); ++r) {
        auto w = rs.weight_coords(r);
        std::vector<long long> im(2, 0);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) im[j] += w[i] * m[i][j];
        auto expect = rs.weight_coords(rs.reflect(r, a1));
        CHECK(im == std::vector<long long>(expect.begin(), expect.end()));
    }
}

TEST_CASE("invalid specs are rejected") {
    GroupSpec s;
    s.factors = {{Letter::E, 9}};
    CHECK_THROWS_AS(RootSystem(s), UsageError);
    GroupSpec e;
    CHECK_THROWS_AS(RootSystem(e), UsageError);
}
