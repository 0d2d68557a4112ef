#include <catch2/catch_amalgamated.hpp>

#include "lie/unipotent.hpp"

using namespace lie;

namespace {

bool dominated(const Partition& a, const Partition& b) {
    // a <= b in dominance order (equal totals assumed)
    int sa = 0, sb = 0;
    std::size_t m = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < m; ++i) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa > sb) return false;
    }
    return true;
}

UnipotentClass cls(Partition p, SimpleType t) {
    UnipotentClass u;
    u.partition = std::move(p);
    u.dim = orbit_dimension(t, u.partition);
    return u;
}

} // namespace

TEST_CASE("partition utilities") {
    CHECK(all_partitions(8).size() == 22);
    CHECK(conjugate_partition({4, 3, 1}) == Partition{3, 2, 2, 1});
    CHECK(conjugate_partition(conjugate_partition({5, 4, 4, 2})) == Partition{5, 4, 4, 2});
    CHECK(partition_valid(Letter::C, {2, 2}));
    CHECK_FALSE(partition_valid(Letter::C, {3, 1}));
    CHECK(partition_valid(Letter::B, {3, 3, 1}));
    CHECK_FALSE(partition_valid(Letter::B, {4, 3}));
    CHECK(partition_valid(Letter::D, {5, 3}));
    CHECK_FALSE(partition_valid(Letter::D, {6, 2}));
}

TEST_CASE("parity collapse: known values") {
    CHECK(parity_collapse(Letter::C, {3, 1}) == Partition{2, 2});
    CHECK(parity_collapse(Letter::B, {4, 3}) == Partition{3, 3, 1});
    CHECK(parity_collapse(Letter::D, {6, 2}) == Partition{5, 3});
    CHECK(parity_collapse(Letter::D, {8}) == Partition{7, 1});
    CHECK(parity_collapse(Letter::C, {2, 2}) == Partition{2, 2});
}

TEST_CASE("parity collapse is the dominance-greatest valid partition below") {
    for (Letter l : {Letter::B, Letter::C, Letter::D}) {
        for (int n = 2; n <= 10; ++n) {
            if (l == Letter::C && n % 2) continue;
            for (const auto& p : all_partitions(n)) {
                auto c = parity_collapse(l, p);
                REQUIRE(partition_sum(c) == n);
                REQUIRE(partition_valid(l, c));
                CHECK(dominated(c, p));
                for (const auto& q : all_partitions(n))
                    if (partition_valid(l, q) && dominated(q, p)) CHECK(dominated(q, c));
            }
        }
    }
}

TEST_CASE("orbit dimensions in classical algebras") {
    SimpleType c2{Letter::C, 2};
    CHECK(orbit_dimension(c2, {1, 1, 1, 1}) == 0);
    CHECK(orbit_dimension(c2, {2, 1, 1}) == 4);
    CHECK(orbit_dimension(c2, {2, 2}) == 6);
    CHECK(orbit_dimension(c2, {4}) == 8);
    CHECK(orbit_dimension({Letter::B, 1}, {3}) == 2);
    CHECK(orbit_dimension({Letter::B, 4}, {7, 1, 1}) == 30);
    CHECK(orbit_dimension({Letter::B, 4}, {9}) == 32);
    SimpleType d4{Letter::D, 4};
    CHECK(orbit_dimension(d4, {7, 1}) == 24);
    CHECK(orbit_dimension(d4, {5, 3}) == 22);
    CHECK(orbit_dimension(d4, {4, 4}) == 20);
    CHECK(orbit_dimension(d4, {5, 1, 1, 1}) == 20);
    CHECK(orbit_dimension(d4, {2, 2, 2, 2}) == 12);
    CHECK(orbit_dimension({Letter::A, 2}, {3}) == 6);
    CHECK(orbit_dimension({Letter::A, 2}, {2, 1}) == 4);
}

TEST_CASE("class translation across exceptional isomorphisms") {
    // sp4 <-> so5
    auto u = cls({2, 2}, {Letter::C, 2});
    CHECK(convert_class({Letter::C, 2}, u, {Letter::B, 2}).partition == Partition{3, 1, 1});
    auto v = cls({2, 1, 1}, {Letter::C, 2});
    CHECK(convert_class({Letter::C, 2}, v, {Letter::B, 2}).partition == Partition{2, 2, 1});
    // sl4 <-> so6
    struct Pair { Partition a; Partition d; };
    std::vector<Pair> table = {{{1, 1, 1, 1}, {1, 1, 1, 1, 1, 1}},
                               {{2, 1, 1}, {2, 2, 1, 1}},
                               {{2, 2}, {3, 1, 1, 1}},
                               {{3, 1}, {3, 3}},
                               {{4}, {5, 1}}};
    for (const auto& pr : table) {
        auto w = cls(pr.a, {Letter::A, 3});
        CHECK(convert_class({Letter::A, 3}, w, {Letter::D, 3}).partition == pr.d);
    }
}

TEST_CASE("induction in sp4") {
    SimpleType c2{Letter::C, 2};
    // from the C1 core Levi GL1 x Sp2, zero class
    auto r = induce_in_factor(c2, {{{2}, cls({1, 1}, {Letter::A, 1})}});
    CHECK(r.partition == Partition{2, 2});
    CHECK(r.dim == 6);
    // from the torus (Borel): the regular class
    CHECK(induce_in_factor(c2, {}).partition == Partition{4});
    // from the GL2 Levi, zero class
    auto g = induce_in_factor(c2, {{{1}, cls({1, 1}, {Letter::A, 1})}});
    CHECK(g.partition == Partition{2, 2});
    // from GL2, regular class
    auto gr = induce_in_factor(c2, {{{1}, cls({2}, {Letter::A, 1})}});
    CHECK(gr.partition == Partition{4});
}

TEST_CASE("induction in so8: triality triple at dimension 20") {
    SimpleType d4{Letter::D, 4};
    auto zero1 = cls({1, 1}, {Letter::A, 1});
    // both fork nodes as commuting SL2's, zero class: an SO4 core
    auto r = induce_in_factor(d4, {{{3}, zero1}, {{4}, zero1}});
    CHECK(r.partition == Partition{5, 1, 1, 1});
    CHECK(r.dim == 20);
    CHECK(r.decoration == 0);
    // GL2 x GL2 with one block on a fork: the two very even classes
    auto a = induce_in_factor(d4, {{{1}, zero1}, {{3}, zero1}});
    CHECK(a.partition == Partition{4, 4});
    CHECK(a.dim == 20);
    CHECK(a.decoration == 1);
    auto b = induce_in_factor(d4, {{{1}, zero1}, {{4}, zero1}});
    CHECK(b.partition == Partition{4, 4});
    CHECK(b.decoration == 2);
    CHECK(a.dim == b.dim);
}

TEST_CASE("induction in so8: more cases") {
    SimpleType d4{Letter::D, 4};
    // Borel: regular class
    auto r = induce_in_factor(d4, {});
    CHECK(r.partition == Partition{7, 1});
    CHECK(r.dim == 24);
    // GL4 (one fork family), zero class: Richardson [2,2,2,2], decorated
    auto z4 = cls({1, 1, 1, 1}, {Letter::A, 3});
    auto q1 = induce_in_factor(d4, {{{1, 2, 3}, z4}});
    CHECK(q1.partition == Partition{2, 2, 2, 2});
    CHECK(q1.decoration == 1);
    auto q2 = induce_in_factor(d4, {{{1, 2, 4}, z4}});
    CHECK(q2.decoration == 2);
    // fork SL2's with regular classes: the regular class of so8
    auto reg1 = cls({2}, {Letter::A, 1});
    auto rr = induce_in_factor(d4, {{{3}, reg1}, {{4}, reg1}});
    CHECK(rr.partition == Partition{7, 1});
    // GL2 off the forks, zero: [5,3]
    auto g = induce_in_factor(d4, {{{1}, cls({1, 1}, {Letter::A, 1})}});
    CHECK(g.partition == Partition{5, 3});
    CHECK(g.dim == 22);
}

TEST_CASE("induction in so7 from its so5 core") {
    SimpleType b3{Letter::B, 3};
    // core B2 is presented canonically as C2: zero class
    auto z = cls({1, 1, 1, 1}, {Letter::C, 2});
    auto r = induce_in_factor(b3, {{{2, 3}, z}});
    CHECK(r.partition == Partition{3, 1, 1, 1, 1});
    CHECK(r.dim == 10);
}

TEST_CASE("rigid classes of sp4 and friends") {
    UnipotentCatalog cat;
    auto& c2 = cat.classes({Letter::C, 2});
    REQUIRE(c2.size() == 4);
    std::set<Partition> rigid, induced;
    for (const auto& u : c2) (u.rigid ? rigid : induced).insert(u.partition);
    CHECK(rigid == std::set<Partition>({{1, 1, 1, 1}, {2, 1, 1}}));
    CHECK(induced == std::set<Partition>({{2, 2}, {4}}));
    // type A: only the trivial class is rigid
    for (const auto& u : cat.classes({Letter::A, 3}))
        CHECK(u.rigid == (u.partition == Partition{1, 1, 1, 1}));
    // so8: minimal class rigid, the dimension-20 triple induced
    for (const auto& u : cat.classes({Letter::D, 4})) {
        if (u.partition == Partition{2, 2, 1, 1, 1, 1}) CHECK(u.rigid);
        if (u.partition == Partition{4, 4}) CHECK_FALSE(u.rigid);
        if (u.partition == Partition{5, 1, 1, 1}) CHECK_FALSE(u.rigid);
        if (u.partition == Partition{7, 1}) CHECK_FALSE(u.rigid);
        if (u.partition == Partition{1, 1, 1, 1, 1, 1, 1, 1}) CHECK(u.rigid);
    }
}

TEST_CASE("very even classes are doubled in type D") {
    UnipotentCatalog cat;
    auto& d4 = cat.classes({Letter::D, 4});
    int ve = 0;
    for (const auto& u : d4)
        if (u.decoration) ++ve;
    CHECK(ve == 4);  // [2,2,2,2] and [4,4], twice each
    // 10 bare partitions, two of them very even and doubled
    CHECK(d4.size() == 12);
}

TEST_CASE("exceptional orbit tables") {
    UnipotentCatalog cat(std::string(LIE_SOURCE_DIR) + "/data");
    REQUIRE(cat.has_exceptional());
    CHECK(cat.classes({Letter::G, 2}).size() == 5);
    CHECK(cat.classes({Letter::F, 4}).size() == 16);
    CHECK(cat.classes({Letter::E, 6}).size() == 21);
    CHECK(cat.classes({Letter::E, 7}).size() == 45);
    auto& e8 = cat.classes({Letter::E, 8});
    CHECK(e8.size() == 70);
    long long maxdim = 0;
    int rigid = 0;
    for (const auto& u : e8) {
        maxdim = std::max(maxdim, u.dim);
        if (u.rigid) ++rigid;
    }
    CHECK(maxdim == 240);
    CHECK(rigid == 18);
    int g2rigid = 0;
    for (const auto& u : cat.classes({Letter::G, 2}))
        if (u.rigid) ++g2rigid;
    CHECK(g2rigid == 3);
}

TEST_CASE("missing exceptional data is a capability error") {
    UnipotentCatalog cat;  // no data dir
    CHECK_FALSE(cat.has_exceptional());
    CHECK_THROWS_AS(cat.classes({Letter::E, 6}), CapabilityError);
    CHECK_NOTHROW(cat.classes({Letter::B, 3}));
}
