#include <catch2/catch_amalgamated.hpp>

#include "lie/sheets.hpp"

using namespace lie;

namespace {

std::string data_dir() { return std::string(LIE_SOURCE_DIR) + "/data"; }

GroupSpec spec1(Letter l, int r, Isogeny iso = Isogeny::adjoint) {
    return GroupSpec{{{l, r}}, iso, {}, 0};
}

bool trivial_coset(const Coset& t) {
    return std::all_of(t.begin(), t.end(), [](const bigint& v) { return v == 0; });
}

std::multiset<Partition> partition_multiset(const OrbitTuple& o) {
    std::multiset<Partition> out;
    for (const auto& u : o) out.insert(u.partition);
    return out;
}

// locate a Jordan class by pseudo-Levi type, unordered factor partitions,
// coset triviality, and (optionally) a required decoration somewhere
int jidx(Classification& c, const std::string& type, const std::multiset<Partition>& parts,
         bool nontrivial = false, int dec = 0) {
    const auto& jc = c.jordan_classes();
    int found = -1;
    for (int i = 0; i < static_cast<int>(jc.size()); ++i) {
        const auto& j = jc[i];
        if (c.pseudo_levis()[j.pl].type != type) continue;
        if (partition_multiset(j.orbit) != parts) continue;
        if (trivial_coset(j.coset) == nontrivial) continue;
        if (dec) {
            bool has = false;
            for (const auto& u : j.orbit)
                if (u.decoration == dec) has = true;
            if (!has) continue;
        }
        if (found >= 0) throw std::runtime_error("jidx: ambiguous description");
        found = i;
    }
    if (found < 0) throw std::runtime_error("jidx: no such class");
    return found;
}

int count_by_pl_type(Classification& c, const std::string& type) {
    int n = 0;
    for (const auto& j : c.jordan_classes())
        if (c.pseudo_levis()[j.pl].type == type) ++n;
    return n;
}

} // namespace

TEST_CASE("rank one: PGL2 and SL2") {
    Classification pgl(spec1(Letter::A, 1));
    CHECK(pgl.jordan_classes().size() == 3);
    CHECK(pgl.sheets().size() == 2);
    // the dense sheet: regular semisimple elements plus the regular class
    int jt = jidx(pgl, "T", {});
    CHECK(pgl.jordan_classes()[jt].n == 2);
    CHECK(pgl.jordan_classes()[jt].dim == 3);
    int reg = jidx(pgl, "A1", {{2}});
    CHECK(pgl.jordan_leq(reg, jt));
    CHECK_FALSE(pgl.jordan_leq(jt, reg));

    Classification sl2(spec1(Letter::A, 1, Isogeny::simply_connected));
    CHECK(sl2.jordan_classes().size() == 5);
    const auto& sh = sl2.sheets();
    CHECK(sh.size() == 3);
    // the coset of -1 with trivial class is a one-point sheet
    int neg = jidx(sl2, "A1", {{1, 1}}, true);
    for (const auto& s : sh) {
        if (s.jordan != neg) continue;
        CHECK(s.n == 0);
        CHECK(s.dim == 0);
        CHECK(s.single_class);
        CHECK(s.dixmier);
        CHECK(s.unipotent_up_to_center);
        CHECK_FALSE(s.genuine_unipotent);
    }
}

TEST_CASE("adjoint C2: full classification") {
    Classification c(spec1(Letter::C, 2));
    CHECK(c.jordan_classes().size() == 12);
    CHECK(count_by_pl_type(c, "T") == 1);
    CHECK(count_by_pl_type(c, "A1(short)") == 2);
    CHECK(count_by_pl_type(c, "A1(long)") == 2);
    // the mixed tuples over the two long A1's are swapped by the normalizer
    CHECK(count_by_pl_type(c, "A1(long)+A1(long)") == 3);
    CHECK(count_by_pl_type(c, "C2") == 4);
    CHECK(c.sheets().size() == 6);

    int jt = jidx(c, "T", {});
    int az = jidx(c, "A1(short)", {{1, 1}});
    int ar = jidx(c, "A1(short)", {{2}});
    int bz = jidx(c, "A1(long)", {{1, 1}});
    int br = jidx(c, "A1(long)", {{2}});
    int czz = jidx(c, "A1(long)+A1(long)", {{1, 1}, {1, 1}}, true);
    int cmix = jidx(c, "A1(long)+A1(long)", {{1, 1}, {2}}, true);
    int crr = jidx(c, "A1(long)+A1(long)", {{2}, {2}}, true);
    int u0 = jidx(c, "C2", {{1, 1, 1, 1}});
    int u211 = jidx(c, "C2", {{2, 1, 1}});
    int u22 = jidx(c, "C2", {{2, 2}});
    int u4 = jidx(c, "C2", {{4}});

    const auto& jc = c.jordan_classes();
    CHECK(jc[cmix].members.size() == 2);  // both factor orders
    CHECK(jc[jt].n == 8);
    CHECK(jc[jt].dim == 10);
    CHECK(jc[czz].n == 4);
    CHECK(jc[czz].dim == 4);
    CHECK(jc[u211].n == 4);

    // closure order within the n = 8 stratum
    CHECK(c.jordan_leq(u4, ar));
    CHECK(c.jordan_leq(u4, br));
    CHECK(c.jordan_leq(ar, jt));
    CHECK(c.jordan_leq(u4, jt));
    CHECK(c.jordan_leq(crr, jt));
    CHECK_FALSE(c.jordan_leq(u4, crr));
    // n = 6: the mixed class degenerates through the long A1 only
    CHECK(c.jordan_leq(cmix, bz));
    CHECK_FALSE(c.jordan_leq(cmix, az));
    CHECK(c.jordan_leq(u22, az));
    CHECK(c.jordan_leq(u22, bz));
    // n = 4: two incomparable sheets
    CHECK_FALSE(c.jordan_leq(u211, czz));
    CHECK_FALSE(c.jordan_leq(czz, u211));
    CHECK_FALSE(c.jordan_leq(u0, u211));

    // comparability forces equal orbit dimension
    const auto& ord = c.order_matrix();
    for (std::size_t a = 0; a < ord.size(); ++a)
        for (std::size_t b = 0; b < ord.size(); ++b)
            if (ord[a][b]) CHECK(jc[a].n == jc[b].n);

    // the rigid classes are exactly the maximal ones
    auto maximal = c.maximal_jordan();
    for (int i = 0; i < static_cast<int>(jc.size()); ++i) {
        bool is_max = true;
        for (int j = 0; j < static_cast<int>(jc.size()); ++j)
            if (j != i && ord[i][j]) is_max = false;
        bool flagged = std::count(maximal.begin(), maximal.end(), i) > 0;
        CHECK(is_max == flagged);
    }

    // sheet flags and induced classes
    for (const auto& s : c.sheets()) {
        if (s.jordan == czz) {
            CHECK(s.single_class);
            CHECK(s.dixmier);
            CHECK_FALSE(s.unipotent_up_to_center);
            CHECK_FALSE(s.genuine_unipotent);
            CHECK_FALSE(s.induced.has_value());
        }
        if (s.jordan == az) {  // GL2 Levi: Richardson class [2,2]
            CHECK(s.n == 6);
            CHECK(s.dim == 7);
            REQUIRE(s.induced.has_value());
            REQUIRE(s.induced->size() == 1);
            CHECK((*s.induced)[0].partition == Partition{2, 2});
        }
        if (s.jordan == jt) {  // dense sheet: regular class on top
            REQUIRE(s.induced.has_value());
            CHECK((*s.induced)[0].partition == Partition{4});
        }
    }

    // a semisimple element lies in exactly one sheet
    int pl_aa = jc[czz].pl;
    auto loc = c.sheet_of_semisimple(pl_aa, {1});
    CHECK(loc.jordan == czz);
    REQUIRE(loc.sheets.size() == 1);
    CHECK(c.sheets()[loc.sheets[0]].jordan == czz);
    CHECK_THROWS_AS(c.sheet_of_semisimple(pl_aa, Coset{0}), UsageError);
    auto loc_t = c.sheet_of_semisimple(jc[jt].pl, {});
    CHECK(loc_t.jordan == jt);
    CHECK(loc_t.sheets.size() == 1);
}

TEST_CASE("Sp4: characters of the centre spread the classification") {
    Classification c(spec1(Letter::C, 2, Isogeny::simply_connected));
    CHECK(c.jordan_classes().size() == 19);
    CHECK(count_by_pl_type(c, "T") == 1);
    CHECK(count_by_pl_type(c, "A1(short)") == 2);
    CHECK(count_by_pl_type(c, "A1(long)") == 4);
    CHECK(count_by_pl_type(c, "A1(long)+A1(long)") == 4);
    CHECK(count_by_pl_type(c, "C2") == 8);
    const auto& sh = c.sheets();
    CHECK(sh.size() == 9);

    int dixmier = 0, up_to_center = 0, genuine = 0, single = 0;
    for (const auto& s : sh) {
        dixmier += s.dixmier;
        up_to_center += s.unipotent_up_to_center;
        genuine += s.genuine_unipotent;
        single += s.single_class;
    }
    CHECK(dixmier == 7);
    CHECK(up_to_center == 8);
    CHECK(genuine == 5);
    CHECK(single == 5);

    // -1 times the subregular unipotent class: a one-class sheet that only
    // meets the unipotent variety after dividing by the centre
    int m211 = jidx(c, "C2", {{2, 1, 1}}, true);
    for (const auto& s : sh) {
        if (s.jordan != m211) continue;
        CHECK(s.single_class);
        CHECK(s.unipotent_up_to_center);
        CHECK_FALSE(s.genuine_unipotent);
        CHECK_FALSE(s.dixmier);
    }
}

TEST_CASE("PGL_n: one sheet per partition") {
    for (int n : {2, 3, 4}) {
        Classification c(spec1(Letter::A, n - 1));
        static const int p[] = {0, 1, 2, 3, 5, 7, 11, 15};
        CHECK(c.sheets().size() == static_cast<std::size_t>(p[n]));
    }
    Classification big(spec1(Letter::A, 6));
    CHECK(big.sheets().size() == 15);  // p(7)
}

TEST_CASE("SL4 classification") {
    Classification c(spec1(Letter::A, 3, Isogeny::simply_connected));
    CHECK(c.jordan_classes().size() == 32);
    CHECK(count_by_pl_type(c, "T") == 1);
    CHECK(count_by_pl_type(c, "A1") == 2);
    CHECK(count_by_pl_type(c, "A1+A1") == 6);
    CHECK(count_by_pl_type(c, "A2") == 3);
    CHECK(count_by_pl_type(c, "A3") == 20);
    CHECK(c.sheets().size() == 9);
}

TEST_CASE("adjoint D4: Levi families and very even classes") {
    Classification c(spec1(Letter::D, 4));
    const auto& pls = c.pseudo_levis();
    int a3 = 0, a1a1 = 0;
    for (const auto& p : pls) {
        if (p.type == "A3") {
            ++a3;
            CHECK(p.is_levi);
        }
        if (p.type == "A1+A1") ++a1a1;
    }
    // two GL4 families plus the subsystem through both fork nodes
    CHECK(a3 == 3);
    CHECK(a1a1 == 3);

    CHECK(c.jordan_classes().size() == 57);
    CHECK(c.sheets().size() == 14);

    // each dimension-12 class degenerates from exactly one A3 Levi family
    std::vector<int> twelve = {jidx(c, "D4", {{2, 2, 2, 2}}, false, 1),
                               jidx(c, "D4", {{2, 2, 2, 2}}, false, 2),
                               jidx(c, "D4", {{3, 1, 1, 1, 1, 1}})};
    std::vector<int> a3zero;
    const auto& jc = c.jordan_classes();
    for (int i = 0; i < static_cast<int>(jc.size()); ++i)
        if (pls[jc[i].pl].type == "A3" &&
            partition_multiset(jc[i].orbit) == std::multiset<Partition>{{1, 1, 1, 1}})
            a3zero.push_back(i);
    REQUIRE(a3zero.size() == 3);
    std::set<int> hit12;
    for (int low : twelve) {
        int ups = 0, up = -1;
        for (int z : a3zero)
            if (c.jordan_leq(low, z)) {
                ++ups;
                up = z;
            }
        CHECK(ups == 1);
        hit12.insert(up);
    }
    CHECK(hit12.size() == 3);

    // and the dimension-20 trio matches the three A1+A1 Levi families
    std::vector<int> twenty = {jidx(c, "D4", {{4, 4}}, false, 1),
                               jidx(c, "D4", {{4, 4}}, false, 2),
                               jidx(c, "D4", {{5, 1, 1, 1}})};
    std::vector<int> a1zero;
    for (int i = 0; i < static_cast<int>(jc.size()); ++i)
        if (pls[jc[i].pl].type == "A1+A1" &&
            partition_multiset(jc[i].orbit) == std::multiset<Partition>{{1, 1}, {1, 1}})
            a1zero.push_back(i);
    REQUIRE(a1zero.size() == 3);
    std::set<int> hit20;
    for (int low : twenty) {
        int ups = 0, up = -1;
        for (int z : a1zero)
            if (c.jordan_leq(low, z)) {
                ++ups;
                up = z;
            }
        CHECK(ups == 1);
        hit20.insert(up);
    }
    CHECK(hit20.size() == 3);
}

TEST_CASE("adjoint D5: the fork swap identifies very even classes of a D4 Levi") {
    Classification c(spec1(Letter::D, 5));
    CHECK(count_by_pl_type(c, "D4") == 10);  // 12 classes of so8, [4,4]'/['' fused
    int fused = jidx(c, "D4", {{4, 4}});
    const auto& j = c.jordan_classes()[fused];
    REQUIRE(j.members.size() == 2);
    std::set<int> decs;
    for (const auto& [t, o] : j.members) decs.insert(o[0].decoration);
    CHECK(decs == std::set<int>{1, 2});
    // classes that are not very even stay separate
    const auto& j2 = c.jordan_classes()[jidx(c, "D4", {{3, 3, 1, 1}})];
    CHECK(j2.members.size() == 1);
}

TEST_CASE("products and central tori factorize") {
    GroupSpec s{{{Letter::A, 1}, {Letter::C, 2}}, Isogeny::adjoint, {}, 1};
    Classification c(s);
    CHECK(c.jordan_classes().size() == 36);
    CHECK(c.sheets().size() == 12);
    for (const auto& j : c.jordan_classes()) CHECK(j.dim == j.n + c.pseudo_levis()[j.pl].dim_z0);

    GroupSpec torus{{}, Isogeny::adjoint, {}, 2};
    Classification t(torus);
    CHECK(t.jordan_classes().size() == 1);
    const auto& sh = t.sheets();
    REQUIRE(sh.size() == 1);
    CHECK(sh[0].n == 0);
    CHECK(sh[0].dim == 2);
    CHECK(sh[0].dixmier);
    CHECK(sh[0].genuine_unipotent);
    CHECK_FALSE(sh[0].single_class);
}

TEST_CASE("G2: sheets through the exceptional orbit table") {
    Classification c(spec1(Letter::G, 2), data_dir());
    CHECK(c.jordan_classes().size() == 17);
    CHECK(c.sheets().size() == 8);
    int g2_sheets = 0;
    for (const auto& s : c.sheets())
        if (c.pseudo_levis()[c.jordan_classes()[s.jordan].pl].type == "G2") ++g2_sheets;
    CHECK(g2_sheets == 3);  // the rigid classes of G2
    CHECK_THROWS_AS(c.jordan_leq(0, 0), CapabilityError);
    CHECK_THROWS_AS(c.sheet_of_semisimple(0, {}), CapabilityError);

    Classification nodata(spec1(Letter::G, 2));
    CHECK_THROWS_AS(nodata.jordan_classes(), CapabilityError);
}

TEST_CASE("E6 sheets are enumerable") {
    Classification c(spec1(Letter::E, 6), data_dir());
    const auto& sh = c.sheets();
    CHECK(!sh.empty());
    int full = 0;
    for (const auto& s : sh) {
        CHECK(s.dim == c.jordan_classes()[s.jordan].dim);
        if (c.pseudo_levis()[c.jordan_classes()[s.jordan].pl].type == "E6") ++full;
    }
    CHECK(full == 4);  // rigid classes of E6
}
