#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fano/extendability.hpp"

using namespace fano;

namespace {

const FamilyDatabase& db() {
    static FamilyDatabase d = FamilyDatabase::parse(FamilyDatabase::embedded_text());
    return d;
}

} // namespace

TEST_CASE("beta breakdowns for pinned rows") {
    // Double cover branched in a quartic, l = 3: the cover-normal term feeds
    // t2 with h^0(O_{P^3}(1)) = 4 and t5 = h^0(H) = 4.
    {
        const BetaBreakdown b = beta_bound(db().get("1.12"), 3);
        CHECK(b.t1.is_zero());
        // Both flanking pushforward terms vanish, so the chase pins the
        // cover-normal contribution exactly, not just as an upper bound.
        CHECK(b.t2 == Interval::exactly(4));
        CHECK(b.t3.is_zero());
        CHECK(b.t4.is_zero());
        CHECK(b.t5 == Interval::exactly(4));
        CHECK(b.beta_hi == 8);
    }
    // Cubic threefold, l = 3: t2 = h^0(O_Y) = 1 exactly and t5 = h^0(H) = 5.
    {
        const BetaBreakdown b = beta_bound(db().get("1.13"), 3);
        CHECK(b.t2 == Interval::exactly(1));
        CHECK(b.t5 == Interval::exactly(5));
        CHECK(b.beta_hi == 6);
    }
    // At l = 4 the deep twist meets the one nonzero middle cohomology of
    // T_{P^3} and the bound stays an honest interval.
    {
        const BetaBreakdown b = beta_bound(db().get("1.12"), 4);
        CHECK(b.t2 == Interval{0, 1});
        CHECK(b.t5 == Interval::exactly(1));
        CHECK(b.beta_hi == 2);
    }
    // Codimension-five linear section of Gr(2,6): certified zero for l >= 3.
    for (int l = 3; l <= 6; ++l) {
        const BetaBreakdown b = beta_bound(db().get("1.7"), l);
        CHECK(b.certified_zero());
    }
    CHECK_THROWS_WITH_AS(beta_bound(db().get("1.7"), 1), doctest::Contains("inconclusive"), Error);
    CHECK_THROWS_AS(beta_bound(db().get("1.16"), 3), Error);
}

TEST_CASE("t5 never contributes past twice the index") {
    for (const auto& f : db().families)
        for (int l = 2 * f.index_i + 1; l <= 2 * f.index_i + 3; ++l) {
            const BetaBreakdown b = beta_bound(f, l);
            CHECK(b.t5.is_zero());
        }
    // And at l = 2i it is exactly the constant section.
    for (const char* id : {"1.4", "1.12", "1.16", "1.17"}) {
        const auto& f = db().get(id);
        CHECK(beta_bound(f, 2 * f.index_i).t5 == Interval::exactly(1));
    }
}

TEST_CASE("zak-lvovsky conclusions") {
    {
        const ZlConclusion c = zl_conclude(0, 100);
        CHECK(c.not_extendable);
        CHECK(c.cone_not_smoothable);
    }
    {
        const ZlConclusion c = zl_conclude(8, 27);
        CHECK_FALSE(c.not_extendable);
        CHECK(c.not_k_extendable == 9);
    }
    {
        const ZlConclusion c = zl_conclude(1, 1000);
        CHECK(c.not_k_extendable == 2);
    }
    // Monotone: a smaller beta never weakens the conclusion ("not
    // k-extendable" with smaller k is the stronger statement).
    auto strength = [](const ZlConclusion& c) {
        if (c.not_extendable) return static_cast<i64>(1);
        return c.not_k_extendable > 0 ? static_cast<i64>(c.not_k_extendable) : kUnbounded;
    };
    for (i64 beta = 10; beta >= 0; --beta)
        CHECK(strength(zl_conclude(beta, 100)) <= strength(zl_conclude(beta + 1, 100)));
    // Side condition: no k-extendability claim when beta >= N.
    CHECK(zl_conclude(30, 27).not_k_extendable == 0);
}

TEST_CASE("normal bundle twist vanishing checker") {
    // At the reference thresholds the checker passes for k = 1, 2, 3.
    for (const char* id : {"1.12", "1.17", "1.7", "1.11", "1.16"}) {
        const auto& f = db().get(id);
        for (int k = 1; k <= 3; ++k) {
            const Prop27Result r = prop27_check(f, f.ref_zero_from, k);
            CHECK_MESSAGE(r.pass, id, " k=", k, " failing: ", r.failing_term);
            CHECK(r.certificates.size() >= 9);
        }
    }
    // The conditions hold on the quintic del Pezzo section already at l = 2;
    // the checker certifies them (the reference table only speaks for l >=
    // the threshold, where non-extendability is also known).
    CHECK(prop27_check(db().get("1.5"), 2, 1).pass);
    CHECK_THROWS_AS(prop27_check(db().get("1.5"), 2, 4), Error);
}

TEST_CASE("surface alpha propagation") {
    // Certified alpha = 0 rows propagate to exactly 1-extendable surfaces.
    {
        const ExtendabilityReport r = evaluate_row(db().get("1.12"), 5);
        CHECK(r.surface_alpha == Interval::exactly(1));
        CHECK(r.surface_alpha_certified);
    }
    {
        const ExtendabilityReport r = evaluate_row(db().get("1.2"), 5);
        CHECK(r.surface_alpha == Interval::exactly(1));
        CHECK(r.surface_alpha_certified);
    }
    // Uncertified input refuses the claim and returns a one-sided interval.
    {
        const ExtendabilityReport r = evaluate_row(db().get("1.12"), 3);
        CHECK_FALSE(r.surface_alpha_certified);
        CHECK(r.surface_alpha.lo == 9);
        CHECK_FALSE(r.surface_alpha.bounded());
    }
}

TEST_CASE("row flags against the reference table") {
    CHECK(evaluate_row(db().get("1.12"), 3).flag == RowFlag::Match);
    CHECK(evaluate_row(db().get("1.12"), 4).flag == RowFlag::Match);
    CHECK(evaluate_row(db().get("1.16"), 5).flag == RowFlag::Match);

    // Engine strictly below the printed bound.
    CHECK(evaluate_row(db().get("1.16"), 4).flag == RowFlag::TighterThanReference);
    CHECK(evaluate_row(db().get("1.17"), 5).flag == RowFlag::TighterThanReference);
    CHECK(evaluate_row(db().get("1.17"), 6).flag == RowFlag::TighterThanReference);

    // Exact engine value above the printed bound: internal discrepancy.
    CHECK(evaluate_row(db().get("1.15"), 3).flag == RowFlag::ReferenceInternalDiscrepancy);
    CHECK(evaluate_row(db().get("1.16"), 6).flag == RowFlag::ReferenceInternalDiscrepancy);

    // The disputed reference input is surfaced on the row it feeds.
    const ExtendabilityReport r11 = evaluate_row(db().get("1.11"), 4);
    CHECK(r11.flag == RowFlag::TighterThanReference);
    REQUIRE_FALSE(r11.notes.empty());
    CHECK(r11.notes[0].find("11") != std::string::npos);
    CHECK(r11.notes[0].find("7") != std::string::npos);
}

TEST_CASE("certified zero thresholds") {
    for (const auto& f : db().families) {
        const int cert = certified_zero_from(f, f.ref_zero_from + 4);
        if (f.id == "1.16") {
            CHECK(cert == 7);
            CHECK(f.ref_zero_from == 6);
        } else {
            CHECK(cert == f.ref_zero_from);
        }
        // Once certified zero, it stays zero.
        for (int l = cert; l <= cert + 3; ++l) CHECK(beta_bound(f, l).certified_zero());
    }
}

TEST_CASE("table generation") {
    const Table2Output t = table2(db(), {"1.12"}, 5);
    REQUIRE(t.rows.size() == 3);
    CHECK(t.rows[0].l == 3);
    CHECK(t.rows[0].beta.beta_hi == 8);
    CHECK(t.rows[0].flag == RowFlag::Match);
    CHECK(t.rows[1].beta.beta_hi == 2);
    CHECK(t.rows[2].beta.beta_hi == 0);
    CHECK_FALSE(t.flags_present);

    const Table2Output t15 = table2(db(), {"1.15"}, 5);
    CHECK(t15.flags_present);

    const auto t1 = table1(db());
    REQUIRE(t1.size() == 9);
    auto find1 = [&](const std::string& id) {
        for (const auto& r : t1)
            if (r.family == id) return r.extendability;
        return std::string("missing");
    };
    CHECK(find1("1.5") == "smoothly 3-extendable");
    CHECK(find1("1.6") == "smoothly 7-extendable");
    CHECK(find1("1.9") == "smoothly 2-extendable");
    CHECK(find1("1.2") == "infinitely many times smoothly extendable");

    const auto klm = klm_comparison(db());
    CHECK(klm.size() == 17);
    for (const auto& r : klm) CHECK(r.reference_l <= r.klm_bound);
}

TEST_CASE("tangent twist tables for pinned families") {
    // Codimension-five linear section of Gr(2,6): h^1 and h^2 vanish exactly
    // for every twist m >= 2.
    for (int m = 2; m <= 8; ++m) {
        const DimTable t = tangent_twist_cohomology(db().get("1.7"), m).table;
        CHECK(t.at(1) == Interval::zero());
        CHECK(t.at(2) == Interval::zero());
        CHECK(t.at(0) == Interval::zero());
    }
    // Section of Gr(2,5) by two hyperplanes and a quadric at m = 2: the
    // quadric normal direction leaves an honest [0,1] in degree 1.
    {
        const DimTable t = tangent_twist_cohomology(db().get("1.5"), 2).table;
        CHECK(t.at(1) == Interval{0, 1});
        CHECK(t.at(2) == Interval::zero());
    }
    // Double cover of P^3 branched in a quartic at m = 3: the chase pins the
    // cover-normal contribution exactly.
    {
        const DimTable t = tangent_twist_cohomology(db().get("1.12"), 3).table;
        CHECK(t.at(1) == Interval::exactly(4));
        CHECK(t.at(2) == Interval::zero());
    }
    // Weighted hypersurface: the h^2 entry is pinned only once the imported
    // multiplication-map vanishing applies (m >= 6).
    {
        const DimTable below = tangent_twist_cohomology(db().get("1.11"), 5).table;
        CHECK_FALSE(below.at(2).exact());
        const DimTable above = tangent_twist_cohomology(db().get("1.11"), 6).table;
        CHECK(above.at(2) == Interval::zero());
    }
}
