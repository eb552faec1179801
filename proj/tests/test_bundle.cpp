#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fano/bundle.hpp"
#include "fano/serialize.hpp"

using namespace fano;

namespace {

i64 binom(i64 n, i64 k) {
    if (k < 0 || k > n) return 0;
    i64 r = 1;
    for (i64 i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Small deterministic generator for the random expression grid.
struct Lcg {
    unsigned long long s = 0x2545F4914F6CDD1Dull;
    int next(int lo, int hi) {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return lo + static_cast<int>((s >> 33) % static_cast<unsigned long long>(hi - lo + 1));
    }
};

} // namespace

TEST_CASE("tensor products by littlewood-richardson on both blocks") {
    const GrSpec g25{2, 5};
    // U* (x) U* = Sigma^{(2,0)} U* + Sigma^{(1,1)} U*.
    const BundleExpr sq = tensor(BundleExpr::ustar(g25), BundleExpr::ustar(g25));
    BundleExpr expect = BundleExpr::single(make_schur_ustar(g25, {2, 0}));
    expect += BundleExpr::single(make_schur_ustar(g25, {1, 1}));
    CHECK(sq == expect);

    // Q (x) wedge^2 Q on Gr(2,7).
    const GrSpec g27{2, 7};
    const BundleExpr qq = tensor(BundleExpr::q(g27), exterior_power(BundleExpr::q(g27), 2));
    BundleExpr expect2 = BundleExpr::single(make_schur_q(g27, {1, 1, 1, 0, 0}));
    expect2 += BundleExpr::single(make_schur_q(g27, {2, 1, 0, 0, 0}));
    CHECK(qq == expect2);

    // e (x) O = e.
    const BundleExpr e = BundleExpr::ustar(g25, 1) + BundleExpr::line(g25, 2);
    CHECK(tensor(e, BundleExpr::structure_sheaf(g25)) == e);
}

TEST_CASE("exterior powers of supported atoms") {
    const GrSpec g25{2, 5};
    // wedge^2(U(-1)) = det(U)(-2) = O(-3).
    CHECK(exterior_power(BundleExpr::u(g25, -1), 2) == BundleExpr::line(g25, -3));

    // wedge^2(U*) = U(1) on Gr(3,6).
    const GrSpec g36{3, 6};
    CHECK(exterior_power(BundleExpr::ustar(g36), 2) == BundleExpr::u(g36, 1));

    // wedge^0 = O and wedge^rank = det.
    const BundleExpr e = BundleExpr::ustar(g25, 1) + BundleExpr::line(g25, 1);
    CHECK(exterior_power(e, 0) == BundleExpr::structure_sheaf(g25));
    CHECK(determinant(e) == BundleExpr::line(g25, static_cast<int>(e.first_chern())));

    // Unsupported shapes are a hard error naming the atom.
    const BundleExpr bad = BundleExpr::single(make_schur_ustar(g25, {2, 0}));
    CHECK_THROWS_WITH_AS(exterior_power(bad, 2), doctest::Contains("S[2,0]U*"), Error);
}

TEST_CASE("rank bookkeeping") {
    const GrSpec g27{2, 7};
    // E = Sigma^{(1,1,1,1,0)}Q + O(1)^2 has rank 5 + 2.
    BundleExpr e = BundleExpr::single(make_schur_q(g27, {1, 1, 1, 1, 0}));
    e += BundleExpr::line(g27, 1);
    e += BundleExpr::line(g27, 1);
    CHECK(e.rank() == 7);
    for (int k = 0; k <= 7; ++k) CHECK(exterior_power(dual(e), k).rank() == binom(7, k));
    CHECK(tensor(e, BundleExpr::ustar(g27)).rank() == e.rank() * 2);
}

TEST_CASE("cohomology tables") {
    const GrSpec g46{2, 6};
    const DimTable o = cohom_table(BundleExpr::structure_sheaf(g46));
    CHECK(o.at(0) == Interval::exactly(1));
    for (int i = 1; i <= 8; ++i) CHECK(o.at(i) == Interval::zero());

    const DimTable omega = cohom_table(BundleExpr::cotangent(g46));
    CHECK(omega.at(1) == Interval::exactly(1));

    for (int l = 1; l <= 10; ++l) {
        const DimTable t = cohom_table(BundleExpr::tangent(g46, -l));
        CHECK(t.at(1) == Interval::zero());
        CHECK(t.at(2) == Interval::zero());
    }

    // Tables add degreewise over direct sums.
    const BundleExpr e1 = BundleExpr::q(g46, 1);
    const BundleExpr e2 = BundleExpr::cotangent(g46);
    CHECK((cohom_table(e1) + cohom_table(e2)).to_string() == cohom_table(e1 + e2).to_string());
}

TEST_CASE("determinant two ways and chern accounting") {
    const GrSpec g36{3, 6};
    BundleExpr e = BundleExpr::single(make_schur_ustar(g36, {1, 1, 0})); // wedge^2 U*
    e += BundleExpr::line(g36, 1);
    e += BundleExpr::line(g36, 1);
    e += BundleExpr::line(g36, 1);
    CHECK(e.first_chern() == 5);
    CHECK(determinant(e) == BundleExpr::line(g36, 5));
}

TEST_CASE("serre duality degreewise on a random expression grid") {
    Lcg rng;
    const std::vector<GrSpec> spaces = {GrSpec{2, 5}, GrSpec{2, 6}, GrSpec{3, 6}, GrSpec{2, 7}};
    int built = 0;
    while (built < 200) {
        const GrSpec g = spaces[static_cast<size_t>(rng.next(0, 3))];
        BundleExpr e = BundleExpr::zero(g);
        const int natoms = rng.next(1, 3);
        for (int j = 0; j < natoms; ++j) {
            Weight a(static_cast<size_t>(g.k));
            for (auto& x : a) x = rng.next(-5, 5);
            std::sort(a.begin(), a.end(), std::greater<int>());
            Weight b(static_cast<size_t>(g.qrank()));
            for (auto& x : b) x = rng.next(-3, 3);
            std::sort(b.begin(), b.end(), std::greater<int>());
            e.add(IrredBundle{g, a, b}, rng.next(1, 2));
        }
        const DimTable t = cohom_table(e);
        const DimTable td = cohom_table(twist(dual(e), g.canonical_twist()));
        for (int i = 0; i <= g.dim(); ++i) CHECK(t.at(i) == td.at(g.dim() - i));
        ++built;
    }
}

TEST_CASE("expression grammar round trip") {
    const GrSpec g25{2, 5};
    const BundleExpr e = parse_expr(g25, "S[1,0]U* ⊗ O(1) ⊕ O(1)");
    CHECK(e.rank() == 3);
    CHECK(e.first_chern() == 4);
    CHECK(parse_expr(g25, expr_to_string(e)) == e);

    const GrSpec g37{3, 7};
    const BundleExpr e3 = parse_expr(g37, "S[1,1,0]U*^3");
    CHECK(e3.rank() == 9);
    CHECK(parse_expr(g37, expr_to_string(e3)) == e3);

    CHECK(parse_expr(g25, "0").is_zero());
    CHECK_THROWS_AS(parse_expr(g25, "S[1]U*"), Error);
}
