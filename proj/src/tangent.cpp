#include "fano/tangent.hpp"

#include <cassert>

#include "fano/serialize.hpp"

namespace fano {

namespace {

TangentResult tangent_homogeneous(const FanoFamily& f, int m) {
    const GrSpec g = f.ambient.gr;
    const BundleExpr cut = *f.cutting_bundle();
    ChaseTrace trace;

    if (cut.is_zero()) {
        // Y is the ambient projective space; BBW is exact.
        DimTable t = cohom_table(BundleExpr::tangent(g, -m));
        trace.add_note_table("T(" + std::to_string(-m) + ") [BBW]", t);
        return {t, trace};
    }

    // Route 1: 0 -> T_Y(-m) -> T_amb|_Y(-m) -> E|_Y(-m) -> 0.
    auto [tg_tbl, tg_tr] = restricted_to_y(f, BundleExpr::tangent(g, -m));
    trace.append(tg_tr);
    auto [ey_tbl, ey_tr] = restricted_to_y(f, twist(cut, -m));
    trace.append(ey_tr);

    ChaseSystem sys;
    const int ity = sys.add_table("T_Y(" + std::to_string(-m) + ")", DimTable(3));
    const int itg = sys.add_table("T_amb|_Y(" + std::to_string(-m) + ")", tg_tbl);
    const int iey = sys.add_table("N_Y(" + std::to_string(-m) + ")", ey_tbl);
    sys.add_ses(ity, itg, iey, "normal bundle sequence");

    // Route 2: Serre duality h^i(T_Y(-m)) = h^{3-i}(Omega_Y((m - i_Y)H)) with
    // Omega_Y chased through 0 -> E^dual|_Y -> Omega_amb|_Y -> Omega_Y -> 0.
    const int t = m - f.index_i;
    auto [ed_tbl, ed_tr] = restricted_to_y(f, twist(dual(cut), t));
    trace.append(ed_tr);
    auto [og_tbl, og_tr] = restricted_to_y(f, BundleExpr::cotangent(g, t));
    trace.append(og_tr);
    const int ioy = sys.add_table("Omega_Y(" + std::to_string(t) + ")", DimTable(3));
    const int ied = sys.add_table("N^v_Y(" + std::to_string(t) + ")", ed_tbl);
    const int iog = sys.add_table("Omega_amb|_Y(" + std::to_string(t) + ")", og_tbl);
    sys.add_ses(ied, iog, ioy, "conormal sequence");

    sys.run();
    for (int round = 0; round < 3; ++round) {
        for (int i = 0; i <= 3; ++i) {
            sys.refine(ity, i, sys.table(ioy).at(3 - i), "SERRE", "Serre duality on Y");
            sys.refine(ioy, i, sys.table(ity).at(3 - i), "SERRE", "Serre duality on Y");
        }
        sys.run();
    }

    TangentResult out{sys.table(ity), {}};
    trace.append(sys.take_trace());
    out.trace = std::move(trace);
    return out;
}

TangentResult tangent_weighted(const FanoFamily& f, int m) {
    // Euler sequence restricted to Y: 0 -> O_Y(-m) -> sum O_Y(w - m) -> T_P|_Y(-m) -> 0,
    // then the normal sequence with O_Y(d - m).
    const int d = f.defining.hypersurface_degree;
    ChaseTrace trace;

    DimTable euler_mid = DimTable::zeros(3);
    for (int w : f.ambient.weights) euler_mid += oy_line_cohomology(f, w - m);
    trace.add_note_table("sum O_Y(w-m) [RR+KOD+SERRE]", euler_mid);

    ChaseSystem sys;
    const int ia = sys.add_table("O_Y(" + std::to_string(-m) + ")", oy_line_cohomology(f, -m));
    const int ib = sys.add_table("Euler middle", euler_mid);
    const int ic = sys.add_table("T_P|_Y(" + std::to_string(-m) + ")", DimTable(3));
    sys.add_ses(ia, ib, ic, "Euler sequence on Y");
    sys.run();
    if (const auto* a = f.assumption("wps_euler_h1")) {
        sys.refine(ic, 1, Interval::zero(), "ASSUME:" + a->name, a->statement);
    }
    if (m >= 6) {
        if (const auto* a = f.assumption("wps_mult_h2"))
            sys.refine(ic, 2, Interval::zero(), "ASSUME:" + a->name, a->statement);
    }
    sys.run();

    const int ity = sys.add_table("T_Y(" + std::to_string(-m) + ")", DimTable(3));
    const int inorm =
        sys.add_table("O_Y(" + std::to_string(d - m) + ")", oy_line_cohomology(f, d - m));
    sys.add_ses(ity, ic, inorm, "normal bundle sequence");
    sys.run();

    TangentResult out{sys.table(ity), {}};
    trace.append(sys.take_trace());
    out.trace = std::move(trace);
    return out;
}

TangentResult tangent_double_cover(const FanoFamily& f, int m) {
    // 0 -> T_Y -> pi^* T_{P^3} -> N_pi -> 0 twisted by pi^* O(-m);
    // pushforward splits pi^* T(-m) into T(-m) + T(-m - b/2) on P^3.
    const GrSpec p3{1, 4};
    const int c = f.ambient.branch_degree / 2;
    ChaseTrace trace;

    DimTable mid = cohom_table(BundleExpr::tangent(p3, -m));
    mid += cohom_table(BundleExpr::tangent(p3, -m - c));
    trace.add_note_table("pi_* of pi^*T_{P^3}(-m) [BBW]", mid);

    const DimTable npi = double_cover_npi_table(f, -m);
    ChaseSystem sys;
    const int ity = sys.add_table("T_Y(" + std::to_string(-m) + ")", DimTable(3));
    const int imid = sys.add_table("pi^*T_{P^3}(" + std::to_string(-m) + ")", mid);
    const int inpi = sys.add_table("N_pi(" + std::to_string(-m) + ")", npi);
    sys.add_ses(ity, imid, inpi, "cover differential sequence");
    sys.run();

    TangentResult out{sys.table(ity), {}};
    trace.append(sys.take_trace());
    out.trace = std::move(trace);
    return out;
}

} // namespace

std::pair<DimTable, ChaseTrace> restricted_to_y(const FanoFamily& f, const BundleExpr& F) {
    const auto cut = f.cutting_bundle();
    if (!cut) throw Error("restricted_to_y: family " + f.id + " has no homogeneous ambient model");
    DimTable total = DimTable::zeros(3);
    ChaseTrace trace;
    for (const auto& [atom, mult] : F.atoms) {
        int tw = 0;
        const bool is_line = std::all_of(atom.b.begin(), atom.b.end(), [](int x) { return x == 0; }) &&
                             std::all_of(atom.a.begin(), atom.a.end(),
                                         [&](int x) { return x == atom.a.back(); });
        DimTable tbl;
        if (is_line) {
            tw = atom.a.back();
            tbl = oy_line_cohomology(f, tw);
            trace.add_note_table("O_Y(" + std::to_string(tw) + ") [RR+KOD+SERRE]", tbl);
        } else {
            auto [t, tr] = restricted_cohom(BundleExpr::single(atom), *cut);
            tbl = t;
            trace.append(tr);
        }
        for (i64 i = 0; i < mult; ++i) total += tbl;
    }
    return {total, trace};
}

TangentResult tangent_twist_cohomology(const FanoFamily& f, int m) {
    if (m == 0) throw Error("tangent_twist_cohomology: twist must be nonzero");
    switch (f.ambient.kind) {
        case AmbientKind::Homogeneous:
        case AmbientKind::ProjectiveSpace:
            return tangent_homogeneous(f, m);
        case AmbientKind::WeightedProjective:
            return tangent_weighted(f, m);
        case AmbientKind::DoubleCoverP3:
            return tangent_double_cover(f, m);
    }
    throw Error("tangent_twist_cohomology: unreachable");
}

} // namespace fano
