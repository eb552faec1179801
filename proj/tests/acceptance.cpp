// Acceptance suite: every release-gating fact the engine must reproduce,
// checked in exact arithmetic and printed one line per criterion.

#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

#include "fano/extendability.hpp"
#include "fano/geography.hpp"
#include "fano/serialize.hpp"
#include "oracles.hpp"

using namespace fano;

namespace {

struct Checker {
    int failures = 0;
    std::ostringstream detail;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            ++failures;
            detail << "    FAILED: " << what << "\n";
        }
    }
};

const FamilyDatabase& db() {
    static FamilyDatabase d = FamilyDatabase::load_default();
    return d;
}

std::string istr(const Interval& iv) { return iv.to_string(); }

// C1: the reference thresholds for alpha = 0, and the engine's certified
// beta = 0 thresholds, match family by family. The single audited exception
// is 1.16, whose reference threshold sits at l = 2*index where the bound
// formula contributes h^0(O_Y) = 1; the engine certifies zero from 7 and
// flags the l = 6 row instead of reproducing it silently.
void c1(Checker& ck) {
    const std::map<std::string, int> expected = {
        {"1.1", 7},  {"1.2", 5},  {"1.3", 4},  {"1.4", 3},  {"1.5", 3},  {"1.6", 3},
        {"1.7", 3},  {"1.8", 3},  {"1.9", 3},  {"1.10", 3}, {"1.11", 7}, {"1.12", 5},
        {"1.13", 5}, {"1.14", 5}, {"1.15", 5}, {"1.16", 6}, {"1.17", 9}};
    for (const auto& f : db().families) {
        const auto it = expected.find(f.id);
        ck.expect(it != expected.end() && f.ref_zero_from == it->second,
                  f.id + ": stored threshold " + std::to_string(f.ref_zero_from));
        const int cert = certified_zero_from(f, f.ref_zero_from + 4);
        if (f.id == "1.16") {
            ck.expect(cert == 7, "1.16: certified threshold " + std::to_string(cert) + " != 7");
            ck.expect(evaluate_row(f, 6).flag == RowFlag::ReferenceInternalDiscrepancy,
                      "1.16 l=6 must carry the discrepancy flag");
        } else {
            ck.expect(cert == f.ref_zero_from,
                      f.id + ": certified " + std::to_string(cert) + " vs reference " +
                          std::to_string(f.ref_zero_from));
        }
    }
}

// C2: bound rows. Exact match on the pinned list; every other reference row
// is met from below or flagged as an internal discrepancy of the reference
// table; the six documented rows are all flagged.
void c2(Checker& ck) {
    const std::vector<std::tuple<std::string, int, i64>> must_match = {
        {"1.12", 3, 8}, {"1.12", 4, 2}, {"1.13", 3, 6}, {"1.14", 3, 6}, {"1.4", 2, 4},
        {"1.5", 2, 2},  {"1.6", 2, 1},  {"1.7", 2, 1},  {"1.8", 2, 1},  {"1.9", 2, 1},
        {"1.10", 2, 1}, {"1.17", 7, 4}, {"1.17", 8, 1}, {"1.1", 6, 1},  {"1.2", 4, 1},
        {"1.3", 3, 1}};
    for (const auto& [id, l, expect] : must_match) {
        const ExtendabilityReport r = evaluate_row(db().get(id), l);
        ck.expect(r.beta.bounded && r.beta.beta_hi == expect && r.flag == RowFlag::Match,
                  id + " l=" + std::to_string(l) + ": beta " +
                      (r.beta.bounded ? std::to_string(r.beta.beta_hi) : "inf") + " flag " +
                      flag_to_string(r.flag) + ", expected Match at " + std::to_string(expect));
    }
    for (const auto& f : db().families) {
        for (int l = first_row_l(f); l <= f.ref_zero_from + 3; ++l) {
            const ExtendabilityReport r = evaluate_row(f, l);
            if (!r.ref_bound) continue;
            const bool ok = (r.beta.bounded && r.beta.beta_hi <= *r.ref_bound) ||
                            r.flag == RowFlag::ReferenceInternalDiscrepancy;
            ck.expect(ok, f.id + " l=" + std::to_string(l) + ": engine above reference without flag");
        }
    }
    const std::vector<std::pair<std::string, int>> documented = {
        {"1.11", 4}, {"1.15", 3}, {"1.16", 4}, {"1.16", 6}, {"1.17", 5}, {"1.17", 6}};
    for (const auto& [id, l] : documented) {
        const ExtendabilityReport r = evaluate_row(db().get(id), l);
        ck.expect(r.flag != RowFlag::Match && r.flag != RowFlag::None,
                  id + " l=" + std::to_string(l) + ": documented row not flagged");
    }
}

// C3: the cotangent-twist facts. In the intermediate degrees 1..dim-1 the
// only nonvanishing is H^1(Omega) = C at t = 0; the top degree lights up
// exactly on the Serre window t <= -n with its dual section count.
void c3(Checker& ck) {
    const GrSpec g46{2, 6};
    for (int t = -10; t <= 10; ++t) {
        const CohomResult r = cohomology_omega_twist(g46, 1, t);
        for (int q = 1; q < g46.dim(); ++q) {
            const i64 got = (!r.all_zero && r.degree == q) ? r.dim : 0;
            const i64 expect = (q == 1 && t == 0) ? 1 : 0;
            ck.expect(got == expect, "Omega_{Gr(2,6)}(" + std::to_string(t) + ") degree " +
                                         std::to_string(q));
        }
        const i64 top = (!r.all_zero && r.degree == g46.dim()) ? r.dim : 0;
        const i64 serre = cohom_table(BundleExpr::tangent(g46, -6 - t)).at(0).lo;
        ck.expect(top == serre, "Omega_{Gr(2,6)}(" + std::to_string(t) + ") top degree");
    }
    for (int k = 1; k <= 3; ++k)
        for (int n = k + 1; n <= 7; ++n) {
            const CohomResult r = cohomology_omega_twist(GrSpec{k, n}, 1, 0);
            ck.expect(!r.all_zero && r.degree == 1 && r.dim == 1,
                      "H^1(Omega) on Gr(" + std::to_string(k) + "," + std::to_string(n) + ")");
        }
}

// C4: the two section-count oracles agree wherever the ambient model exists.
void c4(Checker& ck) {
    for (const char* id : {"1.5", "1.6", "1.7", "1.8", "1.9", "1.10", "1.13", "1.14", "1.15",
                           "1.16", "1.17"}) {
        const auto& f = db().get(id);
        for (int m = 0; m <= 8; ++m) {
            const i64 rr = h0_RR(f, m);
            const i64 kz = h0_koszul(f, m);
            ck.expect(rr == kz, std::string(id) + " m=" + std::to_string(m) + ": RR " +
                                    std::to_string(rr) + " vs koszul " + std::to_string(kz));
        }
    }
}

// C5: very-ampleness thresholds.
void c5(Checker& ck) {
    const std::map<std::string, int> expected = {
        {"1.1", 3},  {"1.2", 1},  {"1.3", 1},  {"1.4", 1},  {"1.5", 1},  {"1.6", 1},
        {"1.7", 1},  {"1.8", 1},  {"1.9", 1},  {"1.10", 1}, {"1.11", 3}, {"1.12", 2},
        {"1.13", 2}, {"1.14", 2}, {"1.15", 2}, {"1.16", 3}, {"1.17", 4}};
    for (const auto& f : db().families)
        ck.expect(f.j_va == expected.at(f.id), f.id + ": j_va " + std::to_string(f.j_va));
}

// C6: the normal-bundle twist checker passes at the reference threshold for
// every family and every k in {1,2,3}.
void c6(Checker& ck) {
    for (const auto& f : db().families)
        for (int k = 1; k <= 3; ++k) {
            const Prop27Result r = prop27_check(f, f.ref_zero_from, k);
            ck.expect(r.pass, f.id + " k=" + std::to_string(k) + ": " + r.failing_term);
        }
}

// C7: property suites: LR against the tableau oracle, Serre duality on a
// random grid, chi conservation, rule-order confluence, monotone narrowing.
void c7(Checker& ck) {
    // Littlewood-Richardson against the character oracle, |lambda|+|mu| <= 8.
    for (int n = 2; n <= 5; ++n) {
        std::vector<std::vector<int>> parts;
        std::vector<int> cur(static_cast<size_t>(n), 0);
        auto rec = [&](auto&& self, int pos, int maxpart, int left) -> void {
            parts.push_back(cur);
            if (pos == n || left == 0) return;
            for (int v = 1; v <= std::min(maxpart, left); ++v) {
                cur[static_cast<size_t>(pos)] = v;
                self(self, pos + 1, v, left - v);
                cur[static_cast<size_t>(pos)] = 0;
            }
        };
        rec(rec, 0, 8, 8);
        std::sort(parts.begin(), parts.end());
        parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
        for (const auto& lam : parts)
            for (const auto& mu : parts) {
                int total = 0;
                for (int x : lam) total += x;
                for (int x : mu) total += x;
                if (total > 8) continue;
                const Weight l(lam.begin(), lam.end()), m(mu.begin(), mu.end());
                if (lr_tensor(l, m) != oracle::lr_by_characters(l, m)) {
                    ck.expect(false, "LR mismatch at " + weight_to_string(l) + " x " +
                                         weight_to_string(m));
                    return;
                }
            }
    }

    // Serre duality on a 200-expression deterministic random grid.
    unsigned long long seed = 0x9E3779B97F4A7C15ull;
    auto rnd = [&](int lo, int hi) {
        seed = seed * 6364136223846793005ull + 1442695040888963407ull;
        return lo + static_cast<int>((seed >> 33) % static_cast<unsigned long long>(hi - lo + 1));
    };
    const std::vector<GrSpec> spaces = {GrSpec{2, 5}, GrSpec{2, 6}, GrSpec{3, 6}, GrSpec{2, 7}};
    for (int trial = 0; trial < 200; ++trial) {
        const GrSpec g = spaces[static_cast<size_t>(rnd(0, 3))];
        BundleExpr e = BundleExpr::zero(g);
        for (int j = 0, natoms = rnd(1, 3); j < natoms; ++j) {
            Weight a(static_cast<size_t>(g.k));
            for (auto& x : a) x = rnd(-5, 5);
            std::sort(a.begin(), a.end(), std::greater<int>());
            Weight b(static_cast<size_t>(g.qrank()));
            for (auto& x : b) x = rnd(-3, 3);
            std::sort(b.begin(), b.end(), std::greater<int>());
            e.add(IrredBundle{g, a, b}, rnd(1, 2));
        }
        const DimTable t = cohom_table(e);
        const DimTable td = cohom_table(twist(dual(e), g.canonical_twist()));
        for (int i = 0; i <= g.dim(); ++i)
            ck.expect(t.at(i) == td.at(g.dim() - i), "Serre duality trial " + std::to_string(trial));
    }

    // chi conservation along restrictions: the chased table balances the
    // alternating sum of the ambient resolution wherever it ends exact.
    for (const char* id : {"1.5", "1.6", "1.7", "1.15"}) {
        const auto& f = db().get(id);
        const BundleExpr cut = *f.cutting_bundle();
        for (int m = 0; m <= 3; ++m) {
            const BundleExpr line = BundleExpr::line(f.ambient.gr, m);
            auto [tbl, tr] = restricted_cohom(line, cut);
            i64 alt = euler_char(line);
            for (int k = 1; k <= static_cast<int>(cut.rank()); ++k)
                alt += (k % 2 ? -1 : 1) * euler_char(tensor(exterior_power(dual(cut), k), line));
            ck.expect(tbl.all_exact() && *tbl.chi() == alt,
                      std::string(id) + " O(" + std::to_string(m) + "): chi balance");
            ck.expect(replay_trace(tr), std::string(id) + ": trace replay");
        }
    }

    // Rule-order confluence: ten deterministic shuffles per (family, twist).
    for (const char* id : {"1.6", "1.12", "1.13"}) {
        const auto& f = db().get(id);
        for (int m : {2, 5}) {
            const std::string base = tangent_twist_cohomology(f, m).table.to_string();
            for (int trial = 0; trial < 10; ++trial) {
                std::vector<int> order = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
                for (size_t i = order.size(); i > 1; --i)
                    std::swap(order[i - 1], order[static_cast<size_t>(rnd(0, static_cast<int>(i) - 1))]);
                set_default_rule_order(order);
                const std::string got = tangent_twist_cohomology(f, m).table.to_string();
                set_default_rule_order({});
                ck.expect(got == base, std::string(id) + " twist " + std::to_string(m) +
                                           ": fixed point depends on rule order");
            }
        }
    }

    // Monotone narrowing is checked by replaying the recorded steps of a
    // full beta computation.
    ChaseTrace trace;
    beta_bound(db().get("1.6"), 2, &trace);
    ck.expect(replay_trace(trace), "beta trace replay (monotone narrowing)");
}

// C8: surface invariants: chi agreement for index one, K^2 = 2 H^3 l^3,
// geography inequalities, and the flagged higher-index chi discrepancy.
void c8(Checker& ck) {
    for (const auto& f : db().families) {
        for (int l = f.ref_zero_from; l <= f.ref_zero_from + 3; ++l) {
            const SurfaceInvariants inv = surface_invariants(f, l);
            ck.expect(inv.k2 == 2 * f.degree_h3 * static_cast<i64>(l) * l * l,
                      f.id + " l=" + std::to_string(l) + ": K^2");
            const GeographyCheck c = geography_check(inv);
            ck.expect(c.noether && c.bmy, f.id + " l=" + std::to_string(l) + ": geography");
            if (f.index_i == 1)
                ck.expect(!inv.chi_mismatch, f.id + " l=" + std::to_string(l) + ": chi routes");
            else
                ck.expect(inv.chi_mismatch,
                          f.id + " l=" + std::to_string(l) + ": chi discrepancy must be flagged");
        }
    }
    const SurfaceInvariants p3 = surface_invariants(db().get("1.17"), 9);
    ck.expect(p3.chi_formula == 385 && p3.chi_rr == 276 && p3.chi_mismatch,
              "1.17 l=9: expected 385 vs 276 with flag, got " + std::to_string(p3.chi_formula) +
                  " vs " + std::to_string(p3.chi_rr));
    const std::string csv = emit_geography_csv(db(), {}, 1, 12);
    ck.expect(csv.find("chi_mismatch") != std::string::npos, "emitted csv must carry the flag");
}

// C9: embedding dimension spot values.
void c9(Checker& ck) {
    ck.expect(N_l(db().get("1.12"), 3) == 27, "N_3(1.12)");
    ck.expect(N_l(db().get("1.17"), 9) == 275, "N_9(1.17)");
    ck.expect(N_l(db().get("1.5"), 1) == 8, "N_1(1.5)");
}

// C10: the stored smooth-extendability data round-trips through table1.
void c10(Checker& ck) {
    const std::map<std::string, std::string> expected = {
        {"1.2", "infinitely many times smoothly extendable"},
        {"1.3", "infinitely many times smoothly extendable"},
        {"1.4", "infinitely many times smoothly extendable"},
        {"1.5", "smoothly 3-extendable"},
        {"1.6", "smoothly 7-extendable"},
        {"1.7", "smoothly 5-extendable"},
        {"1.8", "smoothly 3-extendable"},
        {"1.9", "smoothly 2-extendable"},
        {"1.14", "smoothly 2-extendable"}};
    const auto rows = table1(db());
    ck.expect(rows.size() == expected.size(), "table1 row count");
    for (const auto& r : rows) {
        const auto it = expected.find(r.family);
        ck.expect(it != expected.end() && it->second == r.extendability,
                  r.family + ": " + r.extendability);
    }
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Checker&)>>> criteria = {
        {"C1  reference alpha=0 thresholds reproduced (1.16 certified at 7, flagged)", c1},
        {"C2  bound rows: exact matches and audited flags", c2},
        {"C3  cotangent twist vanishing and H^1(Omega) = 1", c3},
        {"C4  Riemann-Roch equals the Koszul oracle for m in 0..8", c4},
        {"C5  very-ampleness thresholds", c5},
        {"C6  normal-bundle twist checker passes at the thresholds", c6},
        {"C7  property suites: LR oracle, Serre, chi, confluence, replay", c7},
        {"C8  surface invariants and geography", c8},
        {"C9  embedding dimension spot values", c9},
        {"C10 smooth-extendability data emission", c10},
    };
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        Checker ck;
        try {
            fn(ck);
        } catch (const std::exception& e) {
            ck.expect(false, std::string("exception: ") + e.what());
        }
        std::cout << name << ": " << (ck.failures == 0 ? "PASS" : "FAIL") << "\n";
        if (ck.failures) {
            std::cout << ck.detail.str();
            ++failed;
        }
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
              << "\n";
    return failed == 0 ? 0 : 1;
}
