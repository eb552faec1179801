#include "fano/extendability.hpp"

#include <algorithm>
#include <cassert>

namespace fano {

BetaBreakdown beta_bound(const FanoFamily& f, int l) {
    return beta_bound(f, l, nullptr);
}

BetaBreakdown beta_bound(const FanoFamily& f, int l, ChaseTrace* trace) {
    const int i = f.index_i;
    if (l <= i)
        throw Error("beta_bound: for l <= index the bound satisfies beta >= N_l and is "
                    "inconclusive (family " + f.id + ")");

    TangentResult deep = tangent_twist_cohomology(f, l + i);
    TangentResult shallow = tangent_twist_cohomology(f, l);

    BetaBreakdown b;
    b.l = l;
    b.t1 = deep.table.at(1);
    b.t2 = shallow.table.at(1);
    b.t3 = shallow.table.at(0);
    // h^1(O_Y((i-l)H)) with i - l < 0: Kodaira vanishing.
    b.t4 = oy_line_cohomology(f, i - l).at(1);
    b.t5 = Interval::exactly(h0_RR(f, 2 * i - l));
    assert(l <= 2 * i || b.t5.is_zero());

    b.bounded = b.t1.bounded() && b.t2.bounded() && b.t4.bounded() && b.t5.bounded();
    b.exact = b.t1.exact() && b.t2.exact() && b.t3.exact() && b.t4.exact() && b.t5.exact();
    if (b.bounded)
        b.beta_hi = std::max<i64>(0, b.t1.hi + b.t2.hi - b.t3.lo + b.t4.hi + b.t5.hi);
    else
        b.beta_hi = kUnbounded;

    if (trace) {
        trace->append(deep.trace);
        trace->append(shallow.trace);
    }
    return b;
}

std::string ZlConclusion::to_string() const {
    if (not_extendable) return "alpha = 0: not extendable; cone not smoothable";
    if (not_k_extendable > 0)
        return "alpha <= " + std::to_string(alpha_hi) + ": not " +
               std::to_string(not_k_extendable) + "-extendable";
    return "alpha <= " + std::to_string(alpha_hi) + ": inconclusive";
}

ZlConclusion zl_conclude(i64 beta_hi, i64 n_l, bool quadric_guard) {
    ZlConclusion out;
    out.alpha_hi = beta_hi;
    if (!quadric_guard) return out;
    if (beta_hi == 0) {
        out.not_extendable = true;
        out.cone_not_smoothable = true;
        out.not_k_extendable = 1;
        return out;
    }
    // For k >= 2 the side condition alpha < N follows from beta < N_l.
    if (beta_hi != kUnbounded && beta_hi < n_l) out.not_k_extendable = static_cast<int>(beta_hi) + 1;
    return out;
}

Prop27Result prop27_check(const FanoFamily& f, int l, int k) {
    if (k < 1 || k > 3) throw Error("prop27_check: k must be 1, 2 or 3");
    const int i = f.index_i;
    Prop27Result out;

    // Condition (1): intermediate cohomology of line bundles on Y.
    struct LineCheck {
        int degree;
        int twist;
    };
    const std::vector<LineCheck> checks = {
        {1, i - k * l},        // -L - kH
        {1, 2 * i - k * l},    // -2L - kH
        {2, -k * l},           // -kH
        {2, i - k * l},        // -L - kH
        {1, -i - (k - 1) * l}, // L - (k-1)H
        {1, -(k - 1) * l},     // -(k-1)H
        {2, -i - k * l},       // L - kH
    };
    for (const auto& c : checks) {
        const Interval iv = oy_line_cohomology(f, c.twist).at(c.degree);
        if (!iv.is_zero()) {
            out.failing_term = "h^" + std::to_string(c.degree) + "(O_Y(" + std::to_string(c.twist) +
                               ")) = " + iv.to_string();
            return out;
        }
        out.certificates.push_back("h^" + std::to_string(c.degree) + "(O_Y(" +
                                   std::to_string(c.twist) + ")) = 0");
    }

    // Condition (2): h^2(T_Y(-(kl+i)H)) = h^2(T_Y(-klH)) = 0.
    for (int m : {k * l + i, k * l}) {
        const Interval iv = tangent_twist_cohomology(f, m).table.at(2);
        if (!iv.is_zero()) {
            out.failing_term = "h^2(T_Y(" + std::to_string(-m) + ")) = " + iv.to_string();
            return out;
        }
        out.certificates.push_back("h^2(T_Y(" + std::to_string(-m) + ")) = 0");
    }
    out.pass = true;
    return out;
}

std::string flag_to_string(RowFlag f) {
    switch (f) {
        case RowFlag::None: return "-";
        case RowFlag::Match: return "Match";
        case RowFlag::TighterThanReference: return "TighterThanReference";
        case RowFlag::LooserThanReference: return "LooserThanReference";
        case RowFlag::ReferenceInternalDiscrepancy: return "ReferenceInternalDiscrepancy";
    }
    return "?";
}

Interval surface_alpha(const ExtendabilityReport& report, bool* certified) {
    const bool all27 = report.prop27_pass[0] && report.prop27_pass[1] && report.prop27_pass[2];
    if (report.beta.certified_zero() && all27) {
        if (certified) *certified = true;
        return Interval::exactly(1);
    }
    if (certified) *certified = false;
    const i64 lo = (report.beta.beta_hi == kUnbounded) ? 1 : report.beta.beta_hi + 1;
    return Interval{lo, kUnbounded};
}

ExtendabilityReport evaluate_row(const FanoFamily& f, int l) {
    ExtendabilityReport r;
    r.family = f.id;
    r.l = l;
    r.n_l = N_l(f, l);
    r.beta = beta_bound(f, l);
    r.zl = zl_conclude(r.beta.beta_hi, r.n_l, /*quadric_guard=*/true);
    for (int k = 1; k <= 3; ++k)
        r.prop27_pass[static_cast<size_t>(k - 1)] = prop27_check(f, l, k).pass;
    r.surface_alpha = surface_alpha(r, &r.surface_alpha_certified);

    r.ref_bound = f.ref_bound_at(l);
    if (r.ref_bound) {
        if (!r.beta.bounded) {
            r.flag = RowFlag::LooserThanReference;
        } else if (r.beta.beta_hi == *r.ref_bound) {
            r.flag = RowFlag::Match;
        } else if (r.beta.beta_hi < *r.ref_bound) {
            r.flag = RowFlag::TighterThanReference;
        } else {
            r.flag = r.beta.exact ? RowFlag::ReferenceInternalDiscrepancy : RowFlag::LooserThanReference;
        }
    }

    // Audited reference inputs: a stored h^0(mH) that disagrees with both the
    // Riemann-Roch and (where applicable) monomial-count oracles is surfaced
    // whenever it feeds this row.
    for (const auto& [m0, printed] : f.printed_h0) {
        bool feeds = false;
        if (f.defining.kind == DefiningKind::WeightedHypersurface &&
            f.defining.hypersurface_degree - l == m0)
            feeds = true;
        if (2 * f.index_i - l == m0) feeds = true;
        if (!feeds) continue;
        const i64 rr = h0_RR(f, m0);
        std::string note = "reference input h^0(" + std::to_string(m0) + "H) = " +
                           std::to_string(printed) + " vs Riemann-Roch " + std::to_string(rr);
        if (f.ambient.kind == AmbientKind::WeightedProjective) {
            const i64 wc = h0_weighted(f.ambient.weights, m0) -
                           h0_weighted(f.ambient.weights, m0 - f.defining.hypersurface_degree);
            note += " and monomial count " + std::to_string(wc);
        }
        r.notes.push_back(note);
        if (printed != rr && r.flag == RowFlag::TighterThanReference)
            r.notes.push_back("reference row inherits the disputed input; both values kept");
    }
    return r;
}

int first_row_l(const FanoFamily& f) {
    return std::max(f.j_va, f.index_i + 1);
}

int certified_zero_from(const FanoFamily& f, int scan_limit) {
    for (int l = first_row_l(f); l <= scan_limit; ++l)
        if (beta_bound(f, l).certified_zero()) return l;
    return -1;
}

Table2Output table2(const FamilyDatabase& db, const std::vector<std::string>& family_filter,
                    int l_max) {
    Table2Output out;
    for (const auto& f : db.families) {
        if (!family_filter.empty() &&
            std::find(family_filter.begin(), family_filter.end(), f.id) == family_filter.end())
            continue;
        const int lmin = first_row_l(f);
        for (int l = lmin; l <= l_max; ++l) {
            ExtendabilityReport r = evaluate_row(f, l);
            if (r.flag != RowFlag::None && r.flag != RowFlag::Match) out.flags_present = true;
            out.rows.push_back(std::move(r));
        }
        const int cert = certified_zero_from(f, std::max(l_max, f.ref_zero_from + 4));
        out.l_thresholds.emplace_back(f.id, f.ref_zero_from, cert);
        if (cert != f.ref_zero_from) out.flags_present = true;
    }
    return out;
}

std::vector<Table1Row> table1(const FamilyDatabase& db) {
    std::vector<Table1Row> rows;
    for (const auto& f : db.families) {
        if (!f.table1_extendable) continue;
        Table1Row r;
        r.family = f.id;
        r.l = f.index_i;
        r.extendability = (*f.table1_extendable == -1)
                              ? "infinitely many times smoothly extendable"
                              : "smoothly " + std::to_string(*f.table1_extendable) + "-extendable";
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<KlmRow> klm_comparison(const FamilyDatabase& db) {
    std::vector<KlmRow> rows;
    for (const auto& f : db.families)
        rows.push_back(KlmRow{f.id, f.klm_bound, f.ref_zero_from});
    return rows;
}

} // namespace fano
