#pragma once

#include <optional>

#include "fano/families.hpp"
#include "fano/tangent.hpp"

namespace fano {

// Upper bound beta for alpha of the embedded ribbon, specialized to the
// conormal bundle L = K_Y = -iH and hyperplane class lH:
//   beta = h^1(T_Y(-(l+i)H)) + h^1(T_Y(-lH)) - h^0(T_Y(-lH))
//        + h^1(O_Y((i-l)H)) + h^0(O_Y((2i-l)H)).
struct BetaBreakdown {
    int l = 0;
    Interval t1, t2, t3, t4, t5;
    i64 beta_hi = 0;       // hi(t1) + hi(t2) - lo(t3) + hi(t4) + hi(t5), floored at 0
    bool bounded = false;  // every hi finite
    bool exact = false;    // t1, t2, t4, t5 exact and t3 exact (the value is certified)
    bool certified_zero() const { return bounded && beta_hi == 0; }
};

BetaBreakdown beta_bound(const FanoFamily& f, int l);
BetaBreakdown beta_bound(const FanoFamily& f, int l, ChaseTrace* trace);

struct ZlConclusion {
    i64 alpha_hi = 0;
    bool not_extendable = false;      // alpha <= 0
    int not_k_extendable = 0;         // 0 = no conclusion
    bool cone_not_smoothable = false; // carried by the alpha = 0 case
    std::string to_string() const;
};

// Conclusions from the alpha bound: alpha <= beta; beta = 0 gives
// non-extendability (and a non-smoothable cone), beta <= k-1 with beta < N
// gives non-k-extendability. The guard excludes quadrics.
ZlConclusion zl_conclude(i64 beta_hi, i64 n_l, bool quadric_guard = true);

struct Prop27Result {
    bool pass = false;
    std::vector<std::string> certificates;
    std::string failing_term;
};

// Vanishing checker for H^1 of the (-k)-twisted normal bundle of the ribbon:
// condition (1) is a list of intermediate-cohomology vanishings of line
// bundles on Y, condition (2) asks h^2(T_Y(-(kl+i)H)) = h^2(T_Y(-klH)) = 0.
Prop27Result prop27_check(const FanoFamily& f, int l, int k);

enum class RowFlag { None, Match, TighterThanReference, LooserThanReference, ReferenceInternalDiscrepancy };
std::string flag_to_string(RowFlag f);

struct ExtendabilityReport {
    std::string family;
    int l = 0;
    i64 n_l = 0;
    BetaBreakdown beta;
    ZlConclusion zl;
    std::array<bool, 3> prop27_pass = {false, false, false};
    Interval surface_alpha;            // alpha of the canonical surface section
    bool surface_alpha_certified = false;
    std::optional<i64> ref_bound;      // reference table value for this row
    RowFlag flag = RowFlag::None;
    std::vector<std::string> notes;
};

// alpha(S) = alpha(X) + 1 when the hyperplane-section hypotheses are
// certified (alpha = 0 with the normal-bundle vanishings); otherwise the
// one-sided interval [alpha_hi + 1, inf) with no claim.
Interval surface_alpha(const ExtendabilityReport& report, bool* certified);

ExtendabilityReport evaluate_row(const FanoFamily& f, int l);

struct Table2Output {
    std::vector<ExtendabilityReport> rows;
    // Reference threshold per family, and the least l the engine certifies
    // beta = 0 at. The two are reported side by side and audited, not merged.
    std::vector<std::tuple<std::string, int, int>> l_thresholds; // (family, reference, certified)
    bool flags_present = false;
};

Table2Output table2(const FamilyDatabase& db, const std::vector<std::string>& family_filter,
                    int l_max);

int first_row_l(const FanoFamily& f); // max(j_va, index + 1)
int certified_zero_from(const FanoFamily& f, int scan_limit);

struct Table1Row {
    std::string family;
    int l = 0; // = index
    std::string extendability;
};
std::vector<Table1Row> table1(const FamilyDatabase& db);

struct KlmRow {
    std::string family;
    int klm_bound = 0;
    int reference_l = 0;
};
std::vector<KlmRow> klm_comparison(const FamilyDatabase& db);

} // namespace fano
