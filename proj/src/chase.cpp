#include "fano/chase.hpp"

#include <algorithm>
#include <cassert>

#include "fano/serialize.hpp"

namespace fano {

std::string TraceStep::to_string() const {
    return "[" + rule + "] h^" + std::to_string(degree) + "(" + table + "): " + before.to_string() +
           " -> " + after.to_string() + " via " + via;
}

std::string ChaseTrace::to_text() const {
    std::string s;
    for (const auto& seg : segments) {
        for (const auto& [name, t] : seg.initial) s += "init " + name + " = " + t.to_string() + "\n";
        for (const auto& st : seg.steps) s += st.to_string() + "\n";
    }
    return s;
}

void ChaseTrace::append(const ChaseTrace& o) {
    segments.insert(segments.end(), o.segments.begin(), o.segments.end());
}

void ChaseTrace::add_note_table(const std::string& name, const DimTable& t) {
    Segment seg;
    seg.initial.emplace_back(name, t);
    segments.push_back(std::move(seg));
}

size_t ChaseTrace::step_count() const {
    size_t n = 0;
    for (const auto& seg : segments) n += seg.steps.size();
    return n;
}

bool replay_trace(const ChaseTrace& trace) {
    for (const auto& seg : trace.segments) {
        std::map<std::string, DimTable> state;
        for (const auto& [name, t] : seg.initial) state[name] = t;
        for (const auto& st : seg.steps) {
            auto it = state.find(st.table);
            if (it == state.end()) return false;
            if (st.degree < 0 || st.degree > it->second.dim) return false;
            Interval& cell = it->second.ref(st.degree);
            if (cell != st.before) return false;
            auto met = cell.meet(st.after);
            if (!met || *met != st.after) return false;
            cell = st.after;
        }
    }
    return true;
}

int ChaseSystem::add_table(std::string name, DimTable t) {
    names_.push_back(std::move(name));
    tables_.push_back(std::move(t));
    return static_cast<int>(tables_.size()) - 1;
}

void ChaseSystem::add_ses(int a, int b, int c, std::string name) {
    seqs_.push_back(Ses{a, b, c, std::move(name)});
}

void ChaseSystem::snapshot_initial() {
    seg_.initial.clear();
    for (size_t i = 0; i < tables_.size(); ++i) seg_.initial.emplace_back(names_[i], tables_[i]);
}

ChaseTrace ChaseSystem::take_trace() {
    ChaseTrace tr;
    tr.segments.push_back(std::move(seg_));
    seg_ = ChaseTrace::Segment{};
    return tr;
}

std::string ChaseSystem::trace_text() const {
    ChaseTrace tr;
    tr.segments.push_back(seg_);
    return tr.to_text();
}

void ChaseSystem::refine(int table, int degree, Interval target, const std::string& rule,
                         const std::string& via) {
    if (seg_.initial.empty()) snapshot_initial();
    meet_into(table, degree, target, rule.c_str(), via);
}

bool ChaseSystem::meet_into(int table, int degree, Interval target, const char* rule,
                            const std::string& via) {
    DimTable& t = tables_.at(static_cast<size_t>(table));
    if (degree < 0 || degree > t.dim) {
        // Out-of-range degrees are structurally zero.
        if (target.lo > 0)
            throw ChaseError("chase: rule " + std::string(rule) + " forces nonzero h^" +
                                 std::to_string(degree) + "(" + names_[static_cast<size_t>(table)] +
                                 ") outside [0, dim]",
                             trace_text());
        return false;
    }
    Interval& cell = t.ref(degree);
    auto met = cell.meet(target);
    if (!met)
        throw ChaseError("chase: inconsistent exact data at h^" + std::to_string(degree) + "(" +
                             names_[static_cast<size_t>(table)] + "): " + cell.to_string() +
                             " vs " + target.to_string() + " from " + rule,
                         trace_text());
    if (*met == cell) return false;
    assert(cell.refines(*met));
    seg_.steps.push_back(TraceStep{rule, names_[static_cast<size_t>(table)], degree, cell, *met, via});
    cell = *met;
    return true;
}

void ChaseSystem::chi_rule(const Ses& s, bool* changed) {
    // chi(B) = chi(A) + chi(C): verified when everything is exact, and used
    // to solve for a single remaining non-exact entry.
    const std::array<int, 3> tabs = {s.a, s.b, s.c};
    i64 known = 0;
    int open_tab = -1, open_deg = -1, open_coeff = 0;
    int open_count = 0;
    for (int which = 0; which < 3; ++which) {
        const DimTable& t = tables_[static_cast<size_t>(tabs[static_cast<size_t>(which)])];
        const int sign_tab = (which == 1) ? 1 : -1;
        for (int i = 0; i <= t.dim; ++i) {
            const Interval iv = t.at(i);
            const int coeff = sign_tab * ((i % 2 == 0) ? 1 : -1);
            if (iv.exact()) {
                known += coeff * iv.lo;
            } else {
                ++open_count;
                open_tab = tabs[static_cast<size_t>(which)];
                open_deg = i;
                open_coeff = coeff;
            }
        }
    }
    if (open_count == 0) {
        if (known != 0)
            throw ChaseError("chase: Euler characteristic mismatch along " + s.name,
                             trace_text());
        return;
    }
    if (open_count == 1) {
        // known + coeff * x = 0
        const i64 x = -known / open_coeff;
        if (-known % open_coeff != 0 || x < 0)
            throw ChaseError("chase: Euler characteristic solve failed along " + s.name,
                             trace_text());
        if (meet_into(open_tab, open_deg, Interval::exactly(x), "R8", s.name)) *changed = true;
    }
}

bool ChaseSystem::apply_rule(int rule, const Ses& s) {
    const DimTable& A = tables_[static_cast<size_t>(s.a)];
    const DimTable& B = tables_[static_cast<size_t>(s.b)];
    const DimTable& C = tables_[static_cast<size_t>(s.c)];
    const int maxdim = std::max({A.dim, B.dim, C.dim});
    bool changed = false;
    switch (rule) {
        case 0: // R1: hi(B,i) <= hi(A,i) + hi(C,i)
            for (int i = 0; i <= maxdim; ++i)
                if (meet_into(s.b, i, Interval{0, sat_add(A.at(i).hi, C.at(i).hi)}, "R1", s.name))
                    changed = true;
            break;
        case 1: // R2: A and C vanish at i => B vanishes at i
            for (int i = 0; i <= maxdim; ++i)
                if (A.at(i).hi == 0 && C.at(i).hi == 0)
                    if (meet_into(s.b, i, Interval::zero(), "R2", s.name)) changed = true;
            break;
        case 2: // R3: C vanishes at i-1 and i => B(i) = A(i)
            for (int i = 0; i <= maxdim; ++i)
                if (C.at(i - 1).hi == 0 && C.at(i).hi == 0)
                    if (meet_into(s.b, i, A.at(i), "R3", s.name)) changed = true;
            break;
        case 3: // R4: A vanishes at i and i+1 => B(i) = C(i)
            for (int i = 0; i <= maxdim; ++i)
                if (A.at(i).hi == 0 && A.at(i + 1).hi == 0)
                    if (meet_into(s.b, i, C.at(i), "R4", s.name)) changed = true;
            break;
        case 4: // R5: hi(C,i) <= hi(B,i) + hi(A,i+1)
            for (int i = 0; i <= maxdim; ++i)
                if (meet_into(s.c, i, Interval{0, sat_add(B.at(i).hi, A.at(i + 1).hi)}, "R5", s.name))
                    changed = true;
            break;
        case 5: // R6: hi(A,i) <= hi(B,i) + hi(C,i-1)
            for (int i = 0; i <= maxdim; ++i)
                if (meet_into(s.a, i, Interval{0, sat_add(B.at(i).hi, C.at(i - 1).hi)}, "R6", s.name))
                    changed = true;
            break;
        case 6: { // R7: lower bounds on B by reversing R5/R6
            for (int i = 0; i <= maxdim; ++i) {
                i64 lo = 0;
                if (C.at(i - 1).hi != kUnbounded) lo = std::max(lo, A.at(i).lo - C.at(i - 1).hi);
                if (A.at(i + 1).hi != kUnbounded) lo = std::max(lo, C.at(i).lo - A.at(i + 1).hi);
                if (lo > 0)
                    if (meet_into(s.b, i, Interval{lo, kUnbounded}, "R7", s.name)) changed = true;
            }
            break;
        }
        case 7: // R8: Euler characteristic conservation
            chi_rule(s, &changed);
            break;
        case 8: // R3': C vanishes at i-1 and i => A(i) = B(i)
            for (int i = 0; i <= maxdim; ++i)
                if (C.at(i - 1).hi == 0 && C.at(i).hi == 0)
                    if (meet_into(s.a, i, B.at(i), "R3'", s.name)) changed = true;
            break;
        case 9: // R4': A vanishes at i and i+1 => C(i) = B(i)
            for (int i = 0; i <= maxdim; ++i)
                if (A.at(i).hi == 0 && A.at(i + 1).hi == 0)
                    if (meet_into(s.c, i, B.at(i), "R4'", s.name)) changed = true;
            break;
        default:
            throw Error("chase: unknown rule id");
    }
    return changed;
}

namespace {
std::vector<int>& default_rule_order() {
    static std::vector<int> order;
    return order;
}
} // namespace

void set_default_rule_order(std::vector<int> order) {
    default_rule_order() = std::move(order);
}

void ChaseSystem::run(const std::vector<int>& rule_order, int max_sweeps) {
    std::vector<int> order = rule_order;
    if (order.empty()) order = default_rule_order();
    if (order.empty()) {
        order.resize(10);
        for (int i = 0; i < 10; ++i) order[static_cast<size_t>(i)] = i;
    }
    if (seg_.initial.empty()) snapshot_initial();
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool changed = false;
        for (const Ses& s : seqs_)
            for (int r : order)
                if (apply_rule(r, s)) changed = true;
        if (!changed) return;
    }
    throw ChaseError("chase: no fixed point within sweep cap", trace_text());
}

std::pair<DimTable, ChaseTrace> chase_short(const DimTable& A, const DimTable& B, const DimTable& C,
                                            int unknown, const std::string& seq_name,
                                            const std::array<std::string, 3>& names) {
    if (unknown < 0 || unknown > 2) throw Error("chase_short: unknown must designate A, B or C");
    ChaseSystem sys;
    const int ia = sys.add_table(names[0], A);
    const int ib = sys.add_table(names[1], B);
    const int ic = sys.add_table(names[2], C);
    sys.add_ses(ia, ib, ic, seq_name);
    sys.run();
    const DimTable out = sys.table(unknown);
    return {out, sys.take_trace()};
}

std::pair<DimTable, ChaseTrace> chase_resolution(const std::vector<DimTable>& terms, int result_dim,
                                                 const std::string& seq_name) {
    if (terms.empty()) throw Error("chase_resolution: need at least one term");
    const int r = static_cast<int>(terms.size());
    if (r == 1) {
        // 0 -> F_1 -> G -> 0 is an isomorphism.
        ChaseTrace tr;
        tr.add_note_table(seq_name + ":F1 (isomorphic to G)", terms[0]);
        return {terms[0], tr};
    }
    int maxdim = result_dim;
    for (const auto& t : terms) maxdim = std::max(maxdim, t.dim);

    ChaseSystem sys;
    const int g = sys.add_table(seq_name + ":G", DimTable(result_dim));
    std::vector<int> f(static_cast<size_t>(r));
    for (int k = 0; k < r; ++k)
        f[static_cast<size_t>(k)] =
            sys.add_table(seq_name + ":F" + std::to_string(k + 1), terms[static_cast<size_t>(k)]);
    // Kernels Z_1..Z_{r-1}; Z_{r-1} coincides with F_r.
    std::vector<int> z(static_cast<size_t>(r));
    z[0] = g;
    for (int j = 1; j + 1 <= r - 1; ++j)
        z[static_cast<size_t>(j)] = sys.add_table(seq_name + ":Z" + std::to_string(j), DimTable(maxdim));
    z[static_cast<size_t>(r - 1)] = f[static_cast<size_t>(r - 1)];
    for (int j = 1; j <= r - 1; ++j)
        sys.add_ses(z[static_cast<size_t>(j)], f[static_cast<size_t>(j - 1)], z[static_cast<size_t>(j - 1)],
                    seq_name + "#" + std::to_string(j));
    sys.run();
    const DimTable out = sys.table(g);
    return {out, sys.take_trace()};
}

std::pair<DimTable, ChaseTrace> restricted_cohom(const BundleExpr& F, const BundleExpr& E) {
    if (!(F.gr == E.gr)) throw Error("restricted_cohom: mixed ambient spaces");
    const int amb_dim = F.gr.dim();
    const i64 rank_e = E.rank();
    if (rank_e >= amb_dim) throw Error("restricted_cohom: rank E must be < dim(ambient)");
    const int r = static_cast<int>(rank_e);
    const std::string yname = "Z(" + expr_to_string(E) + ")";

    if (r == 0) {
        ChaseTrace tr;
        tr.add_note_table(expr_to_string(F) + " [BBW]", cohom_table(F));
        return {cohom_table(F), tr};
    }

    const BundleExpr edual = dual(E);
    const int dim_y = amb_dim - r;

    // Koszul terms F_k = wedge^k E^dual (x) F, k = 1..r, resolving F (x) I_Y.
    std::vector<DimTable> terms;
    terms.reserve(static_cast<size_t>(r));
    for (int k = 1; k <= r; ++k)
        terms.push_back(cohom_table(tensor(exterior_power(edual, k), F)));
    auto [ideal_tbl, tr] = chase_resolution(terms, amb_dim, "koszul:" + expr_to_string(F) + "|" + yname);

    ChaseSystem sys;
    const int ia = sys.add_table("(" + expr_to_string(F) + ")⊗I_Y", ideal_tbl);
    const int ib = sys.add_table(expr_to_string(F), cohom_table(F));
    const int ic = sys.add_table("(" + expr_to_string(F) + ")|_Y", DimTable(dim_y));
    sys.add_ses(ia, ib, ic, "restrict:" + expr_to_string(F) + "|" + yname);
    sys.run();
    DimTable out = sys.table(ic);
    ChaseTrace tr2 = sys.take_trace();
    tr.append(tr2);
    return {out, tr};
}

} // namespace fano
