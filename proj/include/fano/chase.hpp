#pragma once

#include <array>
#include <string>
#include <vector>

#include "fano/bundle.hpp"
#include "fano/interval.hpp"

namespace fano {

struct TraceStep {
    std::string rule;   // R1..R8, mirrored forms R3'/R4', or a named fact (KOD, SERRE, RR, ASSUME:*)
    std::string table;
    int degree = 0;
    Interval before;
    Interval after;
    std::string via;    // sequence or fact the step came from

    std::string to_string() const;
};

// A trace is a sequence of segments, one per chase system run (plus
// informational segments for closed-form tables). Each segment records the
// initial tables and the narrowing steps applied to them; table names are
// scoped to their segment.
struct ChaseTrace {
    struct Segment {
        std::vector<std::pair<std::string, DimTable>> initial;
        std::vector<TraceStep> steps;
    };
    std::vector<Segment> segments;

    std::string to_text() const;
    void append(const ChaseTrace& o);
    void add_note_table(const std::string& name, const DimTable& t);
    size_t step_count() const;
};

// Replays the recorded steps against the recorded initial tables and checks
// that every step reproduces its recorded output exactly.
bool replay_trace(const ChaseTrace& trace);

// Process-wide rule order used when ChaseSystem::run is called without an
// explicit one. Empty restores the canonical order. The fixed point must not
// depend on this; the property suite exercises it.
void set_default_rule_order(std::vector<int> order);

// A system of tables linked by short exact sequences 0 -> A -> B -> C -> 0.
// Narrowing rules are applied to a fixed point; every step only shrinks
// intervals, so the fixed point is order independent.
class ChaseSystem {
public:
    int add_table(std::string name, DimTable t);
    void add_ses(int a, int b, int c, std::string name);

    // External sound refinement (named theorem or support bound).
    void refine(int table, int degree, Interval target, const std::string& rule, const std::string& via);

    // Applies the SES rules until stable. rule_order permutes {0..9}; pass
    // empty for the default order. Throws ChaseError on contradiction or if
    // the sweep cap is exceeded.
    void run(const std::vector<int>& rule_order = {}, int max_sweeps = 64);

    const DimTable& table(int idx) const { return tables_.at(static_cast<size_t>(idx)); }
    const std::string& name(int idx) const { return names_.at(static_cast<size_t>(idx)); }
    ChaseTrace take_trace();
    void snapshot_initial();

private:
    struct Ses {
        int a, b, c;
        std::string name;
    };

    bool apply_rule(int rule, const Ses& s);
    bool meet_into(int table, int degree, Interval target, const char* rule, const std::string& via);
    void chi_rule(const Ses& s, bool* changed);

    std::string trace_text() const;

    std::vector<std::string> names_;
    std::vector<DimTable> tables_;
    std::vector<Ses> seqs_;
    ChaseTrace::Segment seg_;
};

// Chase over a single short exact sequence. `unknown` selects A (0), B (1)
// or C (2); the refined unknown table is returned with the trace.
std::pair<DimTable, ChaseTrace> chase_short(const DimTable& A, const DimTable& B, const DimTable& C,
                                            int unknown, const std::string& seq_name,
                                            const std::array<std::string, 3>& names = {"A", "B", "C"});

// Chase over a resolution 0 -> F_r -> ... -> F_1 -> G -> 0. `terms` holds
// the tables of F_1, ..., F_r in that order; synthetic kernels start
// unbounded and are narrowed to a fixed point.
std::pair<DimTable, ChaseTrace> chase_resolution(const std::vector<DimTable>& terms, int result_dim,
                                                 const std::string& seq_name);

// Cohomology of F restricted to the zero locus Y = Z(E) of a regular section
// of E, via the Koszul resolution of the ideal sheaf and the restriction
// sequence 0 -> F (x) I_Y -> F -> F|_Y -> 0. The result table lives on Y
// (dimension dim(ambient) - rank E).
std::pair<DimTable, ChaseTrace> restricted_cohom(const BundleExpr& F, const BundleExpr& E);

} // namespace fano
