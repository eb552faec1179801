#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fano/bundle.hpp"
#include "fano/interval.hpp"

namespace fano {

enum class AmbientKind { Homogeneous, ProjectiveSpace, WeightedProjective, DoubleCoverP3 };
enum class DefiningKind { ZeroLocus, CompleteIntersection, WholeSpace, WeightedHypersurface };

struct AmbientSpace {
    AmbientKind kind = AmbientKind::ProjectiveSpace;
    GrSpec gr;                 // Homogeneous (also used for P^N as Gr(1, N+1))
    std::vector<int> weights;  // WeightedProjective
    int branch_degree = 0;     // DoubleCoverP3

    std::string to_string() const;
};

struct DefiningData {
    DefiningKind kind = DefiningKind::WholeSpace;
    BundleExpr zero_locus;          // ZeroLocus
    std::vector<int> multidegrees;  // CompleteIntersection
    int hypersurface_degree = 0;    // WeightedHypersurface
};

// A vanishing statement imported from outside the engine, used by chases and
// marked in traces wherever it enters.
struct AssumptionLemma {
    std::string name;
    std::string statement;
};

struct FanoFamily {
    std::string id;          // "1.1" .. "1.17"
    int index_i = 1;         // K_Y = -i H
    int j_va = 1;            // very-ampleness threshold
    i64 degree_h3 = 1;       // H^3
    AmbientSpace ambient;
    DefiningData defining;
    std::vector<AssumptionLemma> assumptions;

    std::optional<int> table1_extendable;   // k, or -1 for "infinitely many times"
    std::vector<std::pair<int, i64>> ref_bounds; // (l, reference alpha bound)
    int ref_zero_from = 0;                  // reference: alpha = 0 for l >= this
    int klm_bound = 0;
    std::vector<std::pair<int, i64>> printed_h0; // reference inputs h^0(mH) under audit

    std::optional<i64> ref_bound_at(int l) const;
    const AssumptionLemma* assumption(const std::string& name) const;

    // Bundle on the homogeneous ambient cutting out Y, when one exists.
    std::optional<BundleExpr> cutting_bundle() const;
};

struct FamilyDatabase {
    std::vector<FanoFamily> families;

    static FamilyDatabase parse(const std::string& text);
    static FamilyDatabase load_file(const std::string& path);
    // FANO_DB_PATH override, else the embedded copy of data/fano_families.txt.
    static FamilyDatabase load_default();
    static const std::string& embedded_text();

    const FanoFamily& get(const std::string& id) const;
    void validate() const;
};

// Closed-form Riemann-Roch section count h^0(mH) on a Fano threefold of
// index i and degree H^3 (Kodaira vanishing makes h^0 = chi for m >= 0):
//   chi(mH) = m^3 H^3 / 6 + i m^2 H^3 / 4 + m (i^2 H^3 + 24/i) / 12 + 1.
i64 h0_RR(const FanoFamily& f, i64 m);

// Independent oracle: h^0(mH) through the Koszul resolution on the ambient
// space. Requires a homogeneous or projective ambient; throws if the chase
// cannot certify an exact value.
i64 h0_koszul(const FanoFamily& f, i64 m);

// Monomials of weighted degree d in variables of the given weights.
i64 h0_weighted(const std::vector<int>& weights, i64 d);

// Double cover pushforward: the two base twists of pi_* O_X (x) O(m).
std::pair<int, int> double_cover_pushforward(const FanoFamily& f, int m);

// h^0 of the branch-restricted normal sheaf of the covering map, twisted by
// pi^* O(twist): h^0(O_{P^3}(branch + twist)|_B).
i64 double_cover_npi_h0(const FanoFamily& f, int twist);

// Exact table of h^i(O_{P^3}(b)|_B) for the branch divisor B.
DimTable double_cover_npi_table(const FanoFamily& f, int twist);

// Full exact table of h^i(O_Y(sH)), assembled from Riemann-Roch, Kodaira
// vanishing and Serre duality; valid for every integer s.
DimTable oy_line_cohomology(const FanoFamily& f, int s);

// Embedding data: N_l + 1 = h^0(lH) + h^0((l - i)H). Throws when l < j_va.
i64 N_l(const FanoFamily& f, int l);

// Hilbert polynomial p(z) = h^0(lzH) + h^0((lz-i)H) as an exact cubic with
// common denominator 12.
struct HilbertPoly {
    i64 c3 = 0, c2 = 0, c1 = 0, c0 = 0; // p(z) = (c3 z^3 + c2 z^2 + c1 z + c0) / 12
    i64 eval(i64 z) const;
    std::string to_string() const;
};
HilbertPoly hilbert_polynomial(const FanoFamily& f, int l);

} // namespace fano
