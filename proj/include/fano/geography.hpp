#pragma once

#include "fano/families.hpp"

namespace fano {

// Invariants of the canonical surface sections: chi by the closed formula
// for the family's index class, chi by the section-count route 1 + N_l,
// K^2 = 2 H^3 l^3, p_g = N_l and q = 0. The two chi routes are both kept;
// a mismatch is flagged, never suppressed.
struct SurfaceInvariants {
    std::string family;
    int l = 0;
    i64 chi_formula = 0;
    i64 chi_rr = 0;
    i64 k2 = 0;
    i64 p_g = 0;
    i64 q = 0;
    bool chi_mismatch = false;
};

SurfaceInvariants surface_invariants(const FanoFamily& f, int l);

struct GeographyCheck {
    bool noether = false; // K^2 >= 2 p_g - 4
    bool bmy = false;     // K^2 <= 9 chi (chi_rr route)
};

GeographyCheck geography_check(const SurfaceInvariants& inv);

// One row/point per (family, l):
//   csv: family,l,chi_formula,chi_rr,K2,pg,q,noether,bmy,flag
//   svg-points: scaled (chi, K^2) points, viewBox documented in the output
std::string emit_geography_csv(const FamilyDatabase& db,
                               const std::vector<std::string>& family_filter, int l_lo, int l_hi);
std::string emit_geography_svg(const FamilyDatabase& db,
                               const std::vector<std::string>& family_filter, int l_lo, int l_hi);

} // namespace fano
