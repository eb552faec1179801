#pragma once

#include "fano/chase.hpp"
#include "fano/families.hpp"

namespace fano {

struct TangentResult {
    DimTable table; // h^i(T_Y(-mH)), degrees 0..3
    ChaseTrace trace;
};

// Interval table for T_Y(-mH), chased through the ambient model of the
// family: the normal-bundle sequence on Grassmannian zero loci and complete
// intersections (with a Serre-dual conormal pass for h^2), the Euler
// sequence plus imported vanishings on the weighted hypersurface, and the
// pushforward splitting on the double covers.
TangentResult tangent_twist_cohomology(const FanoFamily& f, int m);

// Table of F|_Y for an ambient bundle F on the family's homogeneous model.
// Line-bundle atoms are taken from the closed form for O_Y(s); other atoms
// go through the Koszul chase.
std::pair<DimTable, ChaseTrace> restricted_to_y(const FanoFamily& f, const BundleExpr& F);

} // namespace fano
