#pragma once

#include <map>

#include "fano/bbw.hpp"
#include "fano/interval.hpp"

namespace fano {

// Formal non-negative integer combination of irreducible homogeneous bundles
// on a fixed Grassmannian. Atoms are kept canonicalized and sorted, so
// equality of expressions is syntactic equality. The empty sum is the rank-0
// zero bundle.
struct BundleExpr {
    GrSpec gr;
    std::map<IrredBundle, i64> atoms;

    static BundleExpr zero(GrSpec g) { return BundleExpr{g, {}}; }
    static BundleExpr line(GrSpec g, int t) { return single(make_line(g, t)); }
    static BundleExpr structure_sheaf(GrSpec g) { return line(g, 0); }
    static BundleExpr ustar(GrSpec g, int t = 0);
    static BundleExpr u(GrSpec g, int t = 0);
    static BundleExpr q(GrSpec g, int t = 0);
    static BundleExpr qstar(GrSpec g, int t = 0);
    static BundleExpr tangent(GrSpec g, int t = 0) { return single(make_tangent(g, t)); }
    static BundleExpr cotangent(GrSpec g, int t = 0) { return single(make_cotangent(g, t)); }
    static BundleExpr single(IrredBundle e, i64 mult = 1);

    void add(IrredBundle e, i64 mult = 1);
    BundleExpr& operator+=(const BundleExpr& o);

    bool is_zero() const { return atoms.empty(); }
    i64 rank() const;

    // c1 in O(1) units; throws if not integral (cannot happen for honest bundles).
    i64 first_chern() const;

    bool operator==(const BundleExpr& o) const { return gr == o.gr && atoms == o.atoms; }
};

BundleExpr operator+(BundleExpr a, const BundleExpr& b);

// Tensor product, distributing over sums and applying Littlewood-Richardson
// independently on the U*-block and the Q-block of each atom pair.
BundleExpr tensor(const BundleExpr& e1, const BundleExpr& e2);

BundleExpr dual(const BundleExpr& e);

BundleExpr twist(const BundleExpr& e, int t);

// wedge^m via wedge^m(A + B) = sum wedge^i A (x) wedge^j B. Individual atoms
// must be line bundles or (possibly twisted) copies of U, U*, Q, Q*; anything
// else is a hard error naming the atom.
BundleExpr exterior_power(const BundleExpr& e, int m);

// Determinant line bundle, as wedge^rank.
BundleExpr determinant(const BundleExpr& e);

// Exact per-degree cohomology table (all intervals of width zero).
DimTable cohom_table(const BundleExpr& e);

// Exact Euler characteristic via signed Weyl products.
i64 euler_char(const BundleExpr& e);

} // namespace fano
