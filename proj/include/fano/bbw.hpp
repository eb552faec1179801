#pragma once

#include <string>

#include "fano/weights.hpp"

namespace fano {

// Grassmannian Gr(k, n) of k-dimensional subspaces of an n-dimensional space,
// with tautological sequence 0 -> U -> O^n -> Q -> 0, O(1) = det U* and
// T = U* (x) Q. The canonical bundle is O(-n).
struct GrSpec {
    int k = 1;
    int n = 2;

    int dim() const { return k * (n - k); }
    int qrank() const { return n - k; }
    int canonical_twist() const { return -n; }
    bool projective_space() const { return k == 1 || n - k == 1; }

    bool operator==(const GrSpec& o) const { return k == o.k && n == o.n; }
    bool operator<(const GrSpec& o) const { return std::tie(k, n) < std::tie(o.k, o.n); }

    std::string name() const;
    void validate() const;
};

// Irreducible homogeneous bundle Sigma^a U* (x) Sigma^b Q on Gr(k, n).
// Twists O(t) = (det U*)^t are folded into `a` by adding t to every entry.
// Canonical form: the determinant relation det U (x) det Q = O lets a unit of
// b be traded for a twist of a; we normalize b so its last entry is zero.
struct IrredBundle {
    GrSpec gr;
    Weight a; // length k, nonincreasing
    Weight b; // length n-k, nonincreasing, b.back() == 0 in canonical form

    void canonicalize();
    void validate() const;

    IrredBundle twisted(int t) const;
    IrredBundle dualized() const;
    i64 rank() const;

    // c1 in O(1) units as an exact fraction (numerator, denominator).
    std::pair<i64, i64> first_chern_frac() const;

    // Weight of the bundle as a GL(n) highest weight: (b, -a_k, ..., -a_1).
    Weight gl_weight() const;

    bool operator==(const IrredBundle& o) const { return gr == o.gr && a == o.a && b == o.b; }
    bool operator<(const IrredBundle& o) const {
        return std::tie(gr, a, b) < std::tie(o.gr, o.a, o.b);
    }
};

IrredBundle make_line(GrSpec gr, int t);               // O(t)
IrredBundle make_schur_ustar(GrSpec gr, Weight a);     // Sigma^a U*
IrredBundle make_schur_q(GrSpec gr, Weight b);         // Sigma^b Q
IrredBundle make_tangent(GrSpec gr, int t = 0);        // T(t) = U* (x) Q (t)
IrredBundle make_cotangent(GrSpec gr, int t = 0);      // Omega(t) = U (x) Q* (t)

// Cohomology of an irreducible homogeneous bundle: either everything
// vanishes, or exactly one degree is nonzero.
struct CohomResult {
    bool all_zero = true;
    int degree = 0;
    i64 dim = 0;

    bool operator==(const CohomResult& o) const {
        if (all_zero != o.all_zero) return false;
        return all_zero || (degree == o.degree && dim == o.dim);
    }
    std::string to_string() const;
};

// Bott regularization of the bundle's GL(n) weight; memoized and thread-safe.
CohomResult cohomology_irred(const IrredBundle& e);

// Exact Euler characteristic via the signed Weyl product on the same weight.
i64 euler_char_irred(const IrredBundle& e);

// H^*(Omega^p(t)). On a projective space (k = 1 or n-k = 1) all p are
// supported; on a Grassmannian with both blocks of rank > 1 only p <= 1.
CohomResult cohomology_omega_twist(GrSpec gr, int p, int t);

// h^i as a function: 0 except at the concentrated degree.
i64 h_irred(const IrredBundle& e, int degree);

} // namespace fano
