#include "fano/bbw.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <tuple>

namespace fano {

std::string GrSpec::name() const {
    if (k == 1) return "P^" + std::to_string(n - 1);
    if (n - k == 1) return "Gr(" + std::to_string(k) + "," + std::to_string(n) + ")";
    return "Gr(" + std::to_string(k) + "," + std::to_string(n) + ")";
}

void GrSpec::validate() const {
    if (!(1 <= k && k < n)) throw Error("GrSpec: need 1 <= k < n");
}

void IrredBundle::canonicalize() {
    validate();
    if (b.empty()) return;
    const int c = b.back();
    if (c != 0) {
        for (auto& x : b) x -= c;
        for (auto& x : a) x += c;
    }
}

void IrredBundle::validate() const {
    gr.validate();
    if (static_cast<int>(a.size()) != gr.k || static_cast<int>(b.size()) != gr.qrank())
        throw Error("IrredBundle: weight block lengths must be (k, n-k)");
    if (!is_nonincreasing(a) || !is_nonincreasing(b))
        throw Error("IrredBundle: weight blocks must be nonincreasing");
}

IrredBundle IrredBundle::twisted(int t) const {
    IrredBundle e = *this;
    for (auto& x : e.a) x += t;
    return e;
}

IrredBundle IrredBundle::dualized() const {
    IrredBundle e = *this;
    std::reverse(e.a.begin(), e.a.end());
    for (auto& x : e.a) x = -x;
    std::reverse(e.b.begin(), e.b.end());
    for (auto& x : e.b) x = -x;
    e.canonicalize();
    return e;
}

i64 IrredBundle::rank() const {
    return weyl_dim(a) * weyl_dim(b);
}

std::pair<i64, i64> IrredBundle::first_chern_frac() const {
    i64 sa = 0, sb = 0;
    for (int x : a) sa += x;
    for (int x : b) sb += x;
    // c1(Sigma^a V) = rank(Sigma^a V) * |a| / rank(V), and c1(U*) = c1(Q) = O(1).
    const i64 r = rank();
    const i64 num = r * (sa * gr.qrank() + sb * gr.k);
    const i64 den = static_cast<i64>(gr.k) * gr.qrank();
    return {num, den};
}

Weight IrredBundle::gl_weight() const {
    Weight w;
    w.reserve(static_cast<size_t>(gr.n));
    for (int x : b) w.push_back(x);
    for (auto it = a.rbegin(); it != a.rend(); ++it) w.push_back(-*it);
    return w;
}

IrredBundle make_line(GrSpec gr, int t) {
    IrredBundle e{gr, Weight(static_cast<size_t>(gr.k), t), Weight(static_cast<size_t>(gr.qrank()), 0)};
    e.canonicalize();
    return e;
}

IrredBundle make_schur_ustar(GrSpec gr, Weight a) {
    IrredBundle e{gr, std::move(a), Weight(static_cast<size_t>(gr.qrank()), 0)};
    e.canonicalize();
    return e;
}

IrredBundle make_schur_q(GrSpec gr, Weight b) {
    IrredBundle e{gr, Weight(static_cast<size_t>(gr.k), 0), std::move(b)};
    e.canonicalize();
    return e;
}

IrredBundle make_tangent(GrSpec gr, int t) {
    Weight a(static_cast<size_t>(gr.k), t);
    a[0] += 1;
    Weight b(static_cast<size_t>(gr.qrank()), 0);
    b[0] = 1;
    IrredBundle e{gr, std::move(a), std::move(b)};
    e.canonicalize();
    return e;
}

IrredBundle make_cotangent(GrSpec gr, int t) {
    Weight a(static_cast<size_t>(gr.k), t);
    a.back() -= 1;
    Weight b(static_cast<size_t>(gr.qrank()), 0);
    b.back() = -1;
    IrredBundle e{gr, std::move(a), std::move(b)};
    e.canonicalize();
    return e;
}

std::string CohomResult::to_string() const {
    if (all_zero) return "0";
    return "h^" + std::to_string(degree) + " = " + std::to_string(dim);
}

namespace {

struct CohomCache {
    std::mutex mu;
    std::map<std::pair<GrSpec, Weight>, CohomResult> memo;
};

CohomCache& cache() {
    static CohomCache c;
    return c;
}

} // namespace

CohomResult cohomology_irred(const IrredBundle& e) {
    e.validate();
    const Weight w = e.gl_weight();
    {
        std::lock_guard<std::mutex> lock(cache().mu);
        auto it = cache().memo.find({e.gr, w});
        if (it != cache().memo.end()) return it->second;
    }
    const BottRegularity reg = bott_regularize(w);
    CohomResult r;
    if (!reg.singular) {
        r.all_zero = false;
        r.degree = reg.length;
        r.dim = weyl_dim(reg.dominant);
        assert(0 <= r.degree && r.degree <= e.gr.dim());
        assert(r.dim >= 1);
    }
    std::lock_guard<std::mutex> lock(cache().mu);
    cache().memo.emplace(std::make_pair(e.gr, w), r);
    return r;
}

i64 euler_char_irred(const IrredBundle& e) {
    return weyl_chi(e.gl_weight());
}

i64 h_irred(const IrredBundle& e, int degree) {
    const CohomResult r = cohomology_irred(e);
    if (r.all_zero || r.degree != degree) return 0;
    return r.dim;
}

CohomResult cohomology_omega_twist(GrSpec gr, int p, int t) {
    gr.validate();
    if (p < 0 || p > gr.dim()) throw Error("cohomology_omega_twist: form degree out of range");
    if (p == 0) return cohomology_irred(make_line(gr, t));
    if (p == 1) return cohomology_irred(make_cotangent(gr, t));
    if (gr.k > 1 && gr.qrank() > 1)
        throw Error("cohomology_omega_twist: Omega^p with p >= 2 unsupported on " + gr.name());

    // Projective space P^{n-1}: Omega^p = wedge^p U (x) wedge^p Q* resp. its mirror.
    IrredBundle e{gr, Weight(static_cast<size_t>(gr.k), 0), Weight(static_cast<size_t>(gr.qrank()), 0)};
    if (gr.k == 1) {
        // U is a line: wedge^p(U (x) Q*) = U^p (x) wedge^p Q*.
        e.a[0] = t - p;
        for (int i = 0; i < p; ++i) e.b[static_cast<size_t>(gr.qrank() - 1 - i)] = -1;
    } else {
        // Q is a line: wedge^p(U (x) Q*) = wedge^p U (x) (Q*)^p.
        for (int i = 0; i < p; ++i) e.a[static_cast<size_t>(gr.k - 1 - i)] = -1;
        for (auto& x : e.a) x += t;
        e.b[0] = -p;
    }
    e.canonicalize();
    return cohomology_irred(e);
}

} // namespace fano
