#include "fano/bundle.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "fano/serialize.hpp"

namespace fano {

BundleExpr BundleExpr::single(IrredBundle e, i64 mult) {
    e.canonicalize();
    BundleExpr out{e.gr, {}};
    if (mult > 0) out.atoms[e] = mult;
    return out;
}

BundleExpr BundleExpr::ustar(GrSpec g, int t) {
    Weight a(static_cast<size_t>(g.k), t);
    a[0] += 1;
    return single(IrredBundle{g, a, Weight(static_cast<size_t>(g.qrank()), 0)});
}

BundleExpr BundleExpr::u(GrSpec g, int t) {
    Weight a(static_cast<size_t>(g.k), t);
    a.back() -= 1;
    return single(IrredBundle{g, a, Weight(static_cast<size_t>(g.qrank()), 0)});
}

BundleExpr BundleExpr::q(GrSpec g, int t) {
    Weight b(static_cast<size_t>(g.qrank()), 0);
    b[0] = 1;
    return single(IrredBundle{g, Weight(static_cast<size_t>(g.k), t), b});
}

BundleExpr BundleExpr::qstar(GrSpec g, int t) {
    Weight b(static_cast<size_t>(g.qrank()), 0);
    b.back() = -1;
    return single(IrredBundle{g, Weight(static_cast<size_t>(g.k), t), b});
}

void BundleExpr::add(IrredBundle e, i64 mult) {
    if (mult == 0) return;
    if (mult < 0) throw Error("BundleExpr: negative multiplicity");
    e.canonicalize();
    if (!(e.gr == gr)) throw Error("BundleExpr: mixed ambient spaces");
    atoms[e] += mult;
}

BundleExpr& BundleExpr::operator+=(const BundleExpr& o) {
    if (!(o.gr == gr)) throw Error("BundleExpr: mixed ambient spaces");
    for (const auto& [e, m] : o.atoms) atoms[e] += m;
    return *this;
}

BundleExpr operator+(BundleExpr a, const BundleExpr& b) {
    a += b;
    return a;
}

i64 BundleExpr::rank() const {
    i64 r = 0;
    for (const auto& [e, m] : atoms) r += m * e.rank();
    return r;
}

i64 BundleExpr::first_chern() const {
    i64 num = 0;
    const i64 den = static_cast<i64>(gr.k) * gr.qrank();
    for (const auto& [e, m] : atoms) {
        auto [n, d] = e.first_chern_frac();
        assert(d == den);
        num += m * n;
    }
    if (num % den != 0) throw Error("BundleExpr: non-integral first Chern class");
    return num / den;
}

BundleExpr tensor(const BundleExpr& e1, const BundleExpr& e2) {
    if (!(e1.gr == e2.gr)) throw Error("tensor: mixed ambient spaces");
    BundleExpr out = BundleExpr::zero(e1.gr);
    for (const auto& [x, mx] : e1.atoms) {
        for (const auto& [y, my] : e2.atoms) {
            const WeightMultiset au = lr_tensor(x.a, y.a);
            const WeightMultiset bq = lr_tensor(x.b, y.b);
            for (const auto& [wa, ca] : au)
                for (const auto& [wb, cb] : bq)
                    out.add(IrredBundle{e1.gr, wa, wb}, mx * my * ca * cb);
        }
    }
    return out;
}

BundleExpr dual(const BundleExpr& e) {
    BundleExpr out = BundleExpr::zero(e.gr);
    for (const auto& [x, m] : e.atoms) out.add(x.dualized(), m);
    return out;
}

BundleExpr twist(const BundleExpr& e, int t) {
    BundleExpr out = BundleExpr::zero(e.gr);
    for (const auto& [x, m] : e.atoms) out.add(x.twisted(t), m);
    return out;
}

namespace {

enum class AtomShape { Line, UStar, U, Q, QStar, Other };

// Recognize a canonicalized atom as a twist of O, U, U*, Q or Q*.
AtomShape classify(const IrredBundle& e, int* tw) {
    const int k = e.gr.k, r = e.gr.qrank();
    const bool b_zero = std::all_of(e.b.begin(), e.b.end(), [](int x) { return x == 0; });
    const bool a_const = std::all_of(e.a.begin(), e.a.end(), [&](int x) { return x == e.a.back(); });
    if (b_zero && a_const) {
        *tw = e.a.back();
        return AtomShape::Line;
    }
    if (b_zero) {
        Weight d = e.a;
        const int base = d.back();
        for (auto& x : d) x -= base;
        if (k >= 2 && d.front() == 1 && std::count(d.begin(), d.end(), 1) == 1) {
            *tw = base; // Sigma^{(1,0,...)} U* (t)
            return AtomShape::UStar;
        }
        if (k >= 2 && d.front() == 1 && std::count(d.begin(), d.end(), 1) == k - 1) {
            *tw = base + 1; // Sigma^{(1,...,1,0)} U* = U(1), so atom = U(base+1)
            return AtomShape::U;
        }
    }
    if (a_const) {
        // b canonical: b.back() == 0
        if (r >= 2 && e.b.front() == 1 && std::count(e.b.begin(), e.b.end(), 1) == 1) {
            *tw = e.a.back();
            return AtomShape::Q;
        }
        if (r >= 2 && e.b.front() == 1 && std::count(e.b.begin(), e.b.end(), 1) == r - 1) {
            *tw = e.a.back() + 1; // Sigma^{(1,...,1,0)} Q = Q*(1)
            return AtomShape::QStar;
        }
        if (r == 1 && e.b.front() == 0) {
            // handled by Line above; unreachable
        }
    }
    return AtomShape::Other;
}

// wedge^m of a single supported atom.
BundleExpr wedge_atom(const IrredBundle& e, int m) {
    const GrSpec g = e.gr;
    if (m == 0) return BundleExpr::structure_sheaf(g);
    int t = 0;
    const AtomShape s = classify(e, &t);
    const int k = g.k, r = g.qrank();
    switch (s) {
        case AtomShape::Line:
            return m == 1 ? BundleExpr::single(e) : BundleExpr::zero(g);
        case AtomShape::UStar: {
            if (m > k) return BundleExpr::zero(g);
            Weight a(static_cast<size_t>(k), m * t);
            for (int i = 0; i < m; ++i) a[static_cast<size_t>(i)] += 1;
            return BundleExpr::single(IrredBundle{g, a, Weight(static_cast<size_t>(r), 0)});
        }
        case AtomShape::U: {
            if (m > k) return BundleExpr::zero(g);
            Weight a(static_cast<size_t>(k), m * t);
            for (int i = 0; i < m; ++i) a[static_cast<size_t>(k - 1 - i)] -= 1;
            return BundleExpr::single(IrredBundle{g, a, Weight(static_cast<size_t>(r), 0)});
        }
        case AtomShape::Q: {
            if (m > r) return BundleExpr::zero(g);
            Weight b(static_cast<size_t>(r), 0);
            for (int i = 0; i < m; ++i) b[static_cast<size_t>(i)] = 1;
            return BundleExpr::single(IrredBundle{g, Weight(static_cast<size_t>(k), m * t), b});
        }
        case AtomShape::QStar: {
            if (m > r) return BundleExpr::zero(g);
            Weight b(static_cast<size_t>(r), 0);
            for (int i = 0; i < m; ++i) b[static_cast<size_t>(r - 1 - i)] = -1;
            return BundleExpr::single(IrredBundle{g, Weight(static_cast<size_t>(k), m * t), b});
        }
        case AtomShape::Other:
            throw Error("exterior_power: unsupported atom " + atom_to_string(e));
    }
    return BundleExpr::zero(g);
}

} // namespace

BundleExpr exterior_power(const BundleExpr& e, int m) {
    if (m < 0) throw Error("exterior_power: negative exponent");
    if (m == 0) return BundleExpr::structure_sheaf(e.gr);

    // Flatten the multiset into a list of single atoms.
    std::vector<IrredBundle> list;
    for (const auto& [x, mult] : e.atoms)
        for (i64 i = 0; i < mult; ++i) list.push_back(x);
    if (static_cast<i64>(m) > static_cast<i64>(list.size()) * e.gr.n)
        return BundleExpr::zero(e.gr);

    // wedge^m over the list, splitting off one atom at a time.
    std::vector<BundleExpr> acc(static_cast<size_t>(m) + 1, BundleExpr::zero(e.gr));
    acc[0] = BundleExpr::structure_sheaf(e.gr);
    for (const auto& atom : list) {
        std::vector<BundleExpr> next(static_cast<size_t>(m) + 1, BundleExpr::zero(e.gr));
        for (int j = 0; j <= m; ++j) {
            if (acc[static_cast<size_t>(j)].is_zero()) continue;
            for (int p = 0; p + j <= m; ++p) {
                const BundleExpr wp = wedge_atom(atom, p);
                if (wp.is_zero()) break;
                next[static_cast<size_t>(j + p)] += tensor(acc[static_cast<size_t>(j)], wp);
            }
        }
        acc = std::move(next);
    }
    return acc[static_cast<size_t>(m)];
}

BundleExpr determinant(const BundleExpr& e) {
    const i64 r = e.rank();
    if (r > 1 << 20) throw Error("determinant: rank too large");
    return exterior_power(e, static_cast<int>(r));
}

DimTable cohom_table(const BundleExpr& e) {
    DimTable t = DimTable::zeros(e.gr.dim());
    for (const auto& [x, m] : e.atoms) {
        const CohomResult c = cohomology_irred(x);
        if (!c.all_zero) {
            Interval& cell = t.ref(c.degree);
            cell = Interval::exactly(cell.lo + m * c.dim);
        }
    }
    return t;
}

i64 euler_char(const BundleExpr& e) {
    i64 chi = 0;
    for (const auto& [x, m] : e.atoms) chi += m * euler_char_irred(x);
    return chi;
}

} // namespace fano
