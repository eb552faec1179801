#include "fano/families.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <sstream>

#include "fano/chase.hpp"
#include "fano/serialize.hpp"

namespace fano {

std::string AmbientSpace::to_string() const {
    switch (kind) {
        case AmbientKind::Homogeneous:
            return gr.name();
        case AmbientKind::ProjectiveSpace:
            return "P^" + std::to_string(gr.n - 1);
        case AmbientKind::WeightedProjective: {
            std::string s = "P(";
            for (size_t i = 0; i < weights.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(weights[i]);
            }
            return s + ")";
        }
        case AmbientKind::DoubleCoverP3:
            return "double cover of P^3 branched in degree " + std::to_string(branch_degree);
    }
    return "?";
}

std::optional<i64> FanoFamily::ref_bound_at(int l) const {
    for (const auto& [ll, v] : ref_bounds)
        if (ll == l) return v;
    if (ref_zero_from > 0 && l >= ref_zero_from) return 0;
    return std::nullopt;
}

const AssumptionLemma* FanoFamily::assumption(const std::string& name) const {
    for (const auto& a : assumptions)
        if (a.name == name) return &a;
    return nullptr;
}

std::optional<BundleExpr> FanoFamily::cutting_bundle() const {
    if (ambient.kind == AmbientKind::Homogeneous || ambient.kind == AmbientKind::ProjectiveSpace) {
        switch (defining.kind) {
            case DefiningKind::ZeroLocus:
                return defining.zero_locus;
            case DefiningKind::CompleteIntersection: {
                BundleExpr e = BundleExpr::zero(ambient.gr);
                for (int d : defining.multidegrees) e += BundleExpr::line(ambient.gr, d);
                return e;
            }
            case DefiningKind::WholeSpace:
                return BundleExpr::zero(ambient.gr);
            default:
                break;
        }
    }
    return std::nullopt;
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

} // namespace

FamilyDatabase FamilyDatabase::parse(const std::string& text) {
    FamilyDatabase db;
    std::istringstream in(text);
    std::string line;
    FanoFamily cur;
    bool open = false;
    std::string pending_zero_locus;
    int lineno = 0;

    auto fail = [&](const std::string& msg) {
        throw Error("family database line " + std::to_string(lineno) + ": " + msg);
    };

    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        const std::string& key = toks[0];

        if (key == "family") {
            if (open) fail("nested family record");
            cur = FanoFamily{};
            cur.id = toks.at(1);
            pending_zero_locus.clear();
            open = true;
        } else if (!open) {
            fail("directive outside a family record: " + key);
        } else if (key == "index") {
            cur.index_i = std::stoi(toks.at(1));
        } else if (key == "jva") {
            cur.j_va = std::stoi(toks.at(1));
        } else if (key == "h3") {
            cur.degree_h3 = std::stoll(toks.at(1));
        } else if (key == "ambient") {
            const std::string& kind = toks.at(1);
            if (kind == "gr") {
                cur.ambient.kind = AmbientKind::Homogeneous;
                cur.ambient.gr = GrSpec{std::stoi(toks.at(2)), std::stoi(toks.at(3))};
            } else if (kind == "pn") {
                cur.ambient.kind = AmbientKind::ProjectiveSpace;
                cur.ambient.gr = GrSpec{1, std::stoi(toks.at(2)) + 1};
            } else if (kind == "weighted") {
                cur.ambient.kind = AmbientKind::WeightedProjective;
                cur.ambient.weights = parse_int_list(toks.at(2));
            } else if (kind == "doublecover") {
                cur.ambient.kind = AmbientKind::DoubleCoverP3;
                cur.ambient.branch_degree = std::stoi(toks.at(2));
            } else {
                fail("unknown ambient kind " + kind);
            }
        } else if (key == "defining") {
            const std::string& kind = toks.at(1);
            if (kind == "zero_locus") {
                cur.defining.kind = DefiningKind::ZeroLocus;
                const auto pos = line.find("zero_locus");
                pending_zero_locus = line.substr(pos + std::string("zero_locus").size());
            } else if (kind == "zero_locus_none") {
                cur.defining.kind = DefiningKind::ZeroLocus; // double covers carry no ambient bundle
            } else if (kind == "ci") {
                cur.defining.kind = DefiningKind::CompleteIntersection;
                cur.defining.multidegrees = parse_int_list(toks.at(2));
            } else if (kind == "whole_space") {
                cur.defining.kind = DefiningKind::WholeSpace;
            } else if (kind == "weighted_hypersurface") {
                cur.defining.kind = DefiningKind::WeightedHypersurface;
                cur.defining.hypersurface_degree = std::stoi(toks.at(2));
            } else {
                fail("unknown defining kind " + kind);
            }
        } else if (key == "assume") {
            const auto bar = line.find('|');
            if (bar == std::string::npos) fail("assume needs `name | statement`");
            auto name_toks = split_ws(line.substr(0, bar));
            std::string stmt = line.substr(bar + 1);
            while (!stmt.empty() && stmt.front() == ' ') stmt.erase(stmt.begin());
            cur.assumptions.push_back(AssumptionLemma{name_toks.at(1), stmt});
        } else if (key == "table1") {
            cur.table1_extendable = (toks.at(1) == "infinite") ? -1 : std::stoi(toks.at(1));
        } else if (key == "ref_bound") {
            cur.ref_bounds.emplace_back(std::stoi(toks.at(1)), std::stoll(toks.at(2)));
        } else if (key == "ref_zero_from") {
            cur.ref_zero_from = std::stoi(toks.at(1));
        } else if (key == "klm_bound") {
            cur.klm_bound = std::stoi(toks.at(1));
        } else if (key == "printed_h0") {
            cur.printed_h0.emplace_back(std::stoi(toks.at(1)), std::stoll(toks.at(2)));
        } else if (key == "end") {
            if (cur.defining.kind == DefiningKind::ZeroLocus && !pending_zero_locus.empty()) {
                if (cur.ambient.kind != AmbientKind::Homogeneous)
                    fail("zero_locus requires a Grassmannian ambient");
                cur.defining.zero_locus = parse_expr(cur.ambient.gr, pending_zero_locus);
            } else if (cur.defining.kind == DefiningKind::ZeroLocus) {
                cur.defining.zero_locus = BundleExpr::zero(cur.ambient.gr);
            }
            db.families.push_back(cur);
            open = false;
        } else {
            fail("unknown directive " + key);
        }
    }
    if (open) throw Error("family database: unterminated record");
    db.validate();
    return db;
}

FamilyDatabase FamilyDatabase::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open family database at " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

FamilyDatabase FamilyDatabase::load_default() {
    if (const char* env = std::getenv("FANO_DB_PATH"); env && *env) return load_file(env);
    return parse(embedded_text());
}

const FanoFamily& FamilyDatabase::get(const std::string& id) const {
    for (const auto& f : families)
        if (f.id == id) return f;
    throw Error("unknown family " + id);
}

void FamilyDatabase::validate() const {
    if (families.size() != 17) throw Error("family database must hold 17 records");
    for (const auto& f : families) {
        if (f.index_i < 1 || 24 % f.index_i != 0)
            throw Error("family " + f.id + ": 24 / index must be integral");
        if (f.j_va < f.index_i) throw Error("family " + f.id + ": j_va < index");
        if (f.degree_h3 < 1) throw Error("family " + f.id + ": H^3 must be positive");

        // Codimension bookkeeping: dim Y = 3.
        switch (f.ambient.kind) {
            case AmbientKind::Homogeneous: {
                const auto cut = f.cutting_bundle();
                if (!cut || f.ambient.gr.dim() - cut->rank() != 3)
                    throw Error("family " + f.id + ": zero locus is not threefold");
                // Adjunction: index = n - c1(E).
                if (f.ambient.gr.n - cut->first_chern() != f.index_i)
                    throw Error("family " + f.id + ": index disagrees with adjunction");
                break;
            }
            case AmbientKind::ProjectiveSpace: {
                const int n = f.ambient.gr.n; // = N + 1
                int codim = static_cast<int>(f.defining.multidegrees.size());
                if (f.defining.kind == DefiningKind::WholeSpace) codim = 0;
                if ((n - 1) - codim != 3)
                    throw Error("family " + f.id + ": complete intersection is not threefold");
                int c1 = 0;
                for (int d : f.defining.multidegrees) c1 += d;
                if (n - c1 != f.index_i)
                    throw Error("family " + f.id + ": index disagrees with adjunction");
                i64 deg = 1;
                for (int d : f.defining.multidegrees) deg *= d;
                if (deg != f.degree_h3)
                    throw Error("family " + f.id + ": degree disagrees with multidegrees");
                break;
            }
            case AmbientKind::WeightedProjective: {
                if (f.ambient.weights.size() != 5)
                    throw Error("family " + f.id + ": hypersurface ambient must have dim 4");
                int sum = 0;
                for (int w : f.ambient.weights) sum += w;
                if (sum - f.defining.hypersurface_degree != f.index_i)
                    throw Error("family " + f.id + ": index disagrees with adjunction");
                break;
            }
            case AmbientKind::DoubleCoverP3: {
                if (f.ambient.branch_degree % 2 != 0 ||
                    (f.ambient.branch_degree != 6 && f.ambient.branch_degree != 4))
                    throw Error("family " + f.id + ": branch degree must be 4 or 6");
                if (4 - f.ambient.branch_degree / 2 != f.index_i)
                    throw Error("family " + f.id + ": index disagrees with branch degree");
                break;
            }
        }
    }
    // h^0(H) strictly increasing in H^3 within a fixed index.
    for (const auto& f : families) {
        for (const auto& g : families) {
            if (f.index_i == g.index_i && f.degree_h3 < g.degree_h3 && h0_RR(f, 1) >= h0_RR(g, 1))
                throw Error("database: h^0(H) not increasing in H^3 between " + f.id + " and " + g.id);
        }
    }
}

i64 h0_RR(const FanoFamily& f, i64 m) {
    if (m < 0) return 0;
    if (m == 0) return 1;
    const i64 i = f.index_i, d = f.degree_h3;
    const i64 num = 2 * m * m * m * d + 3 * i * m * m * d + m * (i * i * d + 24 / i);
    if (num % 12 != 0)
        throw Error("h0_RR: non-integral Riemann-Roch value for family " + f.id +
                    " (database corruption)");
    return num / 12 + 1;
}

i64 h0_koszul(const FanoFamily& f, i64 m) {
    if (m < 0) return 0;
    const auto cut = f.cutting_bundle();
    if (!cut) throw Error("h0_koszul: family " + f.id + " has no homogeneous ambient model");
    const BundleExpr line = BundleExpr::line(f.ambient.gr, static_cast<int>(m));
    auto [tbl, trace] = restricted_cohom(line, *cut);
    const Interval h0 = tbl.at(0);
    if (!h0.exact())
        throw Error("h0_koszul: chase left h^0(O_Y(" + std::to_string(m) + ")) at " +
                    h0.to_string() + " for family " + f.id);
    return h0.lo;
}

i64 h0_weighted(const std::vector<int>& weights, i64 d) {
    if (d < 0) return 0;
    // Coefficient of t^d in prod 1/(1 - t^w).
    std::vector<i64> c(static_cast<size_t>(d) + 1, 0);
    c[0] = 1;
    for (int w : weights) {
        if (w <= 0) throw Error("h0_weighted: weights must be positive");
        for (i64 t = w; t <= d; ++t) c[static_cast<size_t>(t)] += c[static_cast<size_t>(t - w)];
    }
    return c[static_cast<size_t>(d)];
}

std::pair<int, int> double_cover_pushforward(const FanoFamily& f, int m) {
    if (f.ambient.kind != AmbientKind::DoubleCoverP3)
        throw Error("double_cover_pushforward: family " + f.id + " is not a double cover");
    return {m, m - f.ambient.branch_degree / 2};
}

DimTable double_cover_npi_table(const FanoFamily& f, int twist) {
    if (f.ambient.kind != AmbientKind::DoubleCoverP3)
        throw Error("double_cover_npi_table: family " + f.id + " is not a double cover");
    const GrSpec p3{1, 4};
    const int b = f.ambient.branch_degree;
    // 0 -> O(twist) -> O(b + twist) -> O(b + twist)|_B -> 0 on P^3.
    auto [tbl, trace] = chase_short(cohom_table(BundleExpr::line(p3, twist)),
                                    cohom_table(BundleExpr::line(p3, b + twist)), DimTable(2), 2,
                                    "restrict O(" + std::to_string(b + twist) + ") to branch");
    if (!tbl.all_exact()) throw Error("double_cover_npi_table: chase not exact");
    return tbl;
}

i64 double_cover_npi_h0(const FanoFamily& f, int twist) {
    return double_cover_npi_table(f, twist).at(0).lo;
}

DimTable oy_line_cohomology(const FanoFamily& f, int s) {
    DimTable t = DimTable::zeros(3);
    t.ref(0) = Interval::exactly(h0_RR(f, s));
    t.ref(3) = Interval::exactly(h0_RR(f, -f.index_i - s));
    // Intermediate cohomology of O_Y(s) vanishes: Kodaira vanishing for the
    // ample side, Serre duality for the other, h^{1,2}(O_Y) = 0 on a Fano.
    return t;
}

i64 N_l(const FanoFamily& f, int l) {
    if (l < f.j_va)
        throw Error("N_l: for l < j the polarization lA_t is not very ample (family " + f.id +
                    " has j = " + std::to_string(f.j_va) + ")");
    return h0_RR(f, l) + h0_RR(f, l - f.index_i) - 1;
}

i64 HilbertPoly::eval(i64 z) const {
    return (c3 * z * z * z + c2 * z * z + c1 * z + c0) / 12;
}

std::string HilbertPoly::to_string() const {
    std::ostringstream out;
    out << "(" << c3 << " z^3 + " << c2 << " z^2 + " << c1 << " z + " << c0 << ") / 12";
    return out.str();
}

HilbertPoly hilbert_polynomial(const FanoFamily& f, int l) {
    if (l < f.j_va)
        throw Error("hilbert_polynomial: l below very-ampleness threshold for family " + f.id);
    // p(z) = chi(lz H) + chi((lz - i) H); both arguments are >= 0 for z >= 1.
    const i64 i = f.index_i, d = f.degree_h3, L = l;
    HilbertPoly p;
    auto add_chi = [&](i64 shift) {
        // chi((Lz + shift)H) * 12 expanded in z with m = Lz + shift.
        const i64 a = L, b = shift;
        // 2 d m^3
        p.c3 += 2 * d * a * a * a;
        p.c2 += 2 * d * 3 * a * a * b;
        p.c1 += 2 * d * 3 * a * b * b;
        p.c0 += 2 * d * b * b * b;
        // 3 i d m^2
        p.c2 += 3 * i * d * a * a;
        p.c1 += 3 * i * d * 2 * a * b;
        p.c0 += 3 * i * d * b * b;
        // (i^2 d + 24 / i) m
        p.c1 += (i * i * d + 24 / i) * a;
        p.c0 += (i * i * d + 24 / i) * b;
        // + 12
        p.c0 += 12;
    };
    add_chi(0);
    add_chi(-i);
    return p;
}

} // namespace fano
