#include "fano/geography.hpp"

#include <algorithm>
#include <sstream>

namespace fano {

SurfaceInvariants surface_invariants(const FanoFamily& f, int l) {
    if (l < f.ref_zero_from)
        throw Error("surface_invariants: l = " + std::to_string(l) + " below the surface range l >= " +
                    std::to_string(f.ref_zero_from) + " for family " + f.id);
    SurfaceInvariants inv;
    inv.family = f.id;
    inv.l = l;
    const i64 d = f.degree_h3, i = f.index_i, L = l;

    i64 num; // chi * 6 for the printed formula of the family's index class
    if (i == 1) {
        // chi = (1/3) H^3 l^3 + ((1/6) H^3 + 4) l
        num = 2 * d * L * L * L + (d + 24) * L;
    } else {
        // chi = (1/3) H^3 l^3 + ((i-1)/2) H^3 l^2 + ((1/6) H^3 + 2) l + 1
        num = 2 * d * L * L * L + 3 * (i - 1) * d * L * L + (d + 12) * L + 6;
    }
    if (num % 6 != 0)
        throw Error("surface_invariants: non-integral chi formula for family " + f.id);
    inv.chi_formula = num / 6;

    inv.p_g = N_l(f, l);
    inv.chi_rr = 1 + inv.p_g; // 1 - q + p_g with q = 0
    inv.k2 = 2 * d * L * L * L;
    inv.q = 0;
    inv.chi_mismatch = inv.chi_formula != inv.chi_rr;
    return inv;
}

GeographyCheck geography_check(const SurfaceInvariants& inv) {
    GeographyCheck c;
    c.noether = inv.k2 >= 2 * inv.p_g - 4;
    c.bmy = inv.k2 <= 9 * inv.chi_rr;
    return c;
}

namespace {

std::vector<SurfaceInvariants> collect(const FamilyDatabase& db,
                                       const std::vector<std::string>& filter, int l_lo, int l_hi) {
    std::vector<SurfaceInvariants> rows;
    for (const auto& f : db.families) {
        if (!filter.empty() && std::find(filter.begin(), filter.end(), f.id) == filter.end())
            continue;
        for (int l = std::max(l_lo, f.ref_zero_from); l <= l_hi; ++l)
            rows.push_back(surface_invariants(f, l));
    }
    return rows;
}

} // namespace

std::string emit_geography_csv(const FamilyDatabase& db, const std::vector<std::string>& filter,
                               int l_lo, int l_hi) {
    std::ostringstream out;
    out << "family,l,chi_formula,chi_rr,K2,pg,q,noether,bmy,flag\n";
    for (const auto& inv : collect(db, filter, l_lo, l_hi)) {
        const GeographyCheck c = geography_check(inv);
        out << inv.family << "," << inv.l << "," << inv.chi_formula << "," << inv.chi_rr << ","
            << inv.k2 << "," << inv.p_g << "," << inv.q << "," << (c.noether ? "pass" : "fail")
            << "," << (c.bmy ? "pass" : "fail") << ","
            << (inv.chi_mismatch ? "chi_mismatch" : "ok") << "\n";
    }
    return out.str();
}

std::string emit_geography_svg(const FamilyDatabase& db, const std::vector<std::string>& filter,
                               int l_lo, int l_hi) {
    const auto rows = collect(db, filter, l_lo, l_hi);
    i64 max_chi = 1, max_k2 = 1;
    for (const auto& r : rows) {
        max_chi = std::max(max_chi, r.chi_rr);
        max_k2 = std::max(max_k2, r.k2);
    }
    // Fixed 1000x1000 viewBox; x = 1000 * chi_rr / max_chi, y measured upward
    // from the bottom edge as 1000 * K2 / max_k2.
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\">\n";
    out << "<!-- geography points: x = 1000*chi/" << max_chi << ", y = 1000 - 1000*K2/" << max_k2
        << "; one circle per (family,l) -->\n";
    for (const auto& r : rows) {
        const i64 x = 1000 * r.chi_rr / max_chi;
        const i64 y = 1000 - 1000 * r.k2 / max_k2;
        out << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"4\"><title>" << r.family << " l="
            << r.l << "</title></circle>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace fano
