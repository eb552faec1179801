#include "fano/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fano/extendability.hpp"
#include "fano/geography.hpp"
#include "fano/serialize.hpp"

namespace fano {

namespace {

using nlohmann::json;

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

Weight parse_weight(const std::string& s) {
    Weight w;
    for (const auto& tok : split_commas(s)) w.push_back(std::stoi(tok));
    return w;
}

std::pair<int, int> parse_range(const std::string& s) {
    const auto pos = s.find("..");
    if (pos == std::string::npos) {
        const int v = std::stoi(s);
        return {v, v};
    }
    return {std::stoi(s.substr(0, pos)), std::stoi(s.substr(pos + 2))};
}

std::string interval_str(const Interval& iv) { return iv.to_string(); }

json row_to_json(const ExtendabilityReport& r) {
    json j;
    j["family"] = r.family;
    j["l"] = r.l;
    j["N_l"] = r.n_l;
    j["t1"] = interval_str(r.beta.t1);
    j["t2"] = interval_str(r.beta.t2);
    j["t3"] = interval_str(r.beta.t3);
    j["t4"] = interval_str(r.beta.t4);
    j["t5"] = interval_str(r.beta.t5);
    j["beta_hi"] = r.beta.bounded ? json(r.beta.beta_hi) : json(nullptr);
    j["conclusion"] = r.zl.to_string();
    j["prop27"] = {r.prop27_pass[0], r.prop27_pass[1], r.prop27_pass[2]};
    j["surface_alpha"] = interval_str(r.surface_alpha);
    j["surface_alpha_certified"] = r.surface_alpha_certified;
    j["reference"] = r.ref_bound ? json(*r.ref_bound) : json(nullptr);
    j["flag"] = flag_to_string(r.flag);
    j["notes"] = r.notes;
    return j;
}

void print_table2_csv(const Table2Output& t, std::ostream& out) {
    out << "family,l,N_l,t1,t2,t3,t4,t5,beta_hi,conclusion,prop27_k1,prop27_k2,prop27_k3,"
           "surface_alpha,reference,flag,notes\n";
    for (const auto& r : t.rows) {
        out << r.family << "," << r.l << "," << r.n_l << "," << interval_str(r.beta.t1) << ","
            << interval_str(r.beta.t2) << "," << interval_str(r.beta.t3) << ","
            << interval_str(r.beta.t4) << "," << interval_str(r.beta.t5) << ","
            << (r.beta.bounded ? std::to_string(r.beta.beta_hi) : "inf") << ",\""
            << r.zl.to_string() << "\"," << (r.prop27_pass[0] ? "pass" : "fail")
            << "," << (r.prop27_pass[1] ? "pass" : "fail") << ","
            << (r.prop27_pass[2] ? "pass" : "fail") << "," << interval_str(r.surface_alpha) << ","
            << (r.ref_bound ? std::to_string(*r.ref_bound) : "-") << "," << flag_to_string(r.flag)
            << ",\"";
        for (size_t i = 0; i < r.notes.size(); ++i) out << (i ? "; " : "") << r.notes[i];
        out << "\"\n";
    }
}

void print_table2_md(const Table2Output& t, std::ostream& out) {
    out << "| family | l | N_l | beta | conclusion | reference | flag |\n";
    out << "|---|---|---|---|---|---|---|\n";
    for (const auto& r : t.rows) {
        out << "| " << r.family << " | " << r.l << " | " << r.n_l << " | "
            << (r.beta.bounded ? std::to_string(r.beta.beta_hi) : "inf") << " | "
            << r.zl.to_string() << " | " << (r.ref_bound ? std::to_string(*r.ref_bound) : "-")
            << " | " << flag_to_string(r.flag) << " |\n";
    }
    out << "\nthresholds (family: reference / certified):";
    for (const auto& [id, ref, cert] : t.l_thresholds)
        out << " " << id << ": " << ref << "/" << cert;
    out << "\n";
}

} // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact cohomology and extendability calculator for Picard-rank-1 Fano "
                 "threefold families"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    // bbw
    auto* bbw_cmd = app.add_subcommand("bbw", "cohomology of an irreducible homogeneous bundle");
    std::string bbw_gr, bbw_a, bbw_b;
    bbw_cmd->add_option("--gr", bbw_gr, "Grassmannian as k,n")->required();
    bbw_cmd->add_option("--weight-a", bbw_a, "U*-block weight, comma separated")->required();
    bbw_cmd->add_option("--weight-b", bbw_b, "Q-block weight, comma separated")->required();

    // tangent
    auto* tangent_cmd = app.add_subcommand("tangent", "interval table for T_Y(-mH)");
    std::string tg_family;
    int tg_twist = 1;
    bool tg_trace = false;
    tangent_cmd->add_option("--family", tg_family)->required();
    tangent_cmd->add_option("--twist", tg_twist)->required();
    tangent_cmd->add_flag("--trace", tg_trace);

    // beta
    auto* beta_cmd = app.add_subcommand("beta", "alpha upper bound for one (family, l)");
    std::string beta_family;
    int beta_l = 2;
    bool beta_trace = false;
    beta_cmd->add_option("--family", beta_family)->required();
    beta_cmd->add_option("--l", beta_l)->required();
    beta_cmd->add_flag("--trace", beta_trace);

    // table2 / table1 / klm
    auto* t2_cmd = app.add_subcommand("table2", "extendability report rows with reference audit");
    std::string t2_families, t2_format = "md";
    int t2_lmax = 12;
    t2_cmd->add_option("--families", t2_families, "comma separated ids");
    t2_cmd->add_option("--l-max", t2_lmax);
    t2_cmd->add_option("--format", t2_format)->check(CLI::IsMember({"json", "csv", "md"}));

    auto* t1_cmd = app.add_subcommand("table1", "reference smooth-extendability data");
    std::string t1_format = "md";
    t1_cmd->add_option("--format", t1_format)->check(CLI::IsMember({"json", "csv", "md"}));

    auto* klm_cmd = app.add_subcommand("klm", "comparison bounds from the Veronese criterion");
    std::string klm_format = "md";
    klm_cmd->add_option("--format", klm_format)->check(CLI::IsMember({"json", "csv", "md"}));

    // nl / hilbert
    auto* nl_cmd = app.add_subcommand("nl", "embedding dimension datum N_l");
    std::string nl_family;
    int nl_l = 1;
    nl_cmd->add_option("--family", nl_family)->required();
    nl_cmd->add_option("--l", nl_l)->required();

    auto* hp_cmd = app.add_subcommand("hilbert", "Hilbert polynomial of the embedding");
    std::string hp_family;
    int hp_l = 1;
    hp_cmd->add_option("--family", hp_family)->required();
    hp_cmd->add_option("--l", hp_l)->required();

    // invariants / geography
    auto* inv_cmd = app.add_subcommand("invariants", "canonical surface invariants");
    std::string inv_family, inv_range, inv_format = "md";
    inv_cmd->add_option("--family", inv_family)->required();
    inv_cmd->add_option("--l-range", inv_range)->required();
    inv_cmd->add_option("--format", inv_format)->check(CLI::IsMember({"json", "csv", "md"}));

    auto* geo_cmd = app.add_subcommand("geography", "surface geography emission");
    std::string geo_format = "csv", geo_out, geo_families;
    int geo_lmax = 12;
    geo_cmd->add_option("--format", geo_format)->check(CLI::IsMember({"csv", "svg"}));
    geo_cmd->add_option("--out", geo_out, "output path (stdout if omitted)");
    geo_cmd->add_option("--families", geo_families);
    geo_cmd->add_option("--l-max", geo_lmax);

    // info
    auto* info_cmd = app.add_subcommand("info", "pretty-print one family record");
    std::string info_id;
    info_cmd->add_option("id", info_id)->required();

    std::vector<const char*> argv;
    argv.push_back("fano");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n" << app.help();
        return 1;
    }

    try {
        if (*bbw_cmd) {
            const Weight grw = parse_weight(bbw_gr);
            if (grw.size() != 2) throw Error("bbw: --gr expects k,n");
            const GrSpec gr{grw[0], grw[1]};
            IrredBundle e{gr, parse_weight(bbw_a), parse_weight(bbw_b)};
            e.canonicalize();
            const CohomResult r = cohomology_irred(e);
            if (r.all_zero)
                out << "all cohomology vanishes\n";
            else
                out << "h^" << r.degree << "(" << atom_to_string(e) << ") = " << r.dim << "\n";
            return 0;
        }

        const FamilyDatabase db = FamilyDatabase::load_default();

        if (*tangent_cmd) {
            const auto& f = db.get(tg_family);
            const TangentResult t = tangent_twist_cohomology(f, tg_twist);
            out << "T_Y(" << -tg_twist << "H) on family " << f.id << ": " << t.table.to_string()
                << "\n";
            if (tg_trace) out << t.trace.to_text();
            return 0;
        }
        if (*beta_cmd) {
            const auto& f = db.get(beta_family);
            ChaseTrace trace;
            const BetaBreakdown b = beta_bound(f, beta_l, beta_trace ? &trace : nullptr);
            out << "family " << f.id << ", l = " << beta_l << ":\n";
            out << "  t1 = h^1(T_Y(" << -(beta_l + f.index_i) << "H)) = " << b.t1.to_string() << "\n";
            out << "  t2 = h^1(T_Y(" << -beta_l << "H)) = " << b.t2.to_string() << "\n";
            out << "  t3 = h^0(T_Y(" << -beta_l << "H)) = " << b.t3.to_string() << "\n";
            out << "  t4 = h^1(O_Y(" << (f.index_i - beta_l) << "H)) = " << b.t4.to_string() << "\n";
            out << "  t5 = h^0(O_Y(" << (2 * f.index_i - beta_l) << "H)) = " << b.t5.to_string()
                << "\n";
            out << "  beta <= " << (b.bounded ? std::to_string(b.beta_hi) : "inf") << "\n";
            out << "  " << zl_conclude(b.beta_hi, N_l(f, beta_l)).to_string() << "\n";
            if (beta_trace) out << trace.to_text();
            return 0;
        }
        if (*t2_cmd) {
            const Table2Output t = table2(db, split_commas(t2_families), t2_lmax);
            if (t2_format == "json") {
                json j;
                j["version"] = kVersion;
                j["rows"] = json::array();
                for (const auto& r : t.rows) j["rows"].push_back(row_to_json(r));
                j["thresholds"] = json::array();
                for (const auto& [id, ref, cert] : t.l_thresholds)
                    j["thresholds"].push_back({{"family", id}, {"reference", ref}, {"certified", cert}});
                j["flags_present"] = t.flags_present;
                out << j.dump(2) << "\n";
            } else if (t2_format == "csv") {
                print_table2_csv(t, out);
            } else {
                print_table2_md(t, out);
            }
            return t.flags_present ? 2 : 0;
        }
        if (*t1_cmd) {
            const auto rows = table1(db);
            if (t1_format == "json") {
                json j = json::array();
                for (const auto& r : rows)
                    j.push_back({{"family", r.family}, {"l", r.l}, {"extendability", r.extendability}});
                out << j.dump(2) << "\n";
            } else if (t1_format == "csv") {
                out << "family,l,extendability\n";
                for (const auto& r : rows)
                    out << r.family << "," << r.l << ",\"" << r.extendability << "\"\n";
            } else {
                out << "| family | l | extendability |\n|---|---|---|\n";
                for (const auto& r : rows)
                    out << "| " << r.family << " | " << r.l << " | " << r.extendability << " |\n";
            }
            return 0;
        }
        if (*klm_cmd) {
            const auto rows = klm_comparison(db);
            if (klm_format == "json") {
                json j = json::array();
                for (const auto& r : rows)
                    j.push_back({{"family", r.family},
                                 {"klm_bound", r.klm_bound},
                                 {"reference_l", r.reference_l}});
                out << j.dump(2) << "\n";
            } else {
                out << "family,klm_bound,reference_l\n";
                for (const auto& r : rows)
                    out << r.family << "," << r.klm_bound << "," << r.reference_l << "\n";
            }
            return 0;
        }
        if (*nl_cmd) {
            out << N_l(db.get(nl_family), nl_l) << "\n";
            return 0;
        }
        if (*hp_cmd) {
            const auto& f = db.get(hp_family);
            const HilbertPoly p = hilbert_polynomial(f, hp_l);
            out << "p(z) = " << p.to_string() << "\n";
            out << "p(1) = " << p.eval(1) << ", p(2) = " << p.eval(2) << ", p(3) = " << p.eval(3)
                << "\n";
            return 0;
        }
        if (*inv_cmd) {
            const auto& f = db.get(inv_family);
            const auto [lo, hi] = parse_range(inv_range);
            bool mismatch = false;
            if (inv_format == "json") {
                json j = json::array();
                for (int l = lo; l <= hi; ++l) {
                    const auto inv = surface_invariants(f, l);
                    const auto c = geography_check(inv);
                    mismatch = mismatch || inv.chi_mismatch;
                    j.push_back({{"family", inv.family},
                                 {"l", inv.l},
                                 {"chi_formula", inv.chi_formula},
                                 {"chi_rr", inv.chi_rr},
                                 {"K2", inv.k2},
                                 {"pg", inv.p_g},
                                 {"q", inv.q},
                                 {"noether", c.noether},
                                 {"bmy", c.bmy},
                                 {"flag", inv.chi_mismatch ? "chi_mismatch" : "ok"}});
                }
                out << j.dump(2) << "\n";
            } else {
                out << "family,l,chi_formula,chi_rr,K2,pg,q,noether,bmy,flag\n";
                for (int l = lo; l <= hi; ++l) {
                    const auto inv = surface_invariants(f, l);
                    const auto c = geography_check(inv);
                    mismatch = mismatch || inv.chi_mismatch;
                    out << inv.family << "," << inv.l << "," << inv.chi_formula << "," << inv.chi_rr
                        << "," << inv.k2 << "," << inv.p_g << "," << inv.q << ","
                        << (c.noether ? "pass" : "fail") << "," << (c.bmy ? "pass" : "fail") << ","
                        << (inv.chi_mismatch ? "chi_mismatch" : "ok") << "\n";
                }
            }
            return mismatch ? 2 : 0;
        }
        if (*geo_cmd) {
            const auto filter = split_commas(geo_families);
            const std::string content = (geo_format == "csv")
                                            ? emit_geography_csv(db, filter, 1, geo_lmax)
                                            : emit_geography_svg(db, filter, 1, geo_lmax);
            if (geo_out.empty()) {
                out << content;
            } else {
                std::ofstream file(geo_out);
                if (!file) throw Error("cannot write " + geo_out);
                file << content;
            }
            const bool mismatch = content.find("chi_mismatch") != std::string::npos;
            return mismatch ? 2 : 0;
        }
        if (*info_cmd) {
            const auto& f = db.get(info_id);
            out << "family " << f.id << "\n";
            out << "  index:      " << f.index_i << " (K_Y = " << -f.index_i << "H)\n";
            out << "  j_va:       " << f.j_va << "\n";
            out << "  H^3:        " << f.degree_h3 << "\n";
            out << "  ambient:    " << f.ambient.to_string() << "\n";
            switch (f.defining.kind) {
                case DefiningKind::ZeroLocus:
                    out << "  defined by: zero locus of " << expr_to_string(f.defining.zero_locus)
                        << "\n";
                    break;
                case DefiningKind::CompleteIntersection: {
                    out << "  defined by: complete intersection of degrees";
                    for (int d : f.defining.multidegrees) out << " " << d;
                    out << "\n";
                    break;
                }
                case DefiningKind::WholeSpace:
                    out << "  defined by: the whole ambient space\n";
                    break;
                case DefiningKind::WeightedHypersurface:
                    out << "  defined by: hypersurface of degree " << f.defining.hypersurface_degree
                        << "\n";
                    break;
            }
            out << "  h^0(H):     " << h0_RR(f, 1) << "\n";
            if (f.table1_extendable)
                out << "  anticanonical model: "
                    << (*f.table1_extendable == -1
                            ? std::string("infinitely many times smoothly extendable")
                            : "smoothly " + std::to_string(*f.table1_extendable) + "-extendable")
                    << "\n";
            out << "  reference:  alpha = 0 for l >= " << f.ref_zero_from << "\n";
            for (const auto& a : f.assumptions)
                out << "  assumes:    [" << a.name << "] " << a.statement << "\n";
            return 0;
        }
    } catch (const ChaseError& e) {
        err << "error: " << e.what() << "\n" << e.trace;
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand\n";
    return 1;
}

} // namespace fano
