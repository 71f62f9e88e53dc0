// Command-line surface for the deformed radial oscillator catalog:
// reproduce any case, dump the polynomial families, run the multiple-zero
// search, render the summary table, and run the verification suite.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "milag/io.hpp"

namespace {

using namespace milag;

struct Output {
    std::string format = "text";
    std::string out_file;
    std::ostringstream text;
    json j;

    int flush(int code) {
        std::string payload = format == "json" ? j.dump(2) + "\n" : text.str();
        if (out_file.empty()) {
            std::cout << payload;
        } else {
            std::ofstream f(out_file);
            f << payload;
        }
        return code;
    }
};

std::pair<int, int> parse_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        int n = std::stoi(s);
        return {n, n};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
}

std::string weight_cell(const CaseSpec& c) {
    if (!c.weight.square_integrable) return "n.a.";
    std::string s = "e^-eta";
    if (!c.weight.eta_exponent.is_zero()) s += " eta^(" + c.weight.eta_exponent.to_string() + ")";
    s += " / (" + c.weight.den_base.to_string("eta") + ")^2";
    if (!c.weight.extra_factor.is_one())
        s = "(" + c.weight.extra_factor.to_string() + ") " + s;
    return s;
}

std::string extra_cell(const CaseSpec& c) {
    if (c.extras.empty()) return "none";
    std::string s;
    for (const auto& e : c.extras) {
        if (!s.empty()) s += ", ";
        s += std::to_string(e.n);
    }
    return s;
}

int cmd_case(Output& out, const std::string& name, const std::string& range) {
    const CaseSpec& c = get_case(name);
    auto [lo, hi] = parse_range(range);

    json members = json::array();
    out.text << "case " << c.name << "  (g = " << c.g.to_string() << ")\n";
    if (!c.note.empty()) out.text << "  note: " << c.note << "\n";
    out.text << "  seeds:";
    for (const auto& s : c.seeds) out.text << " " << s.label();
    out.text << "\n";
    QuasiFunction w = case_wronskian(c);
    out.text << "  wronskian: " << w.to_string() << "\n";
    DeformedPotential u = case_potential(c);
    out.text << "  potential: " << u.to_string() << "\n";

    if (c.has_family) {
        for (const auto& e : c.extras) {
            GlobalSolution s = transformed_solution(c, e.n);
            out.text << "  extra member n=" << e.n << " (E=" << s.energy.to_string()
                     << "): " << s.numer().to_string("eta") << "\n";
            members.push_back(to_json(s));
        }
        for (int n = lo; n <= hi; ++n) {
            if (n < 0) continue;
            if (c.index_missing(n)) {
                out.text << "  n=" << n << ": missing index\n";
                members.push_back(json{{"n", n}, {"missing", true}});
                continue;
            }
            GlobalSolution s = transformed_solution(c, n);
            out.text << "  L_" << n << " = " << s.numer().to_string("eta") << "\n";
            out.text << "       coefficients " << to_json(s.numer()).dump() << "\n";
            members.push_back(to_json(s));
        }
        out.text << "  member form: e^(-eta/2) eta^("
                 << (c.family_power / Rational(2)).to_string() << ") L_n / ("
                 << c.family_den.to_string("eta") << ")\n";
    } else {
        out.text << "  no explicit solution family\n";
    }

    out.text << "  weight: " << weight_cell(c) << "\n";
    if (c.weight.square_integrable) {
        out.text << "  norms h_n (d-eta convention):\n";
        for (int n = std::max(lo, 0); n <= hi; ++n) {
            if (c.index_missing(n)) continue;
            NormPrediction p = predicted_norm(c, n);
            out.text << "    h_" << n << " = " << p.rational_part_eta().to_string()
                     << " * Gamma(" << p.gamma_arg.to_string() << ") = " << p.value_eta()
                     << "\n";
        }
    }

    out.j = case_to_json(c);
    out.j["members"] = members;
    return out.flush(0);
}

int cmd_list(Output& out) {
    json arr = json::array();
    for (const auto& c : catalog()) {
        out.text << c.name << ": g=" << c.g.to_string() << " seeds:";
        for (const auto& s : c.seeds) out.text << " " << s.label();
        if (!c.note.empty()) out.text << "  (" << c.note << ")";
        out.text << "\n";
        arr.push_back(case_to_json(c));
    }
    out.j = arr;
    return out.flush(0);
}

int cmd_search(Output& out, const std::string& kinds_str, int vmax, int target_m) {
    std::vector<SeedKind> kinds;
    std::stringstream ss(kinds_str);
    std::string tok;
    while (std::getline(ss, tok, ',')) kinds.push_back(seed_kind_from_string(tok));
    if (kinds.size() < 2 || kinds.size() > 3)
        throw CLI::ValidationError("--kinds needs two or three of I,II,III");

    auto hits = search_multiple_zeros(kinds, vmax, target_m);
    json arr = json::array();
    for (const auto& h : hits) {
        out.text << h.to_string() << "\n";
        arr.push_back(to_json(h));
    }
    if (hits.empty())
        out.text << "no hits (kinds " << kinds_str << ", vmax " << vmax << ", target m >= "
                 << target_m << ")\n";
    out.j = json{{"kinds", kinds_str}, {"vmax", vmax}, {"target_m", target_m}, {"hits", arr}};
    return out.flush(0);
}

int cmd_verify(Output& out, const std::string& which, double tol, const std::string& fixture) {
    VerificationRun run;
    if (!fixture.empty()) {
        std::ifstream f(fixture);
        if (!f) throw CLI::ValidationError("cannot open fixture file " + fixture);
        json j;
        f >> j;
        CaseSpec c = case_fixture_from_json(j);
        auto checks = verify_case(c, tol);
        run.checks.insert(run.checks.end(), checks.begin(), checks.end());
        for (const auto& ch : run.checks) run.pass = run.pass && ch.pass;
    } else {
        run = run_verification(which, tol);
    }
    for (const auto& ch : run.checks)
        out.text << (ch.pass ? "pass" : "FAIL") << "  " << ch.name << "  " << ch.subject
                 << (ch.detail.empty() ? "" : "  [" + ch.detail + "]") << "\n";
    out.text << (run.pass ? "all checks passed" : "verification FAILED") << "\n";
    out.j = to_json(run);
    return out.flush(run.pass ? 0 : 1);
}

int cmd_table(Output& out) {
    // The five explicit two-index families, every cell computed.
    json arr = json::array();
    out.text << "case | seed wronskian | potential | weight | extra deg\n";
    for (const std::string& name : {"A", "B", "D", "E", "F"}) {
        const CaseSpec& c = get_case(name);
        QuasiFunction w = case_wronskian(c);
        DeformedPotential u = case_potential(c);
        out.text << "(" << c.name << ") | " << w.to_string() << " | " << u.to_string() << " | "
                 << weight_cell(c) << " | " << extra_cell(c) << "\n";
        arr.push_back(json{{"case", c.name},
                           {"seed", to_json(w)},
                           {"potential", to_json(u)},
                           {"weight", weight_cell(c)},
                           {"extra_degree", extra_cell(c)}});
    }
    out.j = arr;
    return out.flush(0);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"multi-indexed Laguerre systems: exact construction and verification"};
    app.require_subcommand(1);

    Output out;
    app.add_option("--format", out.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", out.out_file, "write output to a file instead of stdout");

    std::string case_name, n_range = "0..2";
    auto* sc_case = app.add_subcommand("case", "reproduce one catalog case");
    sc_case->add_option("name", case_name, "case name (A..H)")->required();
    sc_case->add_option("--n-range", n_range, "member indices to print, e.g. 0..3");

    auto* sc_list = app.add_subcommand("list", "list the catalog");

    std::string kinds = "I,II";
    int vmax = 2, target_m = 3;
    auto* sc_search = app.add_subcommand("search", "scan seed Wronskians for multiple zeros");
    sc_search->add_option("--kinds", kinds, "comma-separated seed kinds, e.g. III,I");
    sc_search->add_option("--vmax", vmax, "largest seed degree")->check(CLI::Range(1, 6));
    sc_search->add_option("--target-m", target_m, "required zero multiplicity")
        ->check(CLI::Range(1, 12));

    std::string which = "all", fixture;
    double tol = 1e-8;
    auto* sc_verify = app.add_subcommand("verify", "run the verification suite");
    sc_verify->add_option("--case", which, "all or a case name");
    sc_verify->add_option("--tol", tol, "numeric tolerance for quadrature checks");
    sc_verify->add_option("--fixture", fixture, "verify a case loaded from a JSON fixture");

    auto* sc_table = app.add_subcommand("table", "summary table of the explicit families");

    try {
        app.parse(argc, argv);
        if (sc_case->parsed()) return cmd_case(out, case_name, n_range);
        if (sc_list->parsed()) return cmd_list(out);
        if (sc_search->parsed()) return cmd_search(out, kinds, vmax, target_m);
        if (sc_verify->parsed()) return cmd_verify(out, which, tol, fixture);
        if (sc_table->parsed()) return cmd_table(out);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const UnsupportedCase& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
