#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "mirrorhodge/pgl_variant.hpp"
#include "mirrorhodge/report.hpp"
#include "mirrorhodge/serialize.hpp"

namespace {

using mhodge::OrderedJson;

void emit_output(const std::string& bytes, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << bytes;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw mhodge::ParameterError("cannot open output file '" + out_path + "'");
    out << bytes;
}

void warn_if_degenerate_genus(int g) {
    if (g == 1) {
        std::cerr << "note: g=1 is accepted for formula-level continuity, but the "
                     "moduli-theoretic interpretation is degenerate; all variant "
                     "polynomials vanish\n";
    }
}

// Expand genus tokens: "4" or "2..7".
std::vector<int> expand_range_tokens(const std::vector<std::string>& tokens) {
    std::vector<int> out;
    for (const std::string& t : tokens) {
        const auto dots = t.find("..");
        try {
            if (dots == std::string::npos) {
                out.push_back(std::stoi(t));
            } else {
                const int lo = std::stoi(t.substr(0, dots));
                const int hi = std::stoi(t.substr(dots + 2));
                if (hi < lo) throw mhodge::ParameterError("empty range '" + t + "'");
                for (int v = lo; v <= hi; ++v) out.push_back(v);
            }
        } catch (const std::invalid_argument&) {
            throw mhodge::ParameterError("cannot parse range token '" + t + "'");
        } catch (const std::out_of_range&) {
            throw mhodge::ParameterError("range token '" + t + "' out of range");
        }
    }
    return out;
}

struct CommonOpts {
    std::string format = "text";
    std::string out_path;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", opts.out_path, "Write output to FILE instead of stdout");
}

int run_check(int r, long long d, long long e, int g, const CommonOpts& opts, bool timing) {
    warn_if_degenerate_genus(g);
    const mhodge::MirrorReport rep = mhodge::mirror_check(r, d, e, g);
    if (opts.format == "json") {
        emit_output(mhodge::json_to_bytes(mhodge::report_to_json(rep, timing)), opts.out_path);
    } else {
        emit_output(mhodge::report_to_text(rep, timing), opts.out_path);
    }
    return (rep.verdict == mhodge::Verdict::kEqual && rep.all_checks_pass()) ? 0 : 1;
}

int run_sweep(const std::vector<int>& ranks, const std::vector<int>& genera,
              const std::vector<long long>& ds, const std::vector<long long>& es, int jobs,
              const CommonOpts& opts, bool timing) {
    for (int g : genera) warn_if_degenerate_genus(g);
    const mhodge::SweepResult result = mhodge::sweep(ranks, genera, ds, es, jobs);
    if (opts.format == "json") {
        emit_output(mhodge::json_to_bytes(mhodge::sweep_to_json(result, timing)), opts.out_path);
    } else {
        emit_output(mhodge::sweep_to_text(result, timing), opts.out_path);
    }
    return result.exit_code;
}

int run_variant_sl(int r, int g, long long d, const std::string& path, const CommonOpts& opts) {
    warn_if_degenerate_genus(g);
    std::vector<std::pair<std::string, mhodge::BiPoly>> polys;
    if (path == "enum" || path == "all") polys.emplace_back("sl_enum", mhodge::sl_variant_enum(r, g, d));
    if (path == "filter" || path == "all") polys.emplace_back("sl_filter", mhodge::sl_variant_filter(r, g, d));

    if (opts.format == "json") {
        OrderedJson j;
        j["params"] = {{"r", r}, {"g", g}, {"d", d}};
        OrderedJson body;
        for (const auto& [name, p] : polys) body[name] = mhodge::poly_to_json(p);
        j["polynomials"] = std::move(body);
        emit_output(mhodge::json_to_bytes(j), opts.out_path);
    } else {
        std::string text;
        for (const auto& [name, p] : polys) {
            text += name + " = " + mhodge::poly_to_text(p) + "\n";
        }
        emit_output(text, opts.out_path);
    }
    for (std::size_t i = 1; i < polys.size(); ++i) {
        if (polys[i].second != polys[0].second) return 1;
    }
    return 0;
}

int run_variant_pgl(int r, int g, long long e, const std::string& path, const CommonOpts& opts) {
    warn_if_degenerate_genus(g);
    std::vector<std::pair<std::string, mhodge::BiPoly>> polys;
    if (path == "closed" || path == "all") polys.emplace_back("pgl_closed", mhodge::pgl_variant_closed(r, g, e));
    if (path == "raw" || path == "all") polys.emplace_back("pgl_raw", mhodge::pgl_variant_raw(r, g, e));

    if (opts.format == "json") {
        OrderedJson j;
        j["params"] = {{"r", r}, {"g", g}, {"e", e}};
        OrderedJson body;
        for (const auto& [name, p] : polys) body[name] = mhodge::poly_to_json(p);
        j["polynomials"] = std::move(body);
        emit_output(mhodge::json_to_bytes(j), opts.out_path);
    } else {
        std::string text;
        for (const auto& [name, p] : polys) {
            text += name + " = " + mhodge::poly_to_text(p) + "\n";
        }
        emit_output(text, opts.out_path);
    }
    for (std::size_t i = 1; i < polys.size(); ++i) {
        if (polys[i].second != polys[0].second) return 1;
    }
    return 0;
}

int run_stability_audit(int r, int g, long long d, const CommonOpts& opts) {
    warn_if_degenerate_genus(g);
    const mhodge::StabilityAuditReport rep = mhodge::stability_audit(r, g, d);
    if (opts.format == "json") {
        emit_output(mhodge::json_to_bytes(mhodge::stability_audit_to_json(rep)), opts.out_path);
    } else {
        emit_output(mhodge::stability_audit_to_text(rep), opts.out_path);
    }
    return rep.all_pass ? 0 : 1;
}

int run_torsion_audit(int r, int g, long long cap, const CommonOpts& opts) {
    warn_if_degenerate_genus(g);
    const mhodge::TorsionAuditReport rep = mhodge::torsion_audit(r, g, cap);
    if (opts.format == "json") {
        emit_output(mhodge::json_to_bytes(mhodge::torsion_audit_to_json(rep)), opts.out_path);
    } else {
        emit_output(mhodge::torsion_audit_to_text(rep), opts.out_path);
    }
    return rep.all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"mirror-hodge: exact variant stringy E-polynomials of Higgs-bundle "
                 "moduli spaces, computed along two independent fixed-point routes and "
                 "verified for equality"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from a TOML/flat-key config file");

    // check
    auto* check = app.add_subcommand("check", "Run one (r, d, e, g) mirror verification");
    check->fallthrough();
    int check_r = 0, check_g = 0;
    long long check_d = 1, check_e = 1;
    bool check_timing = false;
    CommonOpts check_opts;
    check->add_option("-r,--rank", check_r, "Prime rank r")->required();
    check->add_option("-g,--genus", check_g, "Genus of the base curve")->required();
    check->add_option("--deg-d", check_d, "Degree d (coprime to r)")->capture_default_str();
    check->add_option("--deg-e", check_e, "Degree e (coprime to r)")->capture_default_str();
    check->add_flag("--timing", check_timing, "Include wall-clock timings in the output");
    add_common(check, check_opts);

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "Run mirror checks over parameter ranges");
    sweep_cmd->fallthrough();
    std::vector<int> sweep_r;
    std::vector<std::string> sweep_g_tokens;
    std::vector<long long> sweep_d{1}, sweep_e{1};
    int sweep_jobs = 1;
    bool sweep_timing = false;
    CommonOpts sweep_opts;
    sweep_cmd->add_option("-r,--rank", sweep_r, "Prime ranks")->required();
    sweep_cmd->add_option("-g,--genus", sweep_g_tokens, "Genus values or ranges like 2..5")->required();
    sweep_cmd->add_option("--deg-d", sweep_d, "Degrees d")->capture_default_str();
    sweep_cmd->add_option("--deg-e", sweep_e, "Degrees e")->capture_default_str();
    sweep_cmd->add_option("--jobs", sweep_jobs, "Worker threads")
        ->envname("MIRROR_HODGE_JOBS")
        ->capture_default_str();
    sweep_cmd->add_flag("--timing", sweep_timing, "Include wall-clock timings in the output");
    add_common(sweep_cmd, sweep_opts);

    // variant-sl
    auto* vsl = app.add_subcommand("variant-sl", "Variant polynomial from the C*-fixed components");
    vsl->fallthrough();
    int vsl_r = 0, vsl_g = 0;
    long long vsl_d = 1;
    std::string vsl_path = "all";
    CommonOpts vsl_opts;
    vsl->add_option("-r,--rank", vsl_r, "Prime rank r")->required();
    vsl->add_option("-g,--genus", vsl_g, "Genus")->required();
    vsl->add_option("--deg-d", vsl_d, "Degree d (coprime to r)")->capture_default_str();
    vsl->add_option("--path", vsl_path, "Computation route")
        ->check(CLI::IsMember({"enum", "filter", "all"}))
        ->capture_default_str();
    add_common(vsl, vsl_opts);

    // variant-pgl
    auto* vpgl = app.add_subcommand("variant-pgl", "Variant polynomial from the torsion-fixed loci");
    vpgl->fallthrough();
    int vpgl_r = 0, vpgl_g = 0;
    long long vpgl_e = 1;
    std::string vpgl_path = "all";
    CommonOpts vpgl_opts;
    vpgl->add_option("-r,--rank", vpgl_r, "Prime rank r")->required();
    vpgl->add_option("-g,--genus", vpgl_g, "Genus")->required();
    vpgl->add_option("--deg-e", vpgl_e, "Degree e (coprime to r)")->capture_default_str();
    vpgl->add_option("--path", vpgl_path, "Computation route")
        ->check(CLI::IsMember({"closed", "raw", "all"}))
        ->capture_default_str();
    add_common(vpgl, vpgl_opts);

    // stability-audit
    auto* saudit = app.add_subcommand("stability-audit",
                                      "Check that every admissible m-tuple reconstructs to a "
                                      "stable degree vector");
    saudit->fallthrough();
    int saudit_r = 0, saudit_g = 0;
    long long saudit_d = 1;
    CommonOpts saudit_opts;
    saudit->add_option("-r,--rank", saudit_r, "Prime rank r")->required();
    saudit->add_option("-g,--genus", saudit_g, "Genus")->required();
    saudit->add_option("--deg-d", saudit_d, "Degree d (coprime to r)")->capture_default_str();
    add_common(saudit, saudit_opts);

    // torsion-audit
    auto* taudit = app.add_subcommand("torsion-audit",
                                      "Check pairing equidistribution and full/reduced "
                                      "character-average agreement");
    taudit->fallthrough();
    int taudit_r = 0, taudit_g = 0;
    long long taudit_cap = mhodge::kDefaultEnumCap;
    CommonOpts taudit_opts;
    taudit->add_option("-r,--rank", taudit_r, "Prime rank r")->required();
    taudit->add_option("-g,--genus", taudit_g, "Genus")->required();
    taudit->add_option("--cap", taudit_cap, "Full-enumeration element cap")->capture_default_str();
    add_common(taudit, taudit_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (check->parsed()) return run_check(check_r, check_d, check_e, check_g, check_opts, check_timing);
        if (sweep_cmd->parsed()) {
            return run_sweep(sweep_r, expand_range_tokens(sweep_g_tokens), sweep_d, sweep_e,
                             sweep_jobs, sweep_opts, sweep_timing);
        }
        if (vsl->parsed()) return run_variant_sl(vsl_r, vsl_g, vsl_d, vsl_path, vsl_opts);
        if (vpgl->parsed()) return run_variant_pgl(vpgl_r, vpgl_g, vpgl_e, vpgl_path, vpgl_opts);
        if (saudit->parsed()) return run_stability_audit(saudit_r, saudit_g, saudit_d, saudit_opts);
        if (taudit->parsed()) return run_torsion_audit(taudit_r, taudit_g, taudit_cap, taudit_opts);
    } catch (const mhodge::InternalCheckError& ex) {
        std::cerr << "internal invariant violated (bug): " << ex.what() << "\n";
        return 3;
    } catch (const mhodge::OpenConjectureError& ex) {
        std::cerr << "not computable: " << ex.what() << "\n";
        return 2;
    } catch (const mhodge::ParameterError& ex) {
        std::cerr << "parameter error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "internal error: " << ex.what() << "\n";
        return 3;
    }
    return 0;
}
