#include "mirrorhodge/serialize.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace mhodge {

namespace {

std::string coefficient_string(const Int& c) { return c.str(); }

Int coefficient_from_string(const std::string& s) {
    if (s.empty()) throw ParameterError("empty coefficient string");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw ParameterError("malformed coefficient string '" + s + "'");
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') {
            throw ParameterError("malformed coefficient string '" + s + "'");
        }
    }
    return Int(s);
}

std::string monomial_text(const ExpPair& e, const Int& magnitude) {
    std::ostringstream os;
    const bool constant = e.first == 0 && e.second == 0;
    if (constant || magnitude != 1) os << magnitude.str();
    bool need_star = !constant && magnitude != 1;
    if (e.first > 0) {
        if (need_star) os << "*";
        os << "u";
        if (e.first > 1) os << "^" << e.first;
        need_star = true;
    }
    if (e.second > 0) {
        if (need_star) os << "*";
        os << "v";
        if (e.second > 1) os << "^" << e.second;
    }
    return os.str();
}

OrderedJson checks_to_json(const std::vector<NamedCheck>& checks) {
    OrderedJson arr = OrderedJson::array();
    for (const NamedCheck& c : checks) {
        OrderedJson item;
        item["name"] = c.name;
        item["pass"] = c.pass;
        arr.push_back(std::move(item));
    }
    return arr;
}

std::vector<NamedCheck> checks_from_json(const OrderedJson& arr) {
    std::vector<NamedCheck> out;
    for (const auto& item : arr) {
        out.push_back(NamedCheck{item.at("name").get<std::string>(), item.at("pass").get<bool>()});
    }
    return out;
}

std::string report_label(int r) {
    return (r <= 3) ? "mirror identity (established range)"
                    : "type-(1,...,1) vs finite-quotient identity; full correspondence open";
}

} // namespace

OrderedJson poly_to_json(const BiPoly& p) {
    OrderedJson j;
    j["vars"] = OrderedJson::array({"u", "v"});
    OrderedJson terms = OrderedJson::array();
    for (const auto& [e, c] : p.terms()) {
        OrderedJson term;
        term["e"] = OrderedJson::array({e.first, e.second});
        term["c"] = coefficient_string(c);
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

BiPoly poly_from_json(const OrderedJson& j) {
    const auto& vars = j.at("vars");
    if (!vars.is_array() || vars.size() != 2 || vars[0] != "u" || vars[1] != "v") {
        throw ParameterError("polynomial JSON must declare vars [\"u\",\"v\"]");
    }
    BiPoly out;
    for (const auto& term : j.at("terms")) {
        const auto& e = term.at("e");
        if (!e.is_array() || e.size() != 2) {
            throw ParameterError("polynomial term exponent must be a pair");
        }
        const int p = e[0].get<int>();
        const int q = e[1].get<int>();
        if (p < 0 || q < 0) throw ParameterError("polynomial exponents must be nonnegative");
        const Int c = coefficient_from_string(term.at("c").get<std::string>());
        if (c.is_zero()) throw ParameterError("polynomial JSON stores a zero coefficient");
        out.add_term(p, q, c);
    }
    return out;
}

std::string poly_to_text(const BiPoly& p) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<ExpPair, Int>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        const int ta = a.first.first + a.first.second;
        const int tb = b.first.first + b.first.second;
        if (ta != tb) return ta > tb;
        return a.first > b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        const bool negative = c < 0;
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        os << monomial_text(e, boost::multiprecision::abs(c));
    }
    return os.str();
}

OrderedJson report_to_json(const MirrorReport& rep, bool include_timing) {
    OrderedJson j;
    j["params"] = {{"r", rep.params.r}, {"d", rep.params.d}, {"e", rep.params.e}, {"g", rep.params.g}};
    OrderedJson polys;
    polys["sl_enum"] = poly_to_json(rep.sl_enum);
    polys["sl_filter"] = poly_to_json(rep.sl_filter);
    polys["pgl_closed"] = poly_to_json(rep.pgl_closed);
    polys["pgl_raw"] = poly_to_json(rep.pgl_raw);
    j["polynomials"] = std::move(polys);
    j["verdict"] = rep.verdict == Verdict::kEqual ? "equal" : "mismatch";
    if (rep.first_diff) {
        OrderedJson diff;
        diff["e"] = OrderedJson::array({rep.first_diff->exp.first, rep.first_diff->exp.second});
        diff["lhs"] = rep.first_diff->lhs;
        diff["rhs"] = rep.first_diff->rhs;
        j["first_diff"] = std::move(diff);
    } else {
        j["first_diff"] = nullptr;
    }
    j["checks"] = checks_to_json(rep.checks);
    OrderedJson timing = OrderedJson::object();
    if (include_timing) {
        for (const auto& [stage, ms] : rep.timing_ms) timing[stage] = ms;
    }
    j["timing_ms"] = std::move(timing);
    return j;
}

MirrorReport report_from_json(const OrderedJson& j) {
    MirrorReport rep;
    const auto& params = j.at("params");
    rep.params.r = params.at("r").get<int>();
    rep.params.d = params.at("d").get<long long>();
    rep.params.e = params.at("e").get<long long>();
    rep.params.g = params.at("g").get<int>();
    const auto& polys = j.at("polynomials");
    rep.sl_enum = poly_from_json(polys.at("sl_enum"));
    rep.sl_filter = poly_from_json(polys.at("sl_filter"));
    rep.pgl_closed = poly_from_json(polys.at("pgl_closed"));
    rep.pgl_raw = poly_from_json(polys.at("pgl_raw"));
    const std::string verdict = j.at("verdict").get<std::string>();
    if (verdict != "equal" && verdict != "mismatch") {
        throw ParameterError("unknown verdict '" + verdict + "'");
    }
    rep.verdict = verdict == "equal" ? Verdict::kEqual : Verdict::kMismatch;
    if (!j.at("first_diff").is_null()) {
        const auto& diff = j.at("first_diff");
        FirstDiff fd;
        fd.exp = ExpPair{diff.at("e")[0].get<int>(), diff.at("e")[1].get<int>()};
        fd.lhs = diff.at("lhs").get<std::string>();
        fd.rhs = diff.at("rhs").get<std::string>();
        rep.first_diff = fd;
    }
    rep.checks = checks_from_json(j.at("checks"));
    for (const auto& [stage, ms] : j.at("timing_ms").items()) {
        rep.timing_ms.emplace_back(stage, ms.get<long long>());
    }
    rep.label = report_label(rep.params.r);
    return rep;
}

std::string report_to_text(const MirrorReport& rep, bool include_timing) {
    std::ostringstream os;
    os << "mirror check: r=" << rep.params.r << " d=" << rep.params.d << " e=" << rep.params.e
       << " g=" << rep.params.g << "\n";
    os << "  scope: " << rep.label << "\n";
    os << "  sl_enum    = " << poly_to_text(rep.sl_enum) << "\n";
    os << "  sl_filter  = " << poly_to_text(rep.sl_filter) << "\n";
    os << "  pgl_closed = " << poly_to_text(rep.pgl_closed) << "\n";
    os << "  pgl_raw    = " << poly_to_text(rep.pgl_raw) << "\n";
    os << "  verdict: " << (rep.verdict == Verdict::kEqual ? "equal" : "mismatch") << "\n";
    if (rep.first_diff) {
        os << "  first diff at u^" << rep.first_diff->exp.first << " v^" << rep.first_diff->exp.second
           << ": " << rep.first_diff->lhs << " vs " << rep.first_diff->rhs << "\n";
    }
    for (const NamedCheck& c : rep.checks) {
        os << "  check " << c.name << ": " << (c.pass ? "pass" : "FAIL") << "\n";
    }
    if (include_timing) {
        os << "  timing (ms):";
        for (const auto& [stage, ms] : rep.timing_ms) os << " " << stage << "=" << ms;
        os << "\n";
    }
    return os.str();
}

OrderedJson sweep_to_json(const SweepResult& result, bool include_timing) {
    OrderedJson j;
    OrderedJson reports = OrderedJson::array();
    for (const SweepEntry& entry : result.entries) {
        if (entry.report) {
            reports.push_back(report_to_json(*entry.report, include_timing));
        } else {
            OrderedJson item;
            item["params"] = {{"r", entry.params.r},
                              {"d", entry.params.d},
                              {"e", entry.params.e},
                              {"g", entry.params.g}};
            item["error"] = entry.error;
            item["error_class"] = entry.error_class;
            reports.push_back(std::move(item));
        }
    }
    j["reports"] = std::move(reports);
    j["summary"] = {{"total", result.summary.total},
                    {"equal", result.summary.equal},
                    {"mismatch", result.summary.mismatch},
                    {"errors", result.summary.errors}};
    j["cross_checks"] = checks_to_json(result.cross_checks);
    j["exit_code"] = result.exit_code;
    return j;
}

std::string sweep_to_text(const SweepResult& result, bool include_timing) {
    std::ostringstream os;
    for (const SweepEntry& entry : result.entries) {
        if (entry.report) {
            os << report_to_text(*entry.report, include_timing);
        } else {
            os << "mirror check: r=" << entry.params.r << " d=" << entry.params.d
               << " e=" << entry.params.e << " g=" << entry.params.g << "\n"
               << "  error (" << (entry.error_class == 3 ? "internal" : "parameter")
               << "): " << entry.error << "\n";
        }
    }
    os << "sweep summary: total=" << result.summary.total << " equal=" << result.summary.equal
       << " mismatch=" << result.summary.mismatch << " errors=" << result.summary.errors << "\n";
    for (const NamedCheck& c : result.cross_checks) {
        os << "  cross-check " << c.name << ": " << (c.pass ? "pass" : "FAIL") << "\n";
    }
    return os.str();
}

OrderedJson stability_audit_to_json(const StabilityAuditReport& rep) {
    OrderedJson j;
    j["params"] = {{"r", rep.r}, {"g", rep.g}, {"d", rep.d}};
    OrderedJson rows = OrderedJson::array();
    for (const StabilityAuditRow& row : rep.rows) {
        OrderedJson item;
        item["m"] = row.m;
        item["l"] = row.degrees;
        item["stable"] = row.stable;
        item["failing_k"] = row.failing_k;
        rows.push_back(std::move(item));
    }
    j["tuples"] = std::move(rows);
    j["passes"] = rep.passes;
    j["total"] = rep.rows.size();
    j["all_pass"] = rep.all_pass;
    return j;
}

std::string stability_audit_to_text(const StabilityAuditReport& rep) {
    std::ostringstream os;
    os << "stability audit: r=" << rep.r << " g=" << rep.g << " d=" << rep.d << "\n";
    for (const StabilityAuditRow& row : rep.rows) {
        os << "  m=(";
        for (std::size_t i = 0; i < row.m.size(); ++i) os << (i ? "," : "") << row.m[i];
        os << ") l=(";
        for (std::size_t i = 0; i < row.degrees.size(); ++i) os << (i ? "," : "") << row.degrees[i];
        os << ") " << (row.stable ? "stable" : "UNSTABLE at k=" + std::to_string(row.failing_k))
           << "\n";
    }
    os << "  " << rep.passes << "/" << rep.rows.size() << " pass\n";
    return os.str();
}

OrderedJson torsion_audit_to_json(const TorsionAuditReport& rep) {
    OrderedJson j;
    j["params"] = {{"r", rep.r}, {"g", rep.g}, {"cap", rep.cap}};
    j["mode"] = rep.full_mode ? "full" : "reduced-only";
    j["histogram"] = rep.histogram;
    j["checks"] = checks_to_json(rep.checks);
    j["all_pass"] = rep.all_pass;
    return j;
}

std::string torsion_audit_to_text(const TorsionAuditReport& rep) {
    std::ostringstream os;
    os << "torsion audit: r=" << rep.r << " g=" << rep.g << " cap=" << rep.cap << "\n";
    os << "  mode: " << (rep.full_mode ? "full" : "reduced-only (group exceeds cap)") << "\n";
    if (!rep.histogram.empty()) {
        os << "  pairing histogram:";
        for (long long c : rep.histogram) os << " " << c;
        os << "\n";
    }
    for (const NamedCheck& c : rep.checks) {
        os << "  check " << c.name << ": " << (c.pass ? "pass" : "FAIL") << "\n";
    }
    return os.str();
}

std::string json_to_bytes(const OrderedJson& j) { return j.dump(2) + "\n"; }

} // namespace mhodge
