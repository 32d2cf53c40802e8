// Acceptance suite: runs every cross-route identity check at its stated
// tolerance (always exact) and prints one pass/fail line per criterion.
// Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "mirrorhodge/pgl_variant.hpp"
#include "mirrorhodge/report.hpp"
#include "mirrorhodge/serialize.hpp"
#include "oracle.hpp"

using namespace mhodge;
namespace fs = std::filesystem;

namespace {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

double elapsed_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

class Harness {
public:
    template <typename F>
    void criterion(int id, const std::string& name, F&& body) {
        CriterionResult res;
        res.id = id;
        res.name = name;
        const auto start = std::chrono::steady_clock::now();
        try {
            body(res);
        } catch (const InternalCheckError& ex) {
            internal_failure = true;
            if (res.detail.empty()) res.detail = std::string("internal check: ") + ex.what();
        } catch (const std::exception& ex) {
            if (res.detail.empty()) res.detail = std::string("exception: ") + ex.what();
        }
        res.pass = res.detail.empty();
        res.seconds = elapsed_since(start);
        std::printf("[%s] criterion %2d: %s (%.2fs)%s%s\n", res.pass ? "PASS" : "FAIL", res.id,
                    res.name.c_str(), res.seconds, res.detail.empty() ? "" : " -- ",
                    res.detail.c_str());
        std::fflush(stdout);
        results.push_back(std::move(res));
    }

    int exit_code() const {
        for (const CriterionResult& r : results) {
            if (!r.pass) return 1;
        }
        return 0;
    }

    std::vector<CriterionResult> results;
    bool internal_failure = false;
};

void expect(CriterionResult& res, bool ok, const std::string& what) {
    if (!ok && res.detail.empty()) res.detail = what;
}

std::string run_key(int r, int g) { return std::to_string(r) + "g" + std::to_string(g); }

bool equals_reference(const BiPoly& p, const oracle::Poly& ref) {
    const auto expected = oracle::terms(ref);
    if (p.terms().size() != expected.size()) return false;
    for (const auto& [ep, eq, ec] : expected) {
        if (coeff(p, ep, eq) != ec) return false;
    }
    return true;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

int main() {
    Harness h;

    // Reports from criteria 1-3, reused by the property suite (criterion 7)
    // and the serialization criterion (10).
    std::vector<MirrorReport> collected;
    // The first polynomial seen per (r, g), for (d,e)-independence checks.
    std::map<std::string, BiPoly> per_rg;

    auto record = [&](const MirrorReport& rep) {
        collected.push_back(rep);
        per_rg.emplace(run_key(rep.params.r, rep.params.g), rep.sl_enum);
    };

    h.criterion(1, "rank 2 mirror identity, g = 2..12, (d,e) = (1,1), < 10 s", [&](CriterionResult& res) {
        const auto t0 = std::chrono::steady_clock::now();
        for (int g = 2; g <= 12; ++g) {
            const MirrorReport rep = mirror_check(2, 1, 1, g);
            record(rep);
            expect(res, rep.verdict == Verdict::kEqual, "mismatch at g = " + std::to_string(g));
        }
        expect(res, elapsed_since(t0) < 10.0, "runtime budget of 10 s exceeded");
    });

    h.criterion(2, "rank 3 mirror identity, g = 2..8, (d,e) in {1,2}^2, < 60 s", [&](CriterionResult& res) {
        const auto t0 = std::chrono::steady_clock::now();
        for (int g = 2; g <= 8; ++g) {
            for (long long d : {1, 2}) {
                for (long long e : {1, 2}) {
                    const MirrorReport rep = mirror_check(3, d, e, g);
                    record(rep);
                    expect(res, rep.verdict == Verdict::kEqual,
                           "mismatch at g = " + std::to_string(g) + " d = " + std::to_string(d) +
                               " e = " + std::to_string(e));
                }
            }
        }
        expect(res, elapsed_since(t0) < 60.0, "runtime budget of 60 s exceeded");
    });

    h.criterion(3, "rank 5 and 7 type-(1,..,1) identity, g = 2..4, < 120 s", [&](CriterionResult& res) {
        const auto t0 = std::chrono::steady_clock::now();
        for (int r : {5, 7}) {
            for (int g : {2, 3, 4}) {
                for (long long d = 1; d < r && res.detail.empty(); ++d) {
                    const MirrorReport rep = mirror_check(r, d, d, g);
                    record(rep);
                    expect(res, rep.verdict == Verdict::kEqual,
                           "mismatch at r = " + std::to_string(r) + " g = " + std::to_string(g) +
                               " d = " + std::to_string(d));
                }
            }
        }
        expect(res, elapsed_since(t0) < 120.0, "runtime budget of 120 s exceeded");
    });

    h.criterion(4, "spot value (2,1,1,2) vs independent brute-force expansion", [&](CriterionResult& res) {
        const MirrorReport rep = mirror_check(2, 1, 1, 2);
        const BiPoly frozen = bipoly_from_terms({{4, 3, -15}, {3, 4, -15}});
        expect(res, rep.verdict == Verdict::kEqual, "verdict not equal");
        expect(res, rep.sl_enum == frozen, "does not match the frozen value");
        expect(res, equals_reference(rep.sl_enum, oracle::variant_reference(2, 2)),
               "does not match the brute-force reference");
    });

    h.criterion(5, "spot value (3,1,1,2) vs independent brute-force expansion", [&](CriterionResult& res) {
        const MirrorReport rep = mirror_check(3, 1, 1, 2);
        const BiPoly frozen = bipoly_from_terms(
            {{1, 0, -1}, {0, 1, -1}, {1, 1, 1}, {2, 1, -1}, {1, 2, -1}}).scaled(Int(80)).shifted(8, 8);
        expect(res, rep.verdict == Verdict::kEqual, "verdict not equal");
        expect(res, rep.sl_enum == frozen, "does not match the frozen value");
        expect(res, equals_reference(rep.sl_enum, oracle::variant_reference(3, 2)),
               "does not match the brute-force reference");
    });

    h.criterion(6, "g = 1 yields the zero polynomial on all four routes", [&](CriterionResult& res) {
        for (int r : {2, 3, 5, 7}) {
            for (long long d = 1; d < r; ++d) {
                for (long long e = 1; e < r; ++e) {
                    const MirrorReport rep = mirror_check(r, d, e, 1);
                    const bool zero = rep.sl_enum.is_zero() && rep.sl_filter.is_zero() &&
                                      rep.pgl_closed.is_zero() && rep.pgl_raw.is_zero();
                    expect(res, rep.verdict == Verdict::kEqual && zero,
                           "nonzero at r = " + std::to_string(r));
                }
            }
        }
    });

    h.criterion(7, "property suite over criteria 1-3 runs", [&](CriterionResult& res) {
        expect(res, !collected.empty(), "no collected runs");
        for (const MirrorReport& rep : collected) {
            const int r = rep.params.r;
            const int g = rep.params.g;
            const Int count = int_pow(Int(r), static_cast<unsigned>(2 * g)) - 1;
            for (const BiPoly* p : {&rep.sl_enum, &rep.sl_filter, &rep.pgl_closed, &rep.pgl_raw}) {
                expect(res, uv_symmetric(*p), "u-v symmetry fails at r=" + std::to_string(r) +
                                                  " g=" + std::to_string(g));
                expect(res, divisible_by(*p, count),
                       "group-count divisibility fails at r=" + std::to_string(r) +
                           " g=" + std::to_string(g));
            }
            // d- and e-independence: identical to the (r, g) representative
            expect(res, rep.sl_enum == per_rg.at(run_key(r, g)),
                   "(d,e)-independence fails at r=" + std::to_string(r) + " g=" + std::to_string(g));
            expect(res, rep.all_checks_pass(), "per-run checks fail at r=" + std::to_string(r) +
                                                   " g=" + std::to_string(g));
        }
        // Sign-convention invariance of the enumeration route.
        for (const auto& [r, g] : std::vector<std::pair<int, int>>{{2, 5}, {3, 4}, {5, 3}, {7, 2}}) {
            for (long long d = 1; d < r; ++d) {
                expect(res,
                       sl_variant_enum(r, g, d, CongruenceSign::kMinusD) ==
                           sl_variant_enum(r, g, d, CongruenceSign::kPlusD),
                       "sign-convention invariance fails at r=" + std::to_string(r) +
                           " g=" + std::to_string(g));
            }
        }
        expect(res, !h.internal_failure, "an internal exactness check failed");
    });

    h.criterion(8, "stability audit 100% pass, r in {2,3}, g in {2..5}, all coprime d", [&](CriterionResult& res) {
        for (int r : {2, 3}) {
            for (int g : {2, 3, 4, 5}) {
                for (long long d = 1; d < r; ++d) {
                    const StabilityAuditReport rep = stability_audit(r, g, d);
                    expect(res, rep.all_pass && !rep.rows.empty(),
                           "failure at r=" + std::to_string(r) + " g=" + std::to_string(g) +
                               " d=" + std::to_string(d) + " (" + std::to_string(rep.passes) + "/" +
                               std::to_string(rep.rows.size()) + ")");
                }
            }
        }
    });

    h.criterion(9, "torsion audit: equidistribution and mode agreement up to the cap", [&](CriterionResult& res) {
        for (int g = 2; g <= 9; ++g) { // 2^{2g} <= 10^6 up to g = 9
            const TorsionAuditReport rep = torsion_audit(2, g);
            expect(res, rep.full_mode && rep.all_pass, "failure at r=2 g=" + std::to_string(g));
        }
        for (int g = 2; g <= 6; ++g) { // 3^{2g} <= 10^6 up to g = 6
            const TorsionAuditReport rep = torsion_audit(3, g);
            expect(res, rep.full_mode && rep.all_pass, "failure at r=3 g=" + std::to_string(g));
        }
        // 2^20 and 3^14 exceed the default cap: reduced-only, still passing
        const TorsionAuditReport r2 = torsion_audit(2, 10);
        expect(res, !r2.full_mode && r2.all_pass, "cap boundary not honored at r=2 g=10");
        const TorsionAuditReport r3 = torsion_audit(3, 7);
        expect(res, !r3.full_mode && r3.all_pass, "cap boundary not honored at r=3 g=7");
    });

    h.criterion(10, "serialization: bit-exact round-trips and --jobs-independent bytes", [&](CriterionResult& res) {
        for (const MirrorReport& rep : collected) {
            for (const BiPoly* p : {&rep.sl_enum, &rep.sl_filter, &rep.pgl_closed, &rep.pgl_raw}) {
                expect(res, poly_from_json(poly_to_json(*p)) == *p, "polynomial round-trip fails");
                expect(res,
                       json_to_bytes(poly_to_json(poly_from_json(poly_to_json(*p)))) ==
                           json_to_bytes(poly_to_json(*p)),
                       "polynomial bytes are not canonical");
            }
            const OrderedJson j = report_to_json(rep);
            expect(res, json_to_bytes(report_to_json(report_from_json(j))) == json_to_bytes(j),
                   "report round-trip fails");
        }
        // CLI byte-identity across --jobs
        const fs::path dir = fs::temp_directory_path() / "mirror_hodge_acceptance";
        fs::create_directories(dir);
        const std::string cli = MIRROR_HODGE_CLI_PATH;
        const std::string base = " sweep -r 2 3 -g 2..4 --deg-d 1 --deg-e 1 --format json";
        std::vector<std::string> outputs;
        for (int jobs : {1, 2, 4}) {
            const fs::path out = dir / ("sweep_j" + std::to_string(jobs) + ".json");
            const std::string cmd =
                cli + base + " --jobs " + std::to_string(jobs) + " --out " + out.string() + " 2>/dev/null";
            const int status = std::system(cmd.c_str());
            expect(res, WIFEXITED(status) && WEXITSTATUS(status) == 0, "CLI sweep failed");
            outputs.push_back(slurp(out));
        }
        expect(res, !outputs.empty() && !outputs.front().empty(), "CLI produced no output");
        for (const std::string& bytes : outputs) {
            expect(res, bytes == outputs.front(), "output differs across --jobs");
        }
    });

    const int rc = h.exit_code();
    std::printf("%s\n", rc == 0 ? "acceptance: all criteria pass" : "acceptance: FAILURES present");
    return rc;
}
