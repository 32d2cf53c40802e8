#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mirrorhodge/bipoly.hpp"
#include "mirrorhodge/sl_variant.hpp"
#include "mirrorhodge/torsion.hpp"

namespace mhodge {

struct NamedCheck {
    std::string name;
    bool pass = false;
};

struct MirrorParams {
    int r = 0;
    long long d = 0;
    long long e = 0;
    int g = 0;
};

enum class Verdict { kEqual, kMismatch };

struct FirstDiff {
    ExpPair exp{0, 0};
    std::string lhs; // coefficient in sl_enum
    std::string rhs; // coefficient in the first disagreeing polynomial
};

// Result of one (r, d, e, g) verification: the four polynomials, their
// term-by-term comparison, the per-run invariant checks, and stage timings.
struct MirrorReport {
    MirrorParams params;
    BiPoly sl_enum;
    BiPoly sl_filter;
    BiPoly pgl_closed;
    BiPoly pgl_raw;
    Verdict verdict = Verdict::kMismatch;
    std::optional<FirstDiff> first_diff;
    std::vector<NamedCheck> checks;
    std::vector<std::pair<std::string, long long>> timing_ms; // stage -> wall ms
    std::string label;
    bool all_checks_pass() const;
};

// Compute all four polynomials and compare them. For r = 2, 3 an "equal"
// verdict verifies the full mirror identity at (d, e, g); for larger primes
// it verifies the type-(1,...,1) vs finite-quotient identity, with the full
// correspondence labeled open.
MirrorReport mirror_check(int r, long long d, long long e, int g);

struct SweepEntry {
    MirrorParams params;
    std::optional<MirrorReport> report;
    std::string error;   // empty when report is present
    int error_class = 0; // 0 none, 2 parameter, 3 internal
};

struct SweepSummary {
    std::size_t total = 0;
    std::size_t equal = 0;
    std::size_t mismatch = 0;
    std::size_t errors = 0;
};

struct SweepResult {
    std::vector<SweepEntry> entries; // in input order, independent of --jobs
    SweepSummary summary;
    std::vector<NamedCheck> cross_checks; // e.g. (d,e)-independence within fixed (r,g)
    int exit_code = 0;                    // 0 ok, 1 mismatch, 2 parameter error, 3 internal
};

// Batch harness: the Cartesian product of the parameter lists, evaluated with
// up to `jobs` workers. Per-instance errors are aggregated, never aborting
// the sweep; entry order and all bytes of the result are independent of
// `jobs`.
SweepResult sweep(const std::vector<int>& ranks, const std::vector<int>& genera,
                  const std::vector<long long>& ds, const std::vector<long long>& es,
                  int jobs = 1);

struct StabilityAuditRow {
    MTuple m;
    DegreeVector degrees;
    bool stable = false;
    int failing_k = 0;
};

struct StabilityAuditReport {
    int r = 0;
    int g = 0;
    long long d = 0;
    std::vector<StabilityAuditRow> rows;
    std::size_t passes = 0;
    bool all_pass = false;
};

// Enumerate every admissible m-tuple, reconstruct its degrees and check
// stability. The expected outcome is a 100% pass rate.
StabilityAuditReport stability_audit(int r, int g, long long d);

struct TorsionAuditReport {
    int r = 0;
    int g = 0;
    long long cap = 0;
    bool full_mode = false;              // false: group too large, reduced-only checks ran
    std::vector<long long> histogram;    // pairing-value counts (full mode)
    std::vector<NamedCheck> checks;
    bool all_pass = false;
};

// Verify pairing-value equidistribution and full/reduced agreement of the
// character average for sampled nonzero gamma and every e in 1..r-1. When
// r^{2g} exceeds the cap, runs the reduced-only consistency checks and says
// so in the report.
TorsionAuditReport torsion_audit(int r, int g, long long cap = kDefaultEnumCap);

} // namespace mhodge
