#include "mirrorhodge/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <thread>

#include "mirrorhodge/pgl_variant.hpp"

namespace mhodge {

namespace {

long long run_timed(BiPoly& slot, const std::function<BiPoly()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    slot = fn();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
}

// First exponent pair at which a and b disagree, in canonical term order.
std::optional<FirstDiff> first_difference(const BiPoly& a, const BiPoly& b) {
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    while (ia != a.terms().end() || ib != b.terms().end()) {
        if (ib == b.terms().end() || (ia != a.terms().end() && ia->first < ib->first)) {
            return FirstDiff{ia->first, ia->second.str(), "0"};
        }
        if (ia == a.terms().end() || ib->first < ia->first) {
            return FirstDiff{ib->first, "0", ib->second.str()};
        }
        if (ia->second != ib->second) {
            return FirstDiff{ia->first, ia->second.str(), ib->second.str()};
        }
        ++ia;
        ++ib;
    }
    return std::nullopt;
}

void validate_mirror_params(int r, long long d, long long e, int g) {
    require_prime(r, "rank");
    if (g < 1) throw ParameterError("genus must be >= 1 (g = 0 has no interpretation here)");
    require_coprime(d, r, "degree d");
    require_coprime(e, r, "degree e");
}

} // namespace

bool MirrorReport::all_checks_pass() const {
    for (const NamedCheck& c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

MirrorReport mirror_check(int r, long long d, long long e, int g) {
    validate_mirror_params(r, d, e, g);

    MirrorReport rep;
    rep.params = MirrorParams{r, d, e, g};
    rep.timing_ms.emplace_back("sl_enum", run_timed(rep.sl_enum, [&] { return sl_variant_enum(r, g, d); }));
    rep.timing_ms.emplace_back("sl_filter", run_timed(rep.sl_filter, [&] { return sl_variant_filter(r, g, d); }));
    rep.timing_ms.emplace_back("pgl_closed", run_timed(rep.pgl_closed, [&] { return pgl_variant_closed(r, g, e); }));
    rep.timing_ms.emplace_back("pgl_raw", run_timed(rep.pgl_raw, [&] { return pgl_variant_raw(r, g, e); }));

    const bool equal = rep.sl_enum == rep.sl_filter && rep.sl_enum == rep.pgl_closed &&
                       rep.sl_enum == rep.pgl_raw;
    rep.verdict = equal ? Verdict::kEqual : Verdict::kMismatch;
    if (!equal) {
        for (const BiPoly* other : {&rep.sl_filter, &rep.pgl_closed, &rep.pgl_raw}) {
            rep.first_diff = first_difference(rep.sl_enum, *other);
            if (rep.first_diff) break;
        }
    }

    const Int count = int_pow(Int(r), static_cast<unsigned>(2 * g)) - 1;
    const int top = (static_cast<int>(r) * r + r - 2) * (g - 1);
    const auto all = {&rep.sl_enum, &rep.sl_filter, &rep.pgl_closed, &rep.pgl_raw};
    bool symmetric = true;
    bool divisible = true;
    bool cancelled = true;
    for (const BiPoly* p : all) {
        symmetric = symmetric && uv_symmetric(*p);
        divisible = divisible && divisible_by(*p, count);
        cancelled = cancelled && coeff(*p, top, top).is_zero();
    }
    rep.checks.push_back(NamedCheck{"uv_symmetry", symmetric});
    rep.checks.push_back(NamedCheck{"group_count_divisibility", divisible});
    rep.checks.push_back(NamedCheck{"top_cancellation", cancelled});

    rep.label = (r <= 3) ? "mirror identity (established range)"
                         : "type-(1,...,1) vs finite-quotient identity; full correspondence open";
    return rep;
}

SweepResult sweep(const std::vector<int>& ranks, const std::vector<int>& genera,
                  const std::vector<long long>& ds, const std::vector<long long>& es,
                  int jobs) {
    if (jobs < 1) throw ParameterError("jobs must be >= 1");

    std::vector<MirrorParams> tasks;
    for (int r : ranks) {
        for (int g : genera) {
            for (long long d : ds) {
                for (long long e : es) {
                    tasks.push_back(MirrorParams{r, d, e, g});
                }
            }
        }
    }

    SweepResult result;
    result.entries.resize(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            SweepEntry& entry = result.entries[i];
            entry.params = tasks[i];
            try {
                entry.report = mirror_check(tasks[i].r, tasks[i].d, tasks[i].e, tasks[i].g);
            } catch (const InternalCheckError& ex) {
                entry.error = ex.what();
                entry.error_class = 3;
            } catch (const ParameterError& ex) {
                entry.error = ex.what();
                entry.error_class = 2;
            } catch (const std::exception& ex) {
                entry.error = ex.what();
                entry.error_class = 3;
            }
        }
    };
    const std::size_t n_threads =
        std::min(static_cast<std::size_t>(jobs), std::max<std::size_t>(tasks.size(), 1));
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    result.summary.total = result.entries.size();
    for (const SweepEntry& entry : result.entries) {
        if (!entry.report) {
            ++result.summary.errors;
        } else if (entry.report->verdict == Verdict::kEqual) {
            ++result.summary.equal;
        } else {
            ++result.summary.mismatch;
        }
    }

    // Within a fixed (r, g), every coprime (d, e) must produce one and the
    // same polynomial.
    bool de_independent = true;
    for (std::size_t i = 0; i < result.entries.size(); ++i) {
        if (!result.entries[i].report) continue;
        for (std::size_t j = i + 1; j < result.entries.size(); ++j) {
            if (!result.entries[j].report) continue;
            if (result.entries[i].params.r == result.entries[j].params.r &&
                result.entries[i].params.g == result.entries[j].params.g &&
                result.entries[i].report->sl_enum != result.entries[j].report->sl_enum) {
                de_independent = false;
            }
        }
    }
    if (!result.entries.empty()) {
        result.cross_checks.push_back(NamedCheck{"de_independence", de_independent});
    }

    bool any_internal = false;
    bool any_param = false;
    for (const SweepEntry& entry : result.entries) {
        if (entry.error_class == 3) any_internal = true;
        if (entry.error_class == 2) any_param = true;
    }
    bool cross_ok = true;
    for (const NamedCheck& c : result.cross_checks) cross_ok = cross_ok && c.pass;
    if (any_internal) {
        result.exit_code = 3;
    } else if (any_param) {
        result.exit_code = 2;
    } else if (result.summary.mismatch > 0 || !cross_ok) {
        result.exit_code = 1;
    } else {
        result.exit_code = 0;
    }
    return result;
}

StabilityAuditReport stability_audit(int r, int g, long long d) {
    StabilityAuditReport rep;
    rep.r = r;
    rep.g = g;
    rep.d = d;
    for (const MTuple& m : enumerate_mtuples(r, g, d)) {
        StabilityAuditRow row;
        row.m = m;
        row.degrees = reconstruct_degrees(r, g, d, m);
        const StabilityCheck st = check_stability(r, d, row.degrees);
        row.stable = st.stable;
        row.failing_k = st.failing_k;
        if (row.stable) ++rep.passes;
        rep.rows.push_back(std::move(row));
    }
    rep.all_pass = rep.passes == rep.rows.size();
    return rep;
}

TorsionAuditReport torsion_audit(int r, int g, long long cap) {
    require_prime(r, "rank");
    if (g < 1) throw ParameterError("genus must be >= 1");
    if (cap < 1) throw ParameterError("cap must be >= 1");

    TorsionAuditReport rep;
    rep.r = r;
    rep.g = g;
    rep.cap = cap;

    const TorsionGroup group(r, g);
    rep.full_mode = group.order() <= cap;

    // Deterministic sample of nontrivial elements: two basis vectors from the
    // two symplectic halves plus the all-ones vector.
    std::vector<TorsionElement> sample;
    sample.push_back(group.basis(0));
    sample.push_back(group.basis(2 * g - 1));
    sample.push_back(group.element(std::vector<int>(static_cast<std::size_t>(2 * g), 1)));

    if (rep.full_mode) {
        const Int expected = int_pow(Int(r), static_cast<unsigned>(2 * g - 1));
        bool equidistributed = true;
        for (const TorsionElement& gamma : sample) {
            const std::vector<long long> counts = pairing_value_counts(gamma, cap);
            if (rep.histogram.empty()) rep.histogram = counts;
            for (long long c : counts) {
                if (Int(c) != expected) equidistributed = false;
            }
        }
        rep.checks.push_back(NamedCheck{"pairing_equidistribution", equidistributed});

        bool modes_agree = true;
        for (const TorsionElement& gamma : sample) {
            for (long long e = 1; e < r; ++e) {
                const BiPoly full = character_average(gamma, e, AverageMode::kFull, cap);
                const BiPoly reduced = character_average(gamma, e, AverageMode::kReduced, cap);
                if (full != reduced) modes_agree = false;
            }
        }
        rep.checks.push_back(NamedCheck{"character_average_mode_agreement", modes_agree});
    } else {
        bool shift_ok = true;
        bool symmetric = true;
        for (long long e = 1; e < r; ++e) {
            const BiPoly a = character_average(sample.front(), e, AverageMode::kReduced, cap);
            const BiPoly b = character_average(sample.front(), e + r, AverageMode::kReduced, cap);
            shift_ok = shift_ok && (a == b);
            symmetric = symmetric && uv_symmetric(a);
        }
        rep.checks.push_back(NamedCheck{"character_average_e_shift_invariance", shift_ok});
        rep.checks.push_back(NamedCheck{"character_average_uv_symmetry", symmetric});
    }

    rep.all_pass = true;
    for (const NamedCheck& c : rep.checks) rep.all_pass = rep.all_pass && c.pass;
    return rep;
}

} // namespace mhodge
