#include "andrasfai/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "andrasfai/circulant.hpp"
#include "andrasfai/errors.hpp"

namespace andrasfai {

std::string_view to_string(ClaimId claim) {
    switch (claim) {
        case ClaimId::distinct_count: return "distinct_count";
        case ClaimId::smallest_location: return "smallest_location";
        case ClaimId::second_largest_location: return "second_largest_location";
        case ClaimId::minus_one: return "minus_one";
        case ClaimId::plus_one: return "plus_one";
        case ClaimId::palindrome: return "palindrome";
        case ClaimId::gcd_certificate: return "gcd_certificate";
    }
    return "unknown";
}

std::string_view to_string(VerdictStatus status) {
    switch (status) {
        case VerdictStatus::pass: return "pass";
        case VerdictStatus::fail: return "fail";
        case VerdictStatus::erratum_detected: return "erratum_detected";
    }
    return "unknown";
}

ClaimId parse_claim_id(std::string_view name) {
    for (std::size_t i = 0; i < kClaimCount; ++i) {
        const auto claim = static_cast<ClaimId>(i);
        if (to_string(claim) == name) return claim;
    }
    throw ValidationError("unknown claim id '" + std::string(name) + "'");
}

VerdictStatus parse_verdict_status(std::string_view name) {
    for (auto status : {VerdictStatus::pass, VerdictStatus::fail, VerdictStatus::erratum_detected}) {
        if (to_string(status) == name) return status;
    }
    throw ValidationError("unknown verdict status '" + std::string(name) + "'");
}

namespace {

// Doubles in reports carry 12 significant digits so serialized output is stable.
double round12(double v) {
    if (!std::isfinite(v) || v == 0.0) return v == 0.0 ? 0.0 : v;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

std::vector<std::size_t> indices_near(const std::vector<double>& x, double target, double tol,
                                      std::size_t first = 0) {
    std::vector<std::size_t> out;
    for (std::size_t l = first; l < x.size(); ++l) {
        if (std::abs(x[l] - target) <= tol) out.push_back(l);
    }
    return out;
}

std::vector<std::size_t> sorted_pair(std::pair<std::size_t, std::size_t> p) {
    std::vector<std::size_t> v{p.first, p.second};
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

TheoremVerdict make_verdict(ClaimId claim, const Evidence& ev) {
    TheoremVerdict v;
    v.claim = claim;
    v.k = ev.k;
    return v;
}

// Multiplicity of `target` as seen by the oracle clustering, or by the closed-form spectrum
// when the oracle did not run.
std::size_t observed_multiplicity(const Evidence& ev, double target, const std::vector<std::size_t>& cf_indices) {
    if (ev.oracle_clusters) {
        for (const auto& c : *ev.oracle_clusters) {
            if (std::abs(c.value - target) <= ev.tol.cluster) return c.multiplicity;
        }
        return 0;
    }
    return cf_indices.size();
}

std::string oracle_note(const Evidence& ev) {
    if (ev.oracle_error) return "oracle failed: " + *ev.oracle_error;
    if (!ev.oracle) return "oracle skipped (n above oracle limit)";
    return "";
}

void append_detail(TheoremVerdict& v, const std::string& text) {
    if (text.empty()) return;
    if (!v.detail.empty()) v.detail += "; ";
    v.detail += text;
}

}  // namespace

Evidence gather_evidence(std::size_t k, const VerifyOptions& options) {
    if (k < 2) {
        throw InvalidParameter("verification requires k >= 2 (got k = " + std::to_string(k) + ")");
    }
    Evidence ev;
    ev.k = k;
    ev.tol = options.tol;
    ev.prediction = predict(k);
    if (options.tamper_prediction) {
        options.tamper_prediction(ev.prediction);
    }
    ev.spectrum = spectrum_closed_form(k);
    ev.table = pair_multiplicities(ev.spectrum, ev.tol.cluster);

    const auto graph = andrasfai_graph(k);
    ev.connected = is_connected(graph);
    if (graph.n() <= options.oracle_limit) {
        try {
            const auto matrix = adjacency_matrix(graph);
            ev.oracle = options.oracle_solver ? options.oracle_solver(matrix) : jacobi_eigenvalues(matrix);
            ev.oracle_clusters = cluster_distinct(ev.oracle->sorted_values, ev.tol.cluster);
        } catch (const std::exception& e) {
            ev.oracle.reset();
            ev.oracle_error = e.what();
        }
    }
    return ev;
}

TheoremVerdict verify_distinct_count(const Evidence& ev) {
    auto v = make_verdict(ClaimId::distinct_count, ev);
    const auto& p = ev.prediction;
    const std::size_t n = ev.spectrum.n();

    std::vector<std::size_t> expected_singletons{0};
    if (p.minus_one_expected) expected_singletons.push_back(n / 2);

    std::vector<std::size_t> singletons;
    bool pairs_only = true;
    for (const auto& c : ev.table.classes) {
        if (c.multiplicity() == 1) {
            singletons.push_back(c.indices.front());
        } else if (c.multiplicity() != 2 || c.indices[0] + c.indices[1] != n) {
            pairs_only = false;
        }
    }
    std::sort(singletons.begin(), singletons.end());
    const bool pattern_ok = pairs_only && singletons == expected_singletons;
    const std::size_t accidental = ev.table.accidental_coincidences();

    v.predicted = {{"distinct_count", p.distinct_count}, {"singletons", expected_singletons}};
    v.observed = {{"structural_classes", ev.table.classes.size()},
                  {"accidental_coincidences", accidental},
                  {"singletons", singletons},
                  {"pattern_ok", pattern_ok}};

    bool ok = ev.table.classes.size() == p.distinct_count && pattern_ok && accidental == 0;
    if (!ok) {
        append_detail(v, "structural classes " + std::to_string(ev.table.classes.size()) + " vs predicted " +
                             std::to_string(p.distinct_count) +
                             (accidental ? ", " + std::to_string(accidental) + " accidental coincidence(s)" : "") +
                             (pattern_ok ? "" : ", multiplicity pattern mismatch"));
    }

    if (ev.oracle) {
        const auto cmp = compare_spectra(ev.spectrum, *ev.oracle, ev.tol.match);
        v.observed["oracle_clusters"] = ev.oracle_clusters->size();
        v.observed["oracle_max_dev"] = round12(cmp.max_abs_dev);
        if (ev.oracle_clusters->size() != p.distinct_count) {
            ok = false;
            append_detail(v, "oracle clusters " + std::to_string(ev.oracle_clusters->size()));
        }
        if (!cmp.matched) {
            ok = false;
            append_detail(v, "closed form and oracle disagree");
        }
    } else {
        v.observed["oracle_clusters"] = nullptr;
        if (ev.oracle_error) ok = false;
        append_detail(v, oracle_note(ev));
    }
    v.status = ok ? VerdictStatus::pass : VerdictStatus::fail;
    return v;
}

TheoremVerdict verify_smallest_location(const Evidence& ev) {
    auto v = make_verdict(ClaimId::smallest_location, ev);
    const auto& x = ev.spectrum.values;
    const double min_value = *std::min_element(x.begin(), x.end());
    const auto argmin = indices_near(x, min_value, ev.tol.cluster);
    const auto expected = sorted_pair(ev.prediction.smallest_indices);
    const std::size_t at = ev.prediction.smallest_indices.first;

    v.predicted = {{"indices", expected}};
    v.observed = {{"indices", argmin}, {"value", round12(min_value)}};

    bool ok = argmin == expected;
    if (!ok) append_detail(v, "argmin index set differs from prediction");
    if (ev.oracle) {
        const double oracle_min = ev.oracle->sorted_values.front();
        const double dev = at < x.size() ? std::abs(x[at] - oracle_min) : std::numeric_limits<double>::infinity();
        v.observed["oracle_min"] = round12(oracle_min);
        v.observed["oracle_dev"] = round12(dev);
        if (!(dev < ev.tol.match)) {
            ok = false;
            append_detail(v, "x at predicted index does not match the oracle minimum");
        }
    } else {
        if (ev.oracle_error) ok = false;
        append_detail(v, oracle_note(ev));
    }
    v.status = ok ? VerdictStatus::pass : VerdictStatus::fail;
    return v;
}

TheoremVerdict verify_second_largest_location(const Evidence& ev) {
    auto v = make_verdict(ClaimId::second_largest_location, ev);
    const auto& x = ev.spectrum.values;
    const double top = x[0];
    const bool top_simple = indices_near(x, top, ev.tol.cluster, 1).empty();

    const double second = *std::max_element(x.begin() + 1, x.end());
    const auto argmax = indices_near(x, second, ev.tol.cluster, 1);
    const auto expected = sorted_pair(ev.prediction.second_largest_indices);
    const std::size_t at = ev.prediction.second_largest_indices.first;

    v.predicted = {{"indices", expected}};
    v.observed = {{"indices", argmax},
                  {"value", round12(second)},
                  {"top_is_simple", top_simple},
                  {"connected", ev.connected}};

    bool ok = argmax == expected;
    if (!ok) append_detail(v, "argmax over l != 0 differs from prediction");
    if (!top_simple || !ev.connected) {
        ok = false;
        append_detail(v, "x_0 is not a simple top eigenvalue of a connected graph");
    }
    if (ev.oracle) {
        const auto& clusters = *ev.oracle_clusters;
        const auto& sorted = ev.oracle->sorted_values;
        // Second-largest distinct value; lambda_1 counted with multiplicity is recorded alongside.
        const double distinct_second =
            clusters.size() >= 2 ? clusters[clusters.size() - 2].value : std::numeric_limits<double>::quiet_NaN();
        const double lambda1 = sorted.size() >= 2 ? sorted[sorted.size() - 2] : sorted.back();
        const double dev =
            at < x.size() ? std::abs(x[at] - distinct_second) : std::numeric_limits<double>::infinity();
        v.observed["oracle_second_distinct"] = round12(distinct_second);
        v.observed["oracle_lambda1"] = round12(lambda1);
        v.observed["oracle_dev"] = round12(dev);
        if (!(dev < ev.tol.match)) {
            ok = false;
            append_detail(v, "x at predicted index does not match the oracle's second-largest distinct value");
        }
    } else {
        if (ev.oracle_error) ok = false;
        append_detail(v, oracle_note(ev));
    }
    v.status = ok ? VerdictStatus::pass : VerdictStatus::fail;
    return v;
}

TheoremVerdict verify_minus_one(const Evidence& ev) {
    auto v = make_verdict(ClaimId::minus_one, ev);
    const auto& p = ev.prediction;
    const auto& x = ev.spectrum.values;
    const auto at = indices_near(x, -1.0, ev.tol.cluster);
    const bool present = !at.empty();
    const std::size_t multiplicity = observed_multiplicity(ev, -1.0, at);

    v.predicted = {{"present", p.minus_one_expected},
                   {"multiplicity", p.minus_one_expected ? 1 : 0},
                   {"index", p.minus_one_witness ? Record(*p.minus_one_witness) : Record(nullptr)}};
    v.observed = {{"present", present},
                  {"indices", at},
                  {"multiplicity", multiplicity},
                  {"multiplicity_source", ev.oracle_clusters ? "oracle" : "closed-form"}};

    bool ok = present == p.minus_one_expected;
    if (!ok) {
        append_detail(v, present ? "-1 found but not predicted" : "-1 predicted but not found");
    } else if (present) {
        const std::vector<std::size_t> witness{p.minus_one_witness.value_or(x.size())};
        if (at != witness || multiplicity != 1) {
            ok = false;
            append_detail(v, "-1 expected once at index n/2");
        } else if (std::abs(x[witness[0]] + 1.0) >= ev.tol.sym) {
            ok = false;
            append_detail(v, "witness value off by more than tol_sym");
        }
    }
    if (ev.oracle_error) {
        ok = false;
        append_detail(v, oracle_note(ev));
    }
    v.status = ok ? VerdictStatus::pass : VerdictStatus::fail;
    return v;
}

TheoremVerdict verify_plus_one(const Evidence& ev) {
    auto v = make_verdict(ClaimId::plus_one, ev);
    const auto& p = ev.prediction;
    const auto& x = ev.spectrum.values;
    const std::size_t n = x.size();
    const auto at = indices_near(x, 1.0, ev.tol.cluster);
    const bool present = !at.empty();
    const std::size_t multiplicity = observed_multiplicity(ev, 1.0, at);

    Record expected_indices = Record::array();
    if (p.plus_one_witness) {
        expected_indices = {*p.plus_one_witness, n - *p.plus_one_witness};
    }
    v.predicted = {{"present", p.plus_one_expected},
                   {"indices", expected_indices},
                   {"stated_multiplicity", p.plus_one_expected ? 1 : 0},
                   {"structural_multiplicity", p.plus_one_multiplicity}};
    v.observed = {{"present", present},
                  {"indices", at},
                  {"multiplicity", multiplicity},
                  {"multiplicity_source", ev.oracle_clusters ? "oracle" : "closed-form"}};

    if (ev.oracle_error) {
        v.status = VerdictStatus::fail;
        append_detail(v, oracle_note(ev));
        return v;
    }
    if (present != p.plus_one_expected) {
        v.status = VerdictStatus::fail;
        append_detail(v, present ? "+1 found but not predicted" : "+1 predicted but not found");
        return v;
    }
    if (!present) {
        v.status = VerdictStatus::pass;
        return v;
    }
    if (Record(at) != expected_indices || std::abs(x[at.front()] - 1.0) >= ev.tol.sym) {
        v.status = VerdictStatus::fail;
        append_detail(v, "+1 not at indices n/4 and 3n/4");
        return v;
    }
    switch (multiplicity) {
        case 1:
            v.status = VerdictStatus::pass;
            break;
        case 2:
            v.status = VerdictStatus::erratum_detected;
            append_detail(v,
                          "the +1 lemma states multiplicity 1, but x_{n/4} = x_{3n/4} = 1 by the l <-> n-l "
                          "pairing, so the multiplicity is 2");
            break;
        default:
            v.status = VerdictStatus::fail;
            append_detail(v, "+1 has multiplicity " + std::to_string(multiplicity));
    }
    return v;
}

TheoremVerdict verify_palindrome(const Evidence& ev) {
    auto v = make_verdict(ClaimId::palindrome, ev);
    const auto& x = ev.spectrum.values;
    const std::size_t n = x.size();
    double max_dev = 0.0;
    for (std::size_t l = 1; l < n; ++l) {
        max_dev = std::max(max_dev, std::abs(x[l] - x[n - l]));
    }
    const double trace = std::accumulate(x.begin(), x.end(), 0.0);
    const bool top_exact = x[0] == static_cast<double>(ev.k);

    v.predicted = {{"max_deviation_below", ev.tol.sym}, {"x0", ev.k}, {"trace", 0}};
    v.observed = {{"max_deviation", round12(max_dev)}, {"x0", round12(x[0])}, {"trace", round12(trace)}};

    bool ok = max_dev < ev.tol.sym;
    if (!ok) append_detail(v, "x_l and x_{n-l} differ by more than tol_sym");
    if (!top_exact) {
        ok = false;
        append_detail(v, "x_0 is not exactly k");
    }
    if (!(std::abs(trace) <= static_cast<double>(n) * ev.tol.sym)) {
        ok = false;
        append_detail(v, "eigenvalue sum is not 0");
    }
    v.status = ok ? VerdictStatus::pass : VerdictStatus::fail;
    return v;
}

TheoremVerdict verify_gcd_certificate(const Evidence& ev) {
    auto v = make_verdict(ClaimId::gcd_certificate, ev);
    const auto cert = gcd_certificate(ev.k);
    // g > 1 exactly when k is odd, the same condition that puts -1 in the spectrum.
    const bool expect_nontrivial = ev.prediction.minus_one_expected;

    v.predicted = {{"g_greater_than_1", expect_nontrivial}, {"identity", "4 = g*(3*s2 - s1)"}};
    v.observed = {{"g", cert.g}, {"s1", cert.s1}, {"s2", cert.s2}, {"identity_holds", cert.a_equation_holds}};

    bool ok = cert.a_equation_holds && ((cert.g > 1) == expect_nontrivial);
    if (!cert.a_equation_holds) append_detail(v, "4 != g*(3*s2 - s1)");
    if ((cert.g > 1) != expect_nontrivial) append_detail(v, "g > 1 does not coincide with k odd");
    v.status = ok ? VerdictStatus::pass : VerdictStatus::fail;
    return v;
}

std::vector<TheoremVerdict> verify_all(const Evidence& ev) {
    return {verify_distinct_count(ev),  verify_smallest_location(ev), verify_second_largest_location(ev),
            verify_minus_one(ev),       verify_plus_one(ev),          verify_palindrome(ev),
            verify_gcd_certificate(ev)};
}

TheoremVerdict verify_distinct_count(std::size_t k, bool use_oracle) {
    VerifyOptions options;
    if (!use_oracle) options.oracle_limit = 0;
    return verify_distinct_count(gather_evidence(k, options));
}

std::pair<TheoremVerdict, TheoremVerdict> verify_extremes(std::size_t k) {
    const auto ev = gather_evidence(k);
    return {verify_smallest_location(ev), verify_second_largest_location(ev)};
}

std::pair<TheoremVerdict, TheoremVerdict> verify_plus_minus_one(std::size_t k) {
    const auto ev = gather_evidence(k);
    return {verify_minus_one(ev), verify_plus_one(ev)};
}

std::size_t SweepReport::count(VerdictStatus status) const {
    return static_cast<std::size_t>(
        std::count_if(verdicts.begin(), verdicts.end(), [status](const auto& v) { return v.status == status; }));
}

namespace {

struct PerK {
    std::vector<TheoremVerdict> verdicts;
    double min_gap = std::numeric_limits<double>::infinity();
    std::optional<double> oracle_dev;
};

PerK verify_one(std::size_t k, const VerifyOptions& options) {
    PerK out;
    const auto ev = gather_evidence(k, options);
    out.verdicts = verify_all(ev);

    auto sorted = ev.spectrum.values;
    std::sort(sorted.begin(), sorted.end());
    const auto clusters = cluster_distinct(sorted, ev.tol.cluster);
    for (std::size_t i = 1; i < clusters.size(); ++i) {
        out.min_gap = std::min(out.min_gap, clusters[i].value - clusters[i - 1].value);
    }
    if (ev.oracle) {
        out.oracle_dev = compare_spectra(ev.spectrum, *ev.oracle, ev.tol.match).max_abs_dev;
    }
    return out;
}

}  // namespace

SweepReport run_sweep(std::size_t k_min, std::size_t k_max, const VerifyOptions& options) {
    if (k_min < 2 || k_min > k_max) {
        throw InvalidParameter("run_sweep: need 2 <= k_min <= k_max (got " + std::to_string(k_min) + ", " +
                               std::to_string(k_max) + ")");
    }
    const auto start = std::chrono::steady_clock::now();
    const std::size_t count = k_max - k_min + 1;
    std::vector<PerK> results(count);

    std::size_t workers = options.threads ? options.threads : std::thread::hardware_concurrency();
    workers = std::clamp<std::size_t>(workers, 1, count);

    // Largest k first so the expensive oracle runs do not all land at the end.
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            const std::size_t slot = count - 1 - i;
            results[slot] = verify_one(k_min + slot, options);
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    }

    SweepReport report;
    report.k_range = {k_min, k_max};
    report.min_gap = std::numeric_limits<double>::infinity();
    for (auto& r : results) {
        report.verdicts.insert(report.verdicts.end(), std::make_move_iterator(r.verdicts.begin()),
                               std::make_move_iterator(r.verdicts.end()));
        report.min_gap = std::min(report.min_gap, r.min_gap);
        if (r.oracle_dev) {
            report.oracle_max_dev = std::max(report.oracle_max_dev, *r.oracle_dev);
            ++report.oracle_runs;
        }
    }
    report.tolerance_review = !(report.min_gap > options.tol.cluster);
    report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

SweepReport run_sweep(std::size_t k_min, std::size_t k_max, std::size_t oracle_limit) {
    VerifyOptions options;
    options.oracle_limit = oracle_limit;
    return run_sweep(k_min, k_max, options);
}

}  // namespace andrasfai
