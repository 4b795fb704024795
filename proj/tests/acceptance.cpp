// Acceptance suite: one [PASS]/[FAIL] line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "andrasfai/circulant.hpp"
#include "andrasfai/closed_form.hpp"
#include "andrasfai/serialize.hpp"
#include "cli.hpp"

using namespace andrasfai;
using nlohmann::json;

namespace {

constexpr double kGoldenTol = 5e-5;
constexpr double kOracleTol = 1e-8;
constexpr double kPalindromeTol = 1e-9;
constexpr double kTracePerVertex = 1e-9;
constexpr double kFrobeniusPerVertex = 1e-6;
constexpr double kGoldenBudget = 1.0;
constexpr double kSweepBudget = 120.0;
constexpr double kGcdBudget = 1.0;
constexpr double kPropertyBudget = 30.0;
constexpr std::size_t kSweepMax = 200;

struct Outcome {
    bool ok = true;
    std::string note;
    void fail(const std::string& why) {
        if (ok) note = why;
        ok = false;
    }
};

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    cli::Hooks hooks;
    hooks.getenv = [](const char*) -> const char* { return nullptr; };
    const int code = cli::run(args, out, err, hooks);
    return {code, out.str(), err.str()};
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

Outcome golden_spectra() {
    Outcome o;
    const auto start = Clock::now();
    const std::vector<std::pair<std::size_t, std::vector<double>>> printed = {
        {3, {3, 0.4142, 1, -2.4142, -1}},
        {4, {4, 0.3728, 0.5462, 1.3979, -3.2287, -1.0882}},
        {5, {5, 0.356896, 0.445042, 0.692022, 1.801938, -4.048917, -1.24698, -1}},
    };
    for (const auto& [k, values] : printed) {
        const auto s = spectrum_closed_form(k);
        const std::size_t n = s.n();
        for (std::size_t l = 0; l < values.size(); ++l) {
            if (std::abs(s.values[l] - values[l]) >= kGoldenTol) {
                o.fail("And(" + std::to_string(k) + ") x_" + std::to_string(l) + " off by " +
                       fmt(std::abs(s.values[l] - values[l])));
            }
            if (l > 0 && std::abs(s.values[n - l] - values[l]) >= kGoldenTol) {
                o.fail("And(" + std::to_string(k) + ") pair partner of x_" + std::to_string(l) + " differs");
            }
        }
    }
    const double t = seconds_since(start);
    if (t >= kGoldenBudget) o.fail("took " + fmt(t) + " s");
    if (o.ok) o.note = "k = 3, 4, 5 within " + fmt(kGoldenTol) + " in " + fmt(t) + " s";
    return o;
}

// Everything the sweep-based criteria need, from one CLI run over [2, 200].
struct SweepData {
    int code = -1;
    json report;
    std::string error;
};

const json* find_verdict(const json& report, std::size_t k, std::string_view claim) {
    for (const auto& v : report["verdicts"]) {
        if (v["k"].get<std::size_t>() == k && v["claim"].get<std::string>() == claim) return &v;
    }
    return nullptr;
}

std::set<std::size_t> as_set(const json& a) { return a.get<std::set<std::size_t>>(); }

Outcome oracle_equivalence(const SweepData& d) {
    Outcome o;
    if (!d.error.empty()) {
        o.fail(d.error);
        return o;
    }
    const auto& r = d.report;
    const double wall = r["wall_time"].get<double>();
    if (r["oracle_runs"].get<std::size_t>() != kSweepMax - 1) {
        o.fail("oracle ran " + std::to_string(r["oracle_runs"].get<std::size_t>()) + " times, expected 199");
    }
    const double dev = r["oracle_max_dev"].get<double>();
    if (!(dev < kOracleTol)) o.fail("max deviation " + fmt(dev));
    for (std::size_t k = 2; k <= kSweepMax; ++k) {
        const auto* v = find_verdict(r, k, "distinct_count");
        if (v == nullptr || (*v)["observed"]["oracle_max_dev"].is_null() ||
            !((*v)["observed"]["oracle_max_dev"].get<double>() < kOracleTol)) {
            o.fail("k=" + std::to_string(k) + " oracle comparison missing or off");
        }
    }
    if (wall >= kSweepBudget) o.fail("sweep took " + fmt(wall) + " s");
    if (o.ok) o.note = "max deviation " + fmt(dev) + " over 199 oracle runs in " + fmt(wall) + " s";
    return o;
}

Outcome distinct_count(const SweepData& d) {
    Outcome o;
    if (!d.error.empty()) {
        o.fail(d.error);
        return o;
    }
    for (std::size_t k = 2; k <= kSweepMax; ++k) {
        const auto* v = find_verdict(d.report, k, "distinct_count");
        const std::string tag = "k=" + std::to_string(k) + ": ";
        if (v == nullptr) {
            o.fail(tag + "no verdict");
            continue;
        }
        const std::size_t expected = k + (k + 1) / 2;
        const auto& obs = (*v)["observed"];
        if ((*v)["status"] != "pass") o.fail(tag + "status " + (*v)["status"].get<std::string>());
        if ((*v)["predicted"]["distinct_count"].get<std::size_t>() != expected) o.fail(tag + "prediction wrong");
        if (obs["structural_classes"].get<std::size_t>() != expected) o.fail(tag + "structural count wrong");
        if (obs["oracle_clusters"].is_null() || obs["oracle_clusters"].get<std::size_t>() != expected) {
            o.fail(tag + "oracle cluster count wrong");
        }
        const std::size_t n = 3 * k - 1;
        const auto singletons = obs["singletons"].get<std::vector<std::size_t>>();
        const auto expected_singletons = k % 2 == 0 ? std::vector<std::size_t>{0} : std::vector<std::size_t>{0, n / 2};
        if (singletons != expected_singletons) o.fail(tag + "singleton classes wrong");
        if (!obs["pattern_ok"].get<bool>()) o.fail(tag + "multiplicity pattern wrong");
        if (obs["accidental_coincidences"].get<std::size_t>() != 0) o.fail(tag + "accidental coincidence");
    }
    if (o.ok) o.note = "k + ceil(k/2) classes, pattern and oracle clusters agree for k in [2, 200]";
    return o;
}

Outcome extremal_indices(const SweepData& d) {
    Outcome o;
    if (!d.error.empty()) {
        o.fail(d.error);
        return o;
    }
    for (std::size_t k = 2; k <= kSweepMax; ++k) {
        const std::string tag = "k=" + std::to_string(k) + ": ";
        const auto* lo = find_verdict(d.report, k, "smallest_location");
        const auto* hi = find_verdict(d.report, k, "second_largest_location");
        if (lo == nullptr || hi == nullptr) {
            o.fail(tag + "missing verdict");
            continue;
        }
        if ((*lo)["status"] != "pass" || (*hi)["status"] != "pass") o.fail(tag + "verdict not pass");
        if (as_set((*lo)["observed"]["indices"]) != std::set<std::size_t>{k, 2 * k - 1}) o.fail(tag + "argmin set");
        if (as_set((*hi)["observed"]["indices"]) != std::set<std::size_t>{k - 1, 2 * k}) o.fail(tag + "argmax set");
        for (const auto* v : {lo, hi}) {
            const auto& dev = (*v)["observed"]["oracle_dev"];
            if (dev.is_null() || !(dev.get<double>() < kOracleTol)) o.fail(tag + "oracle value mismatch");
        }
    }
    if (o.ok) o.note = "argmin {k, 2k-1}, second largest {k-1, 2k}, oracle-confirmed for k in [2, 200]";
    return o;
}

Outcome plus_minus_one(const SweepData& d) {
    Outcome o;
    if (!d.error.empty()) {
        o.fail(d.error);
        return o;
    }
    const auto& r = d.report;
    for (std::size_t k = 2; k <= kSweepMax; ++k) {
        const std::string tag = "k=" + std::to_string(k) + ": ";
        const std::size_t n = 3 * k - 1;
        const auto* m = find_verdict(r, k, "minus_one");
        const auto* p = find_verdict(r, k, "plus_one");
        if (m == nullptr || p == nullptr) {
            o.fail(tag + "missing verdict");
            continue;
        }
        const bool odd = k % 2 == 1;
        const auto& mo = (*m)["observed"];
        if (mo["present"].get<bool>() != odd) o.fail(tag + "-1 presence");
        if (odd && (as_set(mo["indices"]) != std::set<std::size_t>{n / 2} || mo["multiplicity"] != 1)) {
            o.fail(tag + "-1 location or multiplicity");
        }
        if ((*m)["status"] != "pass") o.fail(tag + "-1 verdict " + (*m)["status"].get<std::string>());

        const bool three_mod_four = k % 4 == 3;
        const auto& po = (*p)["observed"];
        if (po["present"].get<bool>() != three_mod_four) o.fail(tag + "+1 presence");
        if (three_mod_four) {
            if (as_set(po["indices"]) != std::set<std::size_t>{n / 4, 3 * n / 4}) o.fail(tag + "+1 indices");
            if (po["multiplicity"] != 2) o.fail(tag + "+1 multiplicity");
            if ((*p)["status"] != "erratum_detected") o.fail(tag + "+1 erratum not flagged");
        } else if ((*p)["status"] != "pass") {
            o.fail(tag + "+1 verdict " + (*p)["status"].get<std::string>());
        }
    }
    std::size_t errata = 0, expected_errata = 0;
    for (const auto& v : r["verdicts"]) {
        if (v["status"] == "erratum_detected") {
            ++errata;
            if (v["claim"] != "plus_one") o.fail("unexpected erratum on " + v["claim"].get<std::string>());
        }
    }
    for (std::size_t k = 2; k <= kSweepMax; ++k) expected_errata += k % 4 == 3;
    if (errata != expected_errata) o.fail(std::to_string(errata) + " errata, expected " + std::to_string(expected_errata));
    if (r["summary"]["fail"] != 0) o.fail(std::to_string(r["summary"]["fail"].get<std::size_t>()) + " fail verdicts");
    if (d.code != 0) o.fail("exit code " + std::to_string(d.code));
    if (o.ok) {
        o.note = "-1 iff k odd, +1 iff k = 3 mod 4 (multiplicity 2, " + std::to_string(errata) +
                 " errata), zero fails, exit 0";
    }
    return o;
}

Outcome gcd_identity() {
    Outcome o;
    const auto start = Clock::now();
    for (std::size_t k = 2; k <= 10000; ++k) {
        const std::size_t a = 3 * k - 1, b = k + 1;
        const std::size_t g = std::gcd(a, b);
        if ((g > 1) != (k % 2 == 1)) o.fail("k=" + std::to_string(k) + ": g > 1 does not track parity");
        if (g > 1) {
            const long long s1 = static_cast<long long>(a / g), s2 = static_cast<long long>(b / g);
            if (static_cast<long long>(g) * (3 * s2 - s1) != 4) o.fail("k=" + std::to_string(k) + ": identity fails");
        }
        const auto cert = gcd_certificate(k);
        if (cert.g != g || !cert.a_equation_holds) o.fail("k=" + std::to_string(k) + ": library certificate disagrees");
    }
    const double t = seconds_since(start);
    if (t >= kGcdBudget) o.fail("took " + fmt(t) + " s");
    if (o.ok) o.note = "k in [2, 10000] in " + fmt(t) + " s";
    return o;
}

Outcome property_suite() {
    Outcome o;
    const auto start = Clock::now();
    for (std::size_t k = 2; k <= 500; ++k) {
        const std::string tag = "k=" + std::to_string(k) + ": ";
        const auto s = spectrum_closed_form(k);
        const std::size_t n = s.n();
        double trace = 0.0, squares = 0.0;
        for (std::size_t l = 0; l < n; ++l) {
            trace += s.values[l];
            squares += s.values[l] * s.values[l];
            if (l > 0 && !(std::abs(s.values[l] - s.values[n - l]) < kPalindromeTol)) o.fail(tag + "palindrome");
        }
        if (s.values[0] != static_cast<double>(k)) o.fail(tag + "x_0 is not exactly k");
        if (!(std::abs(trace) <= n * kTracePerVertex)) o.fail(tag + "trace " + fmt(trace));
        if (!(std::abs(squares - static_cast<double>(n * k)) <= n * kFrobeniusPerVertex)) o.fail(tag + "Frobenius");

        const auto g = andrasfai_graph(k);
        const auto reread = parse_edge_list(export_graph(g, GraphFormat::edge_list), n);
        if (reread.n() != n || reread.edges() != g.edges() || reread.connection() != g.connection()) {
            o.fail(tag + "edge-list round trip");
        }
        const auto text = spectrum_to_json(s);
        if (spectrum_to_json(spectrum_from_json(text)) != text) o.fail(tag + "spectrum JSON round trip");
    }
    const double t = seconds_since(start);
    if (t >= kPropertyBudget) o.fail("took " + fmt(t) + " s");
    if (o.ok) o.note = "k in [2, 500] in " + fmt(t) + " s";
    return o;
}

std::string strip_wall_time(const std::string& text) {
    auto doc = json::parse(text);
    doc.erase("wall_time");
    return doc.dump(2);
}

Outcome determinism() {
    Outcome o;
    const std::vector<std::string> args = {"sweep", "--from", "2", "--to", "50", "--format", "json"};
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    if (first.code != 0 || second.code != 0) {
        o.fail("sweep exited " + std::to_string(first.code) + "/" + std::to_string(second.code));
        return o;
    }
    if (strip_wall_time(first.out) != strip_wall_time(second.out)) o.fail("reports differ");
    if (o.ok) o.note = "two sweeps over [2, 50] byte-identical apart from wall_time";
    return o;
}

}  // namespace

int main() {
    SweepData sweep;
    {
        const auto r = run_cli({"sweep", "--from", "2", "--to", std::to_string(kSweepMax), "--format", "json"});
        sweep.code = r.code;
        try {
            sweep.report = json::parse(r.out);
        } catch (const std::exception& e) {
            sweep.error = std::string("sweep produced no report: ") + e.what() + " " + r.err;
        }
    }

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"golden spectra", golden_spectra},
        {"oracle equivalence", [&] { return oracle_equivalence(sweep); }},
        {"distinct-eigenvalue count", [&] { return distinct_count(sweep); }},
        {"extremal eigenvalue indices", [&] { return extremal_indices(sweep); }},
        {"+1 / -1 eigenvalues", [&] { return plus_minus_one(sweep); }},
        {"gcd certificate", gcd_identity},
        {"property suite", property_suite},
        {"determinism", determinism},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        failures += !o.ok;
        std::printf("[%s] criterion %zu: %s — %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.note.c_str());
    }
    std::fflush(stdout);
    return failures == 0 ? 0 : 1;
}
