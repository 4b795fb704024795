#include "andrasfai/serialize.hpp"

#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <sstream>

#include "andrasfai/errors.hpp"

namespace andrasfai {

namespace {

std::string format_g12(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
    return buf;
}

// Rounds through the 12-digit text form; nlohmann then prints the shortest round-trip
// representation, which is that same text.
double rounded(double v) {
    return std::strtod(format_g12(v).c_str(), nullptr);
}

}  // namespace

std::string spectrum_to_json(const Spectrum& s) {
    nlohmann::ordered_json doc;
    doc["k"] = s.k ? nlohmann::ordered_json(*s.k) : nlohmann::ordered_json(nullptr);
    doc["n"] = s.n();
    doc["source"] = to_string(s.source);
    auto& values = doc["values"] = nlohmann::ordered_json::array();
    for (double v : s.values) values.push_back(rounded(v));
    auto& pairs = doc["pairs"] = nlohmann::ordered_json::array();
    for (std::size_t l = 1; 2 * l < s.n(); ++l) pairs.push_back({l, s.n() - l});
    return doc.dump() + "\n";
}

std::string spectrum_to_csv(const Spectrum& s, double tol_cluster) {
    const auto ids = pair_multiplicities(s, tol_cluster).class_ids(s.n());
    std::ostringstream out;
    out << "l,value,class_id\n";
    for (std::size_t l = 0; l < s.n(); ++l) {
        out << l << ',' << format_g12(s.values[l]) << ',' << ids[l] << '\n';
    }
    return out.str();
}

std::string spectrum_to_table(const Spectrum& s, double tol_cluster) {
    const auto ids = pair_multiplicities(s, tol_cluster).class_ids(s.n());
    std::ostringstream out;
    out << std::setw(6) << "l" << std::setw(16) << "x_l" << std::setw(8) << "n-l" << std::setw(8) << "class"
        << '\n';
    out << std::fixed << std::setprecision(6);
    for (std::size_t l = 0; l < s.n(); ++l) {
        const double v = s.values[l] == 0.0 ? 0.0 : s.values[l];
        out << std::setw(6) << l << std::setw(16) << v << std::setw(8) << (s.n() - l) % s.n() << std::setw(8)
            << ids[l] << '\n';
    }
    return out.str();
}

Spectrum spectrum_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("spectrum JSON: ") + e.what());
    }
    try {
        Spectrum s;
        if (!doc.at("k").is_null()) s.k = doc.at("k").get<std::size_t>();
        s.values = doc.at("values").get<std::vector<double>>();
        s.source = parse_spectrum_source(doc.at("source").get<std::string>());
        if (doc.at("n").get<std::size_t>() != s.values.size()) {
            throw ValidationError("spectrum JSON: n does not match the number of values");
        }
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("spectrum JSON: ") + e.what());
    }
}

std::string report_to_json(const SweepReport& report, bool include_wall_time) {
    nlohmann::ordered_json doc;
    doc["k_range"] = {report.k_range.first, report.k_range.second};
    auto& verdicts = doc["verdicts"] = nlohmann::ordered_json::array();
    for (const auto& v : report.verdicts) {
        verdicts.push_back({{"claim", to_string(v.claim)},
                            {"k", v.k},
                            {"status", to_string(v.status)},
                            {"predicted", v.predicted},
                            {"observed", v.observed},
                            {"detail", v.detail}});
    }
    doc["min_gap"] = rounded(report.min_gap);
    doc["oracle_max_dev"] = rounded(report.oracle_max_dev);
    doc["oracle_runs"] = report.oracle_runs;
    doc["tolerance_review"] = report.tolerance_review;
    doc["summary"] = {{"pass", report.count(VerdictStatus::pass)},
                      {"fail", report.count(VerdictStatus::fail)},
                      {"erratum_detected", report.count(VerdictStatus::erratum_detected)}};
    if (include_wall_time) {
        doc["wall_time"] = rounded(report.wall_time);
    }
    return doc.dump(2) + "\n";
}

std::string report_to_table(const SweepReport& report) {
    std::ostringstream out;
    out << std::left << std::setw(6) << "k" << std::setw(26) << "claim" << std::setw(18) << "status"
        << "detail\n";
    for (const auto& v : report.verdicts) {
        out << std::setw(6) << v.k << std::setw(26) << to_string(v.claim) << std::setw(18) << to_string(v.status)
            << v.detail << '\n';
    }
    out << "\nk range " << report.k_range.first << ".." << report.k_range.second << ": "
        << report.count(VerdictStatus::pass) << " pass, " << report.count(VerdictStatus::fail) << " fail, "
        << report.count(VerdictStatus::erratum_detected) << " erratum_detected\n";
    out << "min gap " << format_g12(report.min_gap) << ", oracle max deviation " << format_g12(report.oracle_max_dev)
        << " over " << report.oracle_runs << " oracle run(s)";
    if (report.tolerance_review) out << ", TOLERANCE REVIEW NEEDED";
    out << '\n';
    return out.str();
}

}  // namespace andrasfai
