#pragma once

// Instantiates each spectral claim about And(k) at a given k and checks it against the
// closed-form spectrum and, when enabled, the Jacobi oracle.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "andrasfai/closed_form.hpp"
#include "andrasfai/eigen_oracle.hpp"
#include "andrasfai/tolerances.hpp"

namespace andrasfai {

// Declaration order is the per-k verdict order in reports.
enum class ClaimId {
    distinct_count,
    smallest_location,
    second_largest_location,
    minus_one,
    plus_one,
    palindrome,
    gcd_certificate,
};

inline constexpr std::size_t kClaimCount = 7;

enum class VerdictStatus { pass, fail, erratum_detected };

std::string_view to_string(ClaimId claim);
std::string_view to_string(VerdictStatus status);
ClaimId parse_claim_id(std::string_view name);
VerdictStatus parse_verdict_status(std::string_view name);

// Claim-specific predicted/observed fields; insertion-ordered so reports are stable and readable.
using Record = nlohmann::ordered_json;

struct TheoremVerdict {
    ClaimId claim = ClaimId::distinct_count;
    std::size_t k = 0;
    Record predicted = Record::object();
    Record observed = Record::object();
    VerdictStatus status = VerdictStatus::fail;
    std::string detail;
};

struct VerifyOptions {
    Tolerances tol;
    // The oracle runs only for n = 3k-1 <= oracle_limit; 0 disables it.
    std::size_t oracle_limit = 600;
    // Worker threads for run_sweep; 0 means std::thread::hardware_concurrency().
    std::size_t threads = 0;
    // Replaces jacobi_eigenvalues when set.
    std::function<OracleResult(const AdjacencyMatrix&)> oracle_solver;
    // Applied to every prediction before it is compared. Lets tests drive the failure paths.
    std::function<void(SpectralPrediction&)> tamper_prediction;
};

// Everything the claim checks for one k need, computed once.
struct Evidence {
    std::size_t k = 0;
    SpectralPrediction prediction;
    Spectrum spectrum;
    MultiplicityTable table;
    bool connected = false;
    std::optional<OracleResult> oracle;
    std::optional<std::vector<ValueCluster>> oracle_clusters;
    // Set when the oracle was requested but failed (e.g. did not converge).
    std::optional<std::string> oracle_error;
    Tolerances tol;
};

// Throws InvalidParameter for k < 2.
Evidence gather_evidence(std::size_t k, const VerifyOptions& options = {});

TheoremVerdict verify_distinct_count(const Evidence& ev);
TheoremVerdict verify_smallest_location(const Evidence& ev);
TheoremVerdict verify_second_largest_location(const Evidence& ev);
TheoremVerdict verify_minus_one(const Evidence& ev);
TheoremVerdict verify_plus_one(const Evidence& ev);
TheoremVerdict verify_palindrome(const Evidence& ev);
TheoremVerdict verify_gcd_certificate(const Evidence& ev);

// All seven claims for one k, in ClaimId order.
std::vector<TheoremVerdict> verify_all(const Evidence& ev);

// Convenience entry points that gather their own evidence.
TheoremVerdict verify_distinct_count(std::size_t k, bool use_oracle);
std::pair<TheoremVerdict, TheoremVerdict> verify_extremes(std::size_t k);
std::pair<TheoremVerdict, TheoremVerdict> verify_plus_minus_one(std::size_t k);

struct SweepReport {
    std::pair<std::size_t, std::size_t> k_range;
    std::vector<TheoremVerdict> verdicts;  // ordered by k, then ClaimId
    // Smallest gap between adjacent distinct eigenvalues over the sweep.
    double min_gap = 0.0;
    // Largest closed-form vs. oracle deviation over the k values the oracle ran on.
    double oracle_max_dev = 0.0;
    std::size_t oracle_runs = 0;
    // min_gap is not safely above tol.cluster, so clustering decisions are suspect.
    bool tolerance_review = false;
    double wall_time = 0.0;  // seconds

    std::size_t count(VerdictStatus status) const;
    bool all_passed() const { return count(VerdictStatus::fail) == 0; }
};

// Throws InvalidParameter unless 2 <= k_min <= k_max. Oracle failures become fail verdicts.
SweepReport run_sweep(std::size_t k_min, std::size_t k_max, const VerifyOptions& options = {});
SweepReport run_sweep(std::size_t k_min, std::size_t k_max, std::size_t oracle_limit);

}  // namespace andrasfai
