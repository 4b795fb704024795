#pragma once

// Text formats for spectra and sweep reports.
//
// Spectrum JSON: {"k": int|null, "n": int, "source": str, "values": [float], "pairs": [[int,int]]}
//   "pairs" lists the structural pairs [l, n-l] for 0 < l < n-l.
// Spectrum CSV:  header "l,value,class_id", one row per index.
// Report JSON:   {"k_range": [int,int], "verdicts": [...], "min_gap": float, "oracle_max_dev": float, ...}
// Floats in machine formats carry 12 significant digits; tables use 6 decimals.

#include <string>
#include <string_view>

#include "andrasfai/closed_form.hpp"
#include "andrasfai/verifier.hpp"

namespace andrasfai {

std::string spectrum_to_json(const Spectrum& s);
std::string spectrum_to_csv(const Spectrum& s, double tol_cluster = Tolerances{}.cluster);
// Columns: l, x_l, n-l (mod n), class id.
std::string spectrum_to_table(const Spectrum& s, double tol_cluster = Tolerances{}.cluster);

// Throws ValidationError on malformed input.
Spectrum spectrum_from_json(std::string_view text);

std::string report_to_json(const SweepReport& report, bool include_wall_time = true);
std::string report_to_table(const SweepReport& report);

}  // namespace andrasfai
