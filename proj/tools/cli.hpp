#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "andrasfai/closed_form.hpp"

namespace andrasfai::cli {

// Exit codes: 0 all claims pass (erratum_detected counts as passing), 1 any claim failed,
// 2 usage or I/O error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

struct Hooks {
    // Decides the default output format: table when true, json otherwise.
    bool interactive = false;
    // Read instead of the process environment when set (tests).
    std::function<const char*(const char*)> getenv;
    // Forwarded to the verifier; used by tests to force the failing exit path.
    std::function<void(SpectralPrediction&)> tamper_prediction;
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Hooks& hooks = {});

}  // namespace andrasfai::cli
