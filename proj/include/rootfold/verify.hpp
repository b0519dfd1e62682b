#pragma once

#include "rootfold/presets.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rootfold {

enum class CheckStatus { Pass, Fail, Resource, Input };
std::string status_name(CheckStatus s);

struct CheckResult {
    std::string check;     // e.g. "duality", "extremal"
    std::string instance;  // e.g. "mu=(1,0,0)"
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
};

struct PresetReport {
    std::string preset;
    std::vector<CheckResult> checks;
};

struct VerifyOptions {
    std::optional<std::int64_t> mu_bound;  // overrides the preset's bound
    std::int64_t kl_bound = 4;             // envelope bound for the KL route
    bool run_kl = true;
    std::size_t interval_cap = 1000000;
    unsigned threads = 0;                  // 0: hardware concurrency
};

struct VerifyReport {
    std::vector<PresetReport> presets;
    std::size_t count(CheckStatus s) const;
    // 0 all pass, 1 some check failed, 3 only resource caps were hit.
    int exit_code() const;
    std::string to_json() const;
    std::string to_tsv() const;
};

PresetReport verify_preset(const Preset& p, const VerifyOptions& opt = {});
// Presets run concurrently; the report keeps the input order.
VerifyReport verify_presets(const std::vector<Preset>& presets, const VerifyOptions& opt = {});

}  // namespace rootfold
