#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace eigencount::ref {

/// One property checked over many instances. The first failing instance is
/// kept as a JSON counterexample.
struct Check
{
    Check() = default;
    explicit Check(std::string check_name) : name(std::move(check_name)) {}

    std::string name;
    long run = 0;
    long failed = 0;
    std::string summary;
    std::optional<nlohmann::json> counterexample;

    bool ok() const noexcept { return run > 0 && failed == 0; }

    template <class Detail>
    bool expect(bool cond, Detail&& detail)
    {
        ++run;
        if (!cond) {
            ++failed;
            if (!counterexample) counterexample = detail();
        }
        return cond;
    }
};

struct SuiteResult
{
    std::string suite;
    std::vector<Check> checks;

    bool ok() const;
    /// First counterexample across the checks, tagged with the check name.
    std::optional<nlohmann::json> first_counterexample() const;
};

Check check_lambert_residual();
Check check_lambert_vs_bisection();
Check check_phi_vs_maximization();
Check check_phi_dominance();
Check check_t_star(std::uint64_t seed);

Check check_koenig_trials(std::uint64_t seed, int trials = 300);
Check check_koenig_random(std::uint64_t seed, int matrices = 100);

Check check_shift_determinant(std::uint64_t seed);
Check check_shift_zero();
Check check_det_bound();
Check check_winding_corpus();
Check check_polynomial_winding(std::uint64_t seed);
Check check_gamma_envelope(std::uint64_t seed, int points = 1000);

/// Soundness over the regression corpus; `seconds` receives the wall time.
Check check_soundness(double* seconds = nullptr);
Check check_dominance_chain();
Check check_compact_recovery();
Check check_region_matches_disk();
Check check_moment_identity();
Check check_moment_bound();
Check check_slope();

Check check_jensen(std::uint64_t seed);

std::vector<std::string> suite_names();

/// Runs "all" or one named suite. Throws std::invalid_argument for unknown
/// names.
std::vector<SuiteResult> run_suite(std::string_view name, std::uint64_t seed);

} // namespace eigencount::ref
