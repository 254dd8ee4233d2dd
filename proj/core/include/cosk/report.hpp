#ifndef COSK_REPORT_HPP
#define COSK_REPORT_HPP

#include <cstdint>
#include <functional>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "cosk/catalog.hpp"
#include "cosk/spectral.hpp"
#include "cosk/version.hpp"

namespace cosk {

struct AnalyzeOptions {
  std::vector<double> k_values;   // empty: defaults {1, n, n+1, D} clamped
  std::vector<int> form_degrees;  // extra cross-oracle degrees to check
  std::uint64_t seed = kDefaultSeed;
  std::vector<LieSymmetricData> extra_datasets;
};

// exit_code: 0 ok, 2 when any paper-consistency invariant failed.  The
// report is emitted either way, with a "checks" section naming failures.
struct RunResult {
  nlohmann::json report;
  int exit_code = 0;
};

RunResult analyze(const SpaceSpec& spec, const AnalyzeOptions& options = {});

nlohmann::json scan_integrality(long long max_n);

struct WeightPrincipleScan {
  long long trials = 0;
  long long premise_holds = 0;
  long long violations = 0;
  std::uint64_t seed = 0;
};

// Random spectra: sizes 5-20, standard normal entries, negated when needed
// so the smallest eigenvalue is < 0; random cap/total with 1.5 <= total/cap
// <= D - 0.5 and random k' < total/cap.  per_instance (optional) sees every
// generated instance, e.g. to cross-check the greedy bound.
WeightPrincipleScan run_weight_principle(
    long long trials, std::uint64_t seed,
    const std::function<void(const Spectrum&, double cap, double total, double k_prime)>&
        per_instance = {});

RunResult scan_weight_principle(long long trials, std::uint64_t seed);

RunResult scan_catalog_sweep(std::uint64_t seed);

// Deterministic serialization: sorted keys (nlohmann objects are ordered),
// floating-point values with 17 significant digits (lossless round-trip).
std::string dump_json(const nlohmann::json& j, int indent = 2);

// Human-readable rendering, derived from the JSON (single source of truth).
std::string render_text(const nlohmann::json& j);

}  // namespace cosk

#endif
