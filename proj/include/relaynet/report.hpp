#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "relaynet/capacity.hpp"
#include "relaynet/simplifier.hpp"

namespace relaynet {

using Json = nlohmann::ordered_json;

constexpr int kReportVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

/// Rounded to 12 significant digits so the JSON text carries exactly that
/// precision.
Json number12(double v);
std::string format12(double v);

Json to_json(const Cut& cut);
Json to_json(const SubnetworkSelection& sel);
Json to_json(const CapacityResult& r);
Json to_json(const SimplificationResult& r);

struct CampaignConfig {
    int theorem = 1;
    int layers = 2;
    int relays = 3;
    std::uint64_t trials = 100;
    std::uint64_t seed = 1;
    std::string dist = "rayleigh:1";
    unsigned jobs = 1;
    int budget = 24;
};

Json to_json(const CampaignConfig& c);

struct CampaignSummary {
    std::uint64_t trials = 0;
    std::uint64_t violations = 0;
    std::uint64_t gap_form_violations = 0;
    std::uint64_t sharp_form_violations = 0;
    double min_ratio = 0.0;
    double max_ratio = 0.0;
    double min_slack_gap_form = 0.0;
    double max_slack_gap_form = 0.0;
    double min_slack_sharp_form = 0.0;
};

struct CampaignReport {
    CampaignConfig config;
    std::vector<VerificationRecord> records;  // ordered by trial index
    CampaignSummary summary;
    double runtime_seconds = 0.0;
};

/// Runs `trials` independent verifications. Trial i uses the network drawn
/// with seed stream_seed(config.seed, i); trials are spread over config.jobs
/// threads and stored by index, so output never depends on scheduling.
CampaignReport run_campaign(const CampaignConfig& config);

/// Self-contained report. Everything except "timestamp" is a function of the
/// config.
std::string report_json(const CampaignReport& report, const std::string& timestamp);

/// trial,seed,c_bar,c_sub,c_tilde,ratio,slack_gap_form,slack_sharp_form,holds
std::string report_csv(const CampaignReport& report);

/// Result of one bounds suite run.
struct SuiteReport {
    Json rows = Json::array();
    std::uint64_t evaluations = 0;
    std::uint64_t violations = 0;
    std::uint64_t equalities = 0;
};

/// Antenna-selection checks on every layer matrix: selection_bound for all (kt, kr),
/// eigen_retention for all k, greedy row selection against the exhaustive best.
SuiteReport suite_lemma1(const LayeredNetwork& net);
/// Every proper column and row split of every layer matrix with >= 2 columns
/// or rows; exact-equality rows are flagged.
SuiteReport suite_lemma2(const LayeredNetwork& net);
/// All 64 cuts of an L=2, N=3 network against every family member, plus the
/// C-bar relations for both surrogate capacities.
SuiteReport suite_table1(const LayeredNetwork& net);
/// Exhaustive T maximum for every 1 <= L <= max_layers, 1 <= N <= max_relays.
SuiteReport suite_maxt(int max_layers, int max_relays);

std::string suite_json(const std::string& suite, const SuiteReport& report, const std::string& timestamp);

}  // namespace relaynet
