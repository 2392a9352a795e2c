#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sparse_regret/adversaries.hpp"
#include "sparse_regret/bandit.hpp"
#include "sparse_regret/full_info.hpp"
#include "sparse_regret/outcome.hpp"

namespace sparse_regret {

enum class Algorithm {
    OmdGains,
    EwaLossesTuned,
    AdaptiveLosses,
    AdaptiveGains,
    BanditTsallis,
    UniformRandom, // fixed uniform play, baseline for lower bound checks
};

bool is_bandit_feedback(Algorithm algo);
Direction algorithm_direction(Algorithm algo);

const char* algorithm_name(Algorithm algo);
const char* adversary_name(AdversaryKind kind);
const char* eta_variant_name(BanditEtaVariant variant);
Algorithm parse_algorithm(const std::string& name);
AdversaryKind parse_adversary(const std::string& name);
BanditEtaVariant parse_eta_variant(const std::string& name);

struct ExperimentConfig {
    Algorithm algorithm = Algorithm::EwaLossesTuned;
    AdversaryKind adversary = AdversaryKind::RandomSparse;
    std::size_t d = 0;
    std::size_t s = 0;
    std::size_t T = 0;
    std::size_t replications = 1;
    std::uint64_t base_seed = 0;
    std::size_t record_every = 0;   // trajectory stride; 0 means max(1, T/100)
    std::optional<double> epsilon;  // forwarded to BanditLossLB
    std::optional<double> bandit_q; // tuning overrides; set both or neither
    std::optional<double> bandit_eta;
    BanditEtaVariant eta_variant = BanditEtaVariant::Balanced;
    std::size_t threads = 0; // 0 means hardware concurrency
};

struct TrajectoryPoint {
    std::size_t stage = 0;
    double expected_regret = 0.0;
    std::optional<double> realized_regret; // bandit feedback runs only
    std::optional<int> regime_m;           // adaptive algorithms only
};

struct ReplicationResult {
    std::size_t replication = 0;
    double expected_regret = 0.0;
    std::optional<double> realized_regret;
    std::optional<int> final_regime;
    std::vector<TrajectoryPoint> trajectory;
};

struct RunResult {
    ExperimentConfig config;
    std::vector<ReplicationResult> replications;
    double mean = 0.0; // statistics over final expected regrets
    double stddev = 0.0;
    double min = 0.0;
    double max = 0.0;
    double bound = 0.0;
    double bound_ratio = 0.0; // mean / bound, 0 when the bound is 0
    bool lower_bound_mode = false;
};

void validate(const ExperimentConfig& config);

// Runs `replications` independent matches. Replication r draws its
// sequence from stream (base_seed, r) and its arm samples from stream
// (base_seed, r + 2^32); replications execute in parallel but the
// result is bit-identical regardless of scheduling. A numerical failure
// aborts the run and reports replication and stage.
RunResult run_experiment(const ExperimentConfig& config);

struct BoundReport {
    double bound = 0.0;
    double mean = 0.0;
    double stddev = 0.0;
    double standard_error = 0.0;
    double bound_ratio = 0.0;
    bool lower_bound_mode = false;
    bool pass = false;
    std::string summary;
};

// Upper bound mode passes when the max replication regret stays at or
// below the bound; lower bound mode (BanditLossLB adversary) passes when
// mean - 2 stderr reaches the bound.
BoundReport compare_to_bound(const RunResult& result);

enum class ExportFormat { Csv, Json };

// CSV columns: replication, stage, expected_regret, realized_regret
// (empty for full information), regime_m (empty for non-adaptive).
// JSON mirrors RunResult and round-trips through import_result_json.
void export_result(const RunResult& result, ExportFormat format, const std::string& path);
RunResult import_result_json(const std::string& path);

} // namespace sparse_regret
