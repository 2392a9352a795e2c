#include "sparse_regret/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "sparse_regret/errors.hpp"
#include "sparse_regret/ledger.hpp"

namespace sparse_regret {
namespace {

// Sampling streams live 2^32 ids above the adversary streams, so the two
// id spaces never collide for any replication count.
constexpr std::uint64_t kPlayStreamOffset = std::uint64_t(1) << 32;

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

Direction adversary_direction(AdversaryKind kind, Direction fallback) {
    switch (kind) {
    case AdversaryKind::FirstSCoordsGains: return Direction::Gain;
    case AdversaryKind::FullInfoLossLB:
    case AdversaryKind::BanditLossLB: return Direction::Loss;
    case AdversaryKind::RandomSparse: return fallback;
    }
    return fallback;
}

struct StageRecorder {
    std::size_t stride;
    std::size_t T;
    bool bandit;
    bool adaptive;
    const RegretLedger& ledger;
    ReplicationResult& out;

    void record(std::size_t stage, int regime) {
        TrajectoryPoint pt;
        pt.stage = stage;
        pt.expected_regret = ledger.regret();
        if (bandit) pt.realized_regret = ledger.realized_regret();
        if (adaptive) pt.regime_m = regime;
        out.trajectory.push_back(pt);
    }

    void maybe_record(std::size_t stage, int regime) {
        if (stage == 0) return; // stage 0 recorded before the loop
        if (stage % stride == 0 || stage == T) record(stage, regime);
    }
};

ReplicationResult run_replication(const ExperimentConfig& config, std::size_t r) {
    const Direction dir = adversary_direction(config.adversary, algorithm_direction(config.algorithm));
    AdversarySpec aspec;
    aspec.kind = config.adversary;
    aspec.d = config.d;
    aspec.s = config.s;
    aspec.T = config.T;
    aspec.direction = dir;
    aspec.epsilon = config.epsilon;
    aspec.seed = config.base_seed;
    aspec.stream_id = r;
    const GeneratedSequence seq = generate(aspec);

    RngStream play(config.base_seed, r + kPlayStreamOffset);
    RegretLedger ledger(config.d, dir);
    const bool bandit = is_bandit_feedback(config.algorithm);
    const bool adaptive = config.algorithm == Algorithm::AdaptiveLosses ||
                          config.algorithm == Algorithm::AdaptiveGains;

    ReplicationResult out;
    out.replication = r;
    const std::size_t stride =
        config.record_every ? config.record_every : std::max<std::size_t>(1, config.T / 100);
    StageRecorder rec{stride, config.T, bandit, adaptive, ledger, out};
    rec.record(0, 1);

    std::size_t stage = 0;
    try {
        switch (config.algorithm) {
        case Algorithm::OmdGains: {
            OmdGainsState st(OmdGainsConfig::tuned(config.d, config.s, config.T));
            for (; stage < config.T; ++stage) {
                const SimplexDistribution x = omd_gains_step(st, seq.outcomes[stage]);
                ledger.update(seq.outcomes[stage], x);
                rec.maybe_record(stage + 1, 1);
            }
            break;
        }
        case Algorithm::EwaLossesTuned: {
            EwaState st(config.d, -tune_losses(config.s, config.d, config.T));
            for (; stage < config.T; ++stage) {
                const SimplexDistribution x = ewa_step(st, seq.outcomes[stage]);
                ledger.update(seq.outcomes[stage], x);
                rec.maybe_record(stage + 1, 1);
            }
            break;
        }
        case Algorithm::AdaptiveLosses: {
            if (config.T == 0) break;
            AdaptiveLossState st(config.d, config.T);
            for (; stage < config.T; ++stage) {
                const SimplexDistribution x = adaptive_losses_step(st, seq.outcomes[stage]);
                ledger.update(seq.outcomes[stage], x);
                rec.maybe_record(stage + 1, st.m);
            }
            out.final_regime = st.m;
            break;
        }
        case Algorithm::AdaptiveGains: {
            if (config.T == 0) break;
            AdaptiveGainsState st(config.d, config.T);
            for (; stage < config.T; ++stage) {
                const SimplexDistribution x = adaptive_gains_step(st, seq.outcomes[stage]);
                ledger.update(seq.outcomes[stage], x);
                rec.maybe_record(stage + 1, st.m);
            }
            out.final_regime = st.m;
            break;
        }
        case Algorithm::BanditTsallis: {
            if (config.T == 0) break;
            BanditState st = config.bandit_q
                                 ? BanditState(config.d, *config.bandit_q, *config.bandit_eta)
                                 : BanditState::tuned(config.d, config.s, config.T, config.eta_variant);
            for (; stage < config.T; ++stage) {
                const SimplexDistribution x = st.x;
                const std::size_t arm = sample_arm(x, play);
                const LossEstimate est =
                    estimate_loss(seq.outcomes[stage].value_at(arm), arm, x);
                bandit_step(st, est);
                ledger.update(seq.outcomes[stage], x, arm);
                rec.maybe_record(stage + 1, 1);
            }
            break;
        }
        case Algorithm::UniformRandom: {
            const SimplexDistribution x = SimplexDistribution::uniform(config.d);
            for (; stage < config.T; ++stage) {
                const std::size_t arm = sample_arm(x, play);
                ledger.update(seq.outcomes[stage], x, arm);
                rec.maybe_record(stage + 1, 1);
            }
            break;
        }
        }
    } catch (const NumericalError& e) {
        throw NumericalError("replication " + std::to_string(r) + ", stage " +
                             std::to_string(stage) + ": " + e.what());
    }

    out.expected_regret = ledger.regret();
    if (bandit) out.realized_regret = ledger.realized_regret();
    return out;
}

double select_bound(const ExperimentConfig& config, bool& lower_mode) {
    lower_mode = config.adversary == AdversaryKind::BanditLossLB;
    if (lower_mode)
        return theoretical_bound(BoundKind::BanditLossesLower, config.s, config.d, config.T);
    if (config.T == 0) return 0.0; // no stages, nothing to bound
    switch (config.algorithm) {
    case Algorithm::OmdGains: return full_info_gains_bound(config.s, config.T);
    case Algorithm::EwaLossesTuned:
        return theoretical_bound(BoundKind::FullInfoLosses, config.s, config.d, config.T);
    case Algorithm::AdaptiveLosses:
        return theoretical_bound(BoundKind::AdaptiveLosses, config.s, config.d, config.T);
    case Algorithm::AdaptiveGains:
        return theoretical_bound(BoundKind::AdaptiveGains, config.s, config.d, config.T);
    case Algorithm::BanditTsallis:
        return theoretical_bound(BoundKind::BanditLosses, config.s, config.d, config.T);
    case Algorithm::UniformRandom:
        break; // rejected by validate outside lower bound mode
    }
    throw std::invalid_argument("select_bound: no bound defined for this configuration");
}

} // namespace

bool is_bandit_feedback(Algorithm algo) {
    return algo == Algorithm::BanditTsallis || algo == Algorithm::UniformRandom;
}

Direction algorithm_direction(Algorithm algo) {
    switch (algo) {
    case Algorithm::OmdGains:
    case Algorithm::AdaptiveGains: return Direction::Gain;
    default: return Direction::Loss;
    }
}

const char* algorithm_name(Algorithm algo) {
    switch (algo) {
    case Algorithm::OmdGains: return "omd-gains";
    case Algorithm::EwaLossesTuned: return "ewa-losses";
    case Algorithm::AdaptiveLosses: return "adaptive-losses";
    case Algorithm::AdaptiveGains: return "adaptive-gains";
    case Algorithm::BanditTsallis: return "bandit-tsallis";
    case Algorithm::UniformRandom: return "uniform-random";
    }
    return "?";
}

const char* adversary_name(AdversaryKind kind) {
    switch (kind) {
    case AdversaryKind::RandomSparse: return "random-sparse";
    case AdversaryKind::FirstSCoordsGains: return "first-s-gains";
    case AdversaryKind::FullInfoLossLB: return "full-info-loss-lb";
    case AdversaryKind::BanditLossLB: return "bandit-loss-lb";
    }
    return "?";
}

const char* eta_variant_name(BanditEtaVariant variant) {
    return variant == BanditEtaVariant::Balanced ? "balanced" : "reciprocal";
}

Algorithm parse_algorithm(const std::string& name) {
    for (Algorithm a : {Algorithm::OmdGains, Algorithm::EwaLossesTuned, Algorithm::AdaptiveLosses,
                        Algorithm::AdaptiveGains, Algorithm::BanditTsallis, Algorithm::UniformRandom})
        if (name == algorithm_name(a)) return a;
    throw std::invalid_argument("unknown algorithm: " + name);
}

AdversaryKind parse_adversary(const std::string& name) {
    for (AdversaryKind k : {AdversaryKind::RandomSparse, AdversaryKind::FirstSCoordsGains,
                            AdversaryKind::FullInfoLossLB, AdversaryKind::BanditLossLB})
        if (name == adversary_name(k)) return k;
    throw std::invalid_argument("unknown adversary: " + name);
}

BanditEtaVariant parse_eta_variant(const std::string& name) {
    if (name == "balanced") return BanditEtaVariant::Balanced;
    if (name == "reciprocal") return BanditEtaVariant::Reciprocal;
    throw std::invalid_argument("unknown eta variant: " + name);
}

void validate(const ExperimentConfig& config) {
    if (config.d == 0) throw std::invalid_argument("config: d must be positive");
    if (config.s == 0 || config.s > config.d)
        throw std::invalid_argument("config: s must satisfy 1 <= s <= d");
    if (config.replications == 0)
        throw std::invalid_argument("config: replications must be positive");
    if (config.bandit_q.has_value() != config.bandit_eta.has_value())
        throw std::invalid_argument("config: bandit_q and bandit_eta must be set together");
    if (config.bandit_q && config.algorithm != Algorithm::BanditTsallis)
        throw std::invalid_argument("config: bandit tuning overrides require bandit-tsallis");
    if (config.epsilon && config.adversary != AdversaryKind::BanditLossLB)
        throw std::invalid_argument("config: epsilon only applies to the bandit-loss-lb adversary");
    if (config.algorithm == Algorithm::UniformRandom) {
        if (config.adversary != AdversaryKind::BanditLossLB)
            throw std::invalid_argument(
                "config: uniform-random play is only supported against the bandit-loss-lb adversary");
        return;
    }
    const Direction algo_dir = algorithm_direction(config.algorithm);
    const Direction adv_dir = adversary_direction(config.adversary, algo_dir);
    if (algo_dir != adv_dir)
        throw std::invalid_argument(std::string("config: ") + algorithm_name(config.algorithm) +
                                    " plays " +
                                    (algo_dir == Direction::Gain ? "gains" : "losses") +
                                    " but " + adversary_name(config.adversary) + " emits " +
                                    (adv_dir == Direction::Gain ? "gains" : "losses"));
    if (config.algorithm == Algorithm::BanditTsallis &&
        adv_dir != Direction::Loss)
        throw std::invalid_argument("config: bandit-tsallis requires a loss adversary");
}

RunResult run_experiment(const ExperimentConfig& config) {
    validate(config);
    RunResult result;
    result.config = config;
    result.bound = select_bound(config, result.lower_bound_mode);

    const std::size_t R = config.replications;
    result.replications.resize(R);
    std::size_t nthreads = config.threads ? config.threads
                                          : std::max(1u, std::thread::hardware_concurrency());
    nthreads = std::min(nthreads, R);

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&]() {
        while (!failed.load(std::memory_order_relaxed)) {
            const std::size_t r = next.fetch_add(1);
            if (r >= R) return;
            try {
                result.replications[r] = run_replication(config, r);
            } catch (...) {
                std::lock_guard<std::mutex> guard(error_mutex);
                if (!first_error) first_error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
                return;
            }
        }
    };
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (std::size_t i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    // Aggregate in slot order so the result never depends on scheduling.
    double sum = 0.0;
    result.min = result.replications[0].expected_regret;
    result.max = result.min;
    for (const auto& rep : result.replications) {
        sum += rep.expected_regret;
        result.min = std::min(result.min, rep.expected_regret);
        result.max = std::max(result.max, rep.expected_regret);
    }
    result.mean = sum / static_cast<double>(R);
    if (R > 1) {
        double ss = 0.0;
        for (const auto& rep : result.replications) {
            const double dlt = rep.expected_regret - result.mean;
            ss += dlt * dlt;
        }
        result.stddev = std::sqrt(ss / static_cast<double>(R - 1));
    }
    result.bound_ratio = result.bound != 0.0 ? result.mean / result.bound : 0.0;
    return result;
}

BoundReport compare_to_bound(const RunResult& result) {
    if (result.replications.empty())
        throw std::invalid_argument("compare_to_bound: result has no replications");
    BoundReport rep;
    rep.bound = result.bound;
    rep.mean = result.mean;
    rep.stddev = result.stddev;
    rep.standard_error = result.stddev / std::sqrt(static_cast<double>(result.replications.size()));
    rep.bound_ratio = result.bound_ratio;
    rep.lower_bound_mode = result.lower_bound_mode;
    char buf[256];
    if (result.lower_bound_mode) {
        rep.pass = rep.mean - 2.0 * rep.standard_error >= rep.bound;
        std::snprintf(buf, sizeof(buf),
                      "mean %.6g +- %.3g (stderr), lower bound %.6g, ratio %.4g: %s",
                      rep.mean, rep.standard_error, rep.bound, rep.bound_ratio,
                      rep.pass ? "pass" : "FAIL");
    } else {
        rep.pass = result.max <= rep.bound;
        std::snprintf(buf, sizeof(buf),
                      "max %.6g, mean %.6g +- %.3g (std), bound %.6g, ratio %.4g: %s",
                      result.max, rep.mean, rep.stddev, rep.bound, rep.bound_ratio,
                      rep.pass ? "pass" : "FAIL");
    }
    rep.summary = buf;
    return rep;
}

namespace {

nlohmann::json config_to_json(const ExperimentConfig& c) {
    nlohmann::json j;
    j["algorithm"] = algorithm_name(c.algorithm);
    j["adversary"] = adversary_name(c.adversary);
    j["d"] = c.d;
    j["s"] = c.s;
    j["T"] = c.T;
    j["replications"] = c.replications;
    j["base_seed"] = c.base_seed;
    j["record_every"] = c.record_every;
    j["epsilon"] = c.epsilon ? nlohmann::json(*c.epsilon) : nlohmann::json(nullptr);
    j["bandit_q"] = c.bandit_q ? nlohmann::json(*c.bandit_q) : nlohmann::json(nullptr);
    j["bandit_eta"] = c.bandit_eta ? nlohmann::json(*c.bandit_eta) : nlohmann::json(nullptr);
    j["eta_variant"] = eta_variant_name(c.eta_variant);
    j["threads"] = c.threads;
    return j;
}

ExperimentConfig config_from_json(const nlohmann::json& j) {
    ExperimentConfig c;
    c.algorithm = parse_algorithm(j.at("algorithm").get<std::string>());
    c.adversary = parse_adversary(j.at("adversary").get<std::string>());
    c.d = j.at("d").get<std::size_t>();
    c.s = j.at("s").get<std::size_t>();
    c.T = j.at("T").get<std::size_t>();
    c.replications = j.at("replications").get<std::size_t>();
    c.base_seed = j.at("base_seed").get<std::uint64_t>();
    c.record_every = j.at("record_every").get<std::size_t>();
    if (!j.at("epsilon").is_null()) c.epsilon = j.at("epsilon").get<double>();
    if (!j.at("bandit_q").is_null()) c.bandit_q = j.at("bandit_q").get<double>();
    if (!j.at("bandit_eta").is_null()) c.bandit_eta = j.at("bandit_eta").get<double>();
    c.eta_variant = parse_eta_variant(j.at("eta_variant").get<std::string>());
    c.threads = j.at("threads").get<std::size_t>();
    return c;
}

void export_csv(const RunResult& result, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("export_result: cannot open " + path);
    out << "replication,stage,expected_regret,realized_regret,regime_m\n";
    for (const auto& rep : result.replications) {
        for (const auto& pt : rep.trajectory) {
            out << rep.replication << ',' << pt.stage << ',' << fmt17(pt.expected_regret) << ',';
            if (pt.realized_regret) out << fmt17(*pt.realized_regret);
            out << ',';
            if (pt.regime_m) out << *pt.regime_m;
            out << '\n';
        }
    }
    if (!out) throw std::runtime_error("export_result: write failed for " + path);
}

void export_json(const RunResult& result, const std::string& path) {
    nlohmann::json j;
    j["config"] = config_to_json(result.config);
    j["summary"] = {
        {"mean", result.mean},       {"stddev", result.stddev},
        {"min", result.min},         {"max", result.max},
        {"bound", result.bound},     {"bound_ratio", result.bound_ratio},
        {"lower_bound_mode", result.lower_bound_mode},
    };
    auto& reps = j["replications"] = nlohmann::json::array();
    for (const auto& rep : result.replications) {
        nlohmann::json r;
        r["replication"] = rep.replication;
        r["expected_regret"] = rep.expected_regret;
        r["realized_regret"] =
            rep.realized_regret ? nlohmann::json(*rep.realized_regret) : nlohmann::json(nullptr);
        r["final_regime"] =
            rep.final_regime ? nlohmann::json(*rep.final_regime) : nlohmann::json(nullptr);
        auto& traj = r["trajectory"] = nlohmann::json::array();
        for (const auto& pt : rep.trajectory) {
            nlohmann::json p;
            p["stage"] = pt.stage;
            p["expected_regret"] = pt.expected_regret;
            p["realized_regret"] =
                pt.realized_regret ? nlohmann::json(*pt.realized_regret) : nlohmann::json(nullptr);
            p["regime_m"] = pt.regime_m ? nlohmann::json(*pt.regime_m) : nlohmann::json(nullptr);
            traj.push_back(std::move(p));
        }
        reps.push_back(std::move(r));
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("export_result: cannot open " + path);
    out << j.dump(2) << '\n';
    if (!out) throw std::runtime_error("export_result: write failed for " + path);
}

} // namespace

void export_result(const RunResult& result, ExportFormat format, const std::string& path) {
    if (format == ExportFormat::Csv)
        export_csv(result, path);
    else
        export_json(result, path);
}

RunResult import_result_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("import_result_json: cannot open " + path);
    nlohmann::json j;
    in >> j;
    RunResult result;
    result.config = config_from_json(j.at("config"));
    const auto& s = j.at("summary");
    result.mean = s.at("mean").get<double>();
    result.stddev = s.at("stddev").get<double>();
    result.min = s.at("min").get<double>();
    result.max = s.at("max").get<double>();
    result.bound = s.at("bound").get<double>();
    result.bound_ratio = s.at("bound_ratio").get<double>();
    result.lower_bound_mode = s.at("lower_bound_mode").get<bool>();
    for (const auto& r : j.at("replications")) {
        ReplicationResult rep;
        rep.replication = r.at("replication").get<std::size_t>();
        rep.expected_regret = r.at("expected_regret").get<double>();
        if (!r.at("realized_regret").is_null())
            rep.realized_regret = r.at("realized_regret").get<double>();
        if (!r.at("final_regime").is_null())
            rep.final_regime = r.at("final_regime").get<int>();
        for (const auto& p : r.at("trajectory")) {
            TrajectoryPoint pt;
            pt.stage = p.at("stage").get<std::size_t>();
            pt.expected_regret = p.at("expected_regret").get<double>();
            if (!p.at("realized_regret").is_null())
                pt.realized_regret = p.at("realized_regret").get<double>();
            if (!p.at("regime_m").is_null()) pt.regime_m = p.at("regime_m").get<int>();
            rep.trajectory.push_back(pt);
        }
        result.replications.push_back(std::move(rep));
    }
    return result;
}

} // namespace sparse_regret
