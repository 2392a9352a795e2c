#include "sparse_regret/adversaries.hpp"

#include <cmath>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace sparse_regret {
namespace {

std::vector<std::size_t> sample_support(std::size_t d, std::size_t s, RngStream& rng) {
    std::vector<std::size_t> pool(d);
    std::iota(pool.begin(), pool.end(), std::size_t(0));
    for (std::size_t j = 0; j < s; ++j) {
        const std::size_t k = j + static_cast<std::size_t>(rng.uniform_below(d - j));
        std::swap(pool[j], pool[k]);
    }
    pool.resize(s);
    return pool;
}

void check_spec(const AdversarySpec& spec) {
    if (spec.d == 0) throw std::invalid_argument("generate: d must be positive");
    if (spec.s == 0 || spec.s > spec.d)
        throw std::invalid_argument("generate: s must satisfy 1 <= s <= d");
    switch (spec.kind) {
    case AdversaryKind::FirstSCoordsGains:
        if (spec.direction != Direction::Gain)
            throw std::invalid_argument("generate: FirstSCoordsGains emits gains");
        break;
    case AdversaryKind::FullInfoLossLB:
    case AdversaryKind::BanditLossLB:
        if (spec.direction != Direction::Loss)
            throw std::invalid_argument("generate: lower bound adversaries emit losses");
        break;
    case AdversaryKind::RandomSparse:
        break;
    }
    if (spec.epsilon && spec.kind != AdversaryKind::BanditLossLB)
        throw std::invalid_argument("generate: epsilon only applies to BanditLossLB");
}

} // namespace

double default_epsilon(std::size_t s, std::size_t T) {
    if (s == 0 || T == 0) throw std::invalid_argument("default_epsilon: s and T must be positive");
    return std::sqrt(static_cast<double>(s) / static_cast<double>(T)) / 8.0;
}

GeneratedSequence generate(const AdversarySpec& spec) {
    check_spec(spec);
    RngStream rng(spec.seed, spec.stream_id);
    GeneratedSequence seq;
    seq.outcomes.reserve(spec.T);
    seq.supports.reserve(spec.T);

    double biased_one_prob = 0.5;
    if (spec.kind == AdversaryKind::BanditLossLB) {
        const double eps = spec.epsilon ? *spec.epsilon : default_epsilon(spec.s, spec.T);
        const double eps_max = static_cast<double>(spec.s) / (4.0 * static_cast<double>(spec.d));
        if (!(eps >= 0.0 && eps <= eps_max + 1e-15))
            throw std::invalid_argument("generate: epsilon must lie in [0, s/(4d)]");
        biased_one_prob = 0.5 - eps * static_cast<double>(spec.d) / static_cast<double>(spec.s);
        seq.hidden_arm = static_cast<std::size_t>(rng.uniform_below(spec.d));
    }

    for (std::size_t t = 0; t < spec.T; ++t) {
        std::vector<std::size_t> support;
        std::vector<OutcomeEntry> entries;
        switch (spec.kind) {
        case AdversaryKind::RandomSparse:
            support = sample_support(spec.d, spec.s, rng);
            for (std::size_t i : support) entries.push_back({i, rng.uniform01()});
            break;
        case AdversaryKind::FirstSCoordsGains:
            support.resize(spec.s);
            std::iota(support.begin(), support.end(), std::size_t(0));
            for (std::size_t i : support)
                if (rng.bernoulli(0.5)) entries.push_back({i, 1.0});
            break;
        case AdversaryKind::FullInfoLossLB:
            support = sample_support(spec.d, spec.s, rng);
            for (std::size_t i : support)
                if (rng.bernoulli(0.5)) entries.push_back({i, 1.0});
            break;
        case AdversaryKind::BanditLossLB:
            support = sample_support(spec.d, spec.s, rng);
            for (std::size_t i : support) {
                const double p = (i == *seq.hidden_arm) ? biased_one_prob : 0.5;
                if (rng.bernoulli(p)) entries.push_back({i, 1.0});
            }
            break;
        }
        seq.outcomes.emplace_back(spec.d, std::move(entries), spec.direction);
        seq.supports.push_back(std::move(support));
    }
    return seq;
}

void write_sequence_jsonl(const std::vector<SparseOutcome>& outcomes, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_sequence_jsonl: cannot open " + path);
    for (std::size_t t = 0; t < outcomes.size(); ++t) {
        const SparseOutcome& o = outcomes[t];
        nlohmann::json line;
        line["stage"] = t;
        line["dim"] = o.dim();
        line["direction"] = o.direction() == Direction::Gain ? "gain" : "loss";
        auto& entries = line["entries"] = nlohmann::json::array();
        for (const auto& e : o.entries()) entries.push_back({e.index, e.value});
        out << line.dump() << '\n';
    }
    if (!out) throw std::runtime_error("write_sequence_jsonl: write failed for " + path);
}

std::vector<SparseOutcome> read_sequence_jsonl(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_sequence_jsonl: cannot open " + path);
    std::vector<SparseOutcome> outcomes;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const nlohmann::json j = nlohmann::json::parse(line);
        const Direction dir =
            j.at("direction").get<std::string>() == "gain" ? Direction::Gain : Direction::Loss;
        std::vector<OutcomeEntry> entries;
        for (const auto& e : j.at("entries"))
            entries.push_back({e.at(0).get<std::size_t>(), e.at(1).get<double>()});
        outcomes.emplace_back(j.at("dim").get<std::size_t>(), std::move(entries), dir);
    }
    return outcomes;
}

} // namespace sparse_regret
