#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sparse_regret/outcome.hpp"
#include "sparse_regret/rng.hpp"

namespace sparse_regret {

enum class AdversaryKind {
    RandomSparse,      // uniform support of size s, iid U[0,1] values
    FirstSCoordsGains, // gains on the first s coordinates, fair coin values
    FullInfoLossLB,    // uniform support of size s, fair coin values
    BanditLossLB,      // one hidden arm's loss probability lowered by eps*d/s
};

struct AdversarySpec {
    AdversaryKind kind = AdversaryKind::RandomSparse;
    std::size_t d = 0;
    std::size_t s = 0;
    std::size_t T = 0;
    Direction direction = Direction::Loss;
    std::optional<double> epsilon; // BanditLossLB bias, default sqrt(s/T)/8
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0;
};

// The full materialized sequence. hidden_arm and supports are diagnostic
// metadata for the harness; algorithms never see them.
struct GeneratedSequence {
    std::vector<SparseOutcome> outcomes;
    std::optional<std::size_t> hidden_arm;          // BanditLossLB target
    std::vector<std::vector<std::size_t>> supports; // per-stage drawn support
};

// Bias used by the bandit lower bound construction when none is given:
// sqrt(s/T) / 8.
double default_epsilon(std::size_t s, std::size_t T);

// Materializes the outcome sequence for the spec. Oblivious by
// construction: the sequence never depends on the learner. Identical
// specs (including seed and stream_id) produce identical sequences.
GeneratedSequence generate(const AdversarySpec& spec);

// One stage per line: {"stage": t, "dim": d, "direction": "gain"|"loss",
// "entries": [[index, value], ...]}.
void write_sequence_jsonl(const std::vector<SparseOutcome>& outcomes, const std::string& path);
std::vector<SparseOutcome> read_sequence_jsonl(const std::string& path);

} // namespace sparse_regret
