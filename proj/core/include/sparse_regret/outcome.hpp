#pragma once

#include <cstddef>
#include <vector>

namespace sparse_regret {

enum class Direction { Gain, Loss };

struct OutcomeEntry {
    std::size_t index;
    double value;
};

// One stage's outcome vector in [0,1]^d stored by support. Construction
// canonicalizes: entries are sorted by index and zero values dropped, so
// sparsity() is exactly the entry count.
class SparseOutcome {
public:
    SparseOutcome(std::size_t dim, std::vector<OutcomeEntry> entries, Direction direction);

    static SparseOutcome zero(std::size_t dim, Direction direction);
    static SparseOutcome from_dense(const std::vector<double>& values, Direction direction);

    std::size_t dim() const { return dim_; }
    Direction direction() const { return direction_; }
    const std::vector<OutcomeEntry>& entries() const { return entries_; }

    // Number of nonzero components.
    std::size_t sparsity() const { return entries_.size(); }

    double value_at(std::size_t index) const;
    std::vector<double> dense() const;
    double dot(const std::vector<double>& x) const;

private:
    std::size_t dim_;
    Direction direction_;
    std::vector<OutcomeEntry> entries_;
};

} // namespace sparse_regret
