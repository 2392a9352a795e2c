#include "sparse_regret/outcome.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sparse_regret {

SparseOutcome::SparseOutcome(std::size_t dim, std::vector<OutcomeEntry> entries, Direction direction)
    : dim_(dim), direction_(direction), entries_(std::move(entries)) {
    if (dim_ == 0) throw std::invalid_argument("SparseOutcome: dimension must be positive");
    for (const auto& e : entries_) {
        if (e.index >= dim_)
            throw std::invalid_argument("SparseOutcome: index " + std::to_string(e.index) +
                                        " out of range for dimension " + std::to_string(dim_));
        if (!(e.value >= 0.0 && e.value <= 1.0))
            throw std::invalid_argument("SparseOutcome: values must lie in [0, 1]");
    }
    std::sort(entries_.begin(), entries_.end(),
              [](const OutcomeEntry& a, const OutcomeEntry& b) { return a.index < b.index; });
    for (std::size_t i = 1; i < entries_.size(); ++i)
        if (entries_[i].index == entries_[i - 1].index)
            throw std::invalid_argument("SparseOutcome: duplicate index " +
                                        std::to_string(entries_[i].index));
    entries_.erase(std::remove_if(entries_.begin(), entries_.end(),
                                  [](const OutcomeEntry& e) { return e.value == 0.0; }),
                   entries_.end());
}

SparseOutcome SparseOutcome::zero(std::size_t dim, Direction direction) {
    return SparseOutcome(dim, {}, direction);
}

SparseOutcome SparseOutcome::from_dense(const std::vector<double>& values, Direction direction) {
    std::vector<OutcomeEntry> entries;
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] != 0.0) entries.push_back({i, values[i]});
    return SparseOutcome(values.size(), std::move(entries), direction);
}

double SparseOutcome::value_at(std::size_t index) const {
    if (index >= dim_) throw std::out_of_range("SparseOutcome::value_at: index out of range");
    auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                               [](const OutcomeEntry& e, std::size_t i) { return e.index < i; });
    return (it != entries_.end() && it->index == index) ? it->value : 0.0;
}

std::vector<double> SparseOutcome::dense() const {
    std::vector<double> v(dim_, 0.0);
    for (const auto& e : entries_) v[e.index] = e.value;
    return v;
}

double SparseOutcome::dot(const std::vector<double>& x) const {
    if (x.size() != dim_) throw std::invalid_argument("SparseOutcome::dot: dimension mismatch");
    double acc = 0.0;
    for (const auto& e : entries_) acc += e.value * x[e.index];
    return acc;
}

} // namespace sparse_regret
