#pragma once

#include "schurkit/rootdata.hpp"

#include <string>
#include <vector>

namespace schurkit {

// A finite set of weights held in canonical (descending lexicographic)
// order without duplicates, tagged with where it came from.
class WeightSet {
public:
    WeightSet() = default;
    WeightSet(std::vector<Weight> elements, std::string label);

    const std::vector<Weight>& elements() const noexcept { return elements_; }
    const std::string& label() const noexcept { return label_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }
    bool contains(const Weight& w) const;

    auto begin() const { return elements_.begin(); }
    auto end() const { return elements_.end(); }

    WeightSet united(const WeightSet& other, std::string label) const;
    // Elements of *this not in other.
    WeightSet minus(const WeightSet& other, std::string label) const;

    // Equality compares elements only, not labels.
    friend bool operator==(const WeightSet& a, const WeightSet& b) { return a.elements_ == b.elements_; }

private:
    std::vector<Weight> elements_;
    std::string label_;
};

// Integer vectors with sum |lambda_i| = r.
WeightSet signed_compositions(int n, int r);
// Partitions of r with at most n parts, padded with zeros.
WeightSet partitions_lambda_plus(int n, int r);
// Images of the partitions under negation of the last coordinate.
WeightSet partitions_lambda_minus(int n, int r);
WeightSet partitions_lambda_pm(int n, int r);

// All weights of the r-th tensor power of the natural module.
WeightSet tensor_weights_Pi(const LieType& type, int r);
// The dominant weights among them.
WeightSet tensor_dominant_pi(const LieType& type, int r);

// True iff every dominant mu <= lambda of an element lambda is itself in ws.
// Throws std::invalid_argument if ws has a non-dominant element.
bool is_saturated(const RootSystem& rs, const WeightSet& ws);

} // namespace schurkit
