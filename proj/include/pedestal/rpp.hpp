#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "pedestal/posets.hpp"
#include "pedestal/shapes.hpp"

namespace ped {

/// Order-preserving map from poset elements to non-negative integers,
/// stored densely in element order.
class ReversePlanePartition {
public:
    /// Throws MissingValue, NegativeEntry or NotMonotone.
    ReversePlanePartition(Poset poset, std::vector<int> values);

    /// Row arrays over young_poset(shape of rows).
    static ReversePlanePartition from_rows(const std::vector<std::vector<int>>& rows);
    static ReversePlanePartition zero(const Poset& poset);

    const Poset& poset() const noexcept { return poset_; }
    const std::vector<int>& values() const noexcept { return values_; }
    int operator[](int e) const noexcept { return values_[e]; }
    int size() const noexcept { return static_cast<int>(values_.size()); }

    /// Row arrays; requires a Young poset.
    std::vector<std::vector<int>> rows() const;

    friend bool operator==(const ReversePlanePartition& a, const ReversePlanePartition& b) {
        return a.values_ == b.values_ && a.poset_ == b.poset_;
    }

private:
    struct Unchecked {};
    ReversePlanePartition(Unchecked, Poset poset, std::vector<int> values)
        : poset_(std::move(poset)), values_(std::move(values)) {}
    friend std::vector<ReversePlanePartition> enumerate_rpp(const Poset&, int);
    friend std::vector<ReversePlanePartition> enumerate_column_strict(const Partition&, int);

    Poset poset_;
    std::vector<int> values_;
};

ReversePlanePartition make_rpp(const Poset& poset, std::vector<int> values);

std::int64_t volume(const ReversePlanePartition& rpp);

/// Every RPP of volume <= max_volume exactly once. DFS over the canonical
/// linear extension; each element starts at the max of its lower covers.
void for_each_rpp(const Poset& poset, int max_volume,
                  const std::function<void(std::span<const int>)>& visit);
std::vector<ReversePlanePartition> enumerate_rpp(const Poset& poset, int max_volume);

/// Fillings of the shape with entries in 0..max_entry, weakly increasing
/// along rows and strictly increasing down columns. Row-major DFS.
void for_each_column_strict(const Partition& shape, int max_entry,
                            const std::function<void(std::span<const int>)>& visit);
std::vector<ReversePlanePartition> enumerate_column_strict(const Partition& shape, int max_entry);

/// Values sorted non-increasingly with zeros dropped.
Partition pi_sort(const ReversePlanePartition& rpp);

/// Pointwise difference; NegativeEntry / NotMonotone if the result is not an RPP.
ReversePlanePartition rpp_sub(const ReversePlanePartition& a, const ReversePlanePartition& b);
ReversePlanePartition rpp_add(const ReversePlanePartition& a, const ReversePlanePartition& b);

} // namespace ped
