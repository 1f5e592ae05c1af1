#include "pedestal/rpp.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "pedestal/checked.hpp"
#include "pedestal/error.hpp"

namespace ped {

ReversePlanePartition::ReversePlanePartition(Poset poset, std::vector<int> values)
    : poset_(std::move(poset)), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != poset_.size())
        throw Error(ErrorKind::MissingValue, "expected " + std::to_string(poset_.size()) +
                                                 " values, got " + std::to_string(values_.size()));
    for (int e = 0; e < poset_.size(); ++e)
        if (values_[e] < 0)
            throw Error(ErrorKind::NegativeEntry, "value at " + poset_.label(e) + " is negative");
    for (auto [a, b] : poset_.covers())
        if (values_[a] > values_[b])
            throw Error(ErrorKind::NotMonotone,
                        "value decreases from " + poset_.label(a) + " to " + poset_.label(b));
}

ReversePlanePartition ReversePlanePartition::from_rows(const std::vector<std::vector<int>>& rows) {
    std::vector<int> parts;
    std::vector<int> values;
    for (const auto& r : rows) {
        if (r.empty())
            throw Error(ErrorKind::ShapeMismatch, "empty row in row arrays");
        parts.push_back(static_cast<int>(r.size()));
        values.insert(values.end(), r.begin(), r.end());
    }
    Partition shape;
    try {
        shape = Partition::from_parts(parts);
    } catch (const Error&) {
        throw Error(ErrorKind::ShapeMismatch, "row lengths do not form a partition");
    }
    return ReversePlanePartition(young_poset(shape), std::move(values));
}

ReversePlanePartition ReversePlanePartition::zero(const Poset& poset) {
    return ReversePlanePartition(Unchecked{}, poset, std::vector<int>(static_cast<std::size_t>(poset.size()), 0));
}

std::vector<std::vector<int>> ReversePlanePartition::rows() const {
    const auto& shape = poset_.shape();
    if (!shape)
        throw Error(ErrorKind::ShapeMismatch, "row arrays need a Young poset");
    std::vector<std::vector<int>> out;
    auto it = values_.begin();
    for (int len : shape->parts()) {
        out.emplace_back(it, it + len);
        it += len;
    }
    return out;
}

ReversePlanePartition make_rpp(const Poset& poset, std::vector<int> values) {
    return ReversePlanePartition(poset, std::move(values));
}

std::int64_t volume(const ReversePlanePartition& rpp) {
    std::int64_t total = 0;
    for (int v : rpp.values())
        total = checked_add(total, v);
    return total;
}

void for_each_rpp(const Poset& poset, int max_volume,
                  const std::function<void(std::span<const int>)>& visit) {
    if (max_volume < 0)
        return;
    const int n = poset.size();
    const auto order = canonical_extension(poset).order();
    std::vector<int> values(static_cast<std::size_t>(n), 0);

    auto rec = [&](auto&& self, int k, int budget) -> void {
        if (k == n) {
            visit(values);
            return;
        }
        const int e = order[k];
        int lo = 0;
        for (int f : poset.lower_covers(e))
            lo = std::max(lo, values[f]);
        // Everything above e is still unassigned and must be at least v.
        const int weight = 1 + poset.up_set_size(e);
        for (int v = lo; static_cast<std::int64_t>(v) * weight <= budget; ++v) {
            values[e] = v;
            self(self, k + 1, budget - v);
        }
        values[e] = 0;
    };
    rec(rec, 0, max_volume);
}

std::vector<ReversePlanePartition> enumerate_rpp(const Poset& poset, int max_volume) {
    std::vector<ReversePlanePartition> out;
    for_each_rpp(poset, max_volume, [&](std::span<const int> v) {
        out.push_back(ReversePlanePartition(ReversePlanePartition::Unchecked{}, poset,
                                            std::vector<int>(v.begin(), v.end())));
    });
    return out;
}

void for_each_column_strict(const Partition& shape, int max_entry,
                            const std::function<void(std::span<const int>)>& visit) {
    if (max_entry < 0)
        return;
    const auto cells = nodes(shape);
    std::vector<int> values(cells.size(), 0);

    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == cells.size()) {
            visit(values);
            return;
        }
        const Node c = cells[k];
        int lo = 0;
        if (c.col > 1)
            lo = std::max(lo, values[k - 1]);
        if (c.row > 1)
            lo = std::max(lo, values[static_cast<std::size_t>(node_index(shape, {c.row - 1, c.col}))] + 1);
        // Cells below in the same column need distinct larger entries.
        const int hi = max_entry - (shape.column_length(c.col) - c.row);
        for (int v = lo; v <= hi; ++v) {
            values[k] = v;
            self(self, k + 1);
        }
    };
    rec(rec, 0);
}

std::vector<ReversePlanePartition> enumerate_column_strict(const Partition& shape, int max_entry) {
    std::vector<ReversePlanePartition> out;
    const Poset poset = young_poset(shape);
    for_each_column_strict(shape, max_entry, [&](std::span<const int> v) {
        out.push_back(ReversePlanePartition(ReversePlanePartition::Unchecked{}, poset,
                                            std::vector<int>(v.begin(), v.end())));
    });
    return out;
}

Partition pi_sort(const ReversePlanePartition& rpp) {
    std::vector<int> parts = rpp.values();
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition::from_parts(parts);
}

namespace {

void require_same_poset(const ReversePlanePartition& a, const ReversePlanePartition& b) {
    if (!(a.poset() == b.poset()))
        throw Error(ErrorKind::PosetMismatch, "reverse plane partitions live on different posets");
}

} // namespace

ReversePlanePartition rpp_sub(const ReversePlanePartition& a, const ReversePlanePartition& b) {
    require_same_poset(a, b);
    std::vector<int> diff(a.values());
    for (std::size_t e = 0; e < diff.size(); ++e)
        diff[e] -= b.values()[e];
    return ReversePlanePartition(a.poset(), std::move(diff));
}

ReversePlanePartition rpp_add(const ReversePlanePartition& a, const ReversePlanePartition& b) {
    require_same_poset(a, b);
    std::vector<int> sum(a.values());
    for (std::size_t e = 0; e < sum.size(); ++e)
        sum[e] += b.values()[e];
    return ReversePlanePartition(a.poset(), std::move(sum));
}

} // namespace ped
