#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace ped {

/// Integer partition lambda_1 >= ... >= lambda_l > 0, identified with its
/// Young diagram. The empty partition is allowed.
class Partition {
public:
    Partition() = default;

    /// Validates and strips trailing zeros. Throws NonMonotone / Negative.
    static Partition from_parts(std::span<const int> parts);
    static Partition from_parts(std::initializer_list<int> parts) {
        return from_parts(std::span<const int>(parts.begin(), parts.size()));
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    int row_length(int row) const noexcept {
        return row >= 1 && row <= length() ? parts_[row - 1] : 0;
    }
    int column_length(int col) const noexcept;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// A cell (row, col) of a diagram, both 1-based.
struct Node {
    int row = 1;
    int col = 1;
    friend bool operator==(const Node&, const Node&) = default;
    friend auto operator<=>(const Node&, const Node&) = default;
};

Partition make_partition(std::span<const int> parts);

bool contains(const Partition& shape, Node node) noexcept;

/// Nodes in row-major order; the position in this list is the node's
/// element index everywhere else in the library.
std::vector<Node> nodes(const Partition& shape);

/// Row-major index of a node inside its shape.
int node_index(const Partition& shape, Node node);

int hook_length(const Partition& shape, Node node);

/// Hook lengths of all nodes, in row-major node order.
std::vector<int> hook_multiset(const Partition& shape);

Partition conjugate(const Partition& shape);

/// Sum over nodes of (row - 1).
std::int64_t l_stat(const Partition& shape);

/// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);

/// Standard Young tableau stored as rows of entries.
class StandardTableau {
public:
    /// Throws InvalidTableau unless rows form a valid standard filling.
    static StandardTableau from_rows(std::vector<std::vector<int>> rows);

    const Partition& shape() const noexcept { return shape_; }
    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
    int entry(Node node) const { return rows_[node.row - 1][node.col - 1]; }
    int size() const noexcept { return shape_.size(); }

    /// Rows concatenated top to bottom; enumeration order is lexicographic
    /// on this word.
    std::vector<int> reading_word() const;

    /// Row of each entry: result[k-1] is the row holding k.
    std::vector<int> rows_of_entries() const;

    /// Transpose: Q^T(j,i) = Q(i,j).
    StandardTableau transposed() const;

    friend bool operator==(const StandardTableau& a, const StandardTableau& b) {
        return a.rows_ == b.rows_;
    }

private:
    StandardTableau(Partition shape, std::vector<std::vector<int>> rows)
        : shape_(std::move(shape)), rows_(std::move(rows)) {}

    Partition shape_;
    std::vector<std::vector<int>> rows_;
};

/// Visits every standard tableau of the shape exactly once, in
/// lexicographic order of the reading word.
void for_each_syt(const Partition& shape, const std::function<void(const StandardTableau&)>& visit);

std::vector<StandardTableau> enumerate_syt(const Partition& shape);

/// Hook-length count n!/prod(h). Exact; throws Overflow only if the count
/// itself does not fit in int64.
std::int64_t syt_count(const Partition& shape);

/// Descent set: entries i such that i+1 lies in a strictly lower row.
std::vector<int> descents(const StandardTableau& tableau);
std::int64_t maj(const StandardTableau& tableau);
std::int64_t comaj(const StandardTableau& tableau);

} // namespace ped
