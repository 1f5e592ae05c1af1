#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pedestal/shapes.hpp"

namespace ped {

/// Finite poset on elements 0..n-1 with string labels. Immutable; copies
/// share the underlying data.
///
/// The stored covers are the transitive reduction of whatever relation was
/// supplied, and the strict order is kept as a dense n x n closure.
class Poset {
public:
    Poset();

    /// Throws DuplicateLabel, UnknownLabel or Cycle.
    static Poset from_covers(std::vector<std::string> labels,
                             const std::vector<std::pair<std::string, std::string>>& relations);
    static Poset from_index_covers(std::vector<std::string> labels,
                                   const std::vector<std::pair<int, int>>& relations);

    int size() const noexcept { return static_cast<int>(impl_->labels.size()); }
    const std::vector<std::string>& labels() const noexcept { return impl_->labels; }
    const std::string& label(int e) const { return impl_->labels[e]; }
    std::optional<int> index_of(std::string_view label) const;

    /// Cover pairs (a, b), a covered by b, sorted.
    const std::vector<std::pair<int, int>>& covers() const noexcept { return impl_->covers; }
    std::span<const int> lower_covers(int e) const noexcept { return impl_->lower[e]; }
    std::span<const int> upper_covers(int e) const noexcept { return impl_->upper[e]; }

    /// Strict order a < b.
    bool less(int a, int b) const noexcept {
        return impl_->closure[static_cast<std::size_t>(a) * impl_->labels.size() + b] != 0;
    }
    int up_set_size(int e) const noexcept { return impl_->up_size[e]; }
    bool connected() const;

    /// Set when built by young_poset; elements are then the nodes in row-major order.
    const std::optional<Partition>& shape() const noexcept { return impl_->shape; }

    bool same_as(const Poset& other) const noexcept { return impl_ == other.impl_; }
    friend bool operator==(const Poset& a, const Poset& b);

private:
    struct Impl {
        std::vector<std::string> labels;
        std::vector<std::pair<int, int>> covers;
        std::vector<std::vector<int>> lower, upper;
        std::vector<unsigned char> closure;
        std::vector<int> up_size;
        std::optional<Partition> shape;
    };
    explicit Poset(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    static std::shared_ptr<Impl> build(std::vector<std::string> labels,
                                       const std::vector<std::pair<int, int>>& relations);
    friend Poset young_poset(const Partition& shape);

    std::shared_ptr<const Impl> impl_;
};

Poset poset_from_covers(std::vector<std::string> elements,
                        const std::vector<std::pair<std::string, std::string>>& covers);

/// Diagram of a partition with (i,j) < (i+1,j) and (i,j) < (i,j+1);
/// labels are "i,j".
Poset young_poset(const Partition& shape);

/// Total order compatible with a poset; order()[k] is the element of rank k.
class LinearExtension {
public:
    /// Throws InvalidExtension if order is not a compatible permutation.
    LinearExtension(Poset poset, std::vector<int> order);

    const Poset& poset() const noexcept { return poset_; }
    const std::vector<int>& order() const noexcept { return order_; }
    const std::vector<int>& ranks() const noexcept { return rank_; }
    int rank(int e) const noexcept { return rank_[e]; }
    int size() const noexcept { return static_cast<int>(order_.size()); }

    friend bool operator==(const LinearExtension& a, const LinearExtension& b) {
        return a.order_ == b.order_ && a.poset_ == b.poset_;
    }

private:
    LinearExtension(Poset poset, std::vector<int> order, std::vector<int> rank)
        : poset_(std::move(poset)), order_(std::move(order)), rank_(std::move(rank)) {}
    friend std::vector<LinearExtension> linear_extensions(const Poset&);
    friend LinearExtension canonical_extension(const Poset&);

    Poset poset_;
    std::vector<int> order_;
    std::vector<int> rank_;
};

/// Backtracks over currently-minimal elements, trying candidates in element
/// order. The visitor sees the order (element per rank) and must not keep the span.
void for_each_linear_extension(const Poset& poset, const std::function<void(std::span<const int>)>& visit);

/// Same, restricted to extensions that start with `prefix`.
void for_each_linear_extension(const Poset& poset, std::span<const int> prefix,
                               const std::function<void(std::span<const int>)>& visit);

std::vector<LinearExtension> linear_extensions(const Poset& poset);

/// First extension in enumeration order; for a Young poset this is the
/// row-superstandard tableau.
LinearExtension canonical_extension(const Poset& poset);

/// Node of rank k in the extension is the node holding k+1 in the tableau.
LinearExtension extension_of_tableau(const StandardTableau& tableau);

/// Throws ShapeMismatch unless the extension lives on young_poset(shape).
StandardTableau tableau_of_extension(const Partition& shape, const LinearExtension& extension);

} // namespace ped
