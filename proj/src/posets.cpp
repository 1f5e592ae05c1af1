#include "pedestal/posets.hpp"

#include <algorithm>
#include <unordered_map>

#include "pedestal/error.hpp"

namespace ped {

Poset::Poset() : impl_(build({}, {})) {}

std::shared_ptr<Poset::Impl> Poset::build(std::vector<std::string> labels,
                                          const std::vector<std::pair<int, int>>& relations) {
    auto impl = std::make_shared<Impl>();
    const auto n = labels.size();
    impl->labels = std::move(labels);

    std::vector<std::vector<int>> succ(n);
    std::vector<int> indegree(n, 0);
    for (auto [a, b] : relations) {
        if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n)
            throw Error(ErrorKind::UnknownLabel, "relation references a missing element");
        if (a == b)
            throw Error(ErrorKind::Cycle, "element " + impl->labels[a] + " is related to itself");
        succ[a].push_back(b);
        ++indegree[b];
    }

    // Kahn's algorithm; anything left over sits on a cycle.
    std::vector<int> topo;
    for (std::size_t e = 0; e < n; ++e)
        if (indegree[e] == 0)
            topo.push_back(static_cast<int>(e));
    for (std::size_t k = 0; k < topo.size(); ++k)
        for (int b : succ[topo[k]])
            if (--indegree[b] == 0)
                topo.push_back(b);
    if (topo.size() != n)
        throw Error(ErrorKind::Cycle, "relations contain a directed cycle");

    impl->closure.assign(n * n, 0);
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        const auto a = static_cast<std::size_t>(*it);
        for (int b : succ[a]) {
            impl->closure[a * n + b] = 1;
            for (std::size_t c = 0; c < n; ++c)
                if (impl->closure[b * n + c])
                    impl->closure[a * n + c] = 1;
        }
    }

    impl->lower.resize(n);
    impl->upper.resize(n);
    impl->up_size.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (!impl->closure[a * n + b])
                continue;
            ++impl->up_size[a];
            bool is_cover = true;
            for (std::size_t c = 0; c < n && is_cover; ++c)
                if (impl->closure[a * n + c] && impl->closure[c * n + b])
                    is_cover = false;
            if (is_cover) {
                impl->covers.emplace_back(static_cast<int>(a), static_cast<int>(b));
                impl->upper[a].push_back(static_cast<int>(b));
                impl->lower[b].push_back(static_cast<int>(a));
            }
        }
    }
    return impl;
}

Poset Poset::from_index_covers(std::vector<std::string> labels,
                               const std::vector<std::pair<int, int>>& relations) {
    std::unordered_map<std::string, int> seen;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (!seen.emplace(labels[i], static_cast<int>(i)).second)
            throw Error(ErrorKind::DuplicateLabel, "label '" + labels[i] + "' appears twice");
    return Poset(build(std::move(labels), relations));
}

Poset Poset::from_covers(std::vector<std::string> labels,
                         const std::vector<std::pair<std::string, std::string>>& relations) {
    std::unordered_map<std::string, int> index;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (!index.emplace(labels[i], static_cast<int>(i)).second)
            throw Error(ErrorKind::DuplicateLabel, "label '" + labels[i] + "' appears twice");
    std::vector<std::pair<int, int>> rel;
    for (const auto& [a, b] : relations) {
        auto ia = index.find(a);
        auto ib = index.find(b);
        if (ia == index.end())
            throw Error(ErrorKind::UnknownLabel, "unknown element '" + a + "'");
        if (ib == index.end())
            throw Error(ErrorKind::UnknownLabel, "unknown element '" + b + "'");
        rel.emplace_back(ia->second, ib->second);
    }
    return Poset(build(std::move(labels), rel));
}

std::optional<int> Poset::index_of(std::string_view label) const {
    auto it = std::find(impl_->labels.begin(), impl_->labels.end(), label);
    if (it == impl_->labels.end())
        return std::nullopt;
    return static_cast<int>(it - impl_->labels.begin());
}

bool Poset::connected() const {
    const int n = size();
    if (n == 0)
        return true;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        int e = stack.back();
        stack.pop_back();
        for (auto nbrs : {lower_covers(e), upper_covers(e)})
            for (int f : nbrs)
                if (!seen[f]) {
                    seen[f] = true;
                    ++reached;
                    stack.push_back(f);
                }
    }
    return reached == n;
}

bool operator==(const Poset& a, const Poset& b) {
    if (a.impl_ == b.impl_)
        return true;
    return a.impl_->labels == b.impl_->labels && a.impl_->covers == b.impl_->covers;
}

Poset poset_from_covers(std::vector<std::string> elements,
                        const std::vector<std::pair<std::string, std::string>>& covers) {
    return Poset::from_covers(std::move(elements), covers);
}

Poset young_poset(const Partition& shape) {
    const auto cells = nodes(shape);
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> rel;
    for (std::size_t k = 0; k < cells.size(); ++k) {
        const Node c = cells[k];
        labels.push_back(std::to_string(c.row) + "," + std::to_string(c.col));
        if (contains(shape, {c.row, c.col + 1}))
            rel.emplace_back(static_cast<int>(k), node_index(shape, {c.row, c.col + 1}));
        if (contains(shape, {c.row + 1, c.col}))
            rel.emplace_back(static_cast<int>(k), node_index(shape, {c.row + 1, c.col}));
    }
    auto impl = Poset::build(std::move(labels), rel);
    impl->shape = shape;
    return Poset(std::move(impl));
}

LinearExtension::LinearExtension(Poset poset, std::vector<int> order)
    : poset_(std::move(poset)), order_(std::move(order)) {
    const int n = poset_.size();
    if (static_cast<int>(order_.size()) != n)
        throw Error(ErrorKind::InvalidExtension, "extension length differs from poset size");
    rank_.assign(static_cast<std::size_t>(n), -1);
    for (int k = 0; k < n; ++k) {
        int e = order_[k];
        if (e < 0 || e >= n || rank_[e] != -1)
            throw Error(ErrorKind::InvalidExtension, "order is not a permutation of the elements");
        rank_[e] = k;
    }
    for (auto [a, b] : poset_.covers())
        if (rank_[a] > rank_[b])
            throw Error(ErrorKind::InvalidExtension,
                        poset_.label(a) + " must precede " + poset_.label(b));
}

void for_each_linear_extension(const Poset& poset, const std::function<void(std::span<const int>)>& visit) {
    for_each_linear_extension(poset, {}, visit);
}

void for_each_linear_extension(const Poset& poset, std::span<const int> prefix,
                               const std::function<void(std::span<const int>)>& visit) {
    const int n = poset.size();
    std::vector<int> pending(static_cast<std::size_t>(n));
    for (int e = 0; e < n; ++e)
        pending[e] = static_cast<int>(poset.lower_covers(e).size());
    std::vector<bool> placed(static_cast<std::size_t>(n), false);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));

    auto place = [&](int e) {
        placed[e] = true;
        order.push_back(e);
        for (int f : poset.upper_covers(e))
            --pending[f];
    };
    auto unplace = [&](int e) {
        for (int f : poset.upper_covers(e))
            ++pending[f];
        order.pop_back();
        placed[e] = false;
    };

    for (int e : prefix) {
        if (e < 0 || e >= n || placed[e] || pending[e] != 0)
            throw Error(ErrorKind::InvalidExtension, "prefix is not the start of a linear extension");
        place(e);
    }

    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(order.size()) == n) {
            visit(order);
            return;
        }
        for (int e = 0; e < n; ++e) {
            if (placed[e] || pending[e] != 0)
                continue;
            place(e);
            self(self);
            unplace(e);
        }
    };
    rec(rec);
}

std::vector<LinearExtension> linear_extensions(const Poset& poset) {
    std::vector<LinearExtension> out;
    for_each_linear_extension(poset, [&](std::span<const int> order) {
        std::vector<int> ord(order.begin(), order.end());
        std::vector<int> rank(ord.size());
        for (std::size_t k = 0; k < ord.size(); ++k)
            rank[ord[k]] = static_cast<int>(k);
        out.push_back(LinearExtension(poset, std::move(ord), std::move(rank)));
    });
    return out;
}

LinearExtension canonical_extension(const Poset& poset) {
    // Greedy smallest available element reproduces the first backtracking leaf.
    const int n = poset.size();
    std::vector<int> pending(static_cast<std::size_t>(n));
    for (int e = 0; e < n; ++e)
        pending[e] = static_cast<int>(poset.lower_covers(e).size());
    std::vector<bool> placed(static_cast<std::size_t>(n), false);
    std::vector<int> order, rank(static_cast<std::size_t>(n));
    while (static_cast<int>(order.size()) < n) {
        int e = 0;
        while (placed[e] || pending[e] != 0)
            ++e;
        placed[e] = true;
        rank[e] = static_cast<int>(order.size());
        order.push_back(e);
        for (int f : poset.upper_covers(e))
            --pending[f];
    }
    return LinearExtension(poset, std::move(order), std::move(rank));
}

LinearExtension extension_of_tableau(const StandardTableau& tableau) {
    const Partition& shape = tableau.shape();
    std::vector<int> order(static_cast<std::size_t>(shape.size()));
    int idx = 0;
    for (const auto& row : tableau.rows())
        for (int v : row)
            order[v - 1] = idx++;
    return LinearExtension(young_poset(shape), std::move(order));
}

StandardTableau tableau_of_extension(const Partition& shape, const LinearExtension& extension) {
    const auto& own = extension.poset().shape();
    if (!own || *own != shape)
        throw Error(ErrorKind::ShapeMismatch, "extension is not over the Young poset of this shape");
    std::vector<std::vector<int>> rows;
    int idx = 0;
    for (int len : shape.parts()) {
        std::vector<int> row;
        for (int j = 0; j < len; ++j)
            row.push_back(extension.rank(idx++) + 1);
        rows.push_back(std::move(row));
    }
    return StandardTableau::from_rows(std::move(rows));
}

} // namespace ped
