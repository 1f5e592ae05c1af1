#include "pedestal/shapes.hpp"

#include <algorithm>
#include <string>

#include "pedestal/checked.hpp"
#include "pedestal/error.hpp"

namespace ped {

Partition Partition::from_parts(std::span<const int> parts) {
    Partition p;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0)
            throw Error(ErrorKind::Negative, "part " + std::to_string(i + 1) + " is negative");
        if (i > 0 && parts[i] > parts[i - 1])
            throw Error(ErrorKind::NonMonotone,
                        "parts increase at position " + std::to_string(i + 1));
    }
    std::size_t len = parts.size();
    while (len > 0 && parts[len - 1] == 0)
        --len;
    p.parts_.assign(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(len));
    for (int x : p.parts_)
        p.size_ += x;
    return p;
}

int Partition::column_length(int col) const noexcept {
    int len = 0;
    while (len < length() && parts_[len] >= col)
        ++len;
    return col >= 1 ? len : 0;
}

Partition make_partition(std::span<const int> parts) { return Partition::from_parts(parts); }

bool contains(const Partition& shape, Node node) noexcept {
    return node.row >= 1 && node.col >= 1 && node.col <= shape.row_length(node.row);
}

std::vector<Node> nodes(const Partition& shape) {
    std::vector<Node> out;
    out.reserve(static_cast<std::size_t>(shape.size()));
    for (int i = 1; i <= shape.length(); ++i)
        for (int j = 1; j <= shape.row_length(i); ++j)
            out.push_back({i, j});
    return out;
}

int node_index(const Partition& shape, Node node) {
    if (!contains(shape, node))
        throw Error(ErrorKind::ShapeMismatch, "node outside shape");
    int idx = 0;
    for (int i = 1; i < node.row; ++i)
        idx += shape.row_length(i);
    return idx + node.col - 1;
}

int hook_length(const Partition& shape, Node node) {
    int arm = shape.row_length(node.row) - node.col;
    int leg = shape.column_length(node.col) - node.row;
    return arm + leg + 1;
}

std::vector<int> hook_multiset(const Partition& shape) {
    std::vector<int> hooks;
    hooks.reserve(static_cast<std::size_t>(shape.size()));
    for (Node a : nodes(shape))
        hooks.push_back(hook_length(shape, a));
    return hooks;
}

Partition conjugate(const Partition& shape) {
    std::vector<int> parts;
    for (int j = 1; j <= shape.row_length(1); ++j)
        parts.push_back(shape.column_length(j));
    return Partition::from_parts(parts);
}

std::int64_t l_stat(const Partition& shape) {
    std::int64_t total = 0;
    for (int i = 1; i <= shape.length(); ++i)
        total = checked_add(total, checked_mul(i - 1, shape.row_length(i)));
    return total;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition::from_parts(cur));
        return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        cur.push_back(k);
        partitions_rec(remaining - k, k, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0)
        return out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

StandardTableau StandardTableau::from_rows(std::vector<std::vector<int>> rows) {
    std::vector<int> parts;
    for (const auto& r : rows)
        parts.push_back(static_cast<int>(r.size()));
    Partition shape;
    try {
        shape = Partition::from_parts(parts);
    } catch (const Error&) {
        throw Error(ErrorKind::InvalidTableau, "row lengths do not form a partition");
    }
    if (shape.length() != static_cast<int>(rows.size()))
        throw Error(ErrorKind::InvalidTableau, "empty row");
    const int n = shape.size();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int i = 0; i < shape.length(); ++i) {
        for (int j = 0; j < shape.row_length(i + 1); ++j) {
            int v = rows[i][j];
            if (v < 1 || v > n || seen[v])
                throw Error(ErrorKind::InvalidTableau, "entries are not a bijection onto 1..n");
            seen[v] = true;
            if (j > 0 && rows[i][j - 1] >= v)
                throw Error(ErrorKind::InvalidTableau, "row does not increase");
            if (i > 0 && rows[i - 1][j] >= v)
                throw Error(ErrorKind::InvalidTableau, "column does not increase");
        }
    }
    return StandardTableau(std::move(shape), std::move(rows));
}

std::vector<int> StandardTableau::reading_word() const {
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(size()));
    for (const auto& r : rows_)
        word.insert(word.end(), r.begin(), r.end());
    return word;
}

std::vector<int> StandardTableau::rows_of_entries() const {
    std::vector<int> row_of(static_cast<std::size_t>(size()));
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (int v : rows_[i])
            row_of[v - 1] = static_cast<int>(i) + 1;
    return row_of;
}

StandardTableau StandardTableau::transposed() const {
    Partition t = conjugate(shape_);
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(t.length()));
    for (int j = 1; j <= t.length(); ++j)
        for (int i = 1; i <= t.row_length(j); ++i)
            rows[j - 1].push_back(rows_[i - 1][j - 1]);
    return StandardTableau(std::move(t), std::move(rows));
}

namespace {

// Row-major DFS with ascending candidates; yields lexicographic order of the
// reading word. Bounds: the up-left rectangle of a node must hold smaller
// entries and its down-right region larger ones.
struct SytSearch {
    const Partition& shape;
    const std::function<void(const StandardTableau&)>& visit;
    std::vector<Node> cells;
    std::vector<int> lower, upper;
    std::vector<std::vector<int>> rows;
    std::vector<bool> used;

    SytSearch(const Partition& s, const std::function<void(const StandardTableau&)>& v)
        : shape(s), visit(v), cells(nodes(s)) {
        const int n = shape.size();
        for (Node c : cells) {
            lower.push_back(c.row * c.col);
            int below_right = 0;
            for (int i = c.row; i <= shape.length(); ++i)
                below_right += std::max(0, shape.row_length(i) - c.col + 1);
            upper.push_back(n - below_right + 1);
        }
        for (int i = 1; i <= shape.length(); ++i)
            rows.emplace_back(static_cast<std::size_t>(shape.row_length(i)), 0);
        used.assign(static_cast<std::size_t>(n) + 1, false);
    }

    void run(std::size_t pos);
};

} // namespace

void for_each_syt(const Partition& shape, const std::function<void(const StandardTableau&)>& visit) {
    SytSearch search(shape, visit);
    search.run(0);
}

namespace {

void SytSearch::run(std::size_t pos) {
    if (pos == cells.size()) {
        visit(StandardTableau::from_rows(rows));
        return;
    }
    const Node c = cells[pos];
    int lo = lower[pos];
    if (c.col > 1)
        lo = std::max(lo, rows[c.row - 1][c.col - 2] + 1);
    if (c.row > 1)
        lo = std::max(lo, rows[c.row - 2][c.col - 1] + 1);
    for (int v = lo; v <= upper[pos]; ++v) {
        if (used[v])
            continue;
        used[v] = true;
        rows[c.row - 1][c.col - 1] = v;
        run(pos + 1);
        used[v] = false;
    }
}

} // namespace

std::vector<StandardTableau> enumerate_syt(const Partition& shape) {
    std::vector<StandardTableau> out;
    for_each_syt(shape, [&](const StandardTableau& t) { out.push_back(t); });
    return out;
}

std::int64_t syt_count(const Partition& shape) {
    // Cancel n! against the hooks prime by prime so only the final count
    // has to fit in 64 bits.
    const int n = shape.size();
    std::vector<int> exponent(static_cast<std::size_t>(n) + 1, 0);
    auto add_factors = [&](int x, int sign) {
        for (int p = 2; p * p <= x; ++p)
            while (x % p == 0) {
                exponent[p] += sign;
                x /= p;
            }
        if (x > 1)
            exponent[x] += sign;
    };
    for (int k = 2; k <= n; ++k)
        add_factors(k, +1);
    for (int h : hook_multiset(shape))
        add_factors(h, -1);
    std::int64_t count = 1;
    for (int p = 2; p <= n; ++p)
        for (int e = 0; e < exponent[p]; ++e)
            count = checked_mul(count, p);
    return count;
}

std::vector<int> descents(const StandardTableau& tableau) {
    const auto row_of = tableau.rows_of_entries();
    std::vector<int> des;
    for (int i = 1; i < tableau.size(); ++i)
        if (row_of[i] > row_of[i - 1])
            des.push_back(i);
    return des;
}

std::int64_t maj(const StandardTableau& tableau) {
    std::int64_t total = 0;
    for (int i : descents(tableau))
        total += i;
    return total;
}

std::int64_t comaj(const StandardTableau& tableau) {
    std::int64_t total = 0;
    for (int i : descents(tableau))
        total += tableau.size() - i;
    return total;
}

} // namespace ped
