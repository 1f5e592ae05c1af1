#include "pedestal/pedestal.hpp"

#include <algorithm>
#include <numeric>

#include "pedestal/detail/parallel.hpp"
#include "pedestal/error.hpp"

namespace ped {

namespace {

void require_same_poset(const LinearExtension& p, const LinearExtension& q) {
    if (!(p.poset() == q.poset()))
        throw Error(ErrorKind::PosetMismatch, "linear extensions are over different posets");
}

void require_same_poset(const LinearExtension& p, const ReversePlanePartition& rpp) {
    if (!(p.poset() == rpp.poset()))
        throw Error(ErrorKind::PosetMismatch, "RPP and linear extension are over different posets");
}

// Pedestal values along Q-order already form the sorted index tuple.
Monomial monomial_along(std::span<const int> p_rank, std::span<const int> q_order, std::vector<int>& scratch) {
    scratch.resize(q_order.size());
    pedestal_along(p_rank, q_order, scratch);
    return Monomial(scratch);
}

} // namespace

std::vector<int> disagreement_nodes(const LinearExtension& p, const LinearExtension& q) {
    require_same_poset(p, q);
    const auto& order = q.order();
    std::vector<int> out;
    for (std::size_t k = 0; k + 1 < order.size(); ++k)
        if (p.rank(order[k + 1]) < p.rank(order[k]))
            out.push_back(order[k]);
    return out;
}

Pedestal pedestal(const LinearExtension& p, const LinearExtension& q) {
    require_same_poset(p, q);
    const int n = q.size();
    std::vector<int> along(static_cast<std::size_t>(n));
    pedestal_along(p.ranks(), q.order(), along);
    std::vector<int> values(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        values[q.order()[k]] = along[k];
    return Pedestal{p, q, ReversePlanePartition(p.poset(), std::move(values))};
}

Series pedestal_polynomial(const LinearExtension& p, int threads) {
    const Poset& poset = p.poset();
    const int n = poset.size();
    if (threads <= 1 || n == 0) {
        Series out(n);
        std::vector<int> scratch;
        for_each_linear_extension(poset, [&](std::span<const int> q) {
            out.add(monomial_along(p.ranks(), q, scratch));
        });
        return out;
    }

    std::vector<int> minimal;
    for (int e = 0; e < n; ++e)
        if (poset.lower_covers(e).empty())
            minimal.push_back(e);
    std::vector<Series> partial(minimal.size(), Series(n));
    detail::parallel_for(minimal.size(), threads, [&](std::size_t i) {
        std::vector<int> scratch;
        const int first = minimal[i];
        for_each_linear_extension(poset, std::span<const int>(&first, 1), [&](std::span<const int> q) {
            partial[i].add(monomial_along(p.ranks(), q, scratch));
        });
    });
    Series out(n);
    for (const auto& s : partial)
        for (const auto& [m, c] : s.terms())
            out.add(m, c);
    return out;
}

Series pedestal_polynomial(const Poset& poset, int threads) {
    return pedestal_polynomial(canonical_extension(poset), threads);
}

namespace {

// Sorted list of labelled pedestals {q_{P,Q} : Q}, each in element order.
std::vector<std::vector<int>> pedestal_multiset(const Poset& poset, std::span<const int> p_rank) {
    std::vector<std::vector<int>> all;
    std::vector<int> along;
    for_each_linear_extension(poset, [&](std::span<const int> q) {
        along.resize(q.size());
        pedestal_along(p_rank, q, along);
        std::vector<int> values(q.size());
        for (std::size_t k = 0; k < q.size(); ++k)
            values[q[k]] = along[k];
        all.push_back(std::move(values));
    });
    std::sort(all.begin(), all.end());
    return all;
}

} // namespace

IndependenceReport verify_independence(const Poset& poset, int threads) {
    IndependenceReport report;
    const auto extensions = linear_extensions(poset);
    report.extensions = extensions.size();
    if (extensions.empty())
        return report;

    const Series reference = pedestal_polynomial(extensions.front());
    const auto reference_set = pedestal_multiset(poset, extensions.front().ranks());

    std::vector<char> poly_equal(extensions.size(), 1), set_equal(extensions.size(), 1);
    detail::parallel_for(extensions.size(), threads, [&](std::size_t i) {
        if (i == 0)
            return;
        poly_equal[i] = pedestal_polynomial(extensions[i]) == reference;
        set_equal[i] = pedestal_multiset(poset, extensions[i].ranks()) == reference_set;
    });

    for (std::size_t i = 1; i < extensions.size(); ++i) {
        if (!poly_equal[i] && report.independent) {
            report.independent = false;
            report.mismatch_index = i;
            const Series other = pedestal_polynomial(extensions[i]);
            // First monomial (lexicographically) where the two differ.
            auto a = reference.terms().begin();
            auto b = other.terms().begin();
            while (a != reference.terms().end() && b != other.terms().end() && *a == *b) {
                ++a;
                ++b;
            }
            if (a == reference.terms().end())
                report.mismatch_monomial = b->first;
            else if (b == other.terms().end())
                report.mismatch_monomial = a->first;
            else
                report.mismatch_monomial = std::min(a->first, b->first);
        }
        if (!set_equal[i] && !report.pedestal_set_depends_on_p) {
            report.pedestal_set_depends_on_p = true;
            report.dependence_witness = std::pair<std::size_t, std::size_t>{0, i};
        }
    }
    return report;
}

UniPoly pi_poly(const Poset& poset) {
    const auto p = canonical_extension(poset);
    UniPoly out;
    std::vector<int> along;
    for_each_linear_extension(poset, [&](std::span<const int> q) {
        along.resize(q.size());
        pedestal_along(p.ranks(), q, along);
        out.add_term(std::accumulate(along.begin(), along.end(), 0), 1);
    });
    return out;
}

UniPoly pi_poly(const Partition& shape) { return pi_poly(young_poset(shape)); }

LinearExtension tableau_from_rpp(const LinearExtension& p, const ReversePlanePartition& rpp) {
    require_same_poset(p, rpp);
    std::vector<int> order(p.order());
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return rpp[a] < rpp[b]; });
    return LinearExtension(p.poset(), std::move(order));
}

BijectionImage b_st(const LinearExtension& p, const ReversePlanePartition& rpp) {
    const LinearExtension q = tableau_from_rpp(p, rpp);
    Pedestal ped = pedestal(p, q);
    const ReversePlanePartition rest = rpp_sub(rpp, ped.rpp);
    Partition mu = pi_sort(rest);
    return BijectionImage{std::move(ped), std::move(mu)};
}

std::vector<int> ascending_padding(const Partition& parts, int n) {
    if (parts.length() > n)
        throw Error(ErrorKind::TooManyParts, "partition has " + std::to_string(parts.length()) +
                                                 " parts but the poset has " + std::to_string(n) +
                                                 " elements");
    std::vector<int> padded(static_cast<std::size_t>(n - parts.length()), 0);
    padded.insert(padded.end(), parts.parts().rbegin(), parts.parts().rend());
    return padded;
}

ReversePlanePartition b_st_inverse(const LinearExtension& p, const LinearExtension& q, const Partition& parts) {
    require_same_poset(p, q);
    const auto padded = ascending_padding(parts, q.size());
    std::vector<int> filling(static_cast<std::size_t>(q.size()));
    for (int k = 0; k < q.size(); ++k)
        filling[q.order()[k]] = padded[k];
    const Pedestal ped = pedestal(p, q);
    return rpp_add(ped.rpp, ReversePlanePartition(p.poset(), std::move(filling)));
}

} // namespace ped
