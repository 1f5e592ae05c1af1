#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pedestal/posets.hpp"
#include "pedestal/ring.hpp"
#include "pedestal/rpp.hpp"

namespace ped {

/// The P-pedestal of Q: an RPP together with the pair that generated it.
struct Pedestal {
    LinearExtension p;
    LinearExtension q;
    ReversePlanePartition rpp;
};

/// Walking Q in rank order, element Q[k] is a disagreement node when
/// Q[k+1] precedes it in P. Returned in Q-order. Throws PosetMismatch.
std::vector<int> disagreement_nodes(const LinearExtension& p, const LinearExtension& q);

/// Pedestal value of the k-th element in Q-order is the number of
/// disagreement nodes among the first k-1.
Pedestal pedestal(const LinearExtension& p, const LinearExtension& q);

/// Hot-path form: writes pedestal values along Q-order (non-decreasing,
/// steps of 0 or 1, starting at 0). `p_rank` is the rank table of P.
inline void pedestal_along(std::span<const int> p_rank, std::span<const int> q_order, std::span<int> out) {
    int count = 0;
    for (std::size_t k = 0; k < q_order.size(); ++k) {
        out[k] = count;
        if (k + 1 < q_order.size() && p_rank[q_order[k + 1]] < p_rank[q_order[k]])
            ++count;
    }
}

/// Sum over every linear extension Q of the monomial of q_{P,Q}. Streams Q
/// without materializing the extensions. `threads` > 1 splits the search by
/// the first element of Q; the result is identical to the sequential one.
Series pedestal_polynomial(const LinearExtension& p, int threads = 1);

/// Pedestal polynomial for the canonical extension of the poset.
Series pedestal_polynomial(const Poset& poset, int threads = 1);

struct IndependenceReport {
    bool independent = true;
    std::size_t extensions = 0;
    /// First P (by enumeration index) whose polynomial differs from P_0.
    std::optional<std::size_t> mismatch_index;
    std::optional<Monomial> mismatch_monomial;
    /// Whether the multiset of labelled pedestals changes with P, with a
    /// witness pair of extension indices.
    bool pedestal_set_depends_on_p = false;
    std::optional<std::pair<std::size_t, std::size_t>> dependence_witness;
};

/// Exhaustive check that the pedestal polynomial is the same for every P.
IndependenceReport verify_independence(const Poset& poset, int threads = 1);

/// Sum over Q of x^{|q_{P,Q}|} for the canonical P.
UniPoly pi_poly(const Poset& poset);
UniPoly pi_poly(const Partition& shape);

/// Order elements by RPP value, breaking ties by P.
LinearExtension tableau_from_rpp(const LinearExtension& p, const ReversePlanePartition& rpp);

struct BijectionImage {
    Pedestal pedestal;
    Partition partition;
};

/// (q_{P,Q(R)}, pi_sort(R - q_{P,Q(R)})).
BijectionImage b_st(const LinearExtension& p, const ReversePlanePartition& rpp);

/// Inverse: q_{P,Q} plus the filling that puts the k-th smallest part of
/// `parts` (zero-padded to n) on the element of Q-rank k. Throws TooManyParts.
ReversePlanePartition b_st_inverse(const LinearExtension& p, const LinearExtension& q, const Partition& parts);

/// Zero-padded parts in ascending order, length n. Throws TooManyParts.
std::vector<int> ascending_padding(const Partition& parts, int n);

} // namespace ped
