#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pedestal/posets.hpp"
#include "pedestal/ring.hpp"
#include "pedestal/shapes.hpp"

namespace ped {

/// bar_schur(V) == h_P * bar_s_row(n, V), truncated at V.
struct FactorizationReport {
    bool holds = true;
    Series lhs{0};
    Series rhs{0};
    std::optional<Monomial> first_mismatch;
};

FactorizationReport verify_identity_01(const Poset& poset, const LinearExtension& p, std::int64_t max_volume);
FactorizationReport verify_identity_01(const Partition& shape, const LinearExtension& p, std::int64_t max_volume);

/// Runs the factorization check for every linear extension P; returns the
/// first failing report, or a passing one.
FactorizationReport verify_identity_01_all(const Poset& poset, std::int64_t max_volume, int threads = 1);

/// pi(x) * prod(1 - x^h) == prod_{k=1..n} (1 - x^k).
struct HookIdentityReport {
    bool holds = true;
    UniPoly pi;
    UniPoly lhs;
    UniPoly rhs;
};

HookIdentityReport verify_identity_04(const Partition& shape);

/// sum x^maj == x^l * pi == sum x^comaj.
struct MajComajReport {
    bool holds = true;
    UniPoly maj_sum;
    UniPoly shifted_pi;
    UniPoly comaj_sum;
};

MajComajReport verify_maj_comaj(const Partition& shape);

/// Functions on the standard tableaux of a shape, tabulated in enumeration
/// order, and whether each candidate statistic equals Q -> |q_{P,Q}| for
/// some P.
struct FamilyReport {
    struct Candidate {
        std::string name;
        std::vector<std::int64_t> values;
        std::optional<std::size_t> matching_p;
        bool member() const noexcept { return matching_p.has_value(); }
    };

    std::vector<StandardTableau> tableaux;
    /// family[p][q] = |q_{P,Q}| with P = tableaux[p], Q = tableaux[q].
    std::vector<std::vector<std::int64_t>> family;
    std::vector<Candidate> candidates;
};

/// Candidates: maj - l, comaj - l, and the same two on the transposed
/// tableau with l of the conjugate shape.
FamilyReport family_membership_check(const Partition& shape);

/// Substitutes x_t <-> x_{t+1} in every monomial.
Series swap_variables(const Series& u, int t);

struct SymmetryWitness {
    int t = 0;
    Monomial monomial;
    Monomial swapped;
    std::int64_t coefficient = 0;
    std::int64_t swapped_coefficient = 0;
};

/// First (t, m) with coefficient(m) != coefficient(swap_t(m)), for
/// t < max_variable and both monomials inside the truncation bound.
std::optional<SymmetryWitness> find_asymmetry(const Series& u, int max_variable);

} // namespace ped
