#include "pedestal/identities.hpp"

#include <algorithm>
#include <set>

#include "pedestal/detail/parallel.hpp"
#include "pedestal/error.hpp"
#include "pedestal/pedestal.hpp"

namespace ped {

namespace {

std::optional<Monomial> first_difference(const Series& a, const Series& b) {
    std::set<Monomial> keys;
    for (const auto& [m, c] : a.terms())
        keys.insert(m);
    for (const auto& [m, c] : b.terms())
        keys.insert(m);
    for (const auto& m : keys)
        if (a.coefficient(m) != b.coefficient(m))
            return m;
    return std::nullopt;
}

} // namespace

FactorizationReport verify_identity_01(const Poset& poset, const LinearExtension& p, std::int64_t max_volume) {
    if (!(p.poset() == poset))
        throw Error(ErrorKind::PosetMismatch, "P is not an extension of this poset");
    FactorizationReport r;
    r.lhs = bar_schur(poset, max_volume);
    r.rhs = series_star(pedestal_polynomial(p), bar_s_row(poset.size(), max_volume), max_volume);
    r.first_mismatch = first_difference(r.lhs, r.rhs);
    r.holds = !r.first_mismatch.has_value();
    return r;
}

FactorizationReport verify_identity_01(const Partition& shape, const LinearExtension& p, std::int64_t max_volume) {
    return verify_identity_01(young_poset(shape), p, max_volume);
}

FactorizationReport verify_identity_01_all(const Poset& poset, std::int64_t max_volume, int threads) {
    const auto extensions = linear_extensions(poset);
    const Series lhs = bar_schur(poset, max_volume);
    const Series row = bar_s_row(poset.size(), max_volume);
    std::vector<FactorizationReport> reports(extensions.size());
    detail::parallel_for(extensions.size(), threads, [&](std::size_t i) {
        auto& r = reports[i];
        r.lhs = lhs;
        r.rhs = series_star(pedestal_polynomial(extensions[i]), row, max_volume);
        r.first_mismatch = first_difference(r.lhs, r.rhs);
        r.holds = !r.first_mismatch.has_value();
    });
    for (auto& r : reports)
        if (!r.holds)
            return r;
    if (reports.empty()) {
        FactorizationReport r;
        r.lhs = lhs;
        r.rhs = lhs;
        return r;
    }
    return reports.front();
}

HookIdentityReport verify_identity_04(const Partition& shape) {
    HookIdentityReport r;
    r.pi = pi_poly(shape);
    r.lhs = r.pi;
    for (int h : hook_multiset(shape))
        r.lhs = r.lhs * UniPoly::one_minus_power(h);
    r.rhs = UniPoly::monomial(0);
    for (int k = 1; k <= shape.size(); ++k)
        r.rhs = r.rhs * UniPoly::one_minus_power(k);
    r.holds = r.lhs == r.rhs;
    return r;
}

MajComajReport verify_maj_comaj(const Partition& shape) {
    MajComajReport r;
    for_each_syt(shape, [&](const StandardTableau& q) {
        r.maj_sum.add_term(static_cast<int>(maj(q)), 1);
        r.comaj_sum.add_term(static_cast<int>(comaj(q)), 1);
    });
    r.shifted_pi = pi_poly(shape) * UniPoly::monomial(static_cast<int>(l_stat(shape)));
    r.holds = r.maj_sum == r.shifted_pi && r.comaj_sum == r.shifted_pi;
    return r;
}

FamilyReport family_membership_check(const Partition& shape) {
    FamilyReport r;
    r.tableaux = enumerate_syt(shape);
    std::vector<LinearExtension> ext;
    for (const auto& t : r.tableaux)
        ext.push_back(extension_of_tableau(t));

    for (const auto& p : ext) {
        std::vector<std::int64_t> row;
        for (const auto& q : ext)
            row.push_back(volume(pedestal(p, q).rpp));
        r.family.push_back(std::move(row));
    }

    const std::int64_t l = l_stat(shape);
    const std::int64_t lt = l_stat(conjugate(shape));
    FamilyReport::Candidate maj_c{"maj - l", {}, {}};
    FamilyReport::Candidate comaj_c{"comaj - l", {}, {}};
    FamilyReport::Candidate maj_t{"maj(transpose) - l(conjugate)", {}, {}};
    FamilyReport::Candidate comaj_t{"comaj(transpose) - l(conjugate)", {}, {}};
    for (const auto& q : r.tableaux) {
        const auto qt = q.transposed();
        maj_c.values.push_back(maj(q) - l);
        comaj_c.values.push_back(comaj(q) - l);
        maj_t.values.push_back(maj(qt) - lt);
        comaj_t.values.push_back(comaj(qt) - lt);
    }
    r.candidates = {std::move(maj_c), std::move(comaj_c), std::move(maj_t), std::move(comaj_t)};
    for (auto& c : r.candidates) {
        auto it = std::find(r.family.begin(), r.family.end(), c.values);
        if (it != r.family.end())
            c.matching_p = static_cast<std::size_t>(it - r.family.begin());
    }
    return r;
}

Series swap_variables(const Series& u, int t) {
    Series out(u.degree());
    for (const auto& [m, c] : u.terms()) {
        std::vector<int> idx = m.indices();
        for (int& i : idx) {
            if (i == t)
                i = t + 1;
            else if (i == t + 1)
                i = t;
        }
        out.add(Monomial(std::move(idx)), c);
    }
    return out;
}

std::optional<SymmetryWitness> find_asymmetry(const Series& u, int max_variable) {
    const auto bound = u.truncation();
    for (int t = 0; t < max_variable; ++t) {
        // A monomial missing from u but with an image in u is caught when
        // the image itself is visited.
        for (const auto& [m, c] : u.terms()) {
            std::vector<int> idx = m.indices();
            for (int& i : idx)
                i = i == t ? t + 1 : i == t + 1 ? t : i;
            Monomial image(std::move(idx));
            if (bound && image.volume() > *bound)
                continue;
            if (c != u.coefficient(image))
                return SymmetryWitness{t, m, image, c, u.coefficient(image)};
        }
    }
    return std::nullopt;
}

} // namespace ped
