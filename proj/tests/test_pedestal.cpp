#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "pedestal/error.hpp"
#include "pedestal/pedestal.hpp"
#include "support/oracles.hpp"

using namespace ped;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an Error");
    return ErrorKind::Parse;
}

LinearExtension ext(oracle::Rows rows) { return extension_of_tableau(StandardTableau::from_rows(rows)); }

Series series_of(int n, std::initializer_list<std::vector<int>> monomials) {
    Series s(n);
    for (const auto& m : monomials)
        s.add(Monomial(m));
    return s;
}

} // namespace

TEST_CASE("disagreement_nodes") {
    const auto p = ext({{1, 2}, {3}});
    const auto q = ext({{1, 3}, {2}});
    CHECK(disagreement_nodes(p, p).empty());
    CHECK(disagreement_nodes(p, q) == std::vector<int>{2}); // node (2,1)

    const Poset anti = poset_from_covers({"a", "b"}, {});
    const LinearExtension ab(anti, {0, 1}), ba(anti, {1, 0});
    CHECK(disagreement_nodes(ab, ba) == std::vector<int>{1});

    const Poset other = poset_from_covers({"a", "b"}, {{"a", "b"}});
    CHECK(kind_of([&] { disagreement_nodes(ab, LinearExtension(other, {0, 1})); }) == ErrorKind::PosetMismatch);
}

TEST_CASE("pedestal examples") {
    const auto p = ext({{1, 2}, {3}});
    const auto q = ext({{1, 3}, {2}});
    CHECK(pedestal(p, p).rpp == ReversePlanePartition::zero(p.poset()));
    CHECK(pedestal(p, q).rpp.rows() == oracle::Rows{{0, 1}, {0}});

    const Poset anti = poset_from_covers({"a", "b"}, {});
    const LinearExtension ab(anti, {0, 1}), ba(anti, {1, 0});
    CHECK(pedestal(ab, ba).rpp.values() == std::vector<int>{1, 0});
    CHECK(pedestal(ba, ab).rpp.values() == std::vector<int>{0, 1});
}

TEST_CASE("pedestals agree with the definition on shapes and the corpus") {
    std::vector<Poset> posets;
    for (int n = 1; n <= 5; ++n)
        for (const auto& shape : partitions_of(n))
            posets.push_back(young_poset(shape));
    for (const auto& c : oracle::connected_poset_corpus())
        posets.push_back(oracle::build(c));

    for (const auto& poset : posets) {
        const auto all = linear_extensions(poset);
        for (const auto& p : all)
            for (const auto& q : all) {
                const Pedestal ped = pedestal(p, q);
                CHECK(ped.rpp.values() == oracle::pedestal_by_definition(p.order(), q.order()));
                // along Q the values start at 0 and climb by 0 or 1
                int prev = 0;
                for (std::size_t k = 0; k < q.order().size(); ++k) {
                    const int v = ped.rpp[q.order()[k]];
                    CHECK((k == 0 ? v == 0 : (v == prev || v == prev + 1)));
                    prev = v;
                }
            }
    }
}

TEST_CASE("pedestal polynomial examples") {
    const auto shape32 = Partition::from_parts({3, 2});
    const Series expected =
        series_of(5, {{0, 0, 0, 0, 0}, {0, 0, 0, 0, 1}, {0, 0, 0, 1, 1}, {0, 0, 1, 1, 1}, {0, 0, 1, 1, 2}});
    for (const auto& p : linear_extensions(young_poset(shape32)))
        CHECK(pedestal_polynomial(p) == expected);
    CHECK(to_text(expected) == "x0^5 + x0^4*x1 + x0^3*x1^2 + x0^2*x1^3 + x0^2*x1^2*x2");

    CHECK(pedestal_polynomial(young_poset(Partition::from_parts({4}))) == series_of(4, {{0, 0, 0, 0}}));
    CHECK(pedestal_polynomial(young_poset(Partition::from_parts({2, 1}))) == series_of(3, {{0, 0, 0}, {0, 0, 1}}));
}

TEST_CASE("pedestal polynomial equals the sum of pedestal monomials from the definition") {
    for (const auto& c : oracle::connected_poset_corpus()) {
        const Poset poset = oracle::build(c);
        const auto all = linear_extensions(poset);
        const auto& p = all.front();
        Series expected(poset.size());
        for (const auto& q : all)
            expected.add(Monomial(oracle::pedestal_by_definition(p.order(), q.order())));
        CHECK(pedestal_polynomial(p) == expected);
        CHECK(expected.total() == static_cast<std::int64_t>(all.size()));
    }
}

TEST_CASE("threaded pedestal polynomial matches the sequential one") {
    for (const auto& shape : partitions_of(6)) {
        const Poset poset = young_poset(shape);
        const auto p = canonical_extension(poset);
        const Series seq = pedestal_polynomial(p, 1);
        CHECK(pedestal_polynomial(p, 4) == seq);
        CHECK(pedestal_polynomial(p, 3) == seq);
    }
}

TEST_CASE("independence") {
    const auto r32 = verify_independence(young_poset(Partition::from_parts({3, 2})));
    CHECK(r32.independent);
    CHECK(r32.extensions == 5);
    CHECK_FALSE(r32.mismatch_index);

    for (int n = 1; n <= 5; ++n)
        for (const auto& shape : partitions_of(n))
            CHECK(verify_independence(young_poset(shape), 2).independent);
    for (const auto& c : oracle::connected_poset_corpus())
        CHECK(verify_independence(oracle::build(c)).independent);
}

TEST_CASE("pi_poly") {
    CHECK(pi_poly(Partition::from_parts({3, 2})) == UniPoly({1, 1, 1, 1, 1}));
    CHECK(pi_poly(Partition::from_parts({5})) == UniPoly({1}));
    CHECK(pi_poly(Partition::from_parts({2, 1})) == UniPoly({1, 1}));
    for (int n = 1; n <= 6; ++n)
        for (const auto& shape : partitions_of(n)) {
            const UniPoly pi = pi_poly(shape);
            std::int64_t total = 0;
            for (auto c : pi.coeffs())
                total += c;
            CHECK(total == syt_count(shape));
            // pedestal values along Q are at most 0, 1, ..., n-1
            CHECK(pi.degree() <= n * (n - 1) / 2);
        }
    const Poset anti = poset_from_covers({"a", "b", "c"}, {});
    CHECK(pi_poly(anti) == UniPoly({1, 2, 2, 1})); // q-factorial [3]!
}

TEST_CASE("tableau_from_rpp") {
    const auto p = ext({{1, 2}, {3}});
    CHECK(tableau_from_rpp(p, ReversePlanePartition::zero(p.poset())) == p);
    CHECK(tableau_from_rpp(p, ReversePlanePartition::from_rows({{0, 1}, {0}})) == ext({{1, 3}, {2}}));
    CHECK(tableau_from_rpp(p, ReversePlanePartition::from_rows({{0, 2}, {1}})) == ext({{1, 3}, {2}}));
    CHECK(tableau_from_rpp(p, ReversePlanePartition::from_rows({{0, 1}, {2}})) == p);
}

TEST_CASE("b_st examples") {
    const auto p = ext({{1, 2}, {3}});
    const auto r = ReversePlanePartition::from_rows({{0, 1}, {0}});
    const auto image = b_st(p, r);
    CHECK(image.pedestal.rpp == r);
    CHECK(image.partition.empty());

    const auto c = ReversePlanePartition::from_rows({{3, 3}, {3}});
    const auto constant = b_st(p, c);
    CHECK(constant.pedestal.rpp == ReversePlanePartition::zero(p.poset()));
    CHECK(constant.pedestal.q == p);
    CHECK(constant.partition.parts() == std::vector<int>{3, 3, 3});
}

TEST_CASE("b_st fixes pedestals, n <= 5") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& shape : partitions_of(n)) {
            const auto all = linear_extensions(young_poset(shape));
            for (const auto& p : all)
                for (const auto& q : all) {
                    const Pedestal ped = pedestal(p, q);
                    const auto image = b_st(p, ped.rpp);
                    CHECK(image.pedestal.q == q);
                    CHECK(image.pedestal.rpp == ped.rpp);
                    CHECK(image.partition.empty());
                }
        }
}

TEST_CASE("b_st_inverse examples") {
    const auto p = ext({{1, 2}, {3}});
    const auto q = ext({{1, 3}, {2}});
    CHECK(b_st_inverse(p, q, Partition{}) == pedestal(p, q).rpp);
    CHECK(b_st_inverse(p, p, Partition::from_parts({2, 1})).rows() == oracle::Rows{{0, 1}, {2}});
    CHECK(ascending_padding(Partition::from_parts({2, 1}), 4) == std::vector<int>{0, 0, 1, 2});
    CHECK(kind_of([&] { b_st_inverse(p, p, Partition::from_parts({1, 1, 1, 1})); }) == ErrorKind::TooManyParts);
}

TEST_CASE("bijection round trips and volume bookkeeping") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& shape : partitions_of(n)) {
            const Poset poset = young_poset(shape);
            const auto exts = linear_extensions(poset);
            for (const auto& p : exts)
                for (const auto& r : enumerate_rpp(poset, 6)) {
                    const auto image = b_st(p, r);
                    CHECK(volume(r) == volume(image.pedestal.rpp) + image.partition.size());
                    CHECK(image.partition.length() <= n);
                    CHECK(b_st_inverse(p, image.pedestal.q, image.partition) == r);
                }
        }
}

TEST_CASE("b_st_inverse then b_st is the identity on (Q, mu)") {
    // Every pair (Q, mu) with at most n parts and |q| + |mu| <= 6.
    for (int n = 1; n <= 4; ++n)
        for (const auto& shape : partitions_of(n)) {
            const auto exts = linear_extensions(young_poset(shape));
            const auto& p = exts.front();
            for (const auto& q : exts) {
                const std::int64_t base = volume(pedestal(p, q).rpp);
                for (int size = 0; size + base <= 6; ++size)
                    for (const auto& mu : partitions_of(size)) {
                        if (mu.length() > n)
                            continue;
                        const auto image = b_st(p, b_st_inverse(p, q, mu));
                        CHECK(image.pedestal.q == q);
                        CHECK(image.partition == mu);
                    }
            }
        }
}

TEST_CASE("RPPs factor as pedestal times partition: counts by volume") {
    // #RPP of volume v = sum over Q of #partitions of (v - |q|) into <= n parts.
    for (int n = 1; n <= 5; ++n)
        for (const auto& shape : partitions_of(n)) {
            const Poset poset = young_poset(shape);
            const auto p = canonical_extension(poset);
            const int vmax = 7;
            std::vector<std::int64_t> rpp_counts(vmax + 1, 0), factor_counts(vmax + 1, 0);
            for (const auto& r : enumerate_rpp(poset, vmax))
                ++rpp_counts[static_cast<std::size_t>(volume(r))];
            for (const auto& q : linear_extensions(poset)) {
                const auto base = volume(pedestal(p, q).rpp);
                for (int v = static_cast<int>(base); v <= vmax; ++v)
                    factor_counts[v] += oracle::partitions_at_most(v - static_cast<int>(base), n);
            }
            CHECK(rpp_counts == factor_counts);
        }
}
