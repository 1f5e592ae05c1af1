#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <optional>
#include <set>

#include "pedestal/error.hpp"
#include "pedestal/rpp.hpp"
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

using Rows = oracle::Rows;

std::vector<std::vector<int>> value_sets(const std::vector<ReversePlanePartition>& all) {
    std::vector<std::vector<int>> out;
    for (const auto& r : all)
        out.push_back(r.values());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> grid(int n, const std::vector<std::pair<int, int>>& rel, int v) {
    auto out = oracle::rpp_by_grid(n, rel, v);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("make_rpp validation") {
    CHECK_NOTHROW(ReversePlanePartition::from_rows({{0, 1}, {0}}));
    CHECK(kind_of([] { ReversePlanePartition::from_rows({{1, 0}, {0}}); }) == ErrorKind::NotMonotone);
    CHECK(kind_of([] { ReversePlanePartition::from_rows({{1, 1}, {0}}); }) == ErrorKind::NotMonotone);
    CHECK(kind_of([] { ReversePlanePartition::from_rows({{-1, 0}}); }) == ErrorKind::NegativeEntry);
    const Poset anti = poset_from_covers({"a", "b", "c"}, {});
    CHECK(kind_of([&] { make_rpp(anti, {0, 0}); }) == ErrorKind::MissingValue);
    CHECK_NOTHROW(make_rpp(anti, {0, 0, 0}));
    CHECK(ReversePlanePartition::zero(young_poset(Partition::from_parts({3, 1}))).values() ==
          std::vector<int>{0, 0, 0, 0});
}

TEST_CASE("volume") {
    CHECK(volume(ReversePlanePartition::from_rows({{0, 1}, {0}})) == 1);
    CHECK(volume(ReversePlanePartition::from_rows({{0, 0}, {0}})) == 0);
    CHECK(volume(ReversePlanePartition::from_rows({{0, 2}, {1}})) == 3);
}

TEST_CASE("enumerate_rpp small cases") {
    const auto row2 = enumerate_rpp(young_poset(Partition::from_parts({2})), 2);
    CHECK(value_sets(row2) == std::vector<std::vector<int>>{{0, 0}, {0, 1}, {0, 2}, {1, 1}});
    const auto zero = enumerate_rpp(young_poset(Partition::from_parts({2, 2})), 0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].values() == std::vector<int>{0, 0, 0, 0});
    CHECK(enumerate_rpp(young_poset(Partition::from_parts({2, 1})), 2).size() == 6);
    CHECK(enumerate_rpp(young_poset(Partition::from_parts({2, 1})), -1).empty());
}

TEST_CASE("enumerate_rpp agrees with the grid oracle on shapes and the corpus") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& shape : partitions_of(n)) {
            const Poset p = young_poset(shape);
            for (int v = 0; v <= 5; ++v) {
                const auto got = enumerate_rpp(p, v);
                CHECK(value_sets(got) == grid(p.size(), p.covers(), v));
                for (const auto& r : got) {
                    CHECK(volume(r) <= v);
                    CHECK_NOTHROW(make_rpp(p, r.values()));
                }
            }
        }
    for (const auto& c : oracle::connected_poset_corpus(25)) {
        const Poset p = oracle::build(c);
        for (int v = 0; v <= 4; ++v)
            CHECK(value_sets(enumerate_rpp(p, v)) == grid(p.size(), c.relations, v));
    }
}

TEST_CASE("RPP counts by volume follow 1/prod(1 - x^hook)") {
    // Independent generating-function route for the count per volume.
    for (int n = 1; n <= 5; ++n)
        for (const auto& shape : partitions_of(n)) {
            const int vmax = 6;
            const auto expected = oracle::inverse_product(hook_multiset(shape), vmax);
            std::vector<std::int64_t> got(vmax + 1, 0);
            for (const auto& r : enumerate_rpp(young_poset(shape), vmax))
                ++got[static_cast<std::size_t>(volume(r))];
            CHECK(got == expected);
        }
}

TEST_CASE("enumerate_column_strict") {
    const auto a = enumerate_column_strict(Partition::from_parts({1, 1}), 1);
    REQUIRE(a.size() == 1);
    CHECK(a[0].values() == std::vector<int>{0, 1});
    CHECK(enumerate_column_strict(Partition::from_parts({1, 1}), 0).empty());
    CHECK(value_sets(enumerate_column_strict(Partition::from_parts({2}), 1)) ==
          std::vector<std::vector<int>>{{0, 0}, {0, 1}, {1, 1}});
    // Grid oracle with strict column pairs encoded as a <= b - 1.
    for (int n = 1; n <= 4; ++n)
        for (const auto& shape : partitions_of(n))
            for (int m = 0; m <= 3; ++m) {
                std::size_t expected = 0;
                const auto cells = nodes(shape);
                for (const auto& v : oracle::rpp_by_grid(n, young_poset(shape).covers(), m * n)) {
                    bool ok = true;
                    for (std::size_t k = 0; k < cells.size(); ++k) {
                        ok = ok && v[k] <= m;
                        if (cells[k].row > 1)
                            ok = ok && v[node_index(shape, {cells[k].row - 1, cells[k].col})] < v[k];
                    }
                    expected += ok ? 1 : 0;
                }
                CHECK(enumerate_column_strict(shape, m).size() == expected);
            }
}

TEST_CASE("pi_sort") {
    CHECK(pi_sort(ReversePlanePartition::from_rows({{0, 2}, {1}})).parts() == std::vector<int>{2, 1});
    CHECK(pi_sort(ReversePlanePartition::from_rows({{0, 0}, {0}})).empty());
    CHECK(pi_sort(ReversePlanePartition::from_rows({{1, 1}, {1}})).parts() == std::vector<int>{1, 1, 1});
    for (const auto& r : enumerate_rpp(young_poset(Partition::from_parts({3, 2})), 6)) {
        const Partition mu = pi_sort(r);
        CHECK(mu.size() == volume(r));
        CHECK(mu.length() <= r.size());
    }
}

TEST_CASE("rpp_sub and rpp_add") {
    const auto a = ReversePlanePartition::from_rows({{0, 2}, {1}});
    const auto b = ReversePlanePartition::from_rows({{0, 1}, {0}});
    CHECK(rpp_sub(a, a) == ReversePlanePartition::zero(a.poset()));
    CHECK(rpp_sub(a, b).rows() == Rows{{0, 1}, {1}});
    CHECK(kind_of([&] { rpp_sub(ReversePlanePartition::from_rows({{0, 0}, {1}}), b); }) ==
          ErrorKind::NegativeEntry);
    CHECK(kind_of([&] { rpp_sub(ReversePlanePartition::from_rows({{1, 1}, {1}}), b); }) == ErrorKind::NotMonotone);
    const auto other = make_rpp(poset_from_covers({"a", "b", "c"}, {}), {0, 0, 0});
    CHECK(kind_of([&] { rpp_add(a, other); }) == ErrorKind::PosetMismatch);

    // add(sub(R, q), q) == R whenever sub succeeds.
    const auto all = enumerate_rpp(young_poset(Partition::from_parts({2, 2})), 4);
    for (const auto& r : all)
        for (const auto& q : all) {
            std::optional<ReversePlanePartition> diff;
            try {
                diff = rpp_sub(r, q);
            } catch (const Error& e) {
                CHECK((e.kind() == ErrorKind::NegativeEntry || e.kind() == ErrorKind::NotMonotone));
            }
            if (diff)
                CHECK(rpp_add(*diff, q) == r);
        }
}
