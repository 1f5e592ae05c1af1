#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "pedestal/error.hpp"
#include "pedestal/posets.hpp"
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

std::vector<std::vector<int>> orders(const std::vector<LinearExtension>& exts) {
    std::vector<std::vector<int>> out;
    for (const auto& e : exts)
        out.push_back(e.order());
    return out;
}

} // namespace

TEST_CASE("poset_from_covers") {
    const Poset anti = poset_from_covers({"a", "b"}, {});
    CHECK(anti.size() == 2);
    CHECK(anti.covers().empty());
    CHECK_FALSE(anti.less(0, 1));
    CHECK_FALSE(anti.connected());

    CHECK(kind_of([] { poset_from_covers({"a", "b"}, {{"a", "b"}, {"b", "a"}}); }) == ErrorKind::Cycle);
    CHECK(kind_of([] { poset_from_covers({"a"}, {{"a", "a"}}); }) == ErrorKind::Cycle);
    CHECK(kind_of([] { poset_from_covers({"a", "b"}, {{"a", "z"}}); }) == ErrorKind::UnknownLabel);
    CHECK(kind_of([] { poset_from_covers({"a", "a"}, {}); }) == ErrorKind::DuplicateLabel);

    const Poset chain = poset_from_covers({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK(chain.less(0, 2));
    CHECK_FALSE(chain.less(2, 0));
    CHECK(chain.connected());
}

TEST_CASE("redundant relations reduce to covers") {
    const Poset p = poset_from_covers({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    CHECK(p.covers() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(p == poset_from_covers({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}));
}

TEST_CASE("young_poset") {
    const Poset p21 = young_poset(Partition::from_parts({2, 1}));
    CHECK(p21.labels() == std::vector<std::string>{"1,1", "1,2", "2,1"});
    CHECK(p21.covers() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});

    const Poset p1 = young_poset(Partition::from_parts({1}));
    CHECK(p1.size() == 1);
    CHECK(p1.covers().empty());

    const Poset p22 = young_poset(Partition::from_parts({2, 2}));
    CHECK(p22.size() == 4);
    CHECK(p22.covers().size() == 4);
    CHECK(p22.less(0, 3)); // (1,1) < (2,2) only through the closure
    CHECK_FALSE(p22.less(1, 2));
}

TEST_CASE("closure matches explicit composition on the corpus") {
    for (const auto& c : oracle::connected_poset_corpus()) {
        const Poset p = oracle::build(c);
        const auto closure = oracle::transitive_closure(p.size(), c.relations);
        for (int a = 0; a < p.size(); ++a)
            for (int b = 0; b < p.size(); ++b)
                CHECK(p.less(a, b) == (closure.count({a, b}) == 1));
    }
}

TEST_CASE("linear_extensions basic cases") {
    CHECK(linear_extensions(poset_from_covers({"a", "b"}, {})).size() == 2);
    CHECK(linear_extensions(poset_from_covers({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}})).size() == 1);
    const auto e21 = linear_extensions(young_poset(Partition::from_parts({2, 1})));
    REQUIRE(e21.size() == 2);
    CHECK(e21[0].order() == std::vector<int>{0, 1, 2});
    CHECK(e21[1].order() == std::vector<int>{0, 2, 1});
    CHECK(linear_extensions(Poset{}).size() == 1);
}

TEST_CASE("linear extensions agree with permutation brute force") {
    for (const auto& c : oracle::connected_poset_corpus()) {
        const Poset p = oracle::build(c);
        auto expected = oracle::extensions_by_permutation(p.size(), c.relations);
        auto got = orders(linear_extensions(p));
        std::set<std::vector<int>> distinct(got.begin(), got.end());
        CHECK(distinct.size() == got.size());
        std::sort(got.begin(), got.end());
        CHECK(got == expected);
    }
}

TEST_CASE("Young posets: extensions count equals the hook formula, n <= 7") {
    for (int n = 0; n <= 7; ++n)
        for (const auto& shape : partitions_of(n)) {
            const Poset p = young_poset(shape);
            std::int64_t count = 0;
            for_each_linear_extension(p, [&](std::span<const int> order) {
                ++count;
                std::vector<int> rank(order.size());
                for (std::size_t k = 0; k < order.size(); ++k)
                    rank[order[k]] = static_cast<int>(k);
                for (int a = 0; a < p.size(); ++a)
                    for (int b = 0; b < p.size(); ++b)
                        if (p.less(a, b))
                            CHECK(rank[a] < rank[b]);
            });
            CHECK(count == syt_count(shape));
        }
}

TEST_CASE("canonical extension is the first enumerated one") {
    for (const auto& c : oracle::connected_poset_corpus()) {
        const Poset p = oracle::build(c);
        CHECK(canonical_extension(p) == linear_extensions(p).front());
    }
    const auto shape = Partition::from_parts({3, 2});
    CHECK(tableau_of_extension(shape, canonical_extension(young_poset(shape))).rows() ==
          oracle::Rows{{1, 2, 3}, {4, 5}});
}

TEST_CASE("prefix-restricted enumeration partitions the extensions") {
    const Poset p = young_poset(Partition::from_parts({2, 2, 1}));
    const int first = 0;
    std::size_t with_prefix = 0;
    for_each_linear_extension(p, std::span<const int>(&first, 1), [&](std::span<const int>) { ++with_prefix; });
    CHECK(with_prefix == linear_extensions(p).size());
    const int bad = 3;
    CHECK(kind_of([&] { for_each_linear_extension(p, std::span<const int>(&bad, 1), [](std::span<const int>) {}); }) ==
          ErrorKind::InvalidExtension);
}

TEST_CASE("tableau <-> extension") {
    const auto q1 = StandardTableau::from_rows({{1, 2}, {3}});
    CHECK(extension_of_tableau(q1).order() == std::vector<int>{0, 1, 2});
    const auto q2 = StandardTableau::from_rows({{1, 3}, {2}});
    CHECK(extension_of_tableau(q2).order() == std::vector<int>{0, 2, 1});

    for (int n = 0; n <= 6; ++n)
        for (const auto& shape : partitions_of(n)) {
            for (const auto& q : enumerate_syt(shape))
                CHECK(tableau_of_extension(shape, extension_of_tableau(q)) == q);
            for (const auto& e : linear_extensions(young_poset(shape)))
                CHECK(extension_of_tableau(tableau_of_extension(shape, e)) == e);
        }

    const auto e = extension_of_tableau(q1);
    CHECK(kind_of([&] { tableau_of_extension(Partition::from_parts({3}), e); }) == ErrorKind::ShapeMismatch);
    const Poset chain = poset_from_covers({"1,1", "1,2", "2,1"}, {});
    CHECK(kind_of([&] { tableau_of_extension(Partition::from_parts({2, 1}), LinearExtension(chain, {0, 1, 2})); }) ==
          ErrorKind::ShapeMismatch);
}

TEST_CASE("LinearExtension rejects incompatible orders") {
    const Poset chain = poset_from_covers({"a", "b"}, {{"a", "b"}});
    CHECK(kind_of([&] { LinearExtension(chain, {1, 0}); }) == ErrorKind::InvalidExtension);
    CHECK(kind_of([&] { LinearExtension(chain, {0, 0}); }) == ErrorKind::InvalidExtension);
    CHECK(kind_of([&] { LinearExtension(chain, {0}); }) == ErrorKind::InvalidExtension);
}
