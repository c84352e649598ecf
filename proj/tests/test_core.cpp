#include <doctest.h>

#include <random>
#include <set>

#include "rmq/core/archive.hpp"
#include "rmq/core/dominance.hpp"
#include "rmq/core/plan.hpp"
#include "rmq/core/table_set.hpp"
#include "support.hpp"

using namespace rmq;

TEST_CASE("table set operations") {
    TableSet a{0, 3, 127};
    CHECK(a.size() == 3);
    CHECK(a.contains(127));
    CHECK_FALSE(a.contains(1));
    CHECK(a.lowest() == 0);
    CHECK((a - TableSet{0}).lowest() == 3);
    CHECK(TableSet{3}.is_subset_of(a));
    CHECK_FALSE(a.is_subset_of(TableSet{0, 3}));
    CHECK((TableSet{1} | TableSet{2}) == TableSet{1, 2});
    CHECK((a & TableSet{3, 4}) == TableSet{3});
    CHECK(TableSet::first_n(128).size() == 128);
    CHECK(TableSet::first_n(0).empty());
    CHECK(a.members() == std::vector<TableId>{0, 3, 127});
}

TEST_CASE("submask walk visits every nonempty subset once") {
    TableSet s{1, 4, 6, 70};
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
    std::size_t count = 0;
    for (TableSet sub = s; !sub.empty(); sub = sub.next_submask(s)) {
        CHECK(sub.is_subset_of(s));
        ++count;
        std::uint64_t lo = 0, hi = 0;
        sub.for_each([&](TableId t) { (t < 64 ? lo : hi) |= std::uint64_t{1} << (t % 64); });
        seen.insert({lo, hi});
    }
    CHECK(count == 15);
    CHECK(seen.size() == 15);
}

TEST_CASE("weak dominance examples") {
    CHECK(weakly_dominates({1, 2}, {2, 3}));
    CHECK(weakly_dominates({1, 2}, {1, 2}));
    CHECK_FALSE(weakly_dominates({1, 3}, {2, 2}));
}

TEST_CASE("strict dominance examples") {
    CHECK_FALSE(strictly_dominates({1, 2}, {1, 2}));
    CHECK(strictly_dominates({1, 2}, {1, 3}));
    CHECK_FALSE(strictly_dominates({2, 1}, {1, 2}));
}

TEST_CASE("approximate dominance examples") {
    CHECK(approx_dominates({2, 2}, {1, 1}, 2));
    CHECK_FALSE(approx_dominates({2.01, 1}, {1, 1}, 2));
    CostVector c{3.5, 7, 1};
    CHECK(approx_dominates(c, c, 1));
    CHECK_THROWS_AS(approx_dominates({1}, {1}, 0.99), std::invalid_argument);
}

TEST_CASE("dominance partial order properties") {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 20000; ++iter) {
        std::size_t l = 1 + iter % 3;
        CostVector a = test::random_grid_cost(rng, l, 3);
        CostVector b = test::random_grid_cost(rng, l, 3);
        CostVector c = test::random_grid_cost(rng, l, 3);
        CHECK(weakly_dominates(a, a));
        CHECK_FALSE(strictly_dominates(a, a));
        if (weakly_dominates(a, b) && weakly_dominates(b, c)) CHECK(weakly_dominates(a, c));
        if (strictly_dominates(a, b) && strictly_dominates(b, c)) CHECK(strictly_dominates(a, c));
        if (weakly_dominates(a, b) && weakly_dominates(b, a)) CHECK(a == b);
        CHECK(strictly_dominates(a, b) == (weakly_dominates(a, b) && !(a == b)));

        CostVector x = test::random_cost(rng, l, 1, 5);
        CostVector y = test::random_cost(rng, l, 1, 5);
        CHECK(approx_dominates(x, y, 1.0) == weakly_dominates(x, y));
        std::uniform_real_distribution<double> ua(1.0, 4.0);
        double alpha = ua(rng);
        double beta = alpha * ua(rng);
        if (approx_dominates(x, y, alpha)) CHECK(approx_dominates(x, y, beta));
    }
}

TEST_CASE("lemma: weak dominance of uniform vectors has probability 2^-l") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const int pairs = 200000;
    for (std::size_t l = 1; l <= 3; ++l) {
        int hits = 0;
        for (int i = 0; i < pairs; ++i) {
            CostVector a(l), b(l);
            for (std::size_t k = 0; k < l; ++k) a[k] = u(rng), b[k] = u(rng);
            hits += weakly_dominates(a, b);
        }
        CHECK(static_cast<double>(hits) / pairs == doctest::Approx(1.0 / (1 << l)).epsilon(0.05));
    }
}

namespace {

Plan leaf(TableId t, CostVector c, OutputFormat f = OutputFormat::kPipelined) {
    return Plan::make_scan(t, 0, 10, f, c);
}

} // namespace

TEST_CASE("plan structure accessors") {
    Plan a = leaf(0, {1, 1});
    Plan b = leaf(2, {2, 1});
    Plan j = Plan::make_join(a, b, 1, 5, OutputFormat::kMaterialized, {9, 9});
    CHECK(j.is_join());
    CHECK_FALSE(a.is_join());
    CHECK(j.rel() == TableSet{0, 2});
    CHECK(j.node_count() == 3);
    CHECK(j.outer().same_node(a));
    CHECK(j.format() == OutputFormat::kMaterialized);
    CHECK(j.to_string() == "(0/0 *1 2/0)");
    Plan j2 = Plan::make_join(leaf(0, {5, 5}), b, 1, 5, OutputFormat::kPipelined, {1, 1});
    CHECK(j.same_structure(j2));
    CHECK_FALSE(j.same_node(j2));
}

TEST_CASE("archive insert examples") {
    Archive a;
    CHECK(a.insert(leaf(0, {1, 1})));
    CHECK(a.size() == 1);

    Archive b;
    b.insert(leaf(0, {1, 1}));
    CHECK_FALSE(b.insert(leaf(0, {2, 2})));
    CHECK(b.size() == 1);

    Archive c;
    c.insert(leaf(0, {2, 2}));
    CHECK(c.insert(leaf(0, {1, 1})));
    REQUIRE(c.size() == 1);
    CHECK(c.plans()[0].cost() == CostVector{1, 1});
}

TEST_CASE("archive keeps the earlier plan on exact ties") {
    Archive a;
    Plan first = leaf(0, {3, 3});
    a.insert(first);
    CHECK_FALSE(a.insert(leaf(1, {3, 3})));
    CHECK(a.plans()[0].same_node(first));
}

TEST_CASE("archive formats are compared separately") {
    Archive a;
    a.insert(leaf(0, {1, 1}, OutputFormat::kPipelined));
    CHECK(a.insert(leaf(0, {2, 2}, OutputFormat::kMaterialized)));
    CHECK(a.size() == 2);
    CHECK(a.accepts({0.5, 3}, OutputFormat::kPipelined));
    CHECK_FALSE(a.accepts({2, 2}, OutputFormat::kMaterialized));
}

TEST_CASE("archive invariant and naive equivalence under random insertions") {
    std::mt19937_64 rng(99);
    for (int round = 0; round < 300; ++round) {
        std::size_t l = 1 + round % 3;
        Archive archive;
        std::vector<std::pair<CostVector, OutputFormat>> naive;
        for (int i = 0; i < 60; ++i) {
            OutputFormat f = (rng() & 1) ? OutputFormat::kPipelined : OutputFormat::kMaterialized;
            CostVector c = test::random_grid_cost(rng, l, 5);
            bool rejected = false;
            for (auto &[nc, nf] : naive)
                if (nf == f && weakly_dominates(nc, c)) rejected = true;
            if (!rejected) {
                std::erase_if(naive, [&](auto &e) { return e.second == f && weakly_dominates(c, e.first); });
                naive.emplace_back(c, f);
            }
            CHECK(archive.insert(leaf(0, c, f)) == !rejected);
        }
        REQUIRE(archive.size() == naive.size());
        for (std::size_t i = 0; i < naive.size(); ++i) {
            CHECK(archive.plans()[i].cost() == naive[i].first);
            CHECK(archive.plans()[i].format() == naive[i].second);
        }
        auto plans = archive.plans();
        for (std::size_t i = 0; i < plans.size(); ++i)
            for (std::size_t j = 0; j < plans.size(); ++j)
                if (i != j && plans[i].format() == plans[j].format())
                    CHECK_FALSE(weakly_dominates(plans[i].cost(), plans[j].cost()));
    }
}

TEST_CASE("archive merge") {
    Archive a, b;
    a.insert(leaf(0, {1, 4}));
    b.insert(leaf(0, {4, 1}));
    b.insert(leaf(0, {5, 5}));
    a.merge(b);
    CHECK(test::cost_set(a) == std::vector<CostVector>{{1, 4}, {4, 1}});
}
