#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "betajack/partition.hpp"

using namespace betajack;

namespace {

// independent count via Euler's pentagonal recurrence
long pentagonal_count(int n, std::vector<long>& memo) {
    if (n == 0) return 1;
    if (n < 0) return 0;
    if (memo[static_cast<std::size_t>(n)] >= 0) return memo[static_cast<std::size_t>(n)];
    long total = 0;
    for (int k = 1;; ++k) {
        const int g1 = k * (3 * k - 1) / 2;
        const int g2 = k * (3 * k + 1) / 2;
        if (g1 > n && g2 > n) break;
        const long sign = (k % 2 == 1) ? 1 : -1;
        total += sign * (pentagonal_count(n - g1, memo) + pentagonal_count(n - g2, memo));
    }
    memo[static_cast<std::size_t>(n)] = total;
    return total;
}

}  // namespace

TEST_CASE("conjugation") {
    CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
    CHECK(Partition{1, 1, 1}.conjugate() == Partition{3});
    CHECK(Partition().conjugate() == Partition());
    for (int n = 0; n <= 8; ++n)
        for (const auto& lambda : partitions_of(n))
            CHECK(lambda.conjugate().conjugate() == lambda);
}

TEST_CASE("cell statistics") {
    Ctx ctx = make_context({"alpha"});
    const Scalar alpha = Scalar::variable(ctx, "alpha");

    auto stats = cell_stats(Partition{3, 1}, Cell{1, 1}, alpha);
    CHECK(stats.arm == 2);
    CHECK(stats.leg == 1);
    CHECK(stats.content.is_zero());

    stats = cell_stats(Partition{3, 1}, Cell{1, 2}, alpha);
    CHECK(stats.arm == 1);
    CHECK(stats.leg == 0);
    CHECK(stats.content == alpha);

    stats = cell_stats(Partition{3, 1}, Cell{2, 1}, alpha);
    CHECK(stats.arm == 0);
    CHECK(stats.leg == 0);
    CHECK(stats.content == Scalar(ctx, Rational(-1)));

    CHECK_THROWS_AS(cell_stats(Partition{3, 1}, Cell{2, 2}, alpha), CellOutOfDiagram);

    // arm/leg swap under conjugation
    for (int n = 1; n <= 6; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            const Partition conj = lambda.conjugate();
            for (const Cell& cell : cells_of(lambda)) {
                const auto a = cell_stats(lambda, cell, alpha);
                const auto b = cell_stats(conj, Cell{cell.col, cell.row}, alpha);
                CHECK(a.arm == b.leg);
                CHECK(a.leg == b.arm);
            }
        }
    }
}

TEST_CASE("hook products") {
    Ctx ctx = make_context({"alpha"});
    const Scalar alpha = Scalar::variable(ctx, "alpha");
    const Scalar one = Scalar::one(ctx);

    auto [h1, hp1] = hook_products(Partition{1}, alpha);
    CHECK(h1 == one);
    CHECK(hp1 == alpha);

    auto [h2, hp2] = hook_products(Partition{2}, alpha);
    CHECK(h2 == alpha + one);
    CHECK(hp2 == alpha * alpha * Rational(2));

    auto [h11, hp11] = hook_products(Partition{1, 1}, alpha);
    CHECK(h11 == Scalar(ctx, Rational(2)));
    CHECK(hp11 == alpha * (alpha + one));

    auto [he, hpe] = hook_products(Partition(), alpha);
    CHECK(he == one);
    CHECK(hpe == one);

    // at alpha = 1 both reduce to the classical hook product
    const Scalar alpha1 = Scalar::one(ctx);
    for (int n = 0; n <= 6; ++n)
        for (const auto& lambda : partitions_of(n)) {
            auto [h, hp] = hook_products(lambda, alpha1);
            CHECK(h == hp);
        }
}

TEST_CASE("z_lambda") {
    CHECK(z_of(Partition{1}) == Rational(1));
    CHECK(z_of(Partition{2, 1, 1}) == Rational(4));
    CHECK(z_of(Partition{3, 3}) == Rational(18));
    CHECK(z_of(Partition()) == Rational(1));

    for (int n = 0; n <= 8; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            Rational direct(1);
            int weight = 0;
            for (int c = 1; c <= n; ++c) {
                const int m = lambda.multiplicity(c);
                direct *= factorial(m);
                for (int k = 0; k < m; ++k) direct *= Rational(c);
                weight += c * m;
            }
            CHECK(z_of(lambda) == direct);
            CHECK(weight == lambda.weight());
        }
    }
}

TEST_CASE("dominance order") {
    CHECK(dominance_leq(Partition{1, 1, 1}, Partition{3}));
    CHECK_FALSE(dominance_leq(Partition{3, 1}, Partition{2, 2}));
    // incomparable pair
    CHECK_FALSE(dominance_leq(Partition{4, 1, 1}, Partition{3, 3}));
    CHECK_FALSE(dominance_leq(Partition{3, 3}, Partition{4, 1, 1}));
    CHECK(dominance_leq(Partition{2, 2}, Partition{2, 2}));
    CHECK_THROWS_AS(dominance_leq(Partition{2}, Partition{3}), SizeMismatch);
}

TEST_CASE("hat partition") {
    CHECK(hat_partition(Partition{2, 1}, 3) == Partition{2, 1});
    CHECK(hat_partition(Partition{3}, 2) == Partition{3});
    CHECK(hat_partition(Partition{2, 2}, 2) == Partition());
    CHECK(hat_partition(Partition(), 0) == Partition());
    CHECK_THROWS_AS(hat_partition(Partition{1, 1}, 1), LengthExceedsN);

    // involutive whenever lambda fits strictly inside n rows (hat keeps the
    // rectangle width lambda_1 exactly when lambda_n = 0)
    for (int n = 0; n <= 4; ++n)
        for (int size = 0; size <= 4; ++size)
            for (const auto& lambda : partitions_of(size))
                if (lambda.length() < n || lambda.empty())
                    CHECK(hat_partition(hat_partition(lambda, n), n) == lambda);
    // at full length the rectangle shrinks: (2,1) with n = 2 loses a column
    CHECK(hat_partition(Partition{2, 1}, 2) == Partition{1});
    CHECK(hat_partition(Partition{1}, 2) == Partition{1});
}

TEST_CASE("partition enumeration") {
    CHECK(partitions_of(0) == std::vector<Partition>{Partition()});
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(6).size() == 11);

    // reverse lexicographic: (n) first, (1^n) last
    const auto p4 = partitions_of(4);
    CHECK(p4.front() == Partition{4});
    CHECK(p4[1] == Partition{3, 1});
    CHECK(p4[2] == Partition{2, 2});
    CHECK(p4[3] == Partition{2, 1, 1});
    CHECK(p4.back() == Partition{1, 1, 1, 1});

    std::vector<long> memo(31, -1);
    for (int n = 0; n <= 30; ++n) {
        if (n <= 20) {
            const auto parts = partitions_of(n);
            std::set<Partition> unique(parts.begin(), parts.end());
            CHECK(unique.size() == parts.size());
            for (const auto& p : parts) CHECK(p.weight() == n);
            CHECK(static_cast<long>(parts.size()) == pentagonal_count(n, memo));
        } else {
            CHECK(static_cast<long>(partitions_of(n).size()) == pentagonal_count(n, memo));
        }
    }
}

TEST_CASE("text form") {
    CHECK(Partition{3, 1, 1}.str() == "3,1,1");
    CHECK(Partition().str().empty());
    CHECK(Partition::parse("3,1,1") == Partition{3, 1, 1});
    CHECK(Partition::parse("") == Partition());
    CHECK(Partition::parse(" 2 , 1 ") == Partition{2, 1});
    CHECK_THROWS_AS(Partition::parse("1,2"), Error);
}
