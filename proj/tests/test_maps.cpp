#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "betajack/factorization.hpp"
#include "betajack/maps.hpp"

using namespace betajack;

namespace {

PZKey key(Partition p, Partition z, std::vector<std::uint8_t> g) {
    return PZKey{std::move(p), std::move(z), std::move(g)};
}

}  // namespace

TEST_CASE("lambda operator on small monomials") {
    Ctx ctx = make_context({"b"});
    const Scalar b = Scalar::variable(ctx, "b");
    const Scalar one = Scalar::one(ctx);

    SUBCASE("Lambda(z1) = 0") {
        PZPolynomial f(ctx, 0, 4);
        f.add_term(key({}, {1}, {}), one);
        CHECK(lambda_apply(f, b).is_zero());
    }

    SUBCASE("Lambda(z1 p1) = (1+b) z2") {
        PZPolynomial f(ctx, 0, 4);
        f.add_term(key({1}, {1}, {}), one);
        const auto image = lambda_apply(f, b);
        CHECK(image.terms().size() == 1);
        CHECK(image.terms().at(key({}, {2}, {})) == b + one);
    }

    SUBCASE("Lambda(z2) = z1 p1 + b z2") {
        PZPolynomial f(ctx, 0, 4);
        f.add_term(key({}, {2}, {}), one);
        const auto image = lambda_apply(f, b);
        CHECK(image.terms().size() == 2);
        CHECK(image.terms().at(key({1}, {1}, {})) == one);
        CHECK(image.terms().at(key({}, {2}, {})) == b);
    }
}

TEST_CASE("lambda operator preserves the grading monomial by monomial") {
    Ctx ctx = make_context({"b"});
    const Scalar b = Scalar::variable(ctx, "b");
    auto grade = [](const PZKey& k) { return k.p.weight() + k.z.weight(); };
    const std::vector<PZKey> monomials{
        key({3, 1}, {2}, {}), key({2}, {1, 1}, {}), key({1, 1}, {4}, {}),
        key({2, 2, 1}, {3}, {}), key({}, {2, 2}, {})};
    for (const auto& mono : monomials) {
        PZPolynomial f(ctx, 0, 4);
        f.add_term(mono, Scalar::one(ctx));
        const auto image = lambda_apply(f, b);
        CHECK_FALSE(image.is_zero());
        for (const auto& [k, c] : image.terms()) {
            CHECK(grade(k) == grade(mono));
            CHECK_FALSE(c.is_zero());
        }
    }
}

TEST_CASE("vertex attachment examples") {
    Ctx ctx = make_context({"b"});
    const Scalar b = Scalar::variable(ctx, "b");
    const Scalar one = Scalar::one(ctx);
    const Scalar inv1b = (b + one).inverse();

    SUBCASE("T = 1 goes to p1/(1+b)") {
        const auto f = attach_vertex(PZPolynomial::one(ctx, 1, 4), 1, 0, b);
        CHECK(f.terms().size() == 1);
        CHECK(f.terms().at(key({1}, {}, {0})) == inv1b);
    }

    SUBCASE("numerator factor: (p1^2 + g(1+b) p2)/(1+b)^2") {
        PZPolynomial T(ctx, 1, 4);
        T.add_term(key({1}, {}, {0}), inv1b);
        const auto f = attach_vertex(T, 1, 0, b);
        CHECK(f.terms().size() == 2);
        CHECK(f.terms().at(key({1, 1}, {}, {0})) == inv1b * inv1b);
        CHECK(f.terms().at(key({2}, {}, {1})) == inv1b);
    }

    SUBCASE("denominator factor expands geometrically to the g-cap") {
        PZPolynomial T(ctx, 1, 2);
        T.add_term(key({1}, {}, {0}), inv1b);
        const auto f = attach_vertex(T, 0, 1, b);
        // (p1^2 + g(1+b) p2 + g^2 (1+b)(p1^2 + b p2)) / (1+b)^2
        CHECK(f.terms().at(key({1, 1}, {}, {0})) == inv1b * inv1b);
        CHECK(f.terms().at(key({2}, {}, {1})) == inv1b);
        CHECK(f.terms().at(key({1, 1}, {}, {2})) == inv1b);
        CHECK(f.terms().at(key({2}, {}, {2})) == b * inv1b);
        CHECK(f.terms().size() == 4);
    }

    SUBCASE("attach_vertex rejects z-carrying input") {
        PZPolynomial T(ctx, 1, 2);
        T.add_term(key({}, {1}, {0}), one);
        CHECK_THROWS_AS(attach_vertex(T, 1, 0, b), Error);
    }
}

TEST_CASE("numerator operator factors commute") {
    Ctx ctx = make_context({"b"});
    const Scalar b = Scalar::variable(ctx, "b");
    PZPolynomial f(ctx, 2, 3);
    f.add_term(key({2}, {1}, {0, 0}), Scalar::one(ctx));
    f.add_term(key({1}, {2}, {0, 0}), b);

    auto bump = [&](const PZPolynomial& g, int slot) {
        PZPolynomial out(ctx, g.g_count(), g.g_cap());
        for (const auto& [k, c] : g.terms()) {
            PZKey nk(k);
            ++nk.g[static_cast<std::size_t>(slot)];
            out.add_term(nk, c);
        }
        return out;
    };
    auto apply_factor = [&](PZPolynomial g, int slot) {
        g += bump(lambda_apply(g, b), slot);
        return g;
    };
    const auto order_01 = apply_factor(apply_factor(f, 0), 1);
    const auto order_10 = apply_factor(apply_factor(f, 1), 0);
    CHECK(order_01 == order_10);
}

TEST_CASE("recursion table pinned entries") {
    JackCache cache;
    Ctx ctx = make_context({"b"});
    const Scalar b = Scalar::variable(ctx, "b");
    const Scalar one = Scalar::one(ctx);
    const WeightGF G = custom_weight(ctx, 1, 0, {one});  // G(z) = 1 + z
    const HurwitzTable table = t_table(G, b, 3, 3);

    CHECK(table.source == "lambda-recursion");
    CHECK(table.at(Partition{1}, 0) == (b + one).inverse());
    CHECK(table.at(Partition{2}, 1) == ((b + one) * Rational(2)).inverse());
    CHECK(table.at(Partition{1, 1}, 0) == ((b + one) * (b + one) * Rational(2)).inverse());
    CHECK(table.at(Partition{1, 1}, 1).is_zero());

    const HurwitzTable jack_side = hurwitz_table(G, b, 3, 3, cache);
    for (const auto& [k, v] : jack_side.entries) CHECK(table.at(k.first, k.second) == v);
}

TEST_CASE("trivial weight recursion only grows isolated vertices") {
    JackCache cache;
    Ctx ctx = make_context({"b"});
    const Scalar b = Scalar::variable(ctx, "b");
    const WeightGF G = custom_weight(ctx, 0, 0, {});
    const HurwitzTable recursion = t_table(G, b, 3, 1);
    const HurwitzTable expansion = hurwitz_table(G, b, 3, 1, cache);
    for (const auto& [k, v] : expansion.entries) CHECK(recursion.at(k.first, k.second) == v);
}

TEST_CASE("colored monotone factorization enumeration") {
    SUBCASE("type (2), one factor, one color") {
        Ctx ctx = make_context({"u1"});
        const Scalar u1 = Scalar::variable(ctx, "u1");
        const WeightGF G = custom_weight(ctx, 1, 0, {u1});
        CHECK(colored_monotone_factorization_sum(Partition{2}, 1, G) == u1);
    }

    SUBCASE("a single transposition is never trivial") {
        Ctx ctx = make_context({"u1", "u2"});
        const WeightGF G = custom_weight(
            ctx, 1, 1, {Scalar::variable(ctx, "u1"), Scalar::variable(ctx, "u2")});
        CHECK(colored_monotone_factorization_sum(Partition{1, 1}, 1, G).is_zero());
    }

    SUBCASE("four monotone pairs make a 3-cycle") {
        Ctx ctx = make_context({"u1"});
        const Scalar u1 = Scalar::variable(ctx, "u1");
        const WeightGF G = custom_weight(ctx, 0, 1, {u1});
        CHECK(colored_monotone_factorization_sum(Partition{3}, 2, G) == u1 * u1 * Rational(4));
    }

    SUBCASE("length-zero factorizations") {
        Ctx ctx = make_context({"u1"});
        const WeightGF G = custom_weight(ctx, 1, 0, {Scalar::variable(ctx, "u1")});
        CHECK(colored_monotone_factorization_sum(Partition{1, 1, 1}, 0, G).is_one());
        CHECK(colored_monotone_factorization_sum(Partition{2}, 0, G).is_zero());
    }

    SUBCASE("guard") {
        Ctx ctx = make_context({"u1"});
        const WeightGF G = custom_weight(ctx, 1, 0, {Scalar::variable(ctx, "u1")});
        CHECK_THROWS_AS(colored_monotone_factorization_sum(Partition{9}, 1, G), GuardExceeded);
        CHECK_THROWS_AS(colored_monotone_factorization_sum(Partition{2}, 9, G), GuardExceeded);
    }
}

TEST_CASE("Jucys-Murphy class expansion") {
    SUBCASE("n = 2, G = 1 + z") {
        Ctx ctx = make_context({});
        const WeightGF G = custom_weight(ctx, 1, 0, {Scalar::one(ctx)});
        const auto h = jm_class_expansion(G, 2, 2);
        CHECK(h.at({Partition{2}, 1}) == Scalar(ctx, rat(1, 2)));
        CHECK(h.at({Partition{1, 1}, 1}).is_zero());
        CHECK(h.at({Partition{1, 1}, 0}) == Scalar(ctx, rat(1, 2)));
        CHECK(h.at({Partition{2}, 2}).is_zero());  // (1,2)^2 = id contributes to (1,1)
    }

    SUBCASE("n = 3, G = 1/(1-z)") {
        Ctx ctx = make_context({});
        const WeightGF G = custom_weight(ctx, 0, 1, {Scalar::one(ctx)});
        const auto h = jm_class_expansion(G, 3, 2);
        CHECK(h.at({Partition{3}, 2}) == Scalar(ctx, rat(2, 3)));
    }

    SUBCASE("guard") {
        Ctx ctx = make_context({});
        const WeightGF G = custom_weight(ctx, 0, 0, {});
        CHECK_THROWS_AS(jm_class_expansion(G, 9, 1), GuardExceeded);
    }
}

TEST_CASE("oracles accept rational-function weight parameters") {
    JackCache cache;
    Ctx ctx = make_context({"gamma"});
    const Scalar gamma = Scalar::variable(ctx, "gamma");
    const WeightGF G = make_weight(WeightKind::laguerre_minus, gamma, gamma);
    const Scalar b0 = Scalar::zero(ctx);

    const HurwitzTable jack_side = hurwitz_table(G, b0, 2, 2, cache);
    const HurwitzTable map_side = t_table(G, b0, 2, 2);
    for (const auto& [k, v] : jack_side.entries) CHECK(map_side.at(k.first, k.second) == v);
    for (int n = 1; n <= 2; ++n)
        for (const auto& [k, v] : jm_class_expansion(G, n, 2))
            CHECK(jack_side.at(k.first, k.second) == v);
    CHECK(colored_monotone_factorization_sum(Partition{2}, 1, G) * rat(1, 2) ==
          jack_side.at(Partition{2}, 1));
}

TEST_CASE("three b = 0 pipelines agree with symbolic colors") {
    JackCache cache;
    Ctx ctx = make_context({"u1", "u2"});
    const WeightGF G =
        custom_weight(ctx, 1, 1, {Scalar::variable(ctx, "u1"), Scalar::variable(ctx, "u2")});
    const Scalar b0 = Scalar::zero(ctx);
    const HurwitzTable jack_side = hurwitz_table(G, b0, 3, 3, cache);
    const HurwitzTable map_side = t_table(G, b0, 3, 3);

    for (const auto& [k, v] : jack_side.entries) CHECK(map_side.at(k.first, k.second) == v);

    for (int n = 1; n <= 3; ++n) {
        const auto jm = jm_class_expansion(G, n, 3);
        for (const auto& [k, v] : jm) {
            CHECK(jack_side.at(k.first, k.second) == v);
            if (!k.first.empty()) {
                const Scalar fact =
                    colored_monotone_factorization_sum(k.first, k.second, G) *
                    (Rational(1) / factorial(n));
                CHECK(fact == v);
            }
        }
    }
}
