#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "betajack/symfun.hpp"

using namespace betajack;

namespace {

// direct evaluation of the monomial symmetric function at exact points
Scalar monomial_direct(const Partition& mu, const std::vector<Scalar>& xs) {
    const Ctx& ctx = xs.front().ctx();
    std::vector<int> exps(xs.size(), 0);
    for (int i = 1; i <= mu.length(); ++i) exps[static_cast<std::size_t>(i - 1)] = mu.part(i);
    std::sort(exps.begin(), exps.end());
    Scalar acc = Scalar::zero(ctx);
    do {
        Scalar term = Scalar::one(ctx);
        for (std::size_t i = 0; i < xs.size(); ++i) term *= xs[i].pow(exps[i]);
        acc += term;
    } while (std::next_permutation(exps.begin(), exps.end()));
    return acc;
}

}  // namespace

TEST_CASE("monomial to power-sum expansion") {
    Ctx ctx = make_context({});
    const SymmetricFunction m1 = monomial_to_powersum(ctx, Partition{1});
    CHECK(m1.coeff(Partition{1}).is_one());
    CHECK(m1.terms().size() == 1);

    // m_(1,1) = (p1^2 - p2)/2
    const SymmetricFunction m11 = monomial_to_powersum(ctx, Partition{1, 1});
    CHECK(m11.coeff(Partition{1, 1}) == Scalar(ctx, rat(1, 2)));
    CHECK(m11.coeff(Partition{2}) == Scalar(ctx, rat(-1, 2)));

    // m_(2,1) = p2 p1 - p3
    const SymmetricFunction m21 = monomial_to_powersum(ctx, Partition{2, 1});
    CHECK(m21.coeff(Partition{2, 1}).is_one());
    CHECK(m21.coeff(Partition{3}) == Scalar(ctx, Rational(-1)));
    CHECK(m21.coeff(Partition{1, 1, 1}).is_zero());
}

TEST_CASE("monomial expansion against direct evaluation") {
    Ctx ctx = make_context({});
    const std::vector<Scalar> xs{Scalar(ctx, rat(1, 2)), Scalar(ctx, rat(-2, 3)),
                                 Scalar(ctx, Rational(3))};
    for (int d = 1; d <= 5; ++d) {
        for (const auto& mu : partitions_of(d)) {
            if (mu.length() > 3) continue;
            const Scalar via_p = specialize(monomial_to_powersum(ctx, mu), {xs});
            CHECK(via_p == monomial_direct(mu, xs));
        }
    }
}

TEST_CASE("round-trip through the monomial basis up to degree 8") {
    Ctx ctx = make_context({});
    for (int d = 0; d <= 8; ++d) {
        for (const auto& mu : partitions_of(d)) {
            const auto back = to_monomial_basis(monomial_to_powersum(ctx, mu));
            CHECK(back.size() == 1);
            CHECK(back.count(mu) == 1);
            CHECK(back.at(mu).is_one());
        }
    }
}

TEST_CASE("jack expansions match the defining examples") {
    JackCache cache;
    const Ctx& ctx = cache.alpha_ctx();
    const Scalar alpha = Scalar::variable(ctx, "alpha");
    const Scalar one = Scalar::one(ctx);

    const auto p1 = cache.jack_symbolic(Partition{1});
    CHECK(p1->terms().size() == 1);
    CHECK(p1->coeff(Partition{1}).is_one());

    const auto p2 = cache.jack_symbolic(Partition{2});
    CHECK(p2->coeff(Partition{2}) == alpha / (alpha + one));
    CHECK(p2->coeff(Partition{1, 1}) == one / (alpha + one));

    const auto p11 = cache.jack_symbolic(Partition{1, 1});
    CHECK(p11->coeff(Partition{2}) == Scalar(ctx, rat(-1, 2)));
    CHECK(p11->coeff(Partition{1, 1}) == Scalar(ctx, rat(1, 2)));
}

TEST_CASE("hall pairing") {
    JackCache cache;
    const Ctx& ctx = cache.alpha_ctx();
    const Scalar alpha = Scalar::variable(ctx, "alpha");

    const auto p_2 = SymmetricFunction::p(ctx, Partition{2});
    const auto p_11 = SymmetricFunction::p(ctx, Partition{1, 1});
    CHECK(hall_inner(p_2, p_2, alpha) == alpha * Rational(2));
    CHECK(hall_inner(p_11, p_11, alpha) == alpha * alpha * Rational(2));
    CHECK(hall_inner(p_2, p_11, alpha).is_zero());

    const auto jack2 = cache.jack_symbolic(Partition{2});
    CHECK(hall_inner(*jack2, *jack2, alpha) ==
          alpha * alpha * Rational(2) / (alpha + Scalar::one(ctx)));
}

TEST_CASE("jack defining properties up to degree 4, symbolic alpha") {
    JackCache cache;
    const Ctx& ctx = cache.alpha_ctx();
    const Scalar alpha = Scalar::variable(ctx, "alpha");
    for (int d = 0; d <= 4; ++d) {
        const auto parts = partitions_of(d);
        for (const auto& la : parts) {
            const auto p_la = cache.jack_symbolic(la);
            for (const auto& mu : parts) {
                if (mu == la) continue;
                CHECK(hall_inner(*p_la, *cache.jack_symbolic(mu), alpha).is_zero());
            }
            auto [h, hp] = hook_products(la, alpha);
            CHECK(hall_inner(*p_la, *p_la, alpha) == hp / h);
            for (const auto& [mu, c] : to_monomial_basis(*p_la)) {
                CHECK(dominance_leq(mu, la));
                if (mu == la) CHECK(c.is_one());
            }
            CHECK(exponential_specialization(*p_la) == h.inverse());
        }
    }
}

TEST_CASE("alpha = 1 gives Schur functions with unit norm") {
    JackCache cache;
    Ctx ctx = make_context({});
    const Scalar one = Scalar::one(ctx);
    for (int d = 0; d <= 4; ++d) {
        for (const auto& la : partitions_of(d)) {
            const auto schur = cache.jack(la, one);
            CHECK(hall_inner(schur, schur, one).is_one());
        }
    }
}

TEST_CASE("numeric alpha: substitution agrees with direct recomputation") {
    JackCache cache;
    Ctx ctx = make_context({});
    for (const Rational& a : {rat(3, 2), Rational(-7), rat(5, 3)}) {
        const Scalar alpha(ctx, a);
        for (int d = 0; d <= 4; ++d)
            for (const auto& la : partitions_of(d))
                CHECK(cache.jack(la, alpha) == cache.jack_direct(la, alpha));
    }
    CHECK_THROWS_AS(cache.jack(Partition{2}, Scalar(ctx, Rational(-1))), SingularAlpha);
    // the (1,1) cell of (2,1,1) has arm 1, leg 2, so alpha = -3 kills its hook
    CHECK_THROWS_AS(cache.jack(Partition{2, 1, 1}, Scalar(ctx, Rational(-3))), SingularAlpha);
}

TEST_CASE("frozen renderings used by golden files") {
    JackCache cache;
    CHECK(cache.jack_symbolic(Partition{2})->str() ==
          "((alpha)/(alpha + 1))*p[2] + ((1)/(alpha + 1))*p[1,1]");
    // at alpha = 1 this is the Schur expansion (1/8, 1/4, -1/8, 0, -1/4)
    CHECK(cache.jack_symbolic(Partition{3, 1})->str() ==
          "((-alpha^2)/(alpha^2 + 2*alpha + 1))*p[4] + "
          "((alpha^2 - alpha)/(alpha^2 + 2*alpha + 1))*p[3,1] + "
          "((-1/2*alpha)/(alpha^2 + 2*alpha + 1))*p[2,2] + "
          "((3/2*alpha - 1/2)/(alpha^2 + 2*alpha + 1))*p[2,1,1] + "
          "((1/2)/(alpha^2 + 2*alpha + 1))*p[1,1,1,1]");
}

TEST_CASE("specialization") {
    JackCache cache;
    const Ctx& ctx = cache.alpha_ctx();
    const Scalar alpha = Scalar::variable(ctx, "alpha");
    const Scalar one = Scalar::one(ctx);
    const FiniteSpecialization xs{{Scalar(ctx, Rational(1)), Scalar(ctx, Rational(2))}};

    CHECK(specialize(SymmetricFunction::p(ctx, Partition{1}), xs) == Scalar(ctx, Rational(3)));

    // P_(2) at (1,2) = 5 + 4/(alpha+1)
    const Scalar val = specialize(*cache.jack_symbolic(Partition{2}), xs);
    CHECK(val == Scalar(ctx, Rational(5)) + Scalar(ctx, Rational(4)) / (alpha + one));
}

TEST_CASE("Cauchy identity in three variables up to degree 4") {
    JackCache cache;
    Ctx ctx = make_context({"alpha", "x1", "x2", "x3"});
    const Scalar alpha = Scalar::variable(ctx, "alpha");
    const std::vector<Scalar> xs{Scalar::variable(ctx, "x1"), Scalar::variable(ctx, "x2"),
                                 Scalar::variable(ctx, "x3")};
    auto power_sum = [&](int k) {
        Scalar acc = Scalar::zero(ctx);
        for (const auto& x : xs) acc += x.pow(k);
        return acc;
    };

    // coefficient of t_lambda on both sides of
    //   exp((1/alpha) sum t_k p_k(x)/k) = sum (h/h') P_lambda(t) P~_lambda(x)
    for (int d = 1; d <= 4; ++d) {
        for (const auto& la : partitions_of(d)) {
            Scalar lhs = Scalar::one(ctx);
            for (int i = 1; i <= la.length(); ++i) lhs *= power_sum(la.part(i));
            lhs *= alpha.pow(-la.length()) * (Rational(1) / z_of(la));

            Scalar rhs = Scalar::zero(ctx);
            for (const auto& mu : partitions_of(d)) {
                const SymmetricFunction jack_mu = cache.jack(mu, alpha);
                const Scalar t_coeff = jack_mu.coeff(la);
                if (t_coeff.is_zero()) continue;
                auto [h, hp] = hook_products(mu, alpha);
                const Scalar x_value = specialize(jack_mu, {xs});
                if (mu.length() > 3) {
                    CHECK(x_value.is_zero());
                    continue;
                }
                rhs += (h / hp) * t_coeff * x_value;
            }
            CHECK(lhs == rhs);
        }
    }
}
