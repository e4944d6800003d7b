#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "betajack/scalar.hpp"
#include "betajack/series.hpp"

using namespace betajack;

namespace {

// deterministic generator for the property checks
struct Lcg {
    unsigned long state = 0x9E3779B97F4A7C15ull;
    long next(long lo, long hi) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return lo + static_cast<long>((state >> 33) % static_cast<unsigned long>(hi - lo + 1));
    }
};

Scalar random_fraction(const Ctx& ctx, Lcg& gen) {
    const auto n = ctx->size();
    MultiPoly num(ctx), den(ctx);
    for (int t = 0; t < 3; ++t) {
        ExpVec e(n, 0);
        for (std::size_t v = 0; v < n; ++v) e[v] = static_cast<std::int32_t>(gen.next(0, 2));
        num.add_term(e, Rational(gen.next(-4, 4)));
        ExpVec f(n, 0);
        for (std::size_t v = 0; v < n; ++v) f[v] = static_cast<std::int32_t>(gen.next(0, 2));
        den.add_term(f, Rational(gen.next(-4, 4)));
    }
    den.add_term(ExpVec(n, 0), Rational(1));  // keeps den nonzero
    if (num.is_zero()) num = MultiPoly::constant(ctx, Rational(1));
    return Scalar::from_fraction(std::move(num), std::move(den));
}

}  // namespace

TEST_CASE("rational field operations") {
    Ctx ctx = make_context({"n", "beta", "c"});
    const Scalar half(ctx, rat(1, 2));
    const Scalar third(ctx, rat(1, 3));
    CHECK((half + third).as_rational() == rat(5, 6));

    const Scalar n = Scalar::variable(ctx, "n");
    const Scalar one = Scalar::one(ctx);
    const Scalar reduced = (n * n - one) / (n - one);
    CHECK(reduced == n + one);
    CHECK(reduced.is_polynomial());

    // inverse of (c - 2/beta) = beta/(beta c - 2)
    const Scalar beta = Scalar::variable(ctx, "beta");
    const Scalar c = Scalar::variable(ctx, "c");
    const Scalar inv = (c - Scalar(ctx, Rational(2)) / beta).inverse();
    CHECK(inv == beta / (beta * c - Scalar(ctx, Rational(2))));

    CHECK_THROWS_AS(one / Scalar::zero(ctx), DivisionByZero);
    CHECK_THROWS_AS(Scalar::zero(ctx).inverse(), DivisionByZero);
}

TEST_CASE("canonical representations") {
    Ctx ctx = make_context({"n"});
    const Scalar n = Scalar::variable(ctx, "n");
    const Scalar one = Scalar::one(ctx);
    const Scalar a = (n + one) / (n + Scalar(ctx, Rational(2)));
    const Scalar b = ((n + one) * (n - one)) / ((n + Scalar(ctx, Rational(2))) * (n - one));
    CHECK(a == b);
    CHECK(a.num() == b.num());
    CHECK(a.den() == b.den());

    // scaling numerator and denominator by -3/7 must not change the form
    const Scalar c = Scalar::from_fraction(a.num().mul_monomial(ExpVec{0}, rat(-3, 7)),
                                           a.den().mul_monomial(ExpVec{0}, rat(-3, 7)));
    CHECK(c.num() == a.num());
    CHECK(c.den() == a.den());
}

TEST_CASE("field axioms on random fractions") {
    Ctx ctx = make_context({"a", "b"});
    Lcg gen;
    for (int trial = 0; trial < 15; ++trial) {
        const Scalar f = random_fraction(ctx, gen);
        const Scalar g = random_fraction(ctx, gen);
        const Scalar h = random_fraction(ctx, gen);
        CHECK((f + g) + h == f + (g + h));
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK(f + g == g + f);
        if (!f.is_zero()) CHECK(f * f.inverse() == Scalar::one(ctx));
        CHECK(f - f == Scalar::zero(ctx));
    }
}

TEST_CASE("sum_scalars matches repeated addition") {
    Ctx ctx = make_context({"a", "b"});
    Lcg gen;
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<Scalar> terms;
        Scalar folded = Scalar::zero(ctx);
        for (int i = 0; i < 6; ++i) {
            terms.push_back(random_fraction(ctx, gen));
            folded += terms.back();
        }
        CHECK(sum_scalars(ctx, terms) == folded);
    }
}

TEST_CASE("laurent expansion at infinity") {
    Ctx ctx = make_context({"n"});
    const Scalar n = Scalar::variable(ctx, "n");
    const Scalar one = Scalar::one(ctx);
    const std::size_t var = ctx->var("n");

    SUBCASE("(n+1)/n") {
        const auto s = laurent_expand_at_infinity((n + one) / n, var, 2);
        CHECK(s.coeff(0) == one);
        CHECK(s.coeff(1) == one);
        CHECK(s.coeff(2).is_zero());
    }

    SUBCASE("1/(n+2) against the geometric series oracle") {
        // 1/(n+2) = n^-1 sum_k (-2/n)^k, so a_0 = 0 and a_k = (-2)^(k-1)
        const auto s = laurent_expand_at_infinity(one / (n + Scalar(ctx, Rational(2))), var, 6);
        CHECK(s.coeff(0).is_zero());
        Rational expected(1);
        for (int k = 1; k <= 6; ++k) {
            CHECK(s.coeff(k).as_rational() == expected);
            expected *= -2;
        }
    }

    SUBCASE("n^2/(n^2-1) against the geometric series oracle") {
        // = 1/(1 - n^-2) = sum_k n^-2k
        const auto s = laurent_expand_at_infinity(n * n / (n * n - one), var, 4);
        for (int r = 0; r <= 4; ++r)
            CHECK(s.coeff(r).as_rational() == Rational(r % 2 == 0 ? 1 : 0));
    }

    SUBCASE("unbounded input is rejected with its excess degree") {
        try {
            laurent_expand_at_infinity((n * n * n + one) / (n + one), var, 2);
            FAIL("expected UnboundedAtInfinity");
        } catch (const UnboundedAtInfinity& e) {
            CHECK(e.excess == 2);
        }
    }
}

TEST_CASE("laurent expansion is multiplicative") {
    Ctx ctx = make_context({"n"});
    const Scalar n = Scalar::variable(ctx, "n");
    const std::size_t var = ctx->var("n");
    Lcg gen;
    for (int trial = 0; trial < 8; ++trial) {
        // bounded fractions: numerator degree <= denominator degree
        auto bounded = [&]() {
            MultiPoly num(ctx), den(ctx);
            num.add_term(ExpVec{0}, Rational(gen.next(-3, 3)));
            num.add_term(ExpVec{1}, Rational(gen.next(-3, 3)));
            den.add_term(ExpVec{0}, Rational(gen.next(-3, 3)));
            den.add_term(ExpVec{1}, Rational(1));
            if (num.is_zero()) num = MultiPoly::constant(ctx, Rational(1));
            return Scalar::from_fraction(std::move(num), std::move(den));
        };
        const Scalar f = bounded();
        const Scalar g = bounded();
        const auto lhs = laurent_expand_at_infinity(f * g, var, 5);
        const auto rhs =
            laurent_expand_at_infinity(f, var, 5) * laurent_expand_at_infinity(g, var, 5);
        CHECK(lhs == rhs);
    }
    (void)n;
}

TEST_CASE("truncation agrees with evaluation at 10^6 within the tail bound") {
    Ctx ctx = make_context({"n"});
    const std::size_t var = ctx->var("n");
    Lcg gen;
    const Rational big(1000000);
    for (int trial = 0; trial < 5; ++trial) {
        MultiPoly num(ctx), den(ctx);
        num.add_term(ExpVec{0}, Rational(gen.next(-5, 5)));
        num.add_term(ExpVec{1}, Rational(gen.next(-5, 5)));
        num.add_term(ExpVec{2}, Rational(gen.next(1, 5)));
        den.add_term(ExpVec{0}, Rational(gen.next(-5, 5)));
        den.add_term(ExpVec{1}, Rational(gen.next(-5, 5)));
        den.add_term(ExpVec{2}, Rational(1));
        const Scalar f = Scalar::from_fraction(num, den);

        const int R = 4;
        const auto series = laurent_expand_at_infinity(f, var, R + 1);
        const Scalar exact = f.substitute({Scalar(ctx, big)}, ctx);
        Rational truncated(0), power(1);
        for (int r = 0; r <= R; ++r) {
            truncated += series.coeff(r).as_rational() / power;
            power *= big;
        }
        Rational diff = exact.as_rational() - truncated;
        if (diff < 0) diff = -diff;
        Rational head = series.coeff(R + 1).as_rational();
        if (head < 0) head = -head;
        // |f(10^6) - truncation| <= (|a_{R+1}| + 1) * 10^{-6(R+1)}
        CHECK(diff <= (head + 1) / power);
    }
}

TEST_CASE("scaled limits at infinity") {
    Ctx ctx = make_context({"beta", "n", "c", "d"});
    const Scalar beta = Scalar::variable(ctx, "beta");
    const Scalar n = Scalar::variable(ctx, "n");
    const Scalar c = Scalar::variable(ctx, "c");
    const Scalar d = Scalar::variable(ctx, "d");
    const Scalar one = Scalar::one(ctx);
    const std::size_t dv = ctx->var("d");

    CHECK(limit_scaled_at_infinity((d * d * Rational(3) + n * d) / (d - one), dv, 1) ==
          Scalar(ctx, Rational(3)));
    CHECK(limit_scaled_at_infinity(one / (d + one), dv, 0).is_zero());

    // the Laguerre-limit shape: (beta d/2) n(c+n-1)/(c+d+2n-2) -> (beta/2) n(c+n-1)
    const Scalar f = (beta * d * rat(1, 2)) * n * (c + n - one) /
                     (c + d + n * Rational(2) - Scalar(ctx, Rational(2)));
    CHECK(limit_scaled_at_infinity(f, dv, 0) == beta * rat(1, 2) * n * (c + n - one));

    try {
        limit_scaled_at_infinity(d * d / (d + one), dv, 0);
        FAIL("expected UnboundedAtInfinity");
    } catch (const UnboundedAtInfinity& e) {
        CHECK(e.excess == 1);
    }
}

TEST_CASE("substitution and context embedding") {
    Ctx actx = make_context({"alpha"});
    Ctx bctx = make_context({"b", "u1"});
    const Scalar alpha = Scalar::variable(actx, "alpha");
    const Scalar f = Scalar::one(actx) / (alpha + Scalar::one(actx));
    const Scalar b = Scalar::variable(bctx, "b");
    const Scalar g = f.substitute({b + Scalar::one(bctx)}, bctx);
    CHECK(g == Scalar::one(bctx) / (b + Scalar(bctx, Rational(2))));

    Ctx wide = make_context({"alpha", "x1"});
    const Scalar lifted = f.extend_to(wide);
    CHECK(lifted.restrict_to(actx) == f);
    CHECK_THROWS_AS(Scalar::variable(wide, "x1").restrict_to(actx), Error);
}

TEST_CASE("rendering and parsing round-trip") {
    Ctx ctx = make_context({"n", "c"});
    const Scalar n = Scalar::variable(ctx, "n");
    const Scalar c = Scalar::variable(ctx, "c");
    const Scalar one = Scalar::one(ctx);

    const std::vector<Scalar> values{
        Scalar::zero(ctx),
        Scalar(ctx, rat(-7, 3)),
        n * n - c * Rational(2) + one,
        (n + one) / (n * c - Scalar(ctx, Rational(5))),
        (n * c * c - one) / ((n + one) * (c + Scalar(ctx, Rational(2)))),
    };
    for (const auto& v : values) CHECK(parse_scalar(ctx, v.str()) == v);

    CHECK(parse_scalar(ctx, "(n^2-1)/(n-1)") == n + one);
    CHECK(parse_scalar(ctx, "2^-1") == Scalar(ctx, rat(1, 2)));
    CHECK_THROWS_AS(parse_scalar(ctx, "n +"), ParseError);
    CHECK_THROWS_AS(parse_scalar(ctx, "q + 1"), UnknownParameter);
    CHECK_THROWS_AS(parse_scalar(ctx, "1/(n-n)"), DivisionByZero);
}

TEST_CASE("context mixing is rejected") {
    Ctx a = make_context({"x"});
    Ctx b = make_context({"y"});
    CHECK_THROWS_AS(Scalar::variable(a, "x") + Scalar::variable(b, "y"), ContextMismatch);
}
