#include "betajack/cs_operator.hpp"

namespace betajack {

namespace {

MultiPoly embed_alpha_poly(const MultiPoly& p, const Ctx& big) {
    MultiPoly out(big);
    for (const auto& [e, c] : p.terms()) {
        ExpVec ne(big->size(), 0);
        ne[0] = e[0];
        out.add_term(ne, c);
    }
    return out;
}

MultiPoly power_sum_poly(const Ctx& big, int nvars, int k) {
    MultiPoly out(big);
    for (int i = 1; i <= nvars; ++i) {
        ExpVec e(big->size(), 0);
        e[static_cast<std::size_t>(i)] = k;
        out.add_term(e, Rational(1));
    }
    return out;
}

MultiPoly euler_derivative(const MultiPoly& f, std::size_t xi) {
    return f.derivative(xi).mul_var_power(xi, 1);
}

}  // namespace

CalogeroSutherlandResult cs_apply(JackCache& cache, const Partition& lambda, int nvars) {
    if (lambda.length() > nvars) throw LengthExceedsN(lambda.length(), nvars);

    std::vector<std::string> names{"alpha"};
    for (int i = 1; i <= nvars; ++i) names.push_back("x" + std::to_string(i));
    Ctx big = make_context(std::move(names));

    auto jack = cache.jack_symbolic(lambda);

    // Clear the alpha-rational denominators; scaling does not affect the
    // eigen-relation.
    MultiPoly denom_lcm = MultiPoly::constant(cache.alpha_ctx(), Rational(1));
    for (const auto& [mu, c] : jack->terms()) {
        MultiPoly g = poly_gcd(denom_lcm, c.den());
        denom_lcm = denom_lcm * (*c.den().divide_exact(g));
    }

    MultiPoly q(big);
    for (const auto& [mu, c] : jack->terms()) {
        MultiPoly coeff = c.num() * (*denom_lcm.divide_exact(c.den()));
        MultiPoly term = embed_alpha_poly(coeff, big);
        for (int part : mu.parts()) term = term * power_sum_poly(big, nvars, part);
        q += term;
    }

    // H(q)
    MultiPoly image(big);
    const MultiPoly alpha_poly = MultiPoly::variable(big, 0);
    for (int i = 1; i <= nvars; ++i) {
        const auto xi = static_cast<std::size_t>(i);
        MultiPoly d2 = euler_derivative(euler_derivative(q, xi), xi);
        d2 = d2 * alpha_poly;
        d2.mul_rational(Rational(1, 2));
        image += d2;
    }
    for (int i = 1; i <= nvars; ++i) {
        for (int j = i + 1; j <= nvars; ++j) {
            const auto xi = static_cast<std::size_t>(i);
            const auto xj = static_cast<std::size_t>(j);
            MultiPoly num = (MultiPoly::variable(big, xi) + MultiPoly::variable(big, xj)) *
                            (euler_derivative(q, xi) - euler_derivative(q, xj));
            MultiPoly den = MultiPoly::variable(big, xi) - MultiPoly::variable(big, xj);
            auto quot = num.divide_exact(den);
            if (!quot)
                throw NotEigenvector("cross term (x_i+x_j)(D_i-D_j) not divisible by x_i-x_j");
            quot->mul_rational(Rational(1, 2));
            image += *quot;
        }
    }

    MultiPoly eig(big);
    for (int i = 1; i <= lambda.length(); ++i) {
        const long li = lambda.part(i);
        MultiPoly t = alpha_poly;
        t.mul_rational(rat(li * li, 2));
        eig += t;
        eig += MultiPoly::constant(big, rat((nvars + 1 - 2 * i) * li, 2));
    }

    if (image != eig * q)
        throw NotEigenvector("CS image of P_" + lambda.str() + " is not eigen at n = " +
                             std::to_string(nvars));

    return {std::move(q), std::move(image), Scalar::from_poly(std::move(eig))};
}

bool verify_inverse_identity(JackCache& cache, const Partition& lambda, int nvars,
                             const std::vector<Rational>& sample) {
    if (lambda.length() > nvars) throw LengthExceedsN(lambda.length(), nvars);
    if (static_cast<int>(sample.size()) != nvars)
        throw SizeMismatch("sample size must equal the variable count");
    for (const auto& x : sample)
        if (x == 0) throw ZeroSamplePoint();

    const Ctx& ctx = cache.alpha_ctx();
    auto p_lambda = cache.jack_symbolic(lambda);
    auto p_hat = cache.jack_symbolic(hat_partition(lambda, nvars));

    FiniteSpecialization direct, inverted;
    Scalar prod = Scalar::one(ctx);
    for (const auto& x : sample) {
        Scalar xs(ctx, x);
        direct.values.push_back(xs);
        inverted.values.push_back(xs.inverse());
        prod *= xs;
    }

    Scalar lhs = specialize(*p_lambda, inverted);
    Scalar rhs = prod.pow(-lambda.part(1)) * specialize(*p_hat, direct);
    return lhs == rhs;
}

}  // namespace betajack
