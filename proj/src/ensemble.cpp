#include "betajack/ensemble.hpp"

namespace betajack {

namespace {

Scalar two_over_beta(const Scalar& beta) {
    return Scalar(beta.ctx(), Rational(2)) / beta;
}

Scalar pochhammer(const Scalar& z, int m) {
    Scalar out = Scalar::one(z.ctx());
    for (int j = 0; j < m; ++j) out *= z + Scalar(z.ctx(), Rational(j));
    return out;
}

// prod_{1<=i<j<=n} ((beta/2)(j-i+1))_{li-lj} / ((beta/2)(j-i))_{li-lj}
Scalar interaction_pochhammer_product(const Partition& lambda, int n, const Scalar& beta) {
    const Ctx& ctx = beta.ctx();
    const Scalar half_beta = beta * Rational(1, 2);
    Scalar out = Scalar::one(ctx);
    for (int i = 1; i < n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const int m = lambda.part(i) - lambda.part(j);
            if (m == 0) continue;
            out *= pochhammer(half_beta * Rational(j - i + 1), m);
            out /= pochhammer(half_beta * Rational(j - i), m);
        }
    }
    return out;
}

}  // namespace

Scalar f_coefficient(const Partition& lambda, Sign sign, const JacobiParams& p) {
    const Ctx& ctx = p.n.ctx();
    require_same_ctx(ctx, p.beta.ctx());
    require_same_ctx(ctx, p.c.ctx());
    require_same_ctx(ctx, p.d.ctx());
    const Scalar alpha = two_over_beta(p.beta);
    const Scalar one = Scalar::one(ctx);
    const Scalar two = Scalar(ctx, Rational(2));

    Scalar out = one;
    for (const Cell& cell : cells_of(lambda)) {
        const Scalar cont = cell_content(cell, alpha);
        Scalar num, den;
        if (sign == Sign::plus) {
            num = (p.n + cont) * (p.c - one + p.n + cont);
            den = p.c + p.d - two + p.n * Rational(2) + cont;
        } else {
            num = (p.n + cont) * (p.c + p.d + p.n - one - alpha - cont);
            den = p.c - alpha - cont;
        }
        if (den.is_zero())
            throw PoleAtParameters("f coefficient of " + lambda.str() + " has a pole at cell (" +
                                   std::to_string(cell.row) + "," + std::to_string(cell.col) +
                                   ")");
        out *= num / den;
    }
    return out;
}

Scalar f_pochhammer_form(const Partition& lambda, Sign sign, int n, const Scalar& beta,
                         const Scalar& c, const Scalar& d) {
    if (lambda.length() > n) throw LengthExceedsN(lambda.length(), n);
    const Ctx& ctx = beta.ctx();
    require_same_ctx(ctx, c.ctx());
    require_same_ctx(ctx, d.ctx());
    const Scalar alpha = two_over_beta(beta);
    const Scalar half_beta = beta * Rational(1, 2);

    Scalar out = hook_products(lambda, alpha).first;
    out *= interaction_pochhammer_product(lambda, n, beta);
    try {
        for (int i = 1; i <= n; ++i) {
            const int li = lambda.part(i);
            if (li == 0) break;
            if (sign == Sign::plus) {
                out *= pochhammer(half_beta * (c + Scalar(ctx, Rational(n - i))), li);
                out /= pochhammer(half_beta * (c + d + Scalar(ctx, Rational(2 * n - i - 1))), li);
            } else {
                out *= pochhammer(
                    half_beta * (c + d + Scalar(ctx, Rational(n + i - 2))) - Scalar(ctx, Rational(li)),
                    li);
                out /= pochhammer(
                    half_beta * (c + Scalar(ctx, Rational(i - 1))) - Scalar(ctx, Rational(li)), li);
            }
        }
    } catch (const DivisionByZero&) {
        throw PoleAtParameters("Pochhammer form of f_" + lambda.str() + " has a vanishing factor");
    }
    return out;
}

bool appendix_identity_check(const Partition& lambda, int n, const Scalar& beta) {
    if (lambda.length() > n) throw LengthExceedsN(lambda.length(), n);
    const Scalar alpha = two_over_beta(beta);
    const Ctx& ctx = beta.ctx();

    const Scalar lhs = interaction_pochhammer_product(lambda, n, beta);

    Scalar rhs = Scalar::one(ctx);
    const Partition conj = lambda.conjugate();
    for (const Cell& cell : cells_of(lambda)) {
        const int arm = lambda.part(cell.row) - cell.col;
        const int leg = conj.part(cell.col) - cell.row;
        rhs *= (Scalar(ctx, Rational(n)) + cell_content(cell, alpha)) /
               (alpha * Rational(arm) + Scalar(ctx, Rational(leg + 1)));
    }
    return lhs == rhs;
}

Scalar correlator(JackCache& cache, const Partition& lambda, Sign sign, const JacobiParams& p) {
    const Ctx& ctx = p.n.ctx();
    if (lambda.empty()) return Scalar::one(ctx);
    const Scalar alpha = two_over_beta(p.beta);

    if (sign == Sign::minus && p.n.is_rational() && p.beta.is_rational() &&
        p.c.is_rational() && p.d.is_rational()) {
        const Rational bound = alpha.as_rational() * Rational(lambda.part(1));
        if (p.c.as_rational() <= bound)
            throw DomainError("negative correlator needs c > (2/beta)*lambda_1");
    }

    std::vector<Scalar> terms;
    for (const auto& mu : partitions_of(lambda.weight())) {
        const SymmetricFunction jack = cache.jack(mu, alpha);
        const Scalar coeff = jack.coeff(lambda);
        if (coeff.is_zero()) continue;
        const Scalar f = f_coefficient(mu, sign, p);
        if (f.is_zero()) continue;
        terms.push_back(f * coeff / hook_products(mu, alpha).second);
    }
    return sum_scalars(ctx, terms) * alpha.pow(lambda.length()) * z_of(lambda);
}

Scalar laguerre_correlator(JackCache& cache, const Partition& lambda, Sign sign,
                           const Scalar& n, const Scalar& beta, const Scalar& c) {
    const Ctx& ctx = n.ctx();
    require_same_ctx(ctx, beta.ctx());
    require_same_ctx(ctx, c.ctx());
    if (lambda.empty()) return Scalar::one(ctx);

    std::vector<std::string> names = ctx->names();
    const std::string aux = "d_aux";
    if (ctx->index_of(aux)) throw Error("context already contains " + aux);
    names.push_back(aux);
    Ctx ext = make_context(std::move(names));

    JacobiParams p{n.extend_to(ext), beta.extend_to(ext), c.extend_to(ext),
                   Scalar::variable(ext, aux)};
    const Scalar jac = correlator(cache, lambda, sign, p);
    const long k = lambda.weight();
    const Scalar half_beta_pow = (p.beta * Rational(1, 2)).pow(sign == Sign::plus ? k : -k);
    const Scalar lim = limit_scaled_at_infinity(jac, ext->var(aux), sign == Sign::plus ? -k : k);
    return (half_beta_pow * lim).restrict_to(ctx);
}

ExpansionReport verify_expansion(JackCache& cache, const Partition& lambda, EnsembleKind kind,
                                 Sign sign, const std::optional<Rational>& beta, int order) {
    std::vector<std::string> names{"n"};
    if (!beta) names.push_back("beta");
    names.push_back("gamma");
    names.push_back("delta");
    Ctx ctx = make_context(std::move(names));

    const Scalar n = Scalar::variable(ctx, "n");
    const Scalar beta_s = beta ? Scalar(ctx, *beta) : Scalar::variable(ctx, "beta");
    const Scalar gamma = Scalar::variable(ctx, "gamma");
    const Scalar delta = Scalar::variable(ctx, "delta");
    const Scalar one = Scalar::one(ctx);
    const Scalar half_beta = beta_s * Rational(1, 2);
    const Scalar alpha = Scalar(ctx, Rational(2)) / beta_s;  // = 2/beta = b + 1
    const long k = lambda.weight();
    const int len = lambda.length();

    // Substitutions and prefactors as stated by the two theorems.
    Scalar c = (sign == Sign::plus) ? n * (gamma - one) + one : n * gamma + alpha;
    Scalar d = n * (delta - one) + one;

    Scalar prefactor = half_beta.pow(len) * (Rational(1) / z_of(lambda));
    WeightKind wk{};
    Scalar lhs_correlator(ctx);
    if (kind == EnsembleKind::jacobi) {
        wk = (sign == Sign::plus) ? WeightKind::jacobi_plus : WeightKind::jacobi_minus;
        prefactor *= (sign == Sign::plus ? (gamma + delta) / (gamma * n)
                                         : gamma / ((gamma + delta) * n))
                         .pow(k);
        lhs_correlator = correlator(cache, lambda, sign, JacobiParams{n, beta_s, c, d});
    } else {
        wk = (sign == Sign::plus) ? WeightKind::laguerre_plus : WeightKind::laguerre_minus;
        if (sign == Sign::plus)
            prefactor *= half_beta.pow(-k) * (gamma * n * n).pow(-k);
        else
            prefactor *= half_beta.pow(k) * gamma.pow(k);
        lhs_correlator = laguerre_correlator(cache, lambda, sign, n, beta_s, c);
    }

    const Scalar lhs = prefactor * lhs_correlator;
    const TruncatedSeries series = laurent_expand_at_infinity(lhs, ctx->var("n"), order);

    const WeightGF G = make_weight(wk, gamma, delta);
    const Scalar b = alpha - one;
    const HurwitzTable table = hurwitz_table(G, b, lambda.weight(), order, cache);

    ExpansionReport report;
    report.theorem = std::string(kind == EnsembleKind::jacobi ? "jacobi" : "laguerre") +
                     (sign == Sign::plus ? "+" : "-");
    report.lambda = lambda;
    report.beta_text = beta ? rat_str(*beta) : "symbolic";
    for (int r = 0; r <= order; ++r) {
        ExpansionOrderRow row;
        row.r = r;
        row.lhs = series.coeff(r);
        row.rhs = table.at(lambda, r);
        row.equal = (row.lhs == row.rhs);
        if (!row.equal && report.first_mismatch < 0) report.first_mismatch = r;
        report.pass = report.pass && row.equal;
        report.orders.push_back(std::move(row));
    }
    return report;
}

}  // namespace betajack
