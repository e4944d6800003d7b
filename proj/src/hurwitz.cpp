#include "betajack/hurwitz.hpp"

#include "betajack/parallel.hpp"

namespace betajack {

TruncatedSeries content_weight_series(const WeightGF& G, const Partition& mu,
                                      const Scalar& alpha, int order) {
    const Ctx& ctx = G.ctx;
    require_same_ctx(ctx, alpha.ctx());
    TruncatedSeries acc = TruncatedSeries::constant(ctx, "eps", order, Scalar::one(ctx));
    for (const Cell& cell : cells_of(mu)) {
        const Scalar content = cell_content(cell, alpha);
        for (int i = 0; i < G.L; ++i) {
            TruncatedSeries factor(ctx, "eps", order);
            factor.set_coeff(0, Scalar::one(ctx));
            if (order >= 1) factor.set_coeff(1, G.u[static_cast<std::size_t>(i)] * content);
            acc = acc * factor;
        }
        for (int i = 0; i < G.M; ++i) {
            const Scalar uc = G.u[static_cast<std::size_t>(G.L + i)] * content;
            TruncatedSeries factor(ctx, "eps", order);
            Scalar power = Scalar::one(ctx);
            factor.set_coeff(0, power);
            for (int r = 1; r <= order; ++r) {
                power *= uc;
                factor.set_coeff(r, power);
            }
            acc = acc * factor;
        }
    }
    return acc;
}

const Scalar& HurwitzTable::at(const Partition& lambda, int r) const {
    auto it = entries.find({lambda, r});
    if (it == entries.end())
        throw Error("table has no entry (" + lambda.str() + "; " + std::to_string(r) + ")");
    return it->second;
}

HurwitzTable hurwitz_table(const WeightGF& G, const Scalar& b, int N, int R,
                           JackCache& cache, int threads) {
    const Ctx& ctx = G.ctx;
    require_same_ctx(ctx, b.ctx());
    if (N < 0 || R < 0) throw Error("table bounds must be nonnegative");
    const Scalar alpha = b + Scalar::one(ctx);

    HurwitzTable table{G, b, N, R, "jack-expansion", {}};
    for (int k = 0; k <= N; ++k) {
        const auto mus = partitions_of(k);
        struct Row {
            SymmetricFunction jack;
            Scalar inv_hook;
            TruncatedSeries series;
        };
        std::vector<Row> rows(mus.size(),
                              Row{SymmetricFunction(ctx), Scalar(ctx),
                                  TruncatedSeries(ctx, "eps", R)});
        parallel_for(mus.size(), threads, [&](std::size_t i) {
            rows[i].jack = cache.jack(mus[i], alpha);
            rows[i].inv_hook = hook_products(mus[i], alpha).second.inverse();
            rows[i].series = content_weight_series(G, mus[i], alpha, R);
        });
        for (const auto& lambda : mus) {
            std::vector<Scalar> weights;
            std::vector<const Row*> active;
            for (const Row& row : rows) {
                const Scalar c = row.jack.coeff(lambda);
                if (c.is_zero()) continue;
                weights.push_back(c * row.inv_hook);
                active.push_back(&row);
            }
            for (int r = 0; r <= R; ++r) {
                std::vector<Scalar> terms;
                terms.reserve(active.size());
                for (std::size_t i = 0; i < active.size(); ++i)
                    terms.push_back(weights[i] * active[i]->series.coeff(r));
                table.entries.emplace(std::make_pair(lambda, r), sum_scalars(ctx, terms));
            }
        }
    }
    return table;
}

}  // namespace betajack
