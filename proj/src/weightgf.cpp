#include "betajack/weightgf.hpp"

namespace betajack {

WeightGF custom_weight(Ctx ctx, int L, int M, std::vector<Scalar> u) {
    if (L < 0 || M < 0 || u.size() != static_cast<std::size_t>(L + M))
        throw Error("weight: expected L+M parameters");
    for (const auto& s : u) require_same_ctx(s.ctx(), ctx);
    return WeightGF{std::move(ctx), L, M, std::move(u)};
}

WeightGF make_weight(WeightKind kind, const Scalar& gamma, const Scalar& delta) {
    const Ctx& ctx = gamma.ctx();
    if (gamma.is_zero()) throw ZeroDenominatorParam("gamma must be nonzero");
    const Scalar one = Scalar::one(ctx);
    switch (kind) {
        case WeightKind::jacobi_plus:
        case WeightKind::jacobi_minus: {
            require_same_ctx(ctx, delta.ctx());
            Scalar gpd = gamma + delta;
            if (gpd.is_zero()) throw ZeroDenominatorParam("gamma + delta must be nonzero");
            if (kind == WeightKind::jacobi_plus)
                return custom_weight(ctx, 2, 1, {one, gamma.inverse(), -gpd.inverse()});
            return custom_weight(ctx, 2, 1, {one, -gpd.inverse(), gamma.inverse()});
        }
        case WeightKind::laguerre_plus:
            return custom_weight(ctx, 2, 0, {one, gamma.inverse()});
        case WeightKind::laguerre_minus:
            return custom_weight(ctx, 1, 1, {one, gamma.inverse()});
    }
    throw Error("unknown weight kind");
}

}  // namespace betajack
