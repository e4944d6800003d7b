#include "betajack/series.hpp"

#include <sstream>

namespace betajack {

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
    if (variable_ != rhs.variable_ || order() != rhs.order())
        throw Error("series mismatch: " + variable_ + " vs " + rhs.variable_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.variable_ != b.variable_)
        throw Error("series mismatch: " + a.variable_ + " vs " + b.variable_);
    const int R = std::min(a.order(), b.order());
    TruncatedSeries out(a.ctx(), a.variable_, R);
    for (int i = 0; i <= R; ++i) {
        Scalar acc = Scalar::zero(a.ctx());
        for (int j = 0; j <= i; ++j) acc += a.coeff(j) * b.coeff(i - j);
        out.set_coeff(i, std::move(acc));
    }
    return out;
}

TruncatedSeries& TruncatedSeries::scale(const Scalar& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
}

std::string TruncatedSeries::str() const {
    std::ostringstream os;
    for (int r = 0; r <= order(); ++r) {
        if (r > 0) os << " + ";
        os << "(" << coeff(r).str() << ")*" << variable_ << "^" << r;
    }
    return os.str();
}

TruncatedSeries laurent_expand_at_infinity(const Scalar& f, std::size_t var, int order) {
    const Ctx& ctx = f.ctx();
    const std::string tag = "1/" + ctx->name(var);
    TruncatedSeries out(ctx, tag, order);
    if (f.is_zero()) return out;

    auto nc = f.num().coefficients_in(var);
    auto dc = f.den().coefficients_in(var);
    const int K = static_cast<int>(nc.size()) - 1;
    const int D = static_cast<int>(dc.size()) - 1;
    if (K > D) throw UnboundedAtInfinity(K - D);
    const int shift = D - K;

    // In u = 1/var: f = u^shift * N(u)/B(u) with B(0) = leading den coeff.
    auto num_at = [&](int j) {
        return (j <= K) ? Scalar::from_poly(nc[static_cast<std::size_t>(K - j)])
                        : Scalar::zero(ctx);
    };
    auto den_at = [&](int j) {
        return (j <= D) ? Scalar::from_poly(dc[static_cast<std::size_t>(D - j)])
                        : Scalar::zero(ctx);
    };
    const Scalar b0_inv = den_at(0).inverse();
    std::vector<Scalar> q;
    const int qlen = order - shift;
    for (int j = 0; j <= qlen; ++j) {
        Scalar acc = num_at(j);
        for (int i = 1; i <= j; ++i) acc -= den_at(i) * q[static_cast<std::size_t>(j - i)];
        q.push_back(acc * b0_inv);
    }
    for (int r = shift; r <= order; ++r) out.set_coeff(r, q[static_cast<std::size_t>(r - shift)]);
    return out;
}

Scalar limit_scaled_at_infinity(const Scalar& f, std::size_t var, long k) {
    if (f.is_zero()) return Scalar::zero(f.ctx());
    auto nc = f.num().coefficients_in(var);
    auto dc = f.den().coefficients_in(var);
    const long gap = static_cast<long>(nc.size()) - static_cast<long>(dc.size());
    if (gap > k) throw UnboundedAtInfinity(gap - k);
    if (gap < k) return Scalar::zero(f.ctx());
    return Scalar::from_poly(nc.back()) / Scalar::from_poly(dc.back());
}

}  // namespace betajack
