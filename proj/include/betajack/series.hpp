#pragma once

#include <string>
#include <vector>

#include "betajack/scalar.hpp"

namespace betajack {

// Formal series truncated at a fixed order R: coefficients 0..R in one
// expansion variable (a tag such as "eps" or "1/n"; not a context parameter).
class TruncatedSeries {
public:
    TruncatedSeries(Ctx ctx, std::string variable, int order)
        : variable_(std::move(variable)),
          coeffs_(static_cast<std::size_t>(order) + 1, Scalar::zero(ctx)) {
        if (order < 0) throw Error("series order must be nonnegative");
    }

    static TruncatedSeries constant(Ctx ctx, std::string variable, int order, Scalar value) {
        TruncatedSeries s(std::move(ctx), std::move(variable), order);
        s.coeffs_[0] = std::move(value);
        return s;
    }

    const Ctx& ctx() const { return coeffs_.front().ctx(); }
    const std::string& variable() const { return variable_; }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Scalar& coeff(int r) const { return coeffs_.at(static_cast<std::size_t>(r)); }
    void set_coeff(int r, Scalar value) {
        coeffs_.at(static_cast<std::size_t>(r)) = std::move(value);
    }

    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
        return a += b;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

    TruncatedSeries& scale(const Scalar& c);

    bool operator==(const TruncatedSeries& rhs) const {
        return variable_ == rhs.variable_ && coeffs_ == rhs.coeffs_;
    }

    std::string str() const;

private:
    std::string variable_;
    std::vector<Scalar> coeffs_;
};

// Expansion f = sum_{r=0..R} a_r var^-r + O(var^-(R-1)) as var -> infinity.
// Throws UnboundedAtInfinity when deg_num exceeds deg_den in var.
TruncatedSeries laurent_expand_at_infinity(const Scalar& f, std::size_t var, int order);

// lim var->infinity var^-k f; 0 when the degree gap is below k, throws
// UnboundedAtInfinity (with the excess) when it is above.
Scalar limit_scaled_at_infinity(const Scalar& f, std::size_t var, long k);

}  // namespace betajack
