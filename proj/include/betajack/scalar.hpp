#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "betajack/multipoly.hpp"

namespace betajack {

// Element of the field of rational functions over Q in the parameters of one
// context. Always reduced: gcd(num, den) = 1 and den integer-primitive with
// positive leading coefficient, so equal values compare structurally.
class Scalar {
public:
    Scalar() = default;
    explicit Scalar(Ctx ctx)
        : num_(MultiPoly(ctx)), den_(MultiPoly::constant(ctx, Rational(1))) {}
    Scalar(Ctx ctx, const Rational& value)
        : num_(MultiPoly::constant(ctx, value)),
          den_(MultiPoly::constant(std::move(ctx), Rational(1))) {}

    static Scalar zero(Ctx ctx) { return Scalar(std::move(ctx)); }
    static Scalar one(Ctx ctx) { return Scalar(std::move(ctx), Rational(1)); }
    static Scalar of(Ctx ctx, long value) { return Scalar(std::move(ctx), Rational(value)); }
    static Scalar variable(Ctx ctx, std::size_t var);
    static Scalar variable(const Ctx& ctx, std::string_view name);
    static Scalar from_poly(MultiPoly p);
    static Scalar from_fraction(MultiPoly num, MultiPoly den);

    const Ctx& ctx() const { return num_.ctx(); }
    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_one() && num_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_rational() const { return den_.is_one() && num_.is_constant(); }
    Rational as_rational() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar& mul_rational(const Rational& c);
    Scalar inverse() const;
    Scalar pow(long e) const;

    bool operator==(const Scalar& rhs) const;
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

    // Evaluate with images[i] substituted for variable i; images live in the
    // target context.
    Scalar substitute(const std::vector<Scalar>& images, const Ctx& target) const;

    // Context embedding/projection for contexts sharing a name prefix.
    Scalar extend_to(const Ctx& wider) const;
    Scalar restrict_to(const Ctx& narrower) const;

    std::string str() const;

private:
    void reduce();

    MultiPoly num_, den_;
};

inline Scalar operator*(Scalar a, const Rational& c) { return a.mul_rational(c); }
inline Scalar operator*(const Rational& c, Scalar a) { return a.mul_rational(c); }

// Parses the rendered scalar grammar (and general +,-,*,/,^ expressions over
// integers and context parameter names).
Scalar parse_scalar(const Ctx& ctx, std::string_view text);

// Sum over a common denominator with a single final reduction; much cheaper
// than folding operator+ when many terms share denominator factors.
Scalar sum_scalars(const Ctx& ctx, const std::vector<Scalar>& terms);

}  // namespace betajack
