#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "betajack/context.hpp"
#include "betajack/rational.hpp"

namespace betajack {

// Exponent vector; arity always equals the context size.
using ExpVec = std::vector<std::int32_t>;

// Sparse multivariate polynomial over Q in the parameters of one context.
// Terms are kept in ascending lexicographic order of the exponent vector
// (variable 0 most significant); no zero coefficient is ever stored.
class MultiPoly {
public:
    using TermMap = std::map<ExpVec, Rational>;

    MultiPoly() = default;
    explicit MultiPoly(Ctx ctx) : ctx_(std::move(ctx)) {}

    static MultiPoly constant(Ctx ctx, const Rational& value);
    static MultiPoly variable(Ctx ctx, std::size_t var, std::int32_t exp = 1);

    const Ctx& ctx() const { return ctx_; }
    std::size_t arity() const { return ctx_ ? ctx_->size() : 0; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    Rational constant_value() const;  // 0 for the zero polynomial

    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    // Leading term under the canonical lex order; polynomial must be nonzero.
    const std::pair<const ExpVec, Rational>& leading() const { return *terms_.rbegin(); }

    int degree(std::size_t var) const;  // -1 for the zero polynomial
    int total_degree() const;
    bool depends_on(std::size_t var) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
    friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
    friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);

    MultiPoly& mul_rational(const Rational& c);
    MultiPoly mul_monomial(const ExpVec& exps, const Rational& c) const;
    MultiPoly mul_var_power(std::size_t var, std::int32_t exp) const;
    MultiPoly pow(unsigned e) const;

    void add_term(const ExpVec& exps, const Rational& c);

    bool operator==(const MultiPoly& rhs) const;
    bool operator!=(const MultiPoly& rhs) const { return !(*this == rhs); }

    // Coefficients as polynomials free of `var`; index = power of var.
    // Empty vector for the zero polynomial.
    std::vector<MultiPoly> coefficients_in(std::size_t var) const;
    static MultiPoly from_coefficients_in(Ctx ctx, std::size_t var,
                                          const std::vector<MultiPoly>& coeffs);

    MultiPoly derivative(std::size_t var) const;

    // Substitute var := value, collapsing its exponents exactly.
    MultiPoly eval_var(std::size_t var, const Rational& value) const;

    // Exact division; nullopt when the division leaves a remainder.
    std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const;

    // *this == factor * primitive, where primitive has coprime integer
    // coefficients and positive leading coefficient. Zero gives (0, 0).
    std::pair<Rational, MultiPoly> primitive_decomposition() const;

    std::string str() const;

private:
    Ctx ctx_;
    TermMap terms_;
};

// Gcd over Q, canonicalized: integer-primitive with positive leading
// coefficient (1 for coprime inputs, g itself if f == 0 up to normalization).
MultiPoly poly_gcd(const MultiPoly& f, const MultiPoly& g);

}  // namespace betajack
