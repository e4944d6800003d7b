#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "betajack/partition.hpp"
#include "betajack/scalar.hpp"

namespace betajack {

// Element of the ring of symmetric functions written in the power-sum basis:
// sum of coeff * p_lambda. Coefficients are exact scalars of one context.
class SymmetricFunction {
public:
    explicit SymmetricFunction(Ctx ctx) : ctx_(std::move(ctx)) {}

    static SymmetricFunction zero(Ctx ctx) { return SymmetricFunction(std::move(ctx)); }
    static SymmetricFunction one(Ctx ctx);
    static SymmetricFunction p(Ctx ctx, const Partition& lambda);

    const Ctx& ctx() const { return ctx_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Partition, Scalar>& terms() const { return terms_; }

    Scalar coeff(const Partition& lambda) const;
    void add_term(const Partition& lambda, const Scalar& c);

    SymmetricFunction& operator+=(const SymmetricFunction& rhs);
    SymmetricFunction& operator-=(const SymmetricFunction& rhs);
    friend SymmetricFunction operator+(SymmetricFunction a, const SymmetricFunction& b) {
        return a += b;
    }
    friend SymmetricFunction operator-(SymmetricFunction a, const SymmetricFunction& b) {
        return a -= b;
    }
    // p-basis product: p_lambda * p_mu = p_{lambda union mu}.
    friend SymmetricFunction operator*(const SymmetricFunction& a, const SymmetricFunction& b);

    SymmetricFunction& scale(const Scalar& c);

    bool operator==(const SymmetricFunction& rhs) const { return terms_ == rhs.terms_; }

    std::string str() const;

private:
    Ctx ctx_;
    std::map<Partition, Scalar> terms_;
};

// <p_lambda, p_mu>_alpha = delta * z_lambda * alpha^len(lambda), extended
// bilinearly.
Scalar hall_inner(const SymmetricFunction& f, const SymmetricFunction& g, const Scalar& alpha);

// Expansion of the monomial symmetric function m_mu in the power-sum basis,
// with rational coefficients lifted into ctx.
SymmetricFunction monomial_to_powersum(const Ctx& ctx, const Partition& mu);

// Inverse direction: coefficients of f on the monomial basis.
std::map<Partition, Scalar> to_monomial_basis(const SymmetricFunction& f);

// Power sums evaluated at finitely many exact values x_1..x_n.
struct FiniteSpecialization {
    std::vector<Scalar> values;
};

Scalar specialize(const SymmetricFunction& f, const FiniteSpecialization& s);

// Substitute p_1 := 1, p_k := 0 (k >= 2).
Scalar exponential_specialization(const SymmetricFunction& f);

// Jack functions P_lambda^(alpha), computed from the defining properties
// (Hall orthogonality + monomial triangularity + unit leading coefficient)
// by Gram-Schmidt over dominance order, with symbolic alpha. Results are
// cached per partition and specialized by substitution on request.
class JackCache {
public:
    JackCache();

    const Ctx& alpha_ctx() const { return alpha_ctx_; }

    // P_lambda with symbolic alpha (context {"alpha"}).
    std::shared_ptr<const SymmetricFunction> jack_symbolic(const Partition& lambda);

    // P_lambda with alpha replaced by the given scalar, in alpha's context.
    // Throws SingularAlpha for numeric alpha where the defining system
    // degenerates (some hook product of that degree vanishes).
    SymmetricFunction jack(const Partition& lambda, const Scalar& alpha);

    // Direct recomputation at the given alpha from the defining properties;
    // used as a cross-check of the substitution path.
    SymmetricFunction jack_direct(const Partition& lambda, const Scalar& alpha);

private:
    SymmetricFunction gram_schmidt(const Partition& lambda, const Scalar& alpha,
                                   const std::map<Partition, SymmetricFunction>& lower) const;
    void check_numeric_alpha(int degree, const Scalar& alpha) const;

    Ctx alpha_ctx_;
    std::mutex mu_;
    std::map<Partition, std::shared_ptr<const SymmetricFunction>> jacks_;
};

}  // namespace betajack
