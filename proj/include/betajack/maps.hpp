#pragma once

#include <cstdint>

#include "betajack/hurwitz.hpp"

namespace betajack {

// Term key of the (p, z) polynomial ring with an edge-color multidegree:
// monomial p_{key.p} z_{key.z} g^{key.g}.
struct PZKey {
    Partition p;
    Partition z;
    std::vector<std::uint8_t> g;

    bool operator==(const PZKey& o) const { return p == o.p && z == o.z && g == o.g; }
    bool operator<(const PZKey& o) const {
        if (!(p == o.p)) return p < o.p;
        if (!(z == o.z)) return z < o.z;
        return g < o.g;
    }

    int g_total() const {
        int t = 0;
        for (auto x : g) t += x;
        return t;
    }
};

// Polynomial in p_i, z_i with coefficients rational in b, carrying the
// g-multidegree truncated at total degree g_cap. Grading deg p_i = deg z_i = i
// is preserved by the Lambda operator.
class PZPolynomial {
public:
    PZPolynomial(Ctx ctx, int g_count, int g_cap)
        : ctx_(std::move(ctx)), g_count_(g_count), g_cap_(g_cap) {}

    static PZPolynomial one(Ctx ctx, int g_count, int g_cap);

    const Ctx& ctx() const { return ctx_; }
    int g_count() const { return g_count_; }
    int g_cap() const { return g_cap_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<PZKey, Scalar>& terms() const { return terms_; }

    void add_term(const PZKey& key, const Scalar& c);
    PZPolynomial& operator+=(const PZPolynomial& rhs);

    bool pure_p() const;  // no z factors in any term

    bool operator==(const PZPolynomial& rhs) const { return terms_ == rhs.terms_; }

private:
    Ctx ctx_;
    int g_count_;
    int g_cap_;
    std::map<PZKey, Scalar> terms_;
};

// Lambda = (1+b) sum_{i,j>=1} i z_{i+j} d^2/dp_i dz_j
//        + sum_{i,j>=1} z_i p_j d/dz_{i+j}
//        + b sum_{i>=2} (i-1) z_i d/dz_i
PZPolynomial lambda_apply(const PZPolynomial& f, const Scalar& b);

// One vertex-attachment step: T |-> G(Lambda) (z_1/(1+b)) T restricted to
// z_i := p_i, with the denominator factors of G expanded as geometric series
// in Lambda truncated at total g-degree g_cap. T must be a pure p-polynomial.
PZPolynomial attach_vertex(const PZPolynomial& T, int L, int M, const Scalar& b);

// Hurwitz table from the vertex-attachment recursion (source
// "lambda-recursion"); entry-wise comparable with hurwitz_table.
HurwitzTable t_table(const WeightGF& G, const Scalar& b, int N, int R);

}  // namespace betajack
