#pragma once

#include <optional>

#include "betajack/hurwitz.hpp"
#include "betajack/series.hpp"
#include "betajack/symfun.hpp"

namespace betajack {

enum class Sign { plus, minus };
enum class EnsembleKind { jacobi, laguerre };

// Jacobi beta-ensemble parameters; any of them may be symbolic. All four
// scalars share one context.
struct JacobiParams {
    Scalar n, beta, c, d;
};

// Jack-expansion coefficient of the correlator generating function:
//   f+ = prod_cell (n + c)(c - 1 + n + c) / (c + d - 2 + 2n + c),
//   f- = prod_cell (n + c)(c + d + n - 1 - 2/beta - c) / (c - 2/beta - c),
// with c = c_{2/beta}(cell).
Scalar f_coefficient(const Partition& lambda, Sign sign, const JacobiParams& p);

// The same coefficient as the h * Pochhammer-ratio product of the Kadell
// integral, for explicit integer n; independent cross-check of f_coefficient.
Scalar f_pochhammer_form(const Partition& lambda, Sign sign, int n, const Scalar& beta,
                         const Scalar& c, const Scalar& d);

// prod_{i<j<=n} ((b/2)(j-i+1))_{li-lj} / ((b/2)(j-i))_{li-lj}
//   == prod_cell (n + c_{2/beta}) / ((2/beta) arm + leg + 1), exactly.
bool appendix_identity_check(const Partition& lambda, int n, const Scalar& beta);

// Exact correlator C_{+lambda} or C_{-lambda} of the Jacobi beta ensemble.
Scalar correlator(JackCache& cache, const Partition& lambda, Sign sign, const JacobiParams& p);

// Laguerre correlator via the exact d -> infinity leading-coefficient limit
// of the scaled Jacobi correlator.
Scalar laguerre_correlator(JackCache& cache, const Partition& lambda, Sign sign,
                           const Scalar& n, const Scalar& beta, const Scalar& c);

struct ExpansionOrderRow {
    int r = 0;
    Scalar lhs, rhs;
    bool equal = false;
};

struct ExpansionReport {
    std::string theorem;
    Partition lambda;
    std::string beta_text;
    std::vector<ExpansionOrderRow> orders;
    bool pass = true;
    int first_mismatch = -1;
};

// Builds the theorem's left side as an exact rational function of n (with the
// stated c, d substitutions and prefactor), Laurent-expands it at n = infinity
// to the given order, and compares coefficient-by-coefficient against the
// b-Hurwitz numbers for the matching weight, with b = 2/beta - 1 and symbolic
// gamma, delta.
ExpansionReport verify_expansion(JackCache& cache, const Partition& lambda, EnsembleKind kind,
                                 Sign sign, const std::optional<Rational>& beta, int order);

}  // namespace betajack
