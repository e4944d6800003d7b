#pragma once

#include "betajack/symfun.hpp"

namespace betajack {

struct CalogeroSutherlandResult {
    MultiPoly jack_poly;  // denominator-cleared specialized Jack, ctx {alpha, x1..xn}
    MultiPoly image;      // operator applied to it
    Scalar eigenvalue;    // sum_i (alpha*lambda_i^2/2 + (n+1-2i)*lambda_i/2)
};

// Applies H = (alpha/2) sum D_i^2 + (1/2) sum_{i<j} (x_i+x_j)/(x_i-x_j) (D_i-D_j)
// to the specialized Jack polynomial, with exact polynomial division for the
// cross terms, and checks the eigen-relation. Throws NotEigenvector on any
// mismatch (self-test; indicates an implementation bug).
CalogeroSutherlandResult cs_apply(JackCache& cache, const Partition& lambda, int nvars);

// Checks P~_lambda(x^-1) == (x_1...x_n)^(-lambda_1) * P~_hat(x) exactly at a
// nonzero rational sample point, with symbolic alpha.
bool verify_inverse_identity(JackCache& cache, const Partition& lambda, int nvars,
                             const std::vector<Rational>& sample);

}  // namespace betajack
