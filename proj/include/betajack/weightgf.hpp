#pragma once

#include <vector>

#include "betajack/scalar.hpp"

namespace betajack {

// Rational weight generating function
//   G(z) = prod_{i<=L} (1 + u_i z) / prod_{i<=M} (1 - u_{L+i} z),
// so G(0) = 1 by construction.
struct WeightGF {
    Ctx ctx;
    int L = 0;
    int M = 0;
    std::vector<Scalar> u;  // size L+M
};

WeightGF custom_weight(Ctx ctx, int L, int M, std::vector<Scalar> u);

enum class WeightKind { jacobi_plus, jacobi_minus, laguerre_plus, laguerre_minus };

// The four ensemble weights; delta is ignored for the Laguerre kinds.
//   jacobi+ : (1+z)(1+z/gamma) / (1+z/(gamma+delta))
//   jacobi- : (1+z)(1-z/(gamma+delta)) / (1-z/gamma)
//   laguerre+: (1+z)(1+z/gamma)
//   laguerre-: (1+z) / (1-z/gamma)
WeightGF make_weight(WeightKind kind, const Scalar& gamma, const Scalar& delta);

}  // namespace betajack
