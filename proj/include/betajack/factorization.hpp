#pragma once

#include <map>

#include "betajack/weightgf.hpp"
#include "betajack/partition.hpp"

namespace betajack {

// Sum of u_{c(1)}...u_{c(r)} over all (L|M)-colored monotone factorizations
// of length r and type lambda in S_{|lambda|}. Brute force; guarded at
// |lambda| <= 8, r <= 8.
Scalar colored_monotone_factorization_sum(const Partition& lambda, int r, const WeightGF& G);

// Expands prod_{i=1..n} G(eps J_i) in the group algebra of S_n truncated at
// eps^R, collects each conjugacy-class coefficient and divides by z_lambda:
// entry (lambda, r) is H^{b=0}(lambda; r). Guarded at n <= 8.
std::map<std::pair<Partition, int>, Scalar> jm_class_expansion(const WeightGF& G, int n, int R);

}  // namespace betajack
