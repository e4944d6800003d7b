#pragma once

#include <map>
#include <string>
#include <utility>

#include "betajack/series.hpp"
#include "betajack/symfun.hpp"
#include "betajack/weightgf.hpp"

namespace betajack {

// Expansion of prod_{cell of mu} G(eps * c_alpha(cell)) to the given order
// in eps; denominator factors are expanded as geometric series.
TruncatedSeries content_weight_series(const WeightGF& G, const Partition& mu,
                                      const Scalar& alpha, int order);

// Finite table of b-Hurwitz numbers H(lambda; r) for |lambda| <= N, r <= R.
struct HurwitzTable {
    WeightGF G;
    Scalar b;
    int N = 0;
    int R = 0;
    std::string source;
    std::map<std::pair<Partition, int>, Scalar> entries;

    const Scalar& at(const Partition& lambda, int r) const;
};

// H(lambda; r) = sum_{|mu|=|lambda|} [p_lambda] P_mu^(b+1) / h'_{b+1}(mu)
//              * [eps^r] content_weight_series(G, mu, b+1, R).
HurwitzTable hurwitz_table(const WeightGF& G, const Scalar& b, int N, int R,
                           JackCache& cache, int threads = 1);

}  // namespace betajack
