#include "betajack/factorization.hpp"

#include <algorithm>
#include <numeric>

namespace betajack {

namespace {

// Per run of equal endpoints b of length m, the admissible colorings carry
// total weight sum_{a+h=m} e_a(u_1..u_L) h_h(u_{L+1}..u_{L+M}): colors <= L
// strictly increase inside a run, colors > L weakly increase.
std::vector<Scalar> run_weights(const WeightGF& G, int max_len) {
    const Ctx& ctx = G.ctx;
    std::vector<Scalar> e(static_cast<std::size_t>(max_len) + 1, Scalar::zero(ctx));
    e[0] = Scalar::one(ctx);
    for (int i = 0; i < G.L; ++i)
        for (int m = std::min(max_len, i + 1); m >= 1; --m)
            e[static_cast<std::size_t>(m)] +=
                e[static_cast<std::size_t>(m - 1)] * G.u[static_cast<std::size_t>(i)];
    std::vector<Scalar> h(static_cast<std::size_t>(max_len) + 1, Scalar::zero(ctx));
    h[0] = Scalar::one(ctx);
    for (int i = 0; i < G.M; ++i)
        for (int m = 1; m <= max_len; ++m)
            h[static_cast<std::size_t>(m)] +=
                h[static_cast<std::size_t>(m - 1)] * G.u[static_cast<std::size_t>(G.L + i)];
    std::vector<Scalar> w(static_cast<std::size_t>(max_len) + 1, Scalar::zero(ctx));
    for (int m = 0; m <= max_len; ++m)
        for (int a = 0; a <= m; ++a)
            w[static_cast<std::size_t>(m)] +=
                e[static_cast<std::size_t>(a)] * h[static_cast<std::size_t>(m - a)];
    return w;
}

Partition cycle_type(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<bool> seen(perm.size(), false);
    std::vector<int> lens;
    for (int i = 0; i < n; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        int len = 0, j = i;
        while (!seen[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = true;
            j = perm[static_cast<std::size_t>(j)];
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end(), std::greater<int>());
    return Partition(std::move(lens));
}

struct FactorizationEnumerator {
    const Partition& target;
    const std::vector<Scalar>& weights;
    int r;
    int n;
    Scalar total;

    // perm holds pi_1...pi_k composed left to right; right-composition by a
    // transposition swaps two entries.
    void recurse(std::vector<int>& perm, int k, int min_b, int run_len, Scalar acc) {
        if (k == r) {
            if (cycle_type(perm) == target) {
                total += acc * weights[static_cast<std::size_t>(run_len)];
            }
            return;
        }
        for (int b = min_b; b < n; ++b) {
            const bool extends_run = (k > 0 && b == min_b);
            const Scalar next_acc =
                extends_run ? acc : acc * weights[static_cast<std::size_t>(run_len)];
            for (int a = 0; a < b; ++a) {
                std::swap(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
                recurse(perm, k + 1, b, extends_run ? run_len + 1 : 1, next_acc);
                std::swap(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
            }
        }
    }
};

}  // namespace

Scalar colored_monotone_factorization_sum(const Partition& lambda, int r, const WeightGF& G) {
    const int n = lambda.weight();
    if (n > 8 || r > 8)
        throw GuardExceeded("factorization enumeration limited to |lambda| <= 8, r <= 8");
    const Ctx& ctx = G.ctx;
    if (r == 0) {
        bool identity = lambda.empty() || lambda.part(1) == 1;
        return identity ? Scalar::one(ctx) : Scalar::zero(ctx);
    }
    if (n < 2) return Scalar::zero(ctx);
    const auto weights = run_weights(G, r);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    FactorizationEnumerator en{lambda, weights, r, n, Scalar::zero(ctx)};
    en.recurse(perm, 0, 1, 0, Scalar::one(ctx));
    return en.total;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> base(static_cast<std::size_t>(n));
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

}  // namespace

std::map<std::pair<Partition, int>, Scalar> jm_class_expansion(const WeightGF& G, int n, int R) {
    if (n > 8) throw GuardExceeded("group algebra expansion limited to n <= 8");
    if (n < 0 || R < 0) throw Error("jm_class_expansion: bad bounds");
    const Ctx& ctx = G.ctx;

    std::map<std::pair<Partition, int>, Scalar> out;
    if (n == 0) {
        out.emplace(std::make_pair(Partition(), 0), Scalar::one(ctx));
        for (int r = 1; r <= R; ++r)
            out.emplace(std::make_pair(Partition(), r), Scalar::zero(ctx));
        return out;
    }

    const auto perms = all_permutations(n);
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < perms.size(); ++i) index.emplace(perms[i], i);
    const std::size_t order = perms.size();

    // Right-composition table sigma -> sigma*(a,b).
    auto compose_table = [&](int a, int b) {
        std::vector<std::size_t> t(order);
        for (std::size_t s = 0; s < order; ++s) {
            std::vector<int> q(perms[s]);
            std::swap(q[static_cast<std::size_t>(a)], q[static_cast<std::size_t>(b)]);
            t[s] = index.at(q);
        }
        return t;
    };

    const auto weights = run_weights(G, R);

    // acc[r][sigma]: coefficient of eps^r sigma in prod_{i <= done} G(eps J_i).
    std::vector<std::vector<Scalar>> acc(
        static_cast<std::size_t>(R) + 1, std::vector<Scalar>(order, Scalar::zero(ctx)));
    acc[0][0] = Scalar::one(ctx);  // perms[0] is the identity

    for (int i = 2; i <= n; ++i) {
        std::vector<std::vector<std::size_t>> tables;
        for (int k = 1; k < i; ++k) tables.push_back(compose_table(k - 1, i - 1));
        std::vector<std::vector<Scalar>> next(
            static_cast<std::size_t>(R) + 1, std::vector<Scalar>(order, Scalar::zero(ctx)));
        for (int j = 0; j <= R; ++j) {
            std::vector<Scalar> cur = acc[static_cast<std::size_t>(j)];
            for (std::size_t s = 0; s < order; ++s)
                if (!cur[s].is_zero()) next[static_cast<std::size_t>(j)][s] += cur[s];
            for (int r = 1; j + r <= R; ++r) {
                // cur := cur * J_i
                std::vector<Scalar> prod(order, Scalar::zero(ctx));
                for (const auto& t : tables)
                    for (std::size_t s = 0; s < order; ++s)
                        if (!cur[s].is_zero()) prod[t[s]] += cur[s];
                cur = std::move(prod);
                const Scalar& w = weights[static_cast<std::size_t>(r)];
                if (w.is_zero()) continue;
                auto& slot = next[static_cast<std::size_t>(j + r)];
                for (std::size_t s = 0; s < order; ++s)
                    if (!cur[s].is_zero()) slot[s] += cur[s] * w;
            }
        }
        acc = std::move(next);
    }

    for (const auto& lambda : partitions_of(n)) {
        std::vector<std::size_t> members;
        for (std::size_t s = 0; s < order; ++s)
            if (cycle_type(perms[s]) == lambda) members.push_back(s);
        const Rational inv_z = Rational(1) / z_of(lambda);
        for (int r = 0; r <= R; ++r) {
            const Scalar& rep = acc[static_cast<std::size_t>(r)][members.front()];
            for (std::size_t m : members)
                if (!(acc[static_cast<std::size_t>(r)][m] == rep))
                    throw Error("internal: expansion of prod G(eps J_i) is not central");
            out.emplace(std::make_pair(lambda, r), rep * inv_z);
        }
    }
    return out;
}

}  // namespace betajack
