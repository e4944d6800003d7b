#include "betajack/maps.hpp"

#include <algorithm>

namespace betajack {

PZPolynomial PZPolynomial::one(Ctx ctx, int g_count, int g_cap) {
    PZPolynomial f(ctx, g_count, g_cap);
    PZKey key{Partition(), Partition(), std::vector<std::uint8_t>(static_cast<std::size_t>(g_count), 0)};
    f.add_term(key, Scalar::one(f.ctx_));
    return f;
}

void PZPolynomial::add_term(const PZKey& key, const Scalar& c) {
    if (c.is_zero()) return;
    if (key.g_total() > g_cap_) return;
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PZPolynomial& PZPolynomial::operator+=(const PZPolynomial& rhs) {
    for (const auto& [k, c] : rhs.terms_) add_term(k, c);
    return *this;
}

bool PZPolynomial::pure_p() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first.z.empty(); });
}

namespace {

std::vector<int> distinct_parts(const Partition& p) {
    std::vector<int> out;
    for (int x : p.parts())
        if (out.empty() || out.back() != x) out.push_back(x);
    return out;
}

// Bump one g-exponent; terms over the cap are dropped by add_term.
PZPolynomial shift_g(const PZPolynomial& f, int slot) {
    PZPolynomial out(f.ctx(), f.g_count(), f.g_cap());
    for (const auto& [key, c] : f.terms()) {
        PZKey nk(key);
        ++nk.g[static_cast<std::size_t>(slot)];
        out.add_term(nk, c);
    }
    return out;
}

}  // namespace

PZPolynomial lambda_apply(const PZPolynomial& f, const Scalar& b) {
    const Ctx& ctx = f.ctx();
    require_same_ctx(ctx, b.ctx());
    const Scalar one_plus_b = b + Scalar::one(ctx);
    PZPolynomial out(ctx, f.g_count(), f.g_cap());

    for (const auto& [key, coeff] : f.terms()) {
        // (1+b) * i * z_{i+j} d^2/(dp_i dz_j)
        for (int i : distinct_parts(key.p)) {
            const int mi = key.p.multiplicity(i);
            const Partition p1 = key.p.without_part(i);
            for (int j : distinct_parts(key.z)) {
                const int kj = key.z.multiplicity(j);
                PZKey nk{p1, key.z.without_part(j).with_part(i + j), key.g};
                out.add_term(nk, coeff * one_plus_b * Rational(static_cast<long>(i) * mi * kj));
            }
        }
        // z_i p_j d/dz_{i+j}
        for (int s : distinct_parts(key.z)) {
            const int ks = key.z.multiplicity(s);
            const Partition z1 = key.z.without_part(s);
            for (int i = 1; i < s; ++i) {
                PZKey nk{key.p.with_part(s - i), z1.with_part(i), key.g};
                out.add_term(nk, coeff * Rational(ks));
            }
        }
        // b (i-1) z_i d/dz_i
        for (int s : distinct_parts(key.z)) {
            if (s < 2) continue;
            const int ks = key.z.multiplicity(s);
            out.add_term(key, coeff * b * Rational(static_cast<long>(s - 1) * ks));
        }
    }
    return out;
}

PZPolynomial attach_vertex(const PZPolynomial& T, int L, int M, const Scalar& b) {
    const Ctx& ctx = T.ctx();
    if (!T.pure_p()) throw Error("attach_vertex expects a pure p-polynomial");
    const Scalar inv_one_plus_b = (b + Scalar::one(ctx)).inverse();

    // z_1/(1+b) * T
    PZPolynomial f(ctx, T.g_count(), T.g_cap());
    for (const auto& [key, c] : T.terms())
        f.add_term(PZKey{key.p, Partition{1}, key.g}, c * inv_one_plus_b);

    // numerator factors (1 + g_l Lambda)
    for (int l = 0; l < L; ++l) f += shift_g(lambda_apply(f, b), l);

    // denominator factors (1 - g_{L+m} Lambda)^-1 as geometric series,
    // truncated by the g-degree cap
    for (int m = 0; m < M; ++m) {
        PZPolynomial acc = f;
        PZPolynomial cur = f;
        while (true) {
            cur = shift_g(lambda_apply(cur, b), L + m);
            if (cur.is_zero()) break;
            acc += cur;
        }
        f = std::move(acc);
    }

    // z_i := p_i
    PZPolynomial out(ctx, T.g_count(), T.g_cap());
    for (const auto& [key, c] : f.terms())
        out.add_term(PZKey{key.p.concat(key.z), Partition(), key.g}, c);
    return out;
}

HurwitzTable t_table(const WeightGF& G, const Scalar& b, int N, int R) {
    const Ctx& ctx = G.ctx;
    require_same_ctx(ctx, b.ctx());
    if (N < 0 || R < 0) throw Error("table bounds must be nonnegative");
    const int g_count = G.L + G.M;

    HurwitzTable table{G, b, N, R, "lambda-recursion", {}};
    table.entries.emplace(std::make_pair(Partition(), 0), Scalar::one(ctx));
    for (int r = 1; r <= R; ++r)
        table.entries.emplace(std::make_pair(Partition(), r), Scalar::zero(ctx));

    PZPolynomial T = PZPolynomial::one(ctx, g_count, R);
    Rational inv_factorial(1);
    for (int n = 1; n <= N; ++n) {
        T = attach_vertex(T, G.L, G.M, b);
        inv_factorial /= Rational(n);
        for (const auto& lambda : partitions_of(n))
            for (int r = 0; r <= R; ++r)
                table.entries.emplace(std::make_pair(lambda, r), Scalar::zero(ctx));
        for (const auto& [key, c] : T.terms()) {
            Scalar value = c * inv_factorial;
            for (int i = 0; i < g_count; ++i)
                for (int e = 0; e < key.g[static_cast<std::size_t>(i)]; ++e)
                    value *= G.u[static_cast<std::size_t>(i)];
            table.entries.at({key.p, key.g_total()}) += value;
        }
    }
    return table;
}

}  // namespace betajack
