#include "betajack/symfun.hpp"

#include <algorithm>
#include <sstream>

namespace betajack {

SymmetricFunction SymmetricFunction::one(Ctx ctx) {
    SymmetricFunction f(ctx);
    f.add_term(Partition(), Scalar::one(std::move(ctx)));
    return f;
}

SymmetricFunction SymmetricFunction::p(Ctx ctx, const Partition& lambda) {
    SymmetricFunction f(ctx);
    f.add_term(lambda, Scalar::one(std::move(ctx)));
    return f;
}

Scalar SymmetricFunction::coeff(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Scalar::zero(ctx_) : it->second;
}

void SymmetricFunction::add_term(const Partition& lambda, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymmetricFunction& SymmetricFunction::operator+=(const SymmetricFunction& rhs) {
    require_same_ctx(ctx_, rhs.ctx_);
    for (const auto& [l, c] : rhs.terms_) add_term(l, c);
    return *this;
}

SymmetricFunction& SymmetricFunction::operator-=(const SymmetricFunction& rhs) {
    require_same_ctx(ctx_, rhs.ctx_);
    for (const auto& [l, c] : rhs.terms_) add_term(l, -c);
    return *this;
}

SymmetricFunction operator*(const SymmetricFunction& a, const SymmetricFunction& b) {
    require_same_ctx(a.ctx_, b.ctx_);
    SymmetricFunction out(a.ctx_);
    for (const auto& [la, ca] : a.terms_)
        for (const auto& [lb, cb] : b.terms_) out.add_term(la.concat(lb), ca * cb);
    return out;
}

SymmetricFunction& SymmetricFunction::scale(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [l, v] : terms_) v *= c;
    return *this;
}

std::string SymmetricFunction::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [l, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*p[" << l.str() << "]";
    }
    return os.str();
}

Scalar hall_inner(const SymmetricFunction& f, const SymmetricFunction& g, const Scalar& alpha) {
    require_same_ctx(f.ctx(), g.ctx());
    require_same_ctx(f.ctx(), alpha.ctx());
    Scalar acc = Scalar::zero(f.ctx());
    const auto& small = f.terms().size() <= g.terms().size() ? f : g;
    const auto& large = f.terms().size() <= g.terms().size() ? g : f;
    for (const auto& [l, c] : small.terms()) {
        auto it = large.terms().find(l);
        if (it == large.terms().end()) continue;
        acc += c * it->second * alpha.pow(l.length()) * z_of(l);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// monomial <-> power-sum transition, cached per degree

namespace {

struct DegreeTables {
    std::vector<Partition> parts;  // enumeration order
    std::map<Partition, std::size_t> index;
    std::vector<std::vector<Rational>> p_in_m;  // [i][j]: coeff of m_j in p_i
    std::vector<std::vector<Rational>> m_in_p;  // inverse
};

// Expand p_lambda in d variables and read off monomial-basis coefficients:
// the coefficient of m_mu equals the coefficient of x^mu (exponents sorted
// weakly decreasing).
std::map<Partition, Rational> expand_p_in_m(const Partition& lambda, int d) {
    std::map<std::vector<int>, Rational> poly;
    poly.emplace(std::vector<int>(static_cast<std::size_t>(d), 0), Rational(1));
    for (int part : lambda.parts()) {
        std::map<std::vector<int>, Rational> next;
        for (const auto& [e, c] : poly) {
            for (int i = 0; i < d; ++i) {
                std::vector<int> ne(e);
                ne[static_cast<std::size_t>(i)] += part;
                auto [it, inserted] = next.emplace(std::move(ne), c);
                if (!inserted) it->second += c;
            }
        }
        poly = std::move(next);
    }
    std::map<Partition, Rational> out;
    for (const auto& [e, c] : poly) {
        bool sorted = std::is_sorted(e.begin(), e.end(), std::greater<int>());
        if (!sorted) continue;
        out.emplace(Partition(std::vector<int>(e)), c);
    }
    return out;
}

std::vector<std::vector<Rational>> invert_matrix(std::vector<std::vector<Rational>> m) {
    const std::size_t k = m.size();
    std::vector<std::vector<Rational>> inv(k, std::vector<Rational>(k, Rational(0)));
    for (std::size_t i = 0; i < k; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        while (piv < k && m[piv][col] == 0) ++piv;
        if (piv == k) throw Error("internal: singular basis transition matrix");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        Rational lead = m[col][col];
        for (std::size_t j = 0; j < k; ++j) {
            m[col][j] /= lead;
            inv[col][j] /= lead;
        }
        for (std::size_t r = 0; r < k; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (std::size_t j = 0; j < k; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

const DegreeTables& degree_tables(int d) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<DegreeTables>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return *it->second;

    auto tables = std::make_unique<DegreeTables>();
    tables->parts = partitions_of(d);
    const std::size_t k = tables->parts.size();
    for (std::size_t i = 0; i < k; ++i) tables->index.emplace(tables->parts[i], i);
    tables->p_in_m.assign(k, std::vector<Rational>(k, Rational(0)));
    for (std::size_t i = 0; i < k; ++i) {
        auto row = expand_p_in_m(tables->parts[i], d);
        for (const auto& [mu, c] : row) tables->p_in_m[i][tables->index.at(mu)] = c;
    }
    tables->m_in_p = invert_matrix(tables->p_in_m);
    auto [pos, ok] = cache.emplace(d, std::move(tables));
    return *pos->second;
}

}  // namespace

SymmetricFunction monomial_to_powersum(const Ctx& ctx, const Partition& mu) {
    SymmetricFunction out(ctx);
    if (mu.empty()) {
        out.add_term(Partition(), Scalar::one(ctx));
        return out;
    }
    const DegreeTables& t = degree_tables(mu.weight());
    const auto& row = t.m_in_p[t.index.at(mu)];
    for (std::size_t j = 0; j < row.size(); ++j)
        if (row[j] != 0) out.add_term(t.parts[j], Scalar(ctx, row[j]));
    return out;
}

std::map<Partition, Scalar> to_monomial_basis(const SymmetricFunction& f) {
    std::map<Partition, Scalar> out;
    for (const auto& [lambda, c] : f.terms()) {
        if (lambda.empty()) {
            auto [it, inserted] = out.emplace(Partition(), c);
            if (!inserted) it->second += c;
            continue;
        }
        const DegreeTables& t = degree_tables(lambda.weight());
        const auto& row = t.p_in_m[t.index.at(lambda)];
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j] == 0) continue;
            auto [it, inserted] = out.emplace(t.parts[j], c * row[j]);
            if (!inserted) it->second += c * row[j];
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

Scalar specialize(const SymmetricFunction& f, const FiniteSpecialization& s) {
    const Ctx& ctx = f.ctx();
    std::map<int, Scalar> power_sums;
    auto ps = [&](int k) -> const Scalar& {
        auto it = power_sums.find(k);
        if (it != power_sums.end()) return it->second;
        Scalar acc = Scalar::zero(ctx);
        for (const auto& x : s.values) acc += x.pow(k);
        return power_sums.emplace(k, std::move(acc)).first->second;
    };
    Scalar out = Scalar::zero(ctx);
    for (const auto& [lambda, c] : f.terms()) {
        Scalar term = c;
        for (int part : lambda.parts()) term *= ps(part);
        out += term;
    }
    return out;
}

Scalar exponential_specialization(const SymmetricFunction& f) {
    Scalar out = Scalar::zero(f.ctx());
    for (const auto& [lambda, c] : f.terms()) {
        if (lambda.empty() || lambda.part(1) == 1) out += c;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Jack functions

JackCache::JackCache() : alpha_ctx_(make_context({"alpha"})) {}

namespace {

// Processing order within a degree: ascending lex refines dominance, so all
// dominance-smaller partitions are ready when lambda is reached.
std::vector<Partition> ascending_lex(int degree) {
    auto parts = partitions_of(degree);
    std::reverse(parts.begin(), parts.end());
    return parts;
}

struct JackFamily {
    std::map<Partition, SymmetricFunction> jack;
    std::map<Partition, Scalar> norm;
};

JackFamily compute_family(const Ctx& ctx, int degree, const Scalar& alpha) {
    JackFamily fam;
    for (const auto& lambda : ascending_lex(degree)) {
        SymmetricFunction v = monomial_to_powersum(ctx, lambda);
        for (const auto& [mu, p_mu] : fam.jack) {
            if (!(mu == lambda) && dominance_leq(mu, lambda)) {
                Scalar c = hall_inner(v, p_mu, alpha) / fam.norm.at(mu);
                SymmetricFunction sub = p_mu;
                sub.scale(c);
                v -= sub;
            }
        }
        Scalar norm = hall_inner(v, v, alpha);
        fam.norm.emplace(lambda, std::move(norm));
        fam.jack.emplace(lambda, std::move(v));
    }
    return fam;
}

}  // namespace

std::shared_ptr<const SymmetricFunction> JackCache::jack_symbolic(const Partition& lambda) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = jacks_.find(lambda);
        if (it != jacks_.end()) return it->second;
    }
    const Scalar alpha = Scalar::variable(alpha_ctx_, std::size_t{0});
    JackFamily fam = compute_family(alpha_ctx_, lambda.weight(), alpha);
    std::lock_guard<std::mutex> lock(mu_);
    for (auto& [mu, f] : fam.jack)
        jacks_.emplace(mu, std::make_shared<SymmetricFunction>(std::move(f)));
    return jacks_.at(lambda);
}

void JackCache::check_numeric_alpha(int degree, const Scalar& alpha) const {
    if (!alpha.is_rational()) return;
    for (const auto& mu : partitions_of(degree)) {
        auto [h, hp] = hook_products(mu, alpha);
        if (h.is_zero() || hp.is_zero())
            throw SingularAlpha("alpha = " + alpha.str() +
                                " is singular for degree " + std::to_string(degree) +
                                " (hook product of " + mu.str() + " vanishes)");
    }
}

SymmetricFunction JackCache::jack(const Partition& lambda, const Scalar& alpha) {
    check_numeric_alpha(lambda.weight(), alpha);
    auto sym = jack_symbolic(lambda);
    const Ctx& target = alpha.ctx();
    SymmetricFunction out(target);
    try {
        for (const auto& [mu, c] : sym->terms())
            out.add_term(mu, c.substitute({alpha}, target));
    } catch (const DivisionByZero&) {
        throw SingularAlpha("alpha = " + alpha.str() + " hits a pole of P_" + lambda.str());
    }
    return out;
}

SymmetricFunction JackCache::jack_direct(const Partition& lambda, const Scalar& alpha) {
    check_numeric_alpha(lambda.weight(), alpha);
    try {
        JackFamily fam = compute_family(alpha.ctx(), lambda.weight(), alpha);
        return fam.jack.at(lambda);
    } catch (const DivisionByZero&) {
        throw SingularAlpha("alpha = " + alpha.str() + " degenerates the defining system");
    }
}

}  // namespace betajack
