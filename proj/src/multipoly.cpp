#include "betajack/multipoly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace betajack {

namespace {

Rational rat_pow(const Rational& base, std::int32_t e) {
    assert(e >= 0);
    if (e == 0) return Rational(1);
    Rational r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()),
               static_cast<unsigned long>(e));
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()),
               static_cast<unsigned long>(e));
    return r;
}

}  // namespace

MultiPoly MultiPoly::constant(Ctx ctx, const Rational& value) {
    MultiPoly p(std::move(ctx));
    if (value != 0) p.terms_.emplace(ExpVec(p.arity(), 0), value);
    return p;
}

MultiPoly MultiPoly::variable(Ctx ctx, std::size_t var, std::int32_t exp) {
    MultiPoly p(std::move(ctx));
    if (var >= p.arity()) throw UnknownParameter("variable index out of range");
    ExpVec e(p.arity(), 0);
    e[var] = exp;
    if (exp == 0)
        p.terms_.emplace(ExpVec(p.arity(), 0), Rational(1));
    else
        p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](std::int32_t x) { return x == 0; });
}

bool MultiPoly::is_one() const {
    return is_constant() && !terms_.empty() && terms_.begin()->second == 1;
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    assert(is_constant());
    return terms_.begin()->second;
}

int MultiPoly::degree(std::size_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max<int>(d, e[var]);
    return d;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (auto x : e) t += x;
        d = std::max(d, t);
    }
    return d;
}

bool MultiPoly::depends_on(std::size_t var) const {
    for (const auto& [e, c] : terms_)
        if (e[var] != 0) return true;
    return false;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    require_same_ctx(ctx_, rhs.ctx_);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    require_same_ctx(ctx_, rhs.ctx_);
    for (const auto& [e, c] : rhs.terms_) {
        Rational nc = -c;
        add_term(e, nc);
    }
    return *this;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
    require_same_ctx(lhs.ctx_, rhs.ctx_);
    MultiPoly r(lhs.ctx_);
    if (lhs.is_zero() || rhs.is_zero()) return r;
    const std::size_t n = lhs.arity();
    ExpVec e(n, 0);
    for (const auto& [ea, ca] : lhs.terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
            Rational c = ca * cb;
            r.add_term(e, c);
        }
    }
    return r;
}

MultiPoly& MultiPoly::mul_rational(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MultiPoly MultiPoly::mul_monomial(const ExpVec& exps, const Rational& c) const {
    MultiPoly r(ctx_);
    if (c == 0) return r;
    const std::size_t n = arity();
    for (const auto& [e, v] : terms_) {
        ExpVec ne(n);
        for (std::size_t i = 0; i < n; ++i) ne[i] = e[i] + exps[i];
        r.terms_.emplace(std::move(ne), v * c);
    }
    return r;
}

MultiPoly MultiPoly::mul_var_power(std::size_t var, std::int32_t exp) const {
    MultiPoly r(ctx_);
    for (const auto& [e, v] : terms_) {
        ExpVec ne(e);
        ne[var] += exp;
        r.terms_.emplace(std::move(ne), v);
    }
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r = constant(ctx_, Rational(1));
    MultiPoly base(*this);
    while (e > 0) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return r;
}

void MultiPoly::add_term(const ExpVec& exps, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool MultiPoly::operator==(const MultiPoly& rhs) const {
    require_same_ctx(ctx_, rhs.ctx_);
    return terms_ == rhs.terms_;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::size_t var) const {
    std::vector<MultiPoly> out;
    if (is_zero()) return out;
    out.resize(static_cast<std::size_t>(degree(var)) + 1, MultiPoly(ctx_));
    for (const auto& [e, c] : terms_) {
        ExpVec ne(e);
        const auto k = static_cast<std::size_t>(ne[var]);
        ne[var] = 0;
        out[k].add_term(ne, c);
    }
    return out;
}

MultiPoly MultiPoly::from_coefficients_in(Ctx ctx, std::size_t var,
                                          const std::vector<MultiPoly>& coeffs) {
    MultiPoly r(std::move(ctx));
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        r += coeffs[k].mul_var_power(var, static_cast<std::int32_t>(k));
    return r;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
    MultiPoly r(ctx_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        ExpVec ne(e);
        ne[var] -= 1;
        r.add_term(ne, c * Rational(e[var]));
    }
    return r;
}

MultiPoly MultiPoly::eval_var(std::size_t var, const Rational& value) const {
    MultiPoly r(ctx_);
    for (const auto& [e, c] : terms_) {
        ExpVec ne(e);
        const std::int32_t k = ne[var];
        ne[var] = 0;
        Rational nc = c * rat_pow(value, k);
        r.add_term(ne, nc);
    }
    return r;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& divisor) const {
    require_same_ctx(ctx_, divisor.ctx_);
    if (divisor.is_zero()) throw DivisionByZero("exact division by zero polynomial");
    MultiPoly q(ctx_);
    if (is_zero()) return q;
    if (divisor.is_constant()) {
        q = *this;
        q.mul_rational(Rational(1) / divisor.constant_value());
        return q;
    }
    const auto& dl = divisor.leading();
    MultiPoly r(*this);
    const std::size_t n = arity();
    ExpVec e(n);
    while (!r.is_zero()) {
        const auto& rl = r.leading();
        for (std::size_t i = 0; i < n; ++i) {
            e[i] = rl.first[i] - dl.first[i];
            if (e[i] < 0) return std::nullopt;
        }
        Rational c = rl.second / dl.second;
        q.add_term(e, c);
        r -= divisor.mul_monomial(e, c);
    }
    return q;
}

std::pair<Rational, MultiPoly> MultiPoly::primitive_decomposition() const {
    if (is_zero()) return {Rational(0), MultiPoly(ctx_)};
    Integer num_gcd(0), den_lcm(1);
    for (const auto& [e, c] : terms_) {
        num_gcd = gcd(num_gcd, c.get_num());
        den_lcm = lcm(den_lcm, c.get_den());
    }
    Rational content(num_gcd, den_lcm);
    content.canonicalize();
    if (leading().second < 0) content = -content;
    MultiPoly prim(*this);
    prim.mul_rational(Rational(1) / content);
    return {content, prim};
}

std::string MultiPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ctx_->name(i);
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            os << rat_str(a);
        } else if (a == 1) {
            os << mono;
        } else {
            os << rat_str(a) << "*" << mono;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// gcd

namespace {

int uni_deg(const std::vector<MultiPoly>& p) { return static_cast<int>(p.size()) - 1; }

void uni_trim(std::vector<MultiPoly>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Pseudo-remainder of f by g as univariate polynomials in one main variable
// with MultiPoly coefficients: lc(g)^(deg f - deg g + 1) * f = q*g + rem.
std::vector<MultiPoly> uni_prem(std::vector<MultiPoly> r, const std::vector<MultiPoly>& g) {
    const int dg = uni_deg(g);
    const MultiPoly& lcg = g.back();
    int e = uni_deg(r) - dg + 1;
    while (!r.empty() && uni_deg(r) >= dg) {
        const int dr = uni_deg(r);
        MultiPoly lr = r.back();
        for (auto& coeff : r) coeff = coeff * lcg;
        for (int k = 0; k <= dg; ++k) r[static_cast<std::size_t>(k + dr - dg)] -= lr * g[static_cast<std::size_t>(k)];
        uni_trim(r);
        --e;
    }
    if (e > 0) {
        MultiPoly scale = lcg.pow(static_cast<unsigned>(e));
        for (auto& coeff : r) coeff = coeff * scale;
    }
    return r;
}

// Content of f w.r.t. the main variable: gcd of its coefficient polynomials.
MultiPoly uni_content(const std::vector<MultiPoly>& coeffs, const Ctx& ctx) {
    MultiPoly g(ctx);
    for (const auto& c : coeffs) {
        if (c.is_zero()) continue;
        g = poly_gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

std::vector<MultiPoly> uni_divide_all(const std::vector<MultiPoly>& coeffs,
                                      const MultiPoly& d) {
    std::vector<MultiPoly> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        auto q = c.divide_exact(d);
        if (!q) throw Error("internal: non-exact coefficient division in gcd");
        out.push_back(std::move(*q));
    }
    return out;
}

// Dense univariate image of f in `var` with all other variables evaluated at
// point[i]; returns coefficient vector (may be shorter than deg_var(f)+1 when
// the leading coefficient vanishes at the point).
std::vector<Rational> eval_to_univariate(const MultiPoly& f, std::size_t var,
                                         const std::vector<Rational>& point) {
    std::vector<Rational> out(static_cast<std::size_t>(f.degree(var)) + 1, Rational(0));
    for (const auto& [e, c] : f.terms()) {
        Rational v = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i == var || e[i] == 0) continue;
            v *= rat_pow(point[i], e[i]);
        }
        out[static_cast<std::size_t>(e[var])] += v;
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

int rational_uni_gcd_degree(std::vector<Rational> a, std::vector<Rational> b) {
    auto deg = [](const std::vector<Rational>& p) { return static_cast<int>(p.size()) - 1; };
    auto trim = [](std::vector<Rational>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };
    // divide out the rational content each round to keep coefficients small
    auto normalize = [](std::vector<Rational>& p) {
        if (p.empty()) return;
        Integer g(0), l(1);
        for (const auto& c : p) {
            g = gcd(g, c.get_num());
            l = lcm(l, c.get_den());
        }
        Rational content(g, l);
        content.canonicalize();
        for (auto& c : p) c /= content;
    };
    normalize(a);
    normalize(b);
    if (deg(a) < deg(b)) std::swap(a, b);
    while (!b.empty()) {
        while (deg(a) >= deg(b) && !a.empty()) {
            Rational q = a.back() / b.back();
            const int shift = deg(a) - deg(b);
            for (int k = 0; k <= deg(b); ++k)
                a[static_cast<std::size_t>(k + shift)] -= q * b[static_cast<std::size_t>(k)];
            trim(a);
        }
        normalize(a);
        std::swap(a, b);
    }
    return deg(a);
}

// Certified coprimality test: a degree-preserving evaluation whose univariate
// images are coprime proves the primitive parts share no factor.
bool primitive_gcd_certified_trivial(const MultiPoly& f, const MultiPoly& g,
                                     std::size_t var) {
    static const long seeds[2][2] = {{3, 17}, {7, 5}};
    const std::size_t n = f.arity();
    for (const auto& s : seeds) {
        std::vector<Rational> point(n);
        for (std::size_t i = 0; i < n; ++i)
            point[i] = Rational(s[0] + static_cast<long>(i) * s[1] + 2);
        auto fi = eval_to_univariate(f, var, point);
        auto gi = eval_to_univariate(g, var, point);
        if (static_cast<int>(fi.size()) - 1 != f.degree(var)) continue;
        if (static_cast<int>(gi.size()) - 1 != g.degree(var)) continue;
        return rational_uni_gcd_degree(std::move(fi), std::move(gi)) == 0;
    }
    return false;
}

// Subresultant PRS on primitive inputs; returns the gcd of the primitive
// parts w.r.t. `var` (itself primitive w.r.t. var but not normalized).
MultiPoly subresultant_gcd(std::vector<MultiPoly> a, std::vector<MultiPoly> b,
                           std::size_t var, const Ctx& ctx) {
    if (uni_deg(a) < uni_deg(b)) std::swap(a, b);
    MultiPoly g = MultiPoly::constant(ctx, Rational(1));
    MultiPoly h = g;
    while (true) {
        const int delta = uni_deg(a) - uni_deg(b);
        std::vector<MultiPoly> r = uni_prem(a, b);
        if (r.empty()) break;
        a = std::move(b);
        MultiPoly denom = g * h.pow(static_cast<unsigned>(delta));
        b = uni_divide_all(r, denom);
        g = a.back();
        if (delta == 1)
            h = g;
        else if (delta > 1) {
            auto q = g.pow(static_cast<unsigned>(delta))
                         .divide_exact(h.pow(static_cast<unsigned>(delta - 1)));
            if (!q) throw Error("internal: non-exact step in subresultant sequence");
            h = std::move(*q);
        }
        if (uni_deg(b) == 0) return MultiPoly::constant(ctx, Rational(1));
    }
    MultiPoly cont = uni_content(b, ctx);
    MultiPoly res = MultiPoly::from_coefficients_in(ctx, var, uni_divide_all(b, cont));
    return res;
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& f, const MultiPoly& g) {
    const Ctx& ctx = f.ctx() ? f.ctx() : g.ctx();
    if (f.is_zero()) return g.is_zero() ? MultiPoly(ctx) : g.primitive_decomposition().second;
    if (g.is_zero()) return f.primitive_decomposition().second;
    require_same_ctx(f.ctx(), g.ctx());
    if (f.is_constant() || g.is_constant()) return MultiPoly::constant(ctx, Rational(1));

    std::size_t var = 0;
    const std::size_t n = ctx->size();
    while (var < n && !f.depends_on(var) && !g.depends_on(var)) ++var;
    assert(var < n);

    auto fc = f.coefficients_in(var);
    auto gc = g.coefficients_in(var);
    MultiPoly content_f = uni_content(fc, ctx);
    MultiPoly content_g = uni_content(gc, ctx);
    MultiPoly c = poly_gcd(content_f, content_g);

    if (f.degree(var) == 0 || g.degree(var) == 0)
        return c.primitive_decomposition().second;

    auto pf = uni_divide_all(fc, content_f);
    auto pg = uni_divide_all(gc, content_g);

    bool multivariate = false;
    for (std::size_t v = var + 1; v < n && !multivariate; ++v)
        multivariate = f.depends_on(v) || g.depends_on(v);

    MultiPoly pp_gcd = MultiPoly::constant(ctx, Rational(1));
    bool certified_coprime = false;
    if (multivariate) {
        const MultiPoly f_prim = MultiPoly::from_coefficients_in(ctx, var, pf);
        const MultiPoly g_prim = MultiPoly::from_coefficients_in(ctx, var, pg);
        certified_coprime = primitive_gcd_certified_trivial(f_prim, g_prim, var);
    }
    if (!certified_coprime) pp_gcd = subresultant_gcd(std::move(pf), std::move(pg), var, ctx);

    return (c * pp_gcd).primitive_decomposition().second;
}

}  // namespace betajack
