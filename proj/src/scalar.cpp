#include "betajack/scalar.hpp"

#include <cctype>

namespace betajack {

Scalar Scalar::variable(Ctx ctx, std::size_t var) {
    Scalar s(ctx);
    s.num_ = MultiPoly::variable(std::move(ctx), var);
    return s;
}

Scalar Scalar::variable(const Ctx& ctx, std::string_view name) {
    return variable(ctx, ctx->var(name));
}

Scalar Scalar::from_poly(MultiPoly p) {
    Scalar s(p.ctx());
    s.num_ = std::move(p);
    return s;
}

Scalar Scalar::from_fraction(MultiPoly num, MultiPoly den) {
    require_same_ctx(num.ctx(), den.ctx());
    Scalar s(num.ctx());
    s.num_ = std::move(num);
    s.den_ = std::move(den);
    s.reduce();
    return s;
}

Rational Scalar::as_rational() const {
    if (!is_rational()) throw Error("scalar is not a plain rational: " + str());
    return num_.constant_value();
}

void Scalar::reduce() {
    if (den_.is_zero()) throw DivisionByZero();
    if (num_.is_zero()) {
        den_ = MultiPoly::constant(ctx(), Rational(1));
        return;
    }
    if (den_.is_constant()) {
        num_.mul_rational(Rational(1) / den_.constant_value());
        den_ = MultiPoly::constant(ctx(), Rational(1));
        return;
    }
    MultiPoly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = *num_.divide_exact(g);
        den_ = *den_.divide_exact(g);
    }
    if (den_.is_constant()) {
        num_.mul_rational(Rational(1) / den_.constant_value());
        den_ = MultiPoly::constant(ctx(), Rational(1));
        return;
    }
    auto [c, prim] = den_.primitive_decomposition();
    den_ = std::move(prim);
    num_.mul_rational(Rational(1) / c);
}

Scalar Scalar::operator-() const {
    Scalar s(*this);
    s.num_ = -s.num_;
    return s;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    require_same_ctx(ctx(), rhs.ctx());
    if (rhs.is_zero()) return *this;
    if (is_zero()) return *this = rhs;
    if (den_.is_one() && rhs.den_.is_one()) {
        num_ += rhs.num_;
        return *this;
    }
    MultiPoly g = poly_gcd(den_, rhs.den_);
    if (g.is_one()) {
        num_ = num_ * rhs.den_ + rhs.num_ * den_;
        if (num_.is_zero()) {
            den_ = MultiPoly::constant(ctx(), Rational(1));
            return *this;
        }
        den_ = den_ * rhs.den_;
        return *this;
    }
    MultiPoly b1 = *den_.divide_exact(g);
    MultiPoly d1 = *rhs.den_.divide_exact(g);
    num_ = num_ * d1 + rhs.num_ * b1;
    if (num_.is_zero()) {
        den_ = MultiPoly::constant(ctx(), Rational(1));
        return *this;
    }
    MultiPoly h = poly_gcd(num_, g);
    if (!h.is_one()) {
        num_ = *num_.divide_exact(h);
        g = *g.divide_exact(h);
    }
    den_ = g * b1 * d1;
    if (den_.is_constant()) {
        num_.mul_rational(Rational(1) / den_.constant_value());
        den_ = MultiPoly::constant(ctx(), Rational(1));
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
    require_same_ctx(ctx(), rhs.ctx());
    if (is_zero()) return *this;
    if (rhs.is_zero()) {
        num_ = MultiPoly(ctx());
        den_ = MultiPoly::constant(ctx(), Rational(1));
        return *this;
    }
    if (den_.is_one() && rhs.den_.is_one()) {
        num_ = num_ * rhs.num_;
        return *this;
    }
    MultiPoly g1 = poly_gcd(num_, rhs.den_);
    MultiPoly g2 = poly_gcd(rhs.num_, den_);
    MultiPoly a = g1.is_one() ? num_ : *num_.divide_exact(g1);
    MultiPoly c = g2.is_one() ? rhs.num_ : *rhs.num_.divide_exact(g2);
    MultiPoly b = g2.is_one() ? den_ : *den_.divide_exact(g2);
    MultiPoly d = g1.is_one() ? rhs.den_ : *rhs.den_.divide_exact(g1);
    num_ = a * c;
    den_ = b * d;
    if (den_.is_constant()) {
        num_.mul_rational(Rational(1) / den_.constant_value());
        den_ = MultiPoly::constant(ctx(), Rational(1));
    } else {
        auto [cf, prim] = den_.primitive_decomposition();
        if (cf != 1) {
            den_ = std::move(prim);
            num_.mul_rational(Rational(1) / cf);
        }
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

Scalar& Scalar::mul_rational(const Rational& c) {
    if (c == 0) {
        num_ = MultiPoly(ctx());
        den_ = MultiPoly::constant(ctx(), Rational(1));
        return *this;
    }
    num_.mul_rational(c);
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    Scalar s(ctx());
    s.num_ = den_;
    s.den_ = num_;
    auto [c, prim] = s.den_.primitive_decomposition();
    s.den_ = std::move(prim);
    s.num_.mul_rational(Rational(1) / c);
    return s;
}

Scalar Scalar::pow(long e) const {
    if (e == 0) return one(ctx());
    Scalar base = e < 0 ? inverse() : *this;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    Scalar r = one(ctx());
    while (k > 0) {
        if (k & 1ul) r *= base;
        k >>= 1ul;
        if (k > 0) base *= base;
    }
    return r;
}

bool Scalar::operator==(const Scalar& rhs) const {
    return num_ == rhs.num_ && den_ == rhs.den_;
}

namespace {

Scalar eval_poly(const MultiPoly& p, const std::vector<Scalar>& images, const Ctx& target) {
    Scalar acc = Scalar::zero(target);
    if (p.is_zero()) return acc;
    const std::size_t n = p.arity();
    std::vector<std::vector<Scalar>> pows(n);
    for (std::size_t i = 0; i < n; ++i) pows[i].push_back(Scalar::one(target));
    for (const auto& [e, c] : p.terms()) {
        Scalar term(target, c);
        for (std::size_t i = 0; i < n; ++i) {
            const auto k = static_cast<std::size_t>(e[i]);
            while (pows[i].size() <= k) pows[i].push_back(pows[i].back() * images[i]);
            if (k > 0) term *= pows[i][k];
        }
        acc += term;
    }
    return acc;
}

}  // namespace

Scalar Scalar::substitute(const std::vector<Scalar>& images, const Ctx& target) const {
    if (images.size() != num_.arity())
        throw Error("substitute: expected " + std::to_string(num_.arity()) + " images");
    for (const auto& im : images) require_same_ctx(im.ctx(), target);
    Scalar nv = eval_poly(num_, images, target);
    Scalar dv = eval_poly(den_, images, target);
    if (dv.is_zero()) throw DivisionByZero("substitution hits a pole of " + str());
    return nv / dv;
}

Scalar Scalar::extend_to(const Ctx& wider) const {
    const std::size_t n = num_.arity();
    if (wider->size() < n) throw ContextMismatch();
    for (std::size_t i = 0; i < n; ++i)
        if (wider->name(i) != ctx()->name(i)) throw ContextMismatch();
    auto lift = [&](const MultiPoly& p) {
        MultiPoly out(wider);
        for (const auto& [e, c] : p.terms()) {
            ExpVec ne(wider->size(), 0);
            std::copy(e.begin(), e.end(), ne.begin());
            out.add_term(ne, c);
        }
        return out;
    };
    Scalar s(wider);
    s.num_ = lift(num_);
    s.den_ = lift(den_);
    return s;
}

Scalar Scalar::restrict_to(const Ctx& narrower) const {
    const std::size_t n = narrower->size();
    if (num_.arity() < n) throw ContextMismatch();
    for (std::size_t i = 0; i < n; ++i)
        if (narrower->name(i) != ctx()->name(i)) throw ContextMismatch();
    auto drop = [&](const MultiPoly& p) {
        MultiPoly out(narrower);
        for (const auto& [e, c] : p.terms()) {
            for (std::size_t i = n; i < e.size(); ++i)
                if (e[i] != 0)
                    throw Error("restrict_to: value depends on " + ctx()->name(i));
            ExpVec ne(e.begin(), e.begin() + static_cast<long>(n));
            out.add_term(ne, c);
        }
        return out;
    };
    Scalar s(narrower);
    s.num_ = drop(num_);
    s.den_ = drop(den_);
    return s;
}

std::string Scalar::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

// ---------------------------------------------------------------------------
// expression parser

namespace {

struct Parser {
    const Ctx& ctx;
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    Scalar parse_expr() {
        Scalar v = parse_term();
        while (true) {
            if (eat('+'))
                v += parse_term();
            else if (eat('-'))
                v -= parse_term();
            else
                return v;
        }
    }

    Scalar parse_term() {
        Scalar v = parse_factor();
        while (true) {
            if (eat('*'))
                v *= parse_factor();
            else if (eat('/'))
                v /= parse_factor();
            else
                return v;
        }
    }

    Scalar parse_factor() {
        if (eat('-')) return -parse_factor();
        if (eat('+')) return parse_factor();
        Scalar base = parse_base();
        if (eat('^')) {
            bool neg = eat('-');
            long e = parse_integer();
            return base.pow(neg ? -e : e);
        }
        return base;
    }

    long parse_integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw ParseError("expected integer at offset " + std::to_string(pos));
        return std::stol(std::string(text.substr(start, pos - start)));
    }

    Scalar parse_base() {
        skip_ws();
        if (pos >= text.size()) throw ParseError("unexpected end of input");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            Scalar v = parse_expr();
            if (!eat(')')) throw ParseError("missing ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            return Scalar(ctx, rat_parse(std::string(text.substr(start, pos - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            return Scalar::variable(ctx, text.substr(start, pos - start));
        }
        throw ParseError(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

Scalar parse_scalar(const Ctx& ctx, std::string_view text) {
    Parser p{ctx, text};
    Scalar v = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size())
        throw ParseError("trailing input at offset " + std::to_string(p.pos));
    return v;
}

Scalar sum_scalars(const Ctx& ctx, const std::vector<Scalar>& terms) {
    MultiPoly common = MultiPoly::constant(ctx, Rational(1));
    for (const auto& t : terms) {
        require_same_ctx(ctx, t.ctx());
        if (t.den().is_one()) continue;
        MultiPoly g = poly_gcd(common, t.den());
        common = common * (*t.den().divide_exact(g));
    }
    MultiPoly num(ctx);
    for (const auto& t : terms) {
        if (t.is_zero()) continue;
        num += t.num() * (*common.divide_exact(t.den()));
    }
    return Scalar::from_fraction(std::move(num), std::move(common));
}

}  // namespace betajack
