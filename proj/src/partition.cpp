#include "betajack/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace betajack {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw Error("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw Error("partition parts must be weakly decreasing");
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, ',')) {
        std::size_t k = token.find_first_not_of(" \t");
        if (k == std::string::npos) continue;
        try {
            parts.push_back(std::stoi(token));
        } catch (const std::exception&) {
            throw ParseError("bad partition '" + text + "'");
        }
    }
    try {
        return Partition(std::move(parts));
    } catch (const Error& e) {
        throw ParseError("bad partition '" + text + "': " + e.what());
    }
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> out(static_cast<std::size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++out[static_cast<std::size_t>(j)];
    return Partition(std::move(out));
}

int Partition::multiplicity(int c) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), c));
}

bool Partition::operator<(const Partition& rhs) const {
    if (weight_ != rhs.weight_) return weight_ < rhs.weight_;
    return std::lexicographical_compare(rhs.parts_.begin(), rhs.parts_.end(),
                                        parts_.begin(), parts_.end());
}

Partition Partition::with_part(int p) const {
    std::vector<int> out(parts_);
    out.insert(std::upper_bound(out.begin(), out.end(), p, std::greater<int>()), p);
    Partition r;
    r.parts_ = std::move(out);
    r.weight_ = weight_ + p;
    return r;
}

Partition Partition::without_part(int p) const {
    auto it = std::find(parts_.begin(), parts_.end(), p);
    if (it == parts_.end()) throw Error("partition has no part " + std::to_string(p));
    Partition r;
    r.parts_.assign(parts_.begin(), it);
    r.parts_.insert(r.parts_.end(), std::next(it), parts_.end());
    r.weight_ = weight_ - p;
    return r;
}

Partition Partition::concat(const Partition& rhs) const {
    std::vector<int> out(parts_);
    out.insert(out.end(), rhs.parts_.begin(), rhs.parts_.end());
    std::sort(out.begin(), out.end(), std::greater<int>());
    Partition r;
    r.parts_ = std::move(out);
    r.weight_ = weight_ + rhs.weight_;
    return r;
}

std::string Partition::str() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s;
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw Error("partitions_of: negative n");
    std::vector<Partition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> cur{n};
    while (true) {
        out.push_back(Partition(cur));
        // next partition in descending lex: find rightmost part > 1,
        // decrement, redistribute the remainder greedily.
        int rem = 0;
        while (!cur.empty() && cur.back() == 1) {
            rem += 1;
            cur.pop_back();
        }
        if (cur.empty()) break;
        cur.back() -= 1;
        rem += 1;
        while (rem > 0) {
            int take = std::min(rem, cur.back());
            cur.push_back(take);
            rem -= take;
        }
    }
    return out;
}

std::vector<Cell> cells_of(const Partition& lambda) {
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(lambda.weight()));
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j) out.push_back(Cell{i, j});
    return out;
}

Scalar cell_content(const Cell& cell, const Scalar& alpha) {
    return alpha * Rational(cell.col - 1) - Scalar(alpha.ctx(), Rational(cell.row - 1));
}

CellStats cell_stats(const Partition& lambda, const Cell& cell, const Scalar& alpha) {
    if (cell.row < 1 || cell.col < 1 || cell.col > lambda.part(cell.row))
        throw CellOutOfDiagram(cell.row, cell.col);
    CellStats s;
    s.arm = lambda.part(cell.row) - cell.col;
    s.leg = lambda.conjugate().part(cell.col) - cell.row;
    s.content = cell_content(cell, alpha);
    return s;
}

std::pair<Scalar, Scalar> hook_products(const Partition& lambda, const Scalar& alpha) {
    const Ctx& ctx = alpha.ctx();
    Scalar h = Scalar::one(ctx);
    Scalar hp = Scalar::one(ctx);
    const Partition conj = lambda.conjugate();
    for (int i = 1; i <= lambda.length(); ++i) {
        for (int j = 1; j <= lambda.part(i); ++j) {
            const int arm = lambda.part(i) - j;
            const int leg = conj.part(j) - i;
            Scalar base = alpha * Rational(arm) + Scalar(ctx, Rational(leg));
            h *= base + Scalar::one(ctx);
            hp *= base + alpha;
        }
    }
    return {h, hp};
}

Rational z_of(const Partition& lambda) {
    Rational z(1);
    int i = 1;
    while (i <= lambda.length()) {
        const int c = lambda.part(i);
        int m = 0;
        while (i <= lambda.length() && lambda.part(i) == c) {
            ++m;
            ++i;
        }
        z *= factorial(m);
        for (int k = 0; k < m; ++k) z *= Rational(c);
    }
    return z;
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
    if (mu.weight() != lambda.weight())
        throw SizeMismatch("dominance comparison needs equal sizes: |" + mu.str() + "| vs |" +
                           lambda.str() + "|");
    long pm = 0, pl = 0;
    const int len = std::max(mu.length(), lambda.length());
    for (int i = 1; i <= len; ++i) {
        pm += mu.part(i);
        pl += lambda.part(i);
        if (pm > pl) return false;
    }
    return true;
}

Partition hat_partition(const Partition& lambda, int n) {
    if (lambda.length() > n) throw LengthExceedsN(lambda.length(), n);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) out.push_back(lambda.part(1) - lambda.part(n - i + 1));
    return Partition(std::move(out));
}

Rational factorial(int n) {
    Rational r(1);
    for (int k = 2; k <= n; ++k) r *= Rational(k);
    return r;
}

}  // namespace betajack
