#pragma once

#include <string>
#include <vector>

#include "betajack/scalar.hpp"

namespace betajack {

// Integer partition: weakly decreasing positive parts, no trailing zeros.
// Indexing part(i) beyond the length yields 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    static Partition parse(const std::string& text);  // "3,1,1"; "" is empty

    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const {  // 1-based
        return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }
    const std::vector<int>& parts() const { return parts_; }

    Partition conjugate() const;
    int multiplicity(int c) const;

    // Enumeration order: by weight, then reverse lexicographic within a
    // weight, i.e. (n) first and (1^n) last. Table iteration, rendering and
    // golden files all follow this order.
    bool operator<(const Partition& rhs) const;
    bool operator==(const Partition& rhs) const { return parts_ == rhs.parts_; }
    bool operator!=(const Partition& rhs) const { return !(*this == rhs); }

    Partition with_part(int p) const;
    Partition without_part(int p) const;  // removes one copy; throws if absent
    Partition concat(const Partition& rhs) const;

    std::string str() const;

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

struct Cell {
    int row = 1, col = 1;  // 1-based
};

struct CellStats {
    int arm = 0, leg = 0;
    Scalar content;  // alpha*(col-1) - (row-1)
};

// All partitions of n in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);

std::vector<Cell> cells_of(const Partition& lambda);

CellStats cell_stats(const Partition& lambda, const Cell& cell, const Scalar& alpha);
Scalar cell_content(const Cell& cell, const Scalar& alpha);

// (h, h') with h = prod(alpha*arm + leg + 1), h' = prod(alpha*arm + leg + alpha).
std::pair<Scalar, Scalar> hook_products(const Partition& lambda, const Scalar& alpha);

Rational z_of(const Partition& lambda);

// mu dominated by lambda; requires |mu| == |lambda|.
bool dominance_leq(const Partition& mu, const Partition& lambda);

// hat(lambda)_i = lambda_1 - lambda_{n-i+1}; requires length <= n.
Partition hat_partition(const Partition& lambda, int n);

Rational factorial(int n);

}  // namespace betajack
