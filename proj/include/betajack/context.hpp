#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "betajack/errors.hpp"

namespace betajack {

class ParamContext;
using Ctx = std::shared_ptr<const ParamContext>;

// Ordered set of named symbolic parameters. Every polynomial and scalar is
// built over exactly one context; the declaration order is the canonical
// variable order used for term ordering, gcd recursion and rendering.
class ParamContext {
public:
    explicit ParamContext(std::vector<std::string> names) : names_(std::move(names)) {}

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<std::size_t> index_of(std::string_view name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        return std::nullopt;
    }

    std::size_t var(std::string_view name) const {
        if (auto i = index_of(name)) return *i;
        throw UnknownParameter(std::string(name));
    }

    bool same_as(const ParamContext& other) const {
        return this == &other || names_ == other.names_;
    }

private:
    std::vector<std::string> names_;
};

inline Ctx make_context(std::vector<std::string> names) {
    return std::make_shared<const ParamContext>(std::move(names));
}

inline void require_same_ctx(const Ctx& a, const Ctx& b) {
    if (a == b) return;
    if (!a || !b || !a->same_as(*b)) throw ContextMismatch();
}

}  // namespace betajack
