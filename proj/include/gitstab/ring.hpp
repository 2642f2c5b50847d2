#ifndef GITSTAB_RING_HPP
#define GITSTAB_RING_HPP

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "gitstab/errors.hpp"

namespace gitstab {

/// Ambient ring descriptor: ordered variable names plus the parameter symbols
/// of the coefficient field. Declaration order is the canonical variable
/// order; every monomial order tie-breaks against it unless told otherwise.
struct Ring {
    std::vector<std::string> vars;
    std::vector<std::string> params;

    std::size_t nvars() const { return vars.size(); }

    int var_index(const std::string& name) const {
        auto it = std::find(vars.begin(), vars.end(), name);
        return it == vars.end() ? -1 : static_cast<int>(it - vars.begin());
    }
    int param_index(const std::string& name) const {
        auto it = std::find(params.begin(), params.end(), name);
        return it == params.end() ? -1 : static_cast<int>(it - params.begin());
    }

    bool operator==(const Ring& o) const { return vars == o.vars && params == o.params; }
    bool operator!=(const Ring& o) const { return !(*this == o); }
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> vars, std::vector<std::string> params = {}) {
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) throw DomainError("duplicate variable '" + vars[i] + "'");
    for (const auto& p : params)
        if (std::find(vars.begin(), vars.end(), p) != vars.end())
            throw DomainError("symbol '" + p + "' declared both variable and parameter");
    Ring r;
    r.vars = std::move(vars);
    r.params = std::move(params);
    return std::make_shared<const Ring>(std::move(r));
}

/// Variables x0..x{n-1}.
inline RingPtr make_xring(std::size_t n, std::vector<std::string> params = {}) {
    std::vector<std::string> vs;
    vs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) vs.push_back("x" + std::to_string(i));
    return make_ring(std::move(vs), std::move(params));
}

inline void check_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return;
    if (!a || !b || *a != *b) throw RingMismatchError("operands live in different rings");
}

} // namespace gitstab

#endif
