#ifndef GITSTAB_ORDER_HPP
#define GITSTAB_ORDER_HPP

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "gitstab/errors.hpp"
#include "gitstab/monomial.hpp"

namespace gitstab {

enum class OrderKind { GLex, Lex, WeightedGLex, Block };

/// Total multiplicative monomial order.
///
/// WeightedGLex(w) compares total degree first, then the w-weight (higher
/// weight is larger), then lexicographically along `priority`.
///
/// The tie-break priority is a permutation of the variable indices; the
/// default is declaration order. For the weighted orders driving the
/// stability computations the priority is pinned empirically (see
/// pinned_priority below): the displayed degree-2/3 standard-monomial sets
/// of the cat-eye, ox, and intermediate-limit curves all reproduce exactly
/// under (x1, x0, x2, x3, ...), and an exhaustive scan shows plain
/// declaration order does not (one weight-8 tie class in the cat-eye at
/// degree 3 separates them).
struct MonomialOrder {
    OrderKind kind = OrderKind::GLex;
    std::vector<long> weights;  // WeightedGLex only
    std::vector<int> priority;  // empty = declaration order
    int block_split = 0;        // Block only: first `block_split` variables eliminated

    static MonomialOrder glex() { return MonomialOrder{}; }
    static MonomialOrder lex() { return MonomialOrder{OrderKind::Lex, {}, {}, 0}; }
    static MonomialOrder weighted_glex(std::vector<long> w, std::vector<int> prio = {}) {
        return MonomialOrder{OrderKind::WeightedGLex, std::move(w), std::move(prio), 0};
    }
    /// Elimination of the first `split` variables: block GLex on them, then
    /// GLex on the rest. Any monomial involving an eliminated variable beats
    /// any that does not.
    static MonomialOrder block(int split) { return MonomialOrder{OrderKind::Block, {}, {}, split}; }

    /// Frozen tie-break for the weighted stability orders: second declared
    /// variable first, then declaration order.
    static std::vector<int> pinned_priority(std::size_t nvars) {
        std::vector<int> p(nvars);
        std::iota(p.begin(), p.end(), 0);
        if (nvars >= 2) std::swap(p[0], p[1]);
        return p;
    }
    static MonomialOrder weighted_glex_pinned(std::vector<long> w) {
        auto prio = pinned_priority(w.size());
        return weighted_glex(std::move(w), std::move(prio));
    }

    bool is_graded() const { return kind == OrderKind::GLex || kind == OrderKind::WeightedGLex; }

    /// -1 / 0 / +1 for a < b / a == b / a > b.
    int compare(const Monomial& a, const Monomial& b) const {
        switch (kind) {
            case OrderKind::Lex:
                return lex_cmp(a, b, 0, a.nvars());
            case OrderKind::GLex: {
                int da = a.degree(), db = b.degree();
                if (da != db) return da < db ? -1 : 1;
                return lex_cmp(a, b, 0, a.nvars());
            }
            case OrderKind::WeightedGLex: {
                int da = a.degree(), db = b.degree();
                if (da != db) return da < db ? -1 : 1;
                long wa = a.weight(weights), wb = b.weight(weights);
                if (wa != wb) return wa < wb ? -1 : 1;
                return lex_cmp(a, b, 0, a.nvars());
            }
            case OrderKind::Block: {
                int da = 0, db = 0;
                for (int i = 0; i < block_split; ++i) {
                    da += a.e[i];
                    db += b.e[i];
                }
                if (da != db) return da < db ? -1 : 1;
                if (int c = lex_cmp(a, b, 0, static_cast<std::size_t>(block_split))) return c;
                int ra = a.degree() - da, rb = b.degree() - db;
                if (ra != rb) return ra < rb ? -1 : 1;
                return lex_cmp(a, b, static_cast<std::size_t>(block_split), a.nvars());
            }
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    std::string cache_key() const {
        std::ostringstream os;
        os << static_cast<int>(kind) << '|';
        for (long w : weights) os << w << ',';
        os << '|';
        for (int p : priority) os << p << ',';
        os << '|' << block_split;
        return os.str();
    }

  private:
    int lex_cmp(const Monomial& a, const Monomial& b, std::size_t from, std::size_t to) const {
        if (priority.empty()) {
            for (std::size_t i = from; i < to; ++i)
                if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
            return 0;
        }
        for (int i : priority) {
            auto u = static_cast<std::size_t>(i);
            if (u < from || u >= to) continue;
            if (a.e[u] != b.e[u]) return a.e[u] < b.e[u] ? -1 : 1;
        }
        return 0;
    }
};

/// Strict-less functor for ordered containers keyed by monomials.
struct MonomialLess {
    const MonomialOrder* ord = nullptr;
    bool operator()(const Monomial& a, const Monomial& b) const { return ord->compare(a, b) < 0; }
};

} // namespace gitstab

#endif
