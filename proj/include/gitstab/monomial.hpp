#ifndef GITSTAB_MONOMIAL_HPP
#define GITSTAB_MONOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

namespace gitstab {

/// Exponent vector; length equals the ambient ring's variable count.
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}
    static Monomial one(std::size_t nvars) { return Monomial(std::vector<int>(nvars, 0)); }

    std::size_t nvars() const { return e.size(); }
    int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
    bool is_one() const { return degree() == 0; }

    long weight(const std::vector<long>& w) const {
        long s = 0;
        for (std::size_t i = 0; i < e.size(); ++i) s += w[i] * e[i];
        return s;
    }

    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }

    bool coprime_with(const Monomial& m) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0 && m.e[i] > 0) return false;
        return true;
    }

    Monomial operator*(const Monomial& m) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
        return r;
    }

    /// Exact quotient; caller guarantees m.divides(*this).
    Monomial operator/(const Monomial& m) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= m.e[i];
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
        return r;
    }

    bool operator==(const Monomial& m) const { return e == m.e; }
    bool operator!=(const Monomial& m) const { return e != m.e; }

    struct Hash {
        std::size_t operator()(const Monomial& m) const {
            std::size_t h = 1469598103934665603ull;
            for (int x : m.e) {
                h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
                h *= 1099511628211ull;
            }
            return h;
        }
    };
};

} // namespace gitstab

#endif
