#ifndef GITSTAB_TESTS_SUPPORT_HPP
#define GITSTAB_TESTS_SUPPORT_HPP

#include "gitstab/parser.hpp"
#include "gitstab/polynomial.hpp"

namespace gitstab::testing {

/// Deterministic generator for property-style tests.
struct Rng {
    unsigned long s = 0x9e3779b97f4a7c15ull;
    explicit Rng(unsigned long seed) : s(seed ? seed : 1) {}

    unsigned long next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(next() % static_cast<unsigned long>(hi - lo + 1));
    }
    Rational rational(long span = 9) {
        return Rational(range(-span, span), range(1, 4));
    }
    Monomial monomial(std::size_t nvars, int maxdeg) {
        Monomial m = Monomial::one(nvars);
        int deg = static_cast<int>(range(0, maxdeg));
        for (int i = 0; i < deg; ++i) m.e[static_cast<std::size_t>(range(0, static_cast<long>(nvars) - 1))] += 1;
        return m;
    }
    Polynomial<Rational> poly(const RingPtr& ring, int maxterms, int maxdeg) {
        std::vector<Polynomial<Rational>::Term> ts;
        long n = range(1, maxterms);
        for (long i = 0; i < n; ++i) ts.emplace_back(monomial(ring->nvars(), maxdeg), rational());
        return Polynomial<Rational>::from_terms(ring, std::move(ts));
    }
    Polynomial<Rational> homogeneous_poly(const RingPtr& ring, int maxterms, int deg) {
        std::vector<Polynomial<Rational>::Term> ts;
        long n = range(1, maxterms);
        for (long i = 0; i < n; ++i) {
            Monomial m = Monomial::one(ring->nvars());
            for (int d = 0; d < deg; ++d)
                m.e[static_cast<std::size_t>(range(0, static_cast<long>(ring->nvars()) - 1))] += 1;
            ts.emplace_back(std::move(m), rational());
        }
        return Polynomial<Rational>::from_terms(ring, std::move(ts));
    }
};

} // namespace gitstab::testing

#endif
