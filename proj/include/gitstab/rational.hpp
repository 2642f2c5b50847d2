#ifndef GITSTAB_RATIONAL_HPP
#define GITSTAB_RATIONAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <ostream>
#include <string>

#include "gitstab/errors.hpp"

namespace gitstab {

/// Exact rational scalar. Always canonical: lowest terms, denominator > 0.
/// Thin value wrapper over GMP's mpq_class so that generic code sees plain
/// (non expression-template) semantics.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw DomainError("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    static Rational from_string(const std::string& s) {
        mpq_class v;
        if (v.set_str(s, 10) != 0) throw ParseError("bad rational literal: '" + s + "'");
        if (v.get_den() == 0) throw DomainError("rational with zero denominator: '" + s + "'");
        v.canonicalize();
        return Rational(v);
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sgn() const { return ::sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw DomainError("division by zero");
        return Rational(mpq_class(v_ / o.v_));
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    Rational inv() const {
        if (is_zero()) throw DomainError("inverse of zero");
        return Rational(mpq_class(1 / v_));
    }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    std::string str() const { return v_.get_str(); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    std::size_t hash() const {
        std::hash<std::string> h;
        return h(str());
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

  private:
    mpq_class v_;
};

inline Rational pow(const Rational& b, int e) {
    if (e < 0) return pow(b.inv(), -e);
    Rational r(1), a = b;
    while (e > 0) {
        if (e & 1) r *= a;
        a *= a;
        e >>= 1;
    }
    return r;
}

} // namespace gitstab

#endif
