#ifndef GITSTAB_PARSER_HPP
#define GITSTAB_PARSER_HPP

#include <cctype>
#include <map>
#include <string>

#include "gitstab/errors.hpp"
#include "gitstab/polynomial.hpp"
#include "gitstab/ratfun.hpp"

namespace gitstab {

// Polynomial text grammar (EBNF):
//   expr   := [ '-' ] term { ( '+' | '-' ) term }
//   term   := factor { ( '*' | '/' ) factor }
//   factor := atom [ '^' integer ]
//   atom   := integer | symbol | '(' expr ')'
// Symbols must be declared in the ring (variables or parameters). '/' is
// ordinary field division and is legal only when the divisor is free of ring
// variables; rational literals are just integer / integer.

namespace detail {

template <class K>
struct SymbolResolver;

template <>
struct SymbolResolver<Rational> {
    explicit SymbolResolver(const RingPtr&) {}
    bool resolve_param(const std::string&, Rational&) const { return false; }
};

template <>
struct SymbolResolver<RatFun> {
    explicit SymbolResolver(const RingPtr& ring)
        : pring(ring->params.empty() ? empty_param_ring() : make_ring(ring->params)) {}
    bool resolve_param(const std::string& name, RatFun& out) const {
        int i = pring->var_index(name);
        if (i < 0) return false;
        out = RatFun::parameter(pring, i);
        return true;
    }
    RingPtr pring;
};

template <class K>
class PolyParser {
  public:
    PolyParser(const std::string& text, RingPtr ring,
               const std::map<std::string, K>* bindings = nullptr)
        : text_(text), ring_(std::move(ring)), sym_(ring_), bindings_(bindings) {}

    Polynomial<K> parse() {
        Polynomial<K> p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return p;
    }

  private:
    using Poly = Polynomial<K>;

    Poly expr() {
        skip_ws();
        bool neg = accept('-');
        Poly p = term();
        if (neg) p = -p;
        for (;;) {
            skip_ws();
            if (accept('+'))
                p = p + term();
            else if (accept('-'))
                p = p - term();
            else
                break;
        }
        return p;
    }

    Poly term() {
        Poly p = factor();
        for (;;) {
            skip_ws();
            if (accept('*')) {
                p = p * factor();
            } else if (accept('/')) {
                Poly d = factor();
                if (!d.is_constant()) fail("division by an expression involving ring variables");
                K c = d.constant_value();
                if (c.is_zero()) fail("division by zero");
                p = p * c.inv();
            } else {
                break;
            }
        }
        return p;
    }

    Poly factor() {
        Poly a = atom();
        skip_ws();
        if (accept('^')) {
            long e = integer();
            if (e < 0) fail("negative exponent");
            a = a.pow(static_cast<int>(e));
        }
        return a;
    }

    Poly atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            skip_ws();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long v = integer();
            return Poly::constant(ring_, K(v));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = symbol();
            int vi = ring_->var_index(name);
            if (vi >= 0) return Poly::variable(ring_, vi);
            if (bindings_) {
                auto it = bindings_->find(name);
                if (it != bindings_->end()) return Poly::constant(ring_, it->second);
            }
            K pc(0);
            if (sym_.resolve_param(name, pc)) return Poly::constant(ring_, pc);
            if (ring_->param_index(name) >= 0)
                fail("parameter '" + name + "' needs a parameter-field coefficient type");
            fail("undeclared symbol '" + name + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
        return Poly::zero(ring_);  // unreachable
    }

    long integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return std::stol(text_.substr(start, pos_ - start));
    }

    std::string symbol() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
                text_[pos_] == '\''))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("parse error at offset " + std::to_string(pos_) + ": " + why +
                         " in \"" + text_ + "\"");
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    RingPtr ring_;
    SymbolResolver<K> sym_;
    const std::map<std::string, K>* bindings_ = nullptr;
};

} // namespace detail

template <class K>
Polynomial<K> parse_polynomial(const std::string& text, const RingPtr& ring) {
    return detail::PolyParser<K>(text, ring).parse();
}

/// Variant with extra symbol bindings (catalog parameters bound to field
/// values, symbolic or specialized).
template <class K>
Polynomial<K> parse_polynomial(const std::string& text, const RingPtr& ring,
                               const std::map<std::string, K>& bindings) {
    return detail::PolyParser<K>(text, ring, &bindings).parse();
}

} // namespace gitstab

#endif
