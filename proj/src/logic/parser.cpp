// Copyright (C) 2026 The tame kernel developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "logic/parser.hpp"

#include <cctype>

#include "core/error.hpp"

namespace tame {

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool try_consume(const std::string& tok) {
        skip_ws();
        if (s.compare(pos, tok.size(), tok) == 0) {
            pos += tok.size();
            return true;
        }
        return false;
    }
    bool try_keyword(const std::string& kw) {
        skip_ws();
        if (s.compare(pos, kw.size(), kw) != 0) return false;
        std::size_t end = pos + kw.size();
        if (end < s.size() && (std::isalnum(static_cast<unsigned char>(s[end])) || s[end] == '_'))
            return false;
        pos += kw.size();
        return true;
    }
    [[noreturn]] void fail(const std::string& msg) { throw SyntaxError(msg, pos); }
};

struct Parser {
    Lexer lex;

    explicit Parser(const std::string& text) : lex{text} {}

    // formula with precedence:  ->  lowest,  \/ , /\ , prefix (~, E, A).
    Formula parse_formula() { return parse_implies(); }

    Formula parse_implies() {
        Formula lhs = parse_or();
        if (lex.try_consume("->")) {
            Formula rhs = parse_implies(); // right associative
            return f_implies(lhs, rhs);
        }
        return lhs;
    }

    Formula parse_or() {
        Formula lhs = parse_and();
        while (lex.try_consume("\\/")) lhs = f_or(lhs, parse_and());
        return lhs;
    }

    Formula parse_and() {
        Formula lhs = parse_unary();
        while (lex.try_consume("/\\")) lhs = f_and(lhs, parse_unary());
        return lhs;
    }

    Formula parse_unary() {
        if (lex.try_consume("~")) return f_not(parse_unary());
        if (lex.try_keyword("E")) return parse_quant(true);
        if (lex.try_keyword("A")) return parse_quant(false);
        if (lex.try_keyword("true")) return f_true();
        if (lex.try_keyword("false")) return f_false();
        if (lex.peek() == '(') {
            // Could be a parenthesized formula or a parenthesized polynomial
            // inside an atom; try the formula reading first.
            std::size_t save = lex.pos;
            ++lex.pos;
            try {
                Formula inner = parse_formula();
                if (!lex.try_consume(")")) lex.fail("expected ')'");
                // If a polynomial operator or relation follows, this was a
                // polynomial after all.
                char c = lex.peek();
                if (c == '+' || c == '-' || c == '*' || c == '^' || c == '=' || c == '<' ||
                    c == '>' || c == '!')
                    throw SyntaxError("atom context", lex.pos);
                return inner;
            } catch (const SyntaxError&) {
                lex.pos = save;
            }
        }
        return parse_atom();
    }

    Formula parse_quant(bool existential) {
        unsigned v = parse_var_index();
        if (!lex.try_consume(".")) lex.fail("expected '.' after quantified variable");
        Formula body = parse_formula(); // maximal scope
        return existential ? f_exists(v, body) : f_forall(v, body);
    }

    unsigned parse_var_index() {
        lex.skip_ws();
        if (lex.pos >= lex.s.size() || lex.s[lex.pos] != 'x')
            lex.fail("expected a variable of the form x<k>");
        ++lex.pos;
        if (lex.pos >= lex.s.size() || !std::isdigit(static_cast<unsigned char>(lex.s[lex.pos])))
            lex.fail("expected a variable index");
        unsigned long k = 0;
        while (lex.pos < lex.s.size() && std::isdigit(static_cast<unsigned char>(lex.s[lex.pos]))) {
            k = k * 10 + static_cast<unsigned long>(lex.s[lex.pos] - '0');
            ++lex.pos;
        }
        if (k == 0) lex.fail("variable indices start at 1");
        return static_cast<unsigned>(k - 1);
    }

    Formula parse_atom() {
        Polynomial lhs = parse_poly();
        Rel rel;
        bool flip = false;
        if (lex.try_consume("<=")) {
            rel = Rel::le;
        } else if (lex.try_consume(">=")) {
            rel = Rel::le;
            flip = true;
        } else if (lex.try_consume("!=")) {
            rel = Rel::neq;
        } else if (lex.try_consume("=")) {
            rel = Rel::eq;
        } else if (lex.try_consume("<")) {
            rel = Rel::lt;
        } else if (lex.try_consume(">")) {
            rel = Rel::lt;
            flip = true;
        } else {
            lex.fail("expected a relation symbol");
        }
        Polynomial rhs = parse_poly();
        Polynomial diff = flip ? rhs - lhs : lhs - rhs;
        return f_atom(std::move(diff), rel);
    }

    // poly := term (("+"|"-") term)*
    Polynomial parse_poly() {
        bool neg = false;
        while (true) {
            if (lex.try_consume("+")) continue;
            if (lex.try_consume("-")) {
                neg = !neg;
                continue;
            }
            break;
        }
        Polynomial acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            if (lex.try_consume("+")) {
                acc = acc + parse_term();
            } else if (lex.try_consume("-")) {
                acc = acc - parse_term();
            } else {
                break;
            }
        }
        return acc;
    }

    // term := factor ("*" factor)*
    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (lex.try_consume("*")) acc = acc * parse_factor();
        return acc;
    }

    // factor := base ("^" nat)?
    Polynomial parse_factor() {
        Polynomial base = parse_base();
        if (lex.try_consume("^")) {
            lex.skip_ws();
            if (lex.pos >= lex.s.size() || !std::isdigit(static_cast<unsigned char>(lex.s[lex.pos])))
                lex.fail("expected an exponent");
            unsigned long e = 0;
            while (lex.pos < lex.s.size() &&
                   std::isdigit(static_cast<unsigned char>(lex.s[lex.pos]))) {
                e = e * 10 + static_cast<unsigned long>(lex.s[lex.pos] - '0');
                ++lex.pos;
            }
            base = base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Polynomial parse_base() {
        lex.skip_ws();
        if (lex.pos >= lex.s.size()) lex.fail("unexpected end of input");
        char c = lex.s[lex.pos];
        if (c == '(') {
            ++lex.pos;
            Polynomial p = parse_poly();
            if (!lex.try_consume(")")) lex.fail("expected ')'");
            return p;
        }
        if (c == '-') {
            ++lex.pos;
            return -parse_base();
        }
        if (c == 'x') return Polynomial::variable(parse_var_index());
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = parse_integer();
            std::size_t save = lex.pos;
            if (lex.try_consume("/")) {
                lex.skip_ws();
                if (lex.pos < lex.s.size() &&
                    std::isdigit(static_cast<unsigned char>(lex.s[lex.pos]))) {
                    Integer den = parse_integer();
                    Rational q(num, den);
                    q.canonicalize();
                    return Polynomial::constant(q);
                }
                lex.pos = save;
            }
            return Polynomial::constant(Rational(num));
        }
        lex.fail("expected a polynomial");
    }

    Integer parse_integer() {
        lex.skip_ws();
        std::string digits;
        while (lex.pos < lex.s.size() && std::isdigit(static_cast<unsigned char>(lex.s[lex.pos]))) {
            digits += lex.s[lex.pos];
            ++lex.pos;
        }
        if (digits.empty()) lex.fail("expected digits");
        return Integer(digits);
    }
};

} // namespace

Formula parse_formula(const std::string& text) {
    Parser p(text);
    Formula f = p.parse_formula();
    if (!p.lex.eof()) p.lex.fail("trailing input");
    return f;
}

Polynomial parse_polynomial(const std::string& text) {
    Parser p(text);
    Polynomial q = p.parse_poly();
    if (!p.lex.eof()) p.lex.fail("trailing input");
    return q;
}

} // namespace tame
