#ifndef OCTONODE_PARSE_HPP
#define OCTONODE_PARSE_HPP

#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

#include "octonode/polynomial.hpp"

namespace octonode {

// Polynomial text grammar (whitespace insignificant):
//   poly   := term (('+'|'-') term)*
//   term   := coeff ('*' varpow)* | varpow ('*' varpow)*
//   varpow := ident ('^' uint)?
//   coeff  := int ('/' uint)?
// A leading '-' on the first term is accepted as a convenience; the printer
// only ever emits strings inside the strict grammar.
template <class F>
class PolyParser {
public:
    PolyParser(std::string text, Ring<F> ring, std::size_t line = 1)
        : text_(std::move(text)), ring_(std::move(ring)), line_(line) {}

    Poly<F> parse() {
        skip_ws();
        if (done()) fail("empty polynomial");
        std::vector<std::pair<Mono, typename F::Elem>> acc;
        bool negate = false;
        if (peek() == '-') {
            negate = true;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        parse_term(acc, negate);
        skip_ws();
        while (!done()) {
            char op = peek();
            if (op != '+' && op != '-') fail(std::string("expected '+' or '-', got '") + op + "'");
            ++pos_;
            parse_term(acc, op == '-');
            skip_ws();
        }
        return Poly<F>::from_terms(ring_, std::move(acc));
    }

private:
    std::string text_;
    Ring<F> ring_;
    std::size_t line_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, line_, pos_ + 1);
    }
    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    std::uint64_t parse_uint() {
        skip_ws();
        if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
        std::uint64_t value = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + static_cast<std::uint64_t>(peek() - '0');
            if (value > (1ull << 62)) fail("number too large");
            ++pos_;
        }
        return value;
    }

    std::string parse_ident() {
        skip_ws();
        if (done() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
            fail("expected a variable name");
        std::string name;
        while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
            name += peek();
            ++pos_;
        }
        return name;
    }

    void parse_term(std::vector<std::pair<Mono, typename F::Elem>>& acc, bool negate) {
        skip_ws();
        if (done()) fail("expected a term");
        const auto& field = ring_->field;
        typename F::Elem coeff = field.one();
        std::array<unsigned, kMaxVars> exps{};
        bool any_factor = false;

        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
            bool neg_num = c == '-';
            if (neg_num) ++pos_;
            std::uint64_t num = parse_uint();
            std::uint64_t den = 1;
            skip_ws();
            if (!done() && peek() == '/') {
                ++pos_;
                den = parse_uint();
            }
            if (num > static_cast<std::uint64_t>(INT64_MAX)) fail("coefficient too large");
            std::int64_t snum = static_cast<std::int64_t>(num);
            if (neg_num) snum = -snum;
            coeff = field.from_fraction(snum, den);
            any_factor = true;
            skip_ws();
            while (!done() && peek() == '*') {
                ++pos_;
                parse_varpow(exps);
                skip_ws();
            }
        } else {
            parse_varpow(exps);
            any_factor = true;
            skip_ws();
            while (!done() && peek() == '*') {
                ++pos_;
                parse_varpow(exps);
                skip_ws();
            }
        }
        if (!any_factor) fail("expected a term");
        if (negate) coeff = field.neg(coeff);
        acc.emplace_back(mono_make(std::span<const unsigned>(exps.data(), ring_->nvars())),
                         std::move(coeff));
    }

    void parse_varpow(std::array<unsigned, kMaxVars>& exps) {
        std::size_t at = pos_;
        std::string name = parse_ident();
        int idx = ring_->var_index(name);
        if (idx < 0) {
            pos_ = at;
            fail("unknown variable '" + name + "'");
        }
        unsigned e = 1;
        skip_ws();
        if (!done() && peek() == '^') {
            ++pos_;
            std::uint64_t v = parse_uint();
            if (v > kMaxExponent) fail("exponent exceeds 255");
            e = static_cast<unsigned>(v);
        }
        exps[static_cast<unsigned>(idx)] += e;
        if (exps[static_cast<unsigned>(idx)] > kMaxExponent) fail("exponent exceeds 255");
    }
};

template <class F>
Poly<F> parse_polynomial(const std::string& text, const Ring<F>& ring, std::size_t line = 1) {
    return PolyParser<F>(text, ring, line).parse();
}

namespace detail {
inline bool coeff_text_negative(const std::string& s) { return !s.empty() && s[0] == '-'; }
inline std::string coeff_text_abs(const std::string& s) {
    return coeff_text_negative(s) ? s.substr(1) : s;
}
}  // namespace detail

// Canonical text form: terms in storage order, '+'/'-' separated, exponents
// with '^', explicit '*' between factors. parse(format(p)) == p.
template <class F>
std::string format_polynomial(const Poly<F>& p) {
    if (p.is_zero()) return "0";
    const auto& ring = *p.ring();
    const auto& field = ring.field;
    std::string out;
    for (std::size_t i = 0; i < p.nterms(); ++i) {
        std::string cs = field.to_string(p.coeff(i));
        bool negative = detail::coeff_text_negative(cs);
        std::string mag = detail::coeff_text_abs(cs);
        if (i == 0) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        Mono m = p.mono(i);
        std::string vars;
        for (unsigned v = 0; v < ring.nvars(); ++v) {
            unsigned e = mono_exponent(m, v);
            if (e == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += ring.vars[v];
            if (e > 1) vars += "^" + std::to_string(e);
        }
        if (vars.empty()) {
            out += mag;
        } else if (mag == "1") {
            out += vars;
        } else {
            out += mag + "*" + vars;
        }
    }
    return out;
}

}  // namespace octonode

#endif
