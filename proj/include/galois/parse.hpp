#pragma once

#include <cctype>
#include <set>
#include <sstream>
#include <string>
#include <string_view>

#include "galois/bigint.hpp"
#include "galois/error.hpp"
#include "galois/poly.hpp"

namespace galois {

/// Syntax error with the byte offset and the set of tokens that would have
/// been accepted there.
class parse_error : public error {
public:
    parse_error(std::size_t offset, std::set<std::string> expected, const std::string& what)
        : error(describe(offset, expected, what)), offset_(offset), expected_(std::move(expected))
    {
    }

    std::size_t offset() const { return offset_; }
    const std::set<std::string>& expected() const { return expected_; }

private:
    static std::string describe(std::size_t offset, const std::set<std::string>& expected, const std::string& what)
    {
        std::string s = what + " at offset " + std::to_string(offset);
        if (!expected.empty()) {
            s += "; expected one of:";
            for (const auto& e : expected)
                s += " " + e;
        }
        return s;
    }

    std::size_t offset_;
    std::set<std::string> expected_;
};

struct PolyExpr {
    std::string source;
    RatPoly poly;
    std::string variable = "x";

    bool integral() const { return common_denominator(poly) == 1; }
    IntPoly as_int() const { return to_int(poly); }
};

namespace detail {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : s_(text) {}

    PolyExpr run()
    {
        PolyExpr out;
        out.source = std::string(s_);
        skip();
        if (pos_ == s_.size())
            throw parse_error(pos_, start_set(), "empty expression");
        out.poly = expr();
        skip();
        if (pos_ != s_.size())
            throw parse_error(pos_, {"+", "-", "*", "/", "^", "end of input"}, "unexpected character");
        if (!var_.empty())
            out.variable = var_;
        return out;
    }

private:
    static std::set<std::string> start_set() { return {"number", "variable", "("}; }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool peek(char c)
    {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool starts_factor()
    {
        skip();
        if (pos_ >= s_.size())
            return false;
        const unsigned char c = static_cast<unsigned char>(s_[pos_]);
        return std::isdigit(c) || std::isalpha(c) || c == '_' || c == '(';
    }

    RatPoly expr()
    {
        RatPoly acc;
        bool first = true;
        for (;;) {
            skip();
            bool negative = false;
            if (peek('+') || peek('-')) {
                negative = s_[pos_] == '-';
                ++pos_;
            } else if (!first) {
                return acc;
            }
            RatPoly t = term();
            acc = negative ? acc - t : acc + t;
            first = false;
        }
    }

    RatPoly term()
    {
        RatPoly acc = power();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                acc *= power();
            } else if (peek('/')) {
                const std::size_t at = ++pos_;
                RatPoly d = power();
                if (d.degree() != 0)
                    throw parse_error(at, {"nonzero constant"}, "division by a non-constant");
                acc *= BigRat(1 / d[0]);
            } else if (starts_factor()) {
                acc *= power();
            } else {
                return acc;
            }
        }
    }

    RatPoly power()
    {
        RatPoly base = primary();
        if (peek('^')) {
            ++pos_;
            skip();
            const std::size_t at = pos_;
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                throw parse_error(at, {"nonnegative integer"}, "bad exponent");
            std::size_t end = pos_;
            while (end < s_.size() && std::isdigit(static_cast<unsigned char>(s_[end])))
                ++end;
            const std::string digits(s_.substr(pos_, end - pos_));
            if (digits.size() > 6)
                throw parse_error(at, {"nonnegative integer"}, "exponent too large");
            pos_ = end;
            base = pow(base, static_cast<unsigned>(std::stoul(digits)));
        }
        return base;
    }

    RatPoly primary()
    {
        skip();
        if (pos_ >= s_.size())
            throw parse_error(pos_, start_set(), "unexpected end of input");
        const unsigned char c = static_cast<unsigned char>(s_[pos_]);
        if (std::isdigit(c)) {
            std::size_t end = pos_;
            while (end < s_.size() && std::isdigit(static_cast<unsigned char>(s_[end])))
                ++end;
            BigInt v(std::string(s_.substr(pos_, end - pos_)));
            pos_ = end;
            return RatPoly::constant(BigRat(v));
        }
        if (std::isalpha(c) || c == '_') {
            const std::size_t at = pos_;
            std::size_t end = pos_;
            while (end < s_.size()
                   && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_'))
                ++end;
            std::string name(s_.substr(pos_, end - pos_));
            if (var_.empty())
                var_ = name;
            else if (name != var_)
                throw parse_error(at, {var_}, "second variable '" + name + "'");
            pos_ = end;
            return RatPoly::x();
        }
        if (c == '(') {
            ++pos_;
            RatPoly inner = expr();
            if (!peek(')'))
                throw parse_error(pos_, {")"}, "unbalanced parenthesis");
            ++pos_;
            return inner;
        }
        throw parse_error(pos_, start_set(), "unexpected character");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    std::string var_;
};

} // namespace detail

/// Single-variable polynomial with integer or rational coefficients:
/// + - * / ^, parentheses, implicit multiplication, nonnegative integer
/// exponents.
inline PolyExpr parse_poly(std::string_view text) { return detail::PolyParser(text).run(); }

/// Canonical text, highest degree first: "x^3+x+3", "-(3/2)x^2+1/2".
inline std::string format_poly(const RatPoly& f, const std::string& var = "x")
{
    if (f.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = f.degree(); i >= 0; --i) {
        const BigRat& c = f[static_cast<std::size_t>(i)];
        if (c == 0)
            continue;
        const bool neg = c < 0;
        const BigRat a = neg ? BigRat(-c) : c;
        if (neg)
            out << '-';
        else if (!first)
            out << '+';
        first = false;
        if (i == 0) {
            out << a.get_str();
            continue;
        }
        if (a != 1) {
            if (a.get_den() == 1)
                out << a.get_str();
            else
                out << '(' << a.get_str() << ')';
        }
        out << var;
        if (i > 1)
            out << '^' << i;
    }
    return out.str();
}

inline std::string format_poly(const IntPoly& f, const std::string& var = "x") { return format_poly(to_rat(f), var); }

} // namespace galois
