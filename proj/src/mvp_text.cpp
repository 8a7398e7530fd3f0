#include "disord/mvp_text.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>

#include "disord/error.hpp"

namespace disord {

namespace {

struct Token {
    enum class Kind { Number, Symbol, Caret, Star, Plus, Minus, End };
    Kind kind = Kind::End;
    std::string text;
    double num = 0.0;
    std::size_t pos = 0;     // 1-based byte position
    bool ws_before = false;  // whitespace separated this token from the previous one
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) {}

    Token next() {
        bool ws = false;
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) {
            ws = true;
            ++i_;
        }
        Token t;
        t.ws_before = ws;
        t.pos = i_ + 1;
        if (i_ >= src_.size()) return t;
        char c = src_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i_;
            while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) ++i_;
            if (i_ + 1 < src_.size() && src_[i_] == '.' &&
                std::isdigit(static_cast<unsigned char>(src_[i_ + 1]))) {
                ++i_;
                while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) ++i_;
            }
            t.kind = Token::Kind::Number;
            t.text = src_.substr(start, i_ - start);
            t.num = std::strtod(t.text.c_str(), nullptr);
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = i_;
            while (i_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[i_])) || src_[i_] == '_'))
                ++i_;
            t.kind = Token::Kind::Symbol;
            t.text = src_.substr(start, i_ - start);
            return t;
        }
        ++i_;
        switch (c) {
        case '^': t.kind = Token::Kind::Caret; break;
        case '*': t.kind = Token::Kind::Star; break;
        case '+': t.kind = Token::Kind::Plus; break;
        case '-': t.kind = Token::Kind::Minus; break;
        default:
            throw Error(Errc::ParseError, "parse error at position " + std::to_string(t.pos) +
                                              ": unexpected character '" + std::string(1, c) + "'");
        }
        t.text = c;
        return t;
    }

private:
    const std::string& src_;
    std::size_t i_ = 0;
};

[[noreturn]] void fail(const Token& t, const std::string& expected) {
    std::string got = t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'";
    throw Error(Errc::ParseError, "parse error at position " + std::to_string(t.pos) +
                                      ": expected " + expected + ", got " + got);
}

class Parser {
public:
    explicit Parser(const std::string& src) : lex_(src) { cur_ = lex_.next(); }

    Mvp run() {
        std::vector<Term> ts;
        double sign = 1.0;
        if (cur_.kind == Token::Kind::Plus || cur_.kind == Token::Kind::Minus) {
            sign = cur_.kind == Token::Kind::Minus ? -1.0 : 1.0;
            advance();
        }
        ts.push_back(term(sign));
        while (cur_.kind != Token::Kind::End) {
            if (cur_.kind == Token::Kind::Plus)
                sign = 1.0;
            else if (cur_.kind == Token::Kind::Minus)
                sign = -1.0;
            else
                fail(cur_, "'+' or '-'");
            advance();
            ts.push_back(term(sign));
        }
        return Mvp::from_terms(std::move(ts));
    }

private:
    void advance() { cur_ = lex_.next(); }

    // A separator is an explicit '*' or the whitespace already consumed
    // before the upcoming token.
    bool take_sep() {
        if (cur_.kind == Token::Kind::Star) {
            advance();
            return true;
        }
        return cur_.ws_before;
    }

    Term term(double sign) {
        double coeff = 1.0;
        bool have_coeff = false;
        if (cur_.kind == Token::Kind::Number) {
            coeff = cur_.num;
            have_coeff = true;
            advance();
        }
        std::vector<std::pair<std::string, int>> factors;
        if (!have_coeff) {
            if (cur_.kind != Token::Kind::Symbol) fail(cur_, "a coefficient or symbol");
            factors.push_back(factor());
        }
        while (cur_.kind == Token::Kind::Star || cur_.kind == Token::Kind::Symbol) {
            std::size_t sep_pos = cur_.pos;
            if (!take_sep())
                throw Error(Errc::ParseError,
                            "parse error at position " + std::to_string(sep_pos) +
                                ": expected '*' or whitespace between factors");
            if (cur_.kind != Token::Kind::Symbol) fail(cur_, "a symbol");
            factors.push_back(factor());
        }
        return {Monomial::from_factors(factors), sign * coeff};
    }

    std::pair<std::string, int> factor() {
        std::string name = cur_.text;
        advance();
        int exp = 1;
        if (cur_.kind == Token::Kind::Caret) {
            advance();
            int expsign = 1;
            if (cur_.kind == Token::Kind::Minus) {
                expsign = -1;
                advance();
            }
            if (cur_.kind != Token::Kind::Number || cur_.text.find('.') != std::string::npos ||
                cur_.num > 1e9)
                fail(cur_, "an integer exponent");
            exp = expsign * static_cast<int>(cur_.num);
            advance();
        }
        return {name, exp};
    }

    Lexer lex_;
    Token cur_;
};

std::string coeff_text(double c) {
    if (c == std::floor(c) && std::fabs(c) < 9.007199254740992e15) {
        long long n = static_cast<long long>(c);
        return std::to_string(n);
    }
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, c);
    return std::string(buf, end);
}

}  // namespace

Mvp parse_mvp(const std::string& source) { return Parser(source).run(); }

std::string mvp_terms_string(const Mvp& p) {
    if (p.zero()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : p.canonical_terms()) {
        double mag = std::fabs(t.coeff);
        if (first) {
            if (t.coeff < 0) out += '-';
            first = false;
        } else {
            out += t.coeff < 0 ? "  -  " : "  +  ";
        }
        if (t.mono.constant()) {
            out += coeff_text(mag);
        } else if (mag == 1.0) {
            out += t.mono.key();
        } else {
            out += coeff_text(mag);
            out += ' ';
            out += t.mono.key();
        }
    }
    return out;
}

std::string print_mvp(const Mvp& p) {
    return "mvp object algebraically equal to\n" + mvp_terms_string(p);
}

}  // namespace disord
