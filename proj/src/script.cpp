#include "disord/script.hpp"

#include <cctype>
#include <cstdlib>

#include "disord/error.hpp"

namespace disord::script {

namespace {

struct Token {
    enum class Kind { Number, String, Name, Op, End };
    Kind kind = Kind::End;
    std::string text;
    double num = 0.0;
    std::size_t pos = 0;
};

class Lexer {
public:
    Lexer(const std::string& line, int lineno) : line_(line), lineno_(lineno) {
        for (;;) {
            Token t = scan();
            toks_.push_back(t);
            if (t.kind == Token::Kind::End) break;
        }
    }

    const Token& peek(std::size_t ahead = 0) const {
        std::size_t j = std::min(i_ + ahead, toks_.size() - 1);
        return toks_[j];
    }
    Token take() {
        Token t = toks_[i_];
        if (i_ + 1 < toks_.size()) ++i_;
        return t;
    }
    bool at_end() const { return toks_[i_].kind == Token::Kind::End; }

    [[noreturn]] void fail(const Token& t, const std::string& expected) const {
        std::string got = t.kind == Token::Kind::End ? "end of line" : "'" + t.text + "'";
        throw Error(Errc::ParseError, "parse error at line " + std::to_string(lineno_) +
                                          ", column " + std::to_string(t.pos) + ": expected " +
                                          expected + ", got " + got);
    }

private:
    Token scan() {
        while (p_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[p_]))) ++p_;
        Token t;
        t.pos = p_ + 1;
        if (p_ >= line_.size() || line_[p_] == '#') {
            p_ = line_.size();
            return t;
        }
        char c = line_[p_];
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '.' && p_ + 1 < line_.size() &&
             std::isdigit(static_cast<unsigned char>(line_[p_ + 1])))) {
            std::size_t start = p_;
            while (p_ < line_.size() &&
                   (std::isdigit(static_cast<unsigned char>(line_[p_])) || line_[p_] == '.'))
                ++p_;
            t.kind = Token::Kind::Number;
            t.text = line_.substr(start, p_ - start);
            t.num = std::strtod(t.text.c_str(), nullptr);
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = p_;
            while (p_ < line_.size() &&
                   (std::isalnum(static_cast<unsigned char>(line_[p_])) || line_[p_] == '_' ||
                    line_[p_] == '.'))
                ++p_;
            t.kind = Token::Kind::Name;
            t.text = line_.substr(start, p_ - start);
            return t;
        }
        if (c == '"') {
            std::size_t start = ++p_;
            while (p_ < line_.size() && line_[p_] != '"') ++p_;
            if (p_ >= line_.size())
                throw Error(Errc::ParseError, "parse error at line " + std::to_string(lineno_) +
                                                  ", column " + std::to_string(start) +
                                                  ": unterminated string");
            t.kind = Token::Kind::String;
            t.text = line_.substr(start, p_ - start);
            ++p_;
            return t;
        }
        t.kind = Token::Kind::Op;
        auto two = [&](const char* op) {
            if (line_.compare(p_, 2, op) == 0) {
                t.text = op;
                p_ += 2;
                return true;
            }
            return false;
        };
        if (two("<-") || two("<=") || two(">=") || two("==") || two("!=") || two("%%")) return t;
        switch (c) {
        case '<': case '>': case '+': case '-': case '*': case '/':
        case '^': case '(': case ')': case '[': case ']': case ',': case ':':
            t.text = std::string(1, c);
            ++p_;
            return t;
        default:
            throw Error(Errc::ParseError, "parse error at line " + std::to_string(lineno_) +
                                              ", column " + std::to_string(t.pos) +
                                              ": unexpected character '" + std::string(1, c) + "'");
        }
    }

    const std::string& line_;
    int lineno_;
    std::size_t p_ = 0;
    std::vector<Token> toks_;
    std::size_t i_ = 0;
};

bool is_op(const Token& t, const char* op) { return t.kind == Token::Kind::Op && t.text == op; }

class LineParser {
public:
    LineParser(const std::string& line, int lineno) : lex_(line, lineno), lineno_(lineno) {}

    std::optional<Statement> statement() {
        if (lex_.at_end()) return std::nullopt;
        Statement st = inner_statement(false);
        if (!lex_.at_end()) lex_.fail(lex_.peek(), "end of line");
        st.line = lineno_;
        return st;
    }

private:
    Statement inner_statement(bool inside_try) {
        // try(<statement>)
        if (!inside_try && lex_.peek().kind == Token::Kind::Name && lex_.peek().text == "try" &&
            is_op(lex_.peek(1), "(")) {
            lex_.take();
            lex_.take();
            Statement st = inner_statement(true);
            expect(")");
            st.wrapped_in_try = true;
            return st;
        }
        // (name <- expr): assign and echo
        if (is_op(lex_.peek(), "(") && lex_.peek(1).kind == Token::Kind::Name &&
            is_op(lex_.peek(2), "<-")) {
            lex_.take();
            Statement st;
            st.kind = Statement::Kind::AssignEcho;
            st.name = lex_.take().text;
            lex_.take();
            st.value = expr();
            expect(")");
            return st;
        }
        // coeffs(name) <- expr  |  coeffs(name)[index] <- expr
        if (lex_.peek().kind == Token::Kind::Name && lex_.peek().text == "coeffs" &&
            is_op(lex_.peek(1), "(") && lex_.peek(2).kind == Token::Kind::Name &&
            is_op(lex_.peek(3), ")") && coeffs_target_follows()) {
            lex_.take();
            lex_.take();
            Statement st;
            st.name = lex_.take().text;
            lex_.take();
            if (is_op(lex_.peek(), "[")) {
                lex_.take();
                st.kind = Statement::Kind::CoeffsIndexAssign;
                st.index = expr();
                expect("]");
            } else {
                st.kind = Statement::Kind::CoeffsAssign;
            }
            expect("<-");
            st.value = expr();
            return st;
        }
        // name <- expr  |  name[index] <- expr
        if (lex_.peek().kind == Token::Kind::Name) {
            if (is_op(lex_.peek(1), "<-")) {
                Statement st;
                st.kind = Statement::Kind::Assign;
                st.name = lex_.take().text;
                lex_.take();
                st.value = expr();
                return st;
            }
            if (is_op(lex_.peek(1), "[") && index_assign_follows()) {
                Statement st;
                st.kind = Statement::Kind::IndexAssign;
                st.name = lex_.take().text;
                lex_.take();
                st.index = expr();
                expect("]");
                expect("<-");
                st.value = expr();
                return st;
            }
        }
        Statement st;
        st.kind = Statement::Kind::Echo;
        st.value = expr();
        return st;
    }

    // Distinguishes `name[i] <- v` from the expression `name[i]` by scanning
    // for `<-` after the matching bracket.
    bool index_assign_follows() {
        int depth = 0;
        for (std::size_t k = 1;; ++k) {
            const Token& t = lex_.peek(k);
            if (t.kind == Token::Kind::End) return false;
            if (is_op(t, "[")) ++depth;
            if (is_op(t, "]")) {
                --depth;
                if (depth == 0) return is_op(lex_.peek(k + 1), "<-");
            }
        }
    }

    // Distinguishes the assignment targets `coeffs(x) <- v` and
    // `coeffs(x)[i] <- v` from plain uses of coeffs(x) in an expression.
    bool coeffs_target_follows() {
        if (is_op(lex_.peek(4), "<-")) return true;
        if (!is_op(lex_.peek(4), "[")) return false;
        int depth = 0;
        for (std::size_t k = 4;; ++k) {
            const Token& t = lex_.peek(k);
            if (t.kind == Token::Kind::End) return false;
            if (is_op(t, "[")) ++depth;
            if (is_op(t, "]")) {
                --depth;
                if (depth == 0) return is_op(lex_.peek(k + 1), "<-");
            }
        }
    }

    void expect(const char* op) {
        if (!is_op(lex_.peek(), op)) lex_.fail(lex_.peek(), std::string("'") + op + "'");
        lex_.take();
    }

    Expr expr() { return comparison(); }

    Expr comparison() {
        Expr lhs = additive();
        while (is_op(lex_.peek(), "<") || is_op(lex_.peek(), "<=") || is_op(lex_.peek(), ">") ||
               is_op(lex_.peek(), ">=") || is_op(lex_.peek(), "==") || is_op(lex_.peek(), "!=")) {
            std::string op = lex_.take().text;
            Expr rhs = additive();
            lhs = binary(op, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    Expr additive() {
        Expr lhs = multiplicative();
        while (is_op(lex_.peek(), "+") || is_op(lex_.peek(), "-")) {
            std::string op = lex_.take().text;
            Expr rhs = multiplicative();
            lhs = binary(op, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    Expr multiplicative() {
        Expr lhs = range();
        while (is_op(lex_.peek(), "*") || is_op(lex_.peek(), "/") || is_op(lex_.peek(), "%%")) {
            std::string op = lex_.take().text;
            Expr rhs = range();
            lhs = binary(op, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    Expr range() {
        Expr lhs = unary();
        if (is_op(lex_.peek(), ":")) {
            lex_.take();
            Expr rhs = unary();
            Expr e;
            e.kind = Expr::Kind::Range;
            e.args.push_back(std::move(lhs));
            e.args.push_back(std::move(rhs));
            return e;
        }
        return lhs;
    }

    Expr unary() {
        if (is_op(lex_.peek(), "-")) {
            lex_.take();
            Expr e;
            e.kind = Expr::Kind::Unary;
            e.text = "-";
            e.args.push_back(unary());
            return e;
        }
        return power();
    }

    Expr power() {
        Expr lhs = postfix();
        if (is_op(lex_.peek(), "^")) {
            lex_.take();
            Expr rhs = unary();  // right-associative; allows x^-2
            lhs = binary("^", std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    Expr postfix() {
        Expr e = primary();
        while (is_op(lex_.peek(), "[")) {
            lex_.take();
            Expr idx = expr();
            expect("]");
            Expr node;
            node.kind = Expr::Kind::Index;
            node.args.push_back(std::move(e));
            node.args.push_back(std::move(idx));
            e = std::move(node);
        }
        return e;
    }

    Expr primary() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Kind::Number) {
            Expr e;
            e.kind = Expr::Kind::Number;
            e.num = lex_.take().num;
            return e;
        }
        if (t.kind == Token::Kind::String) {
            Expr e;
            e.kind = Expr::Kind::String;
            e.text = lex_.take().text;
            return e;
        }
        if (t.kind == Token::Kind::Name) {
            Expr e;
            std::string name = lex_.take().text;
            if (name == "TRUE" || name == "FALSE") {
                e.kind = Expr::Kind::Bool;
                e.flag = name == "TRUE";
                return e;
            }
            if (is_op(lex_.peek(), "(")) {
                lex_.take();
                e.kind = Expr::Kind::Call;
                e.text = std::move(name);
                if (!is_op(lex_.peek(), ")")) {
                    e.args.push_back(expr());
                    while (is_op(lex_.peek(), ",")) {
                        lex_.take();
                        e.args.push_back(expr());
                    }
                }
                expect(")");
                return e;
            }
            e.kind = Expr::Kind::Name;
            e.text = std::move(name);
            return e;
        }
        if (is_op(t, "(")) {
            lex_.take();
            Expr e = expr();
            expect(")");
            return e;
        }
        lex_.fail(t, "an expression");
    }

    static Expr binary(std::string op, Expr lhs, Expr rhs) {
        Expr e;
        e.kind = Expr::Kind::Binary;
        e.text = std::move(op);
        e.args.push_back(std::move(lhs));
        e.args.push_back(std::move(rhs));
        return e;
    }

    Lexer lex_;
    int lineno_;
};

}  // namespace

std::optional<Statement> parse_line(const std::string& line, int lineno) {
    return LineParser(line, lineno).statement();
}

Program parse_program(const std::string& source) {
    Program prog;
    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= source.size()) {
        std::size_t nl = source.find('\n', pos);
        std::string line = nl == std::string::npos ? source.substr(pos)
                                                   : source.substr(pos, nl - pos);
        ++lineno;
        if (std::optional<Statement> st = parse_line(line, lineno)) prog.statements.push_back(*st);
        if (nl == std::string::npos) break;
        pos = nl + 1;
    }
    return prog;
}

}  // namespace disord::script
