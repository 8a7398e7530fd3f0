#pragma once

#include <optional>
#include <string>
#include <vector>

namespace disord::script {

// Expression tree; children live in `args`.
//   Number/Bool: literal in num/flag        Name: identifier in text
//   String: quoted text in text             Unary: op in text, args[0]
//   Binary: op in text, args[0], args[1]    Range: args[0]:args[1]
//   Index: args[0] [ args[1] ]              Call: callee in text, args
struct Expr {
    enum class Kind { Number, String, Bool, Name, Unary, Binary, Range, Index, Call };
    Kind kind = Kind::Number;
    double num = 0.0;
    bool flag = false;
    std::string text;
    std::vector<Expr> args;
};

struct Statement {
    enum class Kind {
        Echo,              // expr
        Assign,            // name <- expr
        AssignEcho,        // (name <- expr)
        IndexAssign,       // name[index] <- expr
        CoeffsAssign,      // coeffs(name) <- expr
        CoeffsIndexAssign  // coeffs(name)[index] <- expr
    };
    Kind kind = Kind::Echo;
    std::string name;
    std::optional<Expr> index;
    Expr value;
    bool wrapped_in_try = false;
    int line = 0;
};

struct Program {
    std::vector<Statement> statements;
};

// One statement per line; '#' starts a comment; blank lines are skipped.
// Raises ParseError mentioning the 1-based line number.
Program parse_program(const std::string& source);

// Single line, for the REPL.
std::optional<Statement> parse_line(const std::string& line, int lineno);

}  // namespace disord::script
