#pragma once

#include "zetareg/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace zetareg::cli {

using exact::Rational;

// A parsed argument: either a numeric literal (held exactly; "3.0" is the
// integer 3) or a bare name (series identifiers).
struct Arg {
    enum class Kind { number, name };
    Kind kind;
    Rational number;      // valid when kind == number
    std::string name;     // valid when kind == name
    std::size_t offset;   // byte offset of the argument's first character

    bool operator==(const Arg& o) const {
        if (kind != o.kind) return false;
        return kind == Kind::number ? number == o.number : name == o.name;
    }
};

struct QueryAst {
    std::string function;
    std::vector<Arg> args;

    bool operator==(const QueryAst& o) const {
        return function == o.function && args == o.args;
    }
};

// Registered functions and their arities.
struct FunctionInfo {
    const char* name;
    int arity;
};
const std::vector<FunctionInfo>& function_registry();

// Grammar: query := name "(" args? ")" ; args := arg ("," arg)* ;
//          arg := number | name ; number := ["-"] digits ["." digits].
// Unknown function, wrong arity and malformed numbers are parse errors with
// a byte offset and a stable code.  Input is capped at 4096 bytes.
QueryAst parse(const std::string& input);

// Canonical text; parse(print_ast(ast)) == ast for every valid AST.
std::string print_ast(const QueryAst& ast);

} // namespace zetareg::cli
