#include "zetareg/query.hpp"

#include "zetareg/decimal.hpp"
#include "zetareg/errors.hpp"

#include <cctype>

namespace zetareg::cli {

const std::vector<FunctionInfo>& function_registry() {
    static const std::vector<FunctionInfo> registry = {
        {"mu", 1},     {"zeta", 1},     {"gamma", 1},
        {"bernoulli", 1}, {"binomial", 2}, {"lambda", 1},
        {"delta", 2},  {"regint", 2},   {"musum", 1},
    };
    return registry;
}

namespace {

const FunctionInfo* lookup_function(const std::string& name) {
    for (const auto& fi : function_registry())
        if (name == fi.name) return &fi;
    return nullptr;
}

std::string registry_names() {
    std::string out;
    for (const auto& fi : function_registry()) {
        if (!out.empty()) out += ", ";
        out += fi.name;
    }
    return out;
}

struct Scanner {
    const std::string& s;
    std::size_t pos = 0;

    bool done() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }
    void skip_ws() {
        while (!done() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool at_name_start() const {
        return !done() && std::isalpha(static_cast<unsigned char>(s[pos]));
    }
    std::string scan_name() {
        std::size_t start = pos;
        while (!done() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }
    std::string scan_digits() {
        std::size_t start = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        return s.substr(start, pos - start);
    }
};

Arg parse_arg(Scanner& sc) {
    std::size_t start = sc.pos;
    if (sc.at_name_start()) {
        Arg a;
        a.kind = Arg::Kind::name;
        a.name = sc.scan_name();
        a.offset = start;
        return a;
    }
    bool neg = false;
    if (!sc.done() && sc.peek() == '-') {
        neg = true;
        ++sc.pos;
    }
    if (sc.done() || !std::isdigit(static_cast<unsigned char>(sc.peek()))) {
        if (neg)
            throw Error(ErrorCode::malformed_number, "expected digits after '-'", sc.pos);
        throw Error(ErrorCode::parse_error, "expected an argument (number or name)", sc.pos);
    }
    std::string int_digits = sc.scan_digits();
    std::string frac_digits;
    if (!sc.done() && sc.peek() == '.') {
        ++sc.pos;
        if (sc.done() || !std::isdigit(static_cast<unsigned char>(sc.peek())))
            throw Error(ErrorCode::malformed_number, "expected digits after the decimal point",
                        sc.pos);
        frac_digits = sc.scan_digits();
    }
    Arg a;
    a.kind = Arg::Kind::number;
    a.number = Rational::from_decimal(int_digits, frac_digits, neg);
    a.offset = start;
    return a;
}

} // namespace

QueryAst parse(const std::string& input) {
    if (input.size() > 4096)
        throw Error(ErrorCode::parse_error, "input exceeds 4096 bytes", 4096);
    Scanner sc{input};
    sc.skip_ws();
    if (!sc.at_name_start())
        throw Error(ErrorCode::parse_error, "expected a function name", sc.pos);
    std::size_t name_pos = sc.pos;
    QueryAst ast;
    ast.function = sc.scan_name();
    const FunctionInfo* fi = lookup_function(ast.function);
    if (!fi)
        throw Error(ErrorCode::unknown_function,
                    "unknown function \"" + ast.function + "\"; available: " + registry_names(),
                    name_pos);
    sc.skip_ws();
    if (sc.done() || sc.peek() != '(')
        throw Error(ErrorCode::parse_error, "expected '(' after the function name", sc.pos);
    ++sc.pos;
    sc.skip_ws();
    if (!sc.done() && sc.peek() != ')') {
        while (true) {
            ast.args.push_back(parse_arg(sc));
            sc.skip_ws();
            if (!sc.done() && sc.peek() == ',') {
                ++sc.pos;
                sc.skip_ws();
                if (sc.done() || sc.peek() == ')')
                    throw Error(ErrorCode::parse_error, "expected an argument after ','", sc.pos);
                continue;
            }
            break;
        }
    }
    if (sc.done() || sc.peek() != ')')
        throw Error(ErrorCode::parse_error, "expected ')' or ','", sc.pos);
    std::size_t rparen_pos = sc.pos;
    ++sc.pos;
    sc.skip_ws();
    if (!sc.done())
        throw Error(ErrorCode::parse_error, "unexpected input after ')'", sc.pos);
    if (static_cast<int>(ast.args.size()) != fi->arity) {
        std::size_t where = ast.args.size() > static_cast<std::size_t>(fi->arity)
                                ? ast.args[static_cast<std::size_t>(fi->arity)].offset
                                : rparen_pos;
        throw Error(ErrorCode::bad_arity,
                    ast.function + " takes " + std::to_string(fi->arity) + " argument(s), got " +
                        std::to_string(ast.args.size()),
                    where);
    }
    return ast;
}

std::string print_ast(const QueryAst& ast) {
    std::string out = ast.function + "(";
    for (std::size_t i = 0; i < ast.args.size(); ++i) {
        if (i) out += ",";
        const Arg& a = ast.args[i];
        out += a.kind == Arg::Kind::name ? a.name : exact_decimal_text(a.number);
    }
    return out + ")";
}

} // namespace zetareg::cli
