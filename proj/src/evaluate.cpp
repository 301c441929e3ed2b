#include "zetareg/evaluate.hpp"

#include "zetareg/decimal.hpp"
#include "zetareg/errors.hpp"
#include "zetareg/exact.hpp"
#include "zetareg/mu.hpp"
#include "zetareg/regint.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace zetareg::cli {

namespace {

using exact::Rational;
using json = nlohmann::json;

const Rational& number_arg(const QueryAst& ast, std::size_t i) {
    const Arg& a = ast.args.at(i);
    if (a.kind != Arg::Kind::number)
        throw Error(ErrorCode::bad_argument,
                    ast.function + " expects a numeric argument at position " +
                        std::to_string(i + 1));
    return a.number;
}

long integer_arg(const QueryAst& ast, std::size_t i, const char* what) {
    const Rational& r = number_arg(ast, i);
    if (!r.is_integer() || !r.fits_long())
        throw Error(ErrorCode::bad_argument,
                    std::string(what) + " must be an integer");
    return r.to_long();
}

void put_exact(json& doc, const Rational& v) {
    doc["exact"] = v.str();
    doc["decimal"] = decimal12(v);
    doc["value"] = v.to_double();
}

void put_double(json& doc, double v) {
    doc["decimal"] = decimal12(v);
    doc["value"] = v;
}

json eval_mu(const QueryAst& ast, const EvalOptions& opts) {
    json doc;
    mucore::MuValue m = mucore::mu(number_arg(ast, 0), opts.truncation, opts.precision);
    if (m.integer_branch) {
        const auto& ie = *m.exact;
        doc["branch"] = "integer";
        put_exact(doc, ie.value);
        doc["routes"] = {{"zeta_sum", ie.route_zeta_sum.str()},
                         {"bernoulli_sum", ie.route_bernoulli_sum.str()},
                         {"closed_form", ie.route_closed_form.str()}};
        doc["routes_agree"] = ie.routes_agree;
        doc["route"] = "exact_integer_routes";
    } else {
        const auto& cert = *m.certificate;
        doc["branch"] = "noninteger";
        doc["exact"] = "0";
        doc["decimal"] = "0";
        doc["value"] = 0.0;
        json c;
        c["lambda"] = cert.lambda_value;
        c["truncation_N"] = cert.truncation_N;
        c["series_value"] = cert.truncated_series_value;
        if (cert.reciprocity_argument) {
            c["reciprocity_argument"] = *cert.reciprocity_argument;
            c["reciprocity_factor"] = *cert.reciprocity_factor;
        }
        doc["certificate"] = std::move(c);
        doc["route"] =
            cert.reciprocity_argument ? "vanishing_series_reciprocity" : "vanishing_series";
    }
    return doc;
}

json eval_zeta(const QueryAst& ast, const EvalOptions& opts) {
    json doc;
    const Rational& s = number_arg(ast, 0);
    if (s.is_integer() && s <= Rational(0)) {
        if (!s.fits_long())
            throw Error(ErrorCode::argument_too_large, "integer zeta argument out of range");
        Rational v = exact::zeta_neg_int(static_cast<std::size_t>(-s.to_long()));
        put_exact(doc, v);
        doc["route"] = "bernoulli_exact";
        return doc;
    }
    double sd = s.to_double();
    put_double(doc, special::zeta_real(sd, opts.precision));
    doc["route"] = sd >= 0.5 ? "eta_acceleration" : "functional_equation";
    return doc;
}

json eval_gamma(const QueryAst& ast, const EvalOptions& opts) {
    (void)opts;
    json doc;
    const Rational& x = number_arg(ast, 0);
    if (x.is_integer()) {
        if (!x.fits_long() || x.to_long() > 10000)
            throw Error(ErrorCode::argument_too_large, "integer gamma argument capped at 10000");
        long n = x.to_long();
        if (n <= 0)
            throw Error(ErrorCode::gamma_pole,
                        "gamma has a pole at " + std::to_string(n));
        Rational v = exact::factorial(static_cast<unsigned long>(n - 1));
        put_exact(doc, v);
        doc["route"] = "factorial_exact";
        return doc;
    }
    double xd = x.to_double();
    put_double(doc, special::gamma(xd));
    doc["route"] = xd >= 0.5 ? "lanczos_rational" : "reflection_lanczos";
    return doc;
}

json eval_bernoulli(const QueryAst& ast) {
    json doc;
    long n = integer_arg(ast, 0, "bernoulli index");
    if (n < 0) throw Error(ErrorCode::bad_argument, "bernoulli index must be >= 0");
    put_exact(doc, exact::bernoulli(static_cast<std::size_t>(n)));
    doc["route"] = "recurrence_exact";
    return doc;
}

json eval_binomial(const QueryAst& ast) {
    json doc;
    const Rational& r = number_arg(ast, 0);
    long l = integer_arg(ast, 1, "binomial lower index");
    if (r.is_integer()) {
        if (!r.fits_long())
            throw Error(ErrorCode::argument_too_large, "binomial upper index out of range");
        long m = r.to_long();
        Rational v;
        if (m >= 0) {
            v = exact::binomial_exact(static_cast<unsigned long>(m), l);
        } else if (l < 0) {
            v = Rational(0);
        } else {
            if (l > 100000)
                throw Error(ErrorCode::argument_too_large, "binomial lower index too large");
            v = Rational(1);
            for (long i = 0; i < l; ++i) v *= Rational(m - i);
            v = v / exact::factorial(static_cast<unsigned long>(l));
        }
        put_exact(doc, v);
        doc["route"] = "exact_binomial";
        return doc;
    }
    if (l < 0) throw Error(ErrorCode::bad_argument, "binomial lower index must be >= 0");
    if (l > 100000)
        throw Error(ErrorCode::argument_too_large, "binomial lower index too large");
    // falling-factorial product over exact rationals: the literal is exact
    Rational v(1);
    for (long i = 1; i <= l; ++i)
        v *= (r - Rational(l - i)) / Rational(i);
    put_exact(doc, v);
    doc["route"] = "falling_factorial_exact";
    return doc;
}

json eval_lambda(const QueryAst& ast) {
    json doc;
    const Rational& r = number_arg(ast, 0);
    double v = mucore::lambda(r.to_double());
    if (r.is_integer()) {
        // sin(pi r) vanishes: lambda is exactly 1, or 2 at the removable point
        put_exact(doc, r == Rational(-1) ? Rational(2) : Rational(1));
    } else {
        put_double(doc, v);
    }
    doc["route"] = "sinc_formula";
    return doc;
}

json eval_delta(const QueryAst& ast) {
    json doc;
    const Rational& r = number_arg(ast, 0);
    long n = integer_arg(ast, 1, "slice index n");
    if (n < 1) throw Error(ErrorCode::bad_argument, "slice index n must be >= 1");
    if (r == Rational(-1))
        throw Error(ErrorCode::argument_log_pole, "delta at r = -1 is the logarithmic slice");
    if (n == 1 && r < Rational(-1))
        throw Error(ErrorCode::bad_argument,
                    "the [0,1] slice of x^r diverges for r < -1");
    if (r.is_integer() && r.fits_long()) {
        long ri = r.to_long();
        if (ri >= 0) {
            Rational direct = mucore::delta_exact(ri, n);
            Rational expanded = mucore::delta_binomial_form(ri, n);
            put_exact(doc, direct);
            doc["routes"] = {{"power_rule", direct.str()},
                             {"binomial_expansion", expanded.str()}};
            doc["routes_agree"] = direct == expanded;
        } else {
            // negative integer exponent, n >= 2: still exact
            Rational v = (Rational(n).pow(ri + 1) - Rational(n - 1).pow(ri + 1)) /
                         Rational(ri + 1);
            put_exact(doc, v);
        }
        doc["route"] = "exact_slice";
        return doc;
    }
    put_double(doc, mucore::delta(r.to_double(), n));
    doc["route"] = "power_rule";
    return doc;
}

json eval_regint(const QueryAst& ast, const EvalOptions& opts) {
    json doc;
    const Arg& a = ast.args.at(0);
    if (a.kind != Arg::Kind::name)
        throw Error(ErrorCode::bad_argument,
                    "regint expects a series name (exp, geometric, sin, cos)");
    long n = integer_arg(ast, 1, "truncation depth");
    if (n < 1) throw Error(ErrorCode::bad_argument, "truncation depth must be >= 1");
    if (n > opts.precision.max_terms)
        throw Error(ErrorCode::argument_too_large, "truncation depth exceeds max_terms");
    regint::RegularizedResult res =
        regint::regularize_integral(regint::builtin_series(a.name), n);
    doc["exact_sum"] = res.exact_sum.str();
    put_double(doc, res.value);
    doc["partial_sum_N"] = res.partial_sum_N;
    doc["tail_estimate"] = res.tail_estimate;
    if (res.closed_form) doc["closed_form"] = *res.closed_form;
    doc["route"] = "termwise_mu_summation";
    return doc;
}

json eval_musum(const QueryAst& ast) {
    json doc;
    long n = integer_arg(ast, 0, "partial-sum length");
    put_exact(doc, regint::mu_sum_partial(n));
    doc["route"] = "exact_partial_sum";
    return doc;
}

} // namespace

json evaluate(const QueryAst& ast, const EvalOptions& opts) {
    json doc;
    if (ast.function == "mu")
        doc = eval_mu(ast, opts);
    else if (ast.function == "zeta")
        doc = eval_zeta(ast, opts);
    else if (ast.function == "gamma")
        doc = eval_gamma(ast, opts);
    else if (ast.function == "bernoulli")
        doc = eval_bernoulli(ast);
    else if (ast.function == "binomial")
        doc = eval_binomial(ast);
    else if (ast.function == "lambda")
        doc = eval_lambda(ast);
    else if (ast.function == "delta")
        doc = eval_delta(ast);
    else if (ast.function == "regint")
        doc = eval_regint(ast, opts);
    else if (ast.function == "musum")
        doc = eval_musum(ast);
    else
        throw Error(ErrorCode::unknown_function, "unknown function \"" + ast.function + "\"");
    doc["query"] = print_ast(ast);
    doc["function"] = ast.function;
    json args = json::array();
    for (const Arg& a : ast.args)
        args.push_back(a.kind == Arg::Kind::name ? a.name : exact_decimal_text(a.number));
    doc["arguments"] = std::move(args);
    return doc;
}

namespace {

std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_number_float()) return decimal12(v.get<double>());
    return v.dump();
}

// Stable display order; anything unlisted follows alphabetically.
const std::vector<std::string>& preferred_order() {
    static const std::vector<std::string> order = {
        "query",        "function",     "arguments",   "branch",
        "exact",        "decimal",      "value",       "routes",
        "routes_agree", "certificate",  "exact_sum",   "partial_sum_N",
        "tail_estimate","closed_form",  "route",
    };
    return order;
}

template <typename Emit>
void walk_document(const json& doc, Emit&& emit) {
    std::vector<std::string> keys;
    for (const std::string& k : preferred_order())
        if (doc.contains(k)) keys.push_back(k);
    for (auto it = doc.begin(); it != doc.end(); ++it)
        if (std::find(keys.begin(), keys.end(), it.key()) == keys.end())
            keys.push_back(it.key());
    for (const std::string& k : keys) {
        const json& v = doc.at(k);
        if (v.is_object()) {
            for (auto it = v.begin(); it != v.end(); ++it)
                emit(k + "." + it.key(), scalar_text(it.value()));
        } else if (v.is_array()) {
            std::string joined;
            for (const auto& e : v) {
                if (!joined.empty()) joined += ";";
                joined += scalar_text(e);
            }
            emit(k, joined);
        } else {
            emit(k, scalar_text(v));
        }
    }
}

} // namespace

std::string render_text(const json& doc) {
    std::string out;
    walk_document(doc, [&](const std::string& k, const std::string& v) {
        out += k + ": " + v + "\n";
    });
    return out;
}

std::string render_csv(const json& doc) {
    std::string out = "key,value\n";
    walk_document(doc, [&](const std::string& k, const std::string& v) {
        out += k + "," + v + "\n";
    });
    return out;
}

} // namespace zetareg::cli
