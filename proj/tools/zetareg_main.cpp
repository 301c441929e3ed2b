#include "zetareg/decimal.hpp"
#include "zetareg/errors.hpp"
#include "zetareg/evaluate.hpp"
#include "zetareg/mu.hpp"
#include "zetareg/query.hpp"
#include "zetareg/regint.hpp"
#include "zetareg/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>

namespace {

using zetareg::decimal12;
using zetareg::Error;
using zetareg::ErrorCode;
using json = nlohmann::json;

void print_document(const json& doc, const std::string& format) {
    if (format == "json")
        std::cout << doc.dump(2) << "\n";
    else if (format == "csv")
        std::cout << zetareg::cli::render_csv(doc);
    else
        std::cout << zetareg::cli::render_text(doc);
}

int run_eval(const std::string& expr, const std::string& format, double precision,
             long truncation) {
    zetareg::cli::EvalOptions opts;
    opts.precision.target_rel_error = precision;
    opts.truncation = truncation;
    print_document(zetareg::cli::evaluate(zetareg::cli::parse(expr), opts), format);
    return 0;
}

long grid_row_count(double from, double to, double step) {
    double ratio = (to - from) / step;
    if (!(ratio >= 0) || ratio > 1e6)
        throw Error(ErrorCode::grid_too_large, "grid exceeds 1e6 rows");
    // snap to the intended count when from/to/step describe an integral grid
    // up to binary64 rounding (20/0.001 lands at 19999.999999999996)
    long n = std::llround(ratio);
    if (std::abs(ratio - double(n)) > 1e-6) n = long(std::floor(ratio + 1e-12));
    return n;
}

int run_lambda_table(double from, double to, double step, const std::string& format) {
    if (!(step > 0)) throw Error(ErrorCode::bad_argument, "step must be > 0");
    if (!(from <= to)) throw Error(ErrorCode::bad_argument, "interval start exceeds end");
    long n = grid_row_count(from, to, step);
    if (format == "json") {
        json rows = json::array();
        for (long i = 0; i <= n; ++i) {
            double r = from + double(i) * step;
            rows.push_back({{"r", r}, {"lambda", zetareg::mucore::lambda(r)}});
        }
        json doc = {{"from", from}, {"to", to}, {"step", step}, {"rows", std::move(rows)}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "r,lambda\n";
        for (long i = 0; i <= n; ++i) {
            double r = from + double(i) * step;
            std::cout << decimal12(r) << "," << decimal12(zetareg::mucore::lambda(r))
                      << "\n";
        }
    }
    return 0;
}

int run_verify(const std::string& suite) {
    std::vector<zetareg::cli::CheckResult> results = zetareg::cli::verify_suite(suite);
    std::size_t failed = 0;
    for (const auto& r : results) {
        if (!r.pass) ++failed;
        std::printf("%s  %-40s  worst %.3e  bound %.3e  %s\n",
                    r.pass ? "PASS" : "FAIL", r.name.c_str(), r.worst, r.bound,
                    r.detail.c_str());
    }
    std::printf("%zu checks, %zu failed\n", results.size(), failed);
    return failed == 0 ? 0 : 3;
}

int run_regint(const std::string& series, const std::string& file, long n,
               const std::string& format) {
    zetareg::regint::PowerSeries ps = file.empty()
                                          ? zetareg::regint::builtin_series(series)
                                          : zetareg::regint::series_from_file(file);
    zetareg::regint::RegularizedResult res = zetareg::regint::regularize_integral(ps, n);
    json doc;
    doc["function"] = "regint";
    doc["series"] = ps.name;
    doc["exact_sum"] = res.exact_sum.str();
    doc["decimal"] = decimal12(res.value);
    doc["value"] = res.value;
    doc["partial_sum_N"] = res.partial_sum_N;
    doc["tail_estimate"] = res.tail_estimate;
    if (res.closed_form) doc["closed_form"] = *res.closed_form;
    doc["route"] = "termwise_mu_summation";
    print_document(doc, format);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"zeta-regularized values of divergent power integrals"};
    app.require_subcommand(1);

    std::string format = "text";
    double precision = 1e-12;
    long truncation = 200;

    std::string expr;
    CLI::App* eval = app.add_subcommand("eval", "evaluate a query expression");
    eval->add_option("expr", expr, "expression, e.g. \"mu(0.5)\"")->required();
    eval->add_option("--format", format)
        ->check(CLI::IsMember({"text", "csv", "json"}));
    eval->add_option("--precision", precision, "target relative error");
    eval->add_option("--truncation", truncation, "series certificate depth");

    double from = -10.0, to = 10.0, step = 1e-3;
    std::string table_format = "csv";
    CLI::App* table = app.add_subcommand("lambda-table", "emit the lambda curve grid");
    table->add_option("--from", from)->required();
    table->add_option("--to", to)->required();
    table->add_option("--step", step)->required();
    table->add_option("--format", table_format)->check(CLI::IsMember({"csv", "json"}));

    std::string suite = "all";
    CLI::App* verify = app.add_subcommand("verify", "run the identity check suites");
    verify->add_option("--suite", suite)
        ->check(CLI::IsMember({"exact", "special", "mu", "regint", "all"}));

    std::string series = "exp", series_file;
    long depth = 20;
    CLI::App* reg = app.add_subcommand("regint", "regularize the integral of a series");
    reg->add_option("--series", series, "builtin series name");
    reg->add_option("--series-file", series_file, "file of k,p/q coefficient lines");
    reg->add_option("--n", depth, "partial-sum truncation");
    reg->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // usage errors are parse-class failures
    }

    try {
        if (*eval) return run_eval(expr, format, precision, truncation);
        if (*table) return run_lambda_table(from, to, step, table_format);
        if (*verify) return run_verify(suite);
        if (*reg) return run_regint(series, series_file, depth, format);
    } catch (const Error& e) {
        std::cerr << "error[" << zetareg::error_code_name(e.code()) << "]";
        if (e.offset()) std::cerr << " at offset " << *e.offset();
        std::cerr << ": " << e.what() << "\n";
        return zetareg::is_parse_error(e.code()) ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
