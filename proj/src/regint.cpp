#include "zetareg/regint.hpp"

#include "zetareg/errors.hpp"
#include "zetareg/mu.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <vector>

namespace zetareg::regint {

Rational mu_sum_partial(long N) {
    if (N < 0) throw Error(ErrorCode::bad_argument, "partial-sum length must be >= 0");
    if (N > kMaxMuSumN)
        throw Error(ErrorCode::argument_too_large,
                    "partial-sum length capped at " + std::to_string(kMaxMuSumN));
    Rational sum(0);
    for (long k = 0; k <= N; ++k) sum += mucore::mu_int_closed(k);
    return sum;
}

RegularizedResult regularize_integral(const PowerSeries& series, long N) {
    if (N < 1) throw Error(ErrorCode::bad_argument, "truncation depth must be >= 1");
    Rational sum(0);
    std::vector<double> magnitudes; // |a_k mu(k)| over nonzero terms
    std::vector<int> signs;
    for (long k = 0; k <= N; ++k) {
        Rational term = series.coefficient(k) * mucore::mu_int_closed(k);
        if (!term.is_zero()) {
            magnitudes.push_back(term.abs().to_double());
            signs.push_back(term.is_negative() ? -1 : 1);
        }
        sum += term;
    }
    // decay heuristic: the newest of 10 nonzero samples must sit below the
    // oldest, otherwise the termwise sum has no business converging
    if (magnitudes.size() >= 10 &&
        magnitudes.back() >= magnitudes[magnitudes.size() - 10])
        throw Error(ErrorCode::divergence_suspected,
                    "|a_k mu(k)| failed to decrease over the last 10 nonzero terms");

    RegularizedResult out;
    out.exact_sum = sum;
    out.value = sum.to_double();
    out.partial_sum_N = N;

    if (series.tail_bound) {
        out.tail_estimate = series.tail_bound(N);
    } else if (series.last_nonzero && N >= *series.last_nonzero) {
        out.tail_estimate = 0.0; // the sum is already complete
    } else {
        bool alternating = !signs.empty();
        for (std::size_t i = 1; i < signs.size(); ++i)
            if (signs[i] == signs[i - 1]) {
                alternating = false;
                break;
            }
        if (!alternating)
            throw Error(ErrorCode::tail_bound_unavailable,
                        "series terms do not alternate and no tail bound was declared");
        // first omitted nonzero term bounds the remainder
        out.tail_estimate = 0.0;
        for (long k = N + 1; k <= N + 64; ++k) {
            Rational term = series.coefficient(k) * mucore::mu_int_closed(k);
            if (!term.is_zero()) {
                out.tail_estimate = term.abs().to_double();
                break;
            }
        }
    }

    if (series.name == "exp")
        out.closed_form = "-1/e";
    else if (series.name == "geometric")
        out.closed_form = "1-log(4)";
    else if (series.name == "sin")
        out.closed_form = "1-sin(1)";
    else if (series.name == "cos")
        out.closed_form = "cos(1)-1";
    return out;
}

PowerSeries builtin_series(const std::string& name) {
    PowerSeries s;
    s.name = name;
    if (name == "exp") {
        s.coefficient = [](long k) {
            return Rational(1) / exact::factorial(static_cast<unsigned long>(k));
        };
    } else if (name == "geometric") {
        s.coefficient = [](long) { return Rational(1); };
    } else if (name == "sin") {
        s.coefficient = [](long k) {
            if (k % 2 == 0) return Rational(0);
            Rational c = Rational(1) / exact::factorial(static_cast<unsigned long>(k));
            return ((k - 1) / 2) % 2 == 0 ? c : -c;
        };
    } else if (name == "cos") {
        s.coefficient = [](long k) {
            if (k % 2 != 0) return Rational(0);
            Rational c = Rational(1) / exact::factorial(static_cast<unsigned long>(k));
            return (k / 2) % 2 == 0 ? c : -c;
        };
    } else {
        throw Error(ErrorCode::unknown_series,
                    "unknown series \"" + name + "\"; available: exp, geometric, sin, cos");
    }
    return s;
}

PowerSeries series_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::io_error, "cannot open series file: " + path);
    auto coeffs = std::make_shared<std::map<long, Rational>>();
    std::optional<long> last_nonzero;
    long prev_k = -1;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;
        auto fail = [&](const std::string& what) -> Error {
            return Error(ErrorCode::bad_series_file,
                         path + ":" + std::to_string(line_no) + ": " + what);
        };
        std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) throw fail("expected \"k,p/q\"");
        long k;
        try {
            std::size_t used = 0;
            k = std::stol(line.substr(start, comma - start), &used);
            if (start + used != comma) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw fail("malformed coefficient index");
        }
        if (k < 0) throw fail("coefficient index must be >= 0");
        if (k <= prev_k) throw fail("coefficient indices must be strictly increasing");
        prev_k = k;
        Rational value;
        try {
            value = Rational::parse(line.substr(comma + 1));
        } catch (const Error&) {
            throw fail("malformed rational value");
        }
        if (!value.is_zero()) last_nonzero = k;
        coeffs->emplace(k, std::move(value));
    }
    PowerSeries s;
    s.name = std::filesystem::path(path).stem().string();
    s.coefficient = [coeffs](long k) {
        auto it = coeffs->find(k);
        return it == coeffs->end() ? Rational(0) : it->second;
    };
    // finite support always: an all-zero file means the sum is complete at 0
    s.last_nonzero = last_nonzero ? last_nonzero : std::optional<long>(0);
    return s;
}

double double_integral_remark() { return 1.0 - std::log(4.0); }

} // namespace zetareg::regint
