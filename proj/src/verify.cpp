#include "zetareg/verify.hpp"

#include "zetareg/errors.hpp"
#include "zetareg/exact.hpp"
#include "zetareg/mu.hpp"
#include "zetareg/regint.hpp"
#include "zetareg/special.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

namespace zetareg::cli {

namespace {

using exact::Rational;

constexpr double kPi = std::numbers::pi;

double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

struct Suite {
    std::vector<CheckResult> out;

    void add(std::string name, bool pass, double worst, double bound, std::string detail) {
        out.push_back({std::move(name), pass, worst, bound, std::move(detail)});
    }
    void residual(std::string name, double worst, double bound, std::string detail) {
        add(std::move(name), worst <= bound, worst, bound, std::move(detail));
    }
};

double simpson_step(const std::function<double(double)>& f, double a, double b,
                    double fa, double fm, double fb, double whole, double tol,
                    int depth) {
    double m = 0.5 * (a + b);
    double flm = f(0.5 * (a + m));
    double frm = f(0.5 * (m + b));
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_step(f, a, b, fa, fm, fb, whole, tol, 40);
}

std::vector<CheckResult> exact_suite() {
    Suite s;
    {
        bool ok = true;
        for (std::size_t m = 2; m <= 62 && ok; ++m) {
            Rational sum(0);
            for (std::size_t k = 0; k < m; ++k)
                sum += exact::binomial_exact(m, static_cast<long>(k)) * exact::bernoulli(k);
            ok = sum.is_zero();
        }
        s.add("exact/bernoulli_recurrence", ok, 0, 0,
              "sum_{k<m} C(m,k) B_k = 0 for m <= 62");
    }
    {
        bool ok = true;
        for (std::size_t k = 3; k <= 61 && ok; k += 2) ok = exact::bernoulli(k).is_zero();
        s.add("exact/bernoulli_odd_vanish", ok, 0, 0, "B_k = 0 for odd k in 3..61");
    }
    {
        bool ok = exact::bernoulli(0) == Rational(1) &&
                  exact::bernoulli(1) == Rational(-1, 2) &&
                  exact::bernoulli(2) == Rational(1, 6) &&
                  exact::bernoulli(12) == Rational::parse("-691/2730") &&
                  exact::bernoulli(26) == Rational::parse("8553103/6") &&
                  exact::bernoulli(50) ==
                      Rational::parse("495057205241079648212477525/66");
        s.add("exact/bernoulli_known_values", ok, 0, 0, "spot values up to B_50");
    }
    {
        bool ok = true;
        for (std::size_t r = 0; r <= 50 && ok; ++r)
            ok = exact::bernoulli_binomial_sum(r) == Rational(-1);
        s.add("exact/binomial_bernoulli_sum", ok, 0, 0,
              "sum_{k=1}^{r+1} C(r+2,k) B_k = -1 for r <= 50");
    }
    {
        bool ok = exact::zeta_neg_int(0) == Rational(-1, 2) &&
                  exact::zeta_neg_int(1) == Rational(-1, 12) &&
                  exact::zeta_neg_int(3) == Rational(1, 120) &&
                  exact::zeta_neg_int(11) == Rational(691, 32760);
        for (std::size_t k = 2; k <= 20 && ok; k += 2) ok = exact::zeta_neg_int(k).is_zero();
        s.add("exact/zeta_negative_integers", ok, 0, 0,
              "trivial zeros plus spot values");
    }
    {
        std::mt19937 gen(20260816u);
        std::uniform_int_distribution<long> num(-1000000000L, 1000000000L);
        std::uniform_int_distribution<long> den(1L, 1000000000L);
        bool ok = true;
        for (int i = 0; i < 1000 && ok; ++i) {
            Rational a(num(gen), den(gen));
            Rational b(num(gen), den(gen));
            ok = Rational::parse(a.str()) == a && (a + b) - b == a;
            if (ok && !b.is_zero()) ok = (a * b) / b == a;
        }
        s.add("exact/rational_field_laws", ok, 0, 0,
              "1000 seeded parse roundtrips and inverse laws");
    }
    return s.out;
}

std::vector<CheckResult> special_suite() {
    Suite s;
    {
        std::mt19937 gen(7u);
        std::uniform_real_distribution<double> dist(-20.0, 20.0);
        double worst = 0;
        long used = 0;
        while (used < 1000) {
            double x = dist(gen);
            if (std::abs(x - std::round(x)) < 1e-3) continue;
            worst = std::max(worst, rel_err(x * special::gamma(x), special::gamma(x + 1.0)));
            ++used;
        }
        s.residual("special/gamma_recurrence", worst, 1e-11,
                   "Gamma(x+1) = x Gamma(x) on 1000 points in [-20,20]");
    }
    {
        std::mt19937 gen(8u);
        std::uniform_real_distribution<double> dist(-10.0, 10.0);
        double worst = 0;
        long used = 0;
        while (used < 1000) {
            double a = dist(gen);
            if (std::abs(a - std::round(a)) < 1e-3) continue;
            double target = kPi / special::sinpi(a);
            worst = std::max(worst,
                             std::abs(special::reflection_residual(a) / target));
            ++used;
        }
        s.residual("special/gamma_reflection", worst, 1e-9,
                   "Gamma(1-a) Gamma(a) = pi / sin(pi a) on 1000 points");
    }
    {
        const struct { double x, want; } table[] = {
            {0.25, 3.625609908221908311931},
            {0.5, 1.772453850905516027298},
            {7.3, 1271.423633663909273058},
            {-1.5, 2.363271801207354703064},
            {-0.5, -3.544907701811032054596},
            {-6.7, -0.001401971084679751541899},
            {49.5, 8.667601843135272345284e61},
        };
        double worst = 0;
        for (const auto& row : table)
            worst = std::max(worst, rel_err(special::gamma(row.x), row.want));
        s.residual("special/gamma_reference_values", worst, 5e-13,
                   "7 fixed arguments against 60-digit references");
    }
    {
        double worst = 0;
        for (double r : {0.1, 0.5, 1.5, 2.75, -0.5}) {
            double scale = std::abs(special::sinpi(r) / kPi);
            for (long k = 1; k <= 20; ++k)
                worst = std::max(
                    worst, std::abs(special::gamma_sin_identity_residual(r, k)) / scale);
        }
        s.residual("special/gamma_sin_identity", worst, 1e-9,
                   "1/(Gamma(r-k+2) Gamma(k-r-1)) = (-1)^k sin(pi r)/pi, k <= 20");
    }
    {
        double worst = 0;
        for (long k = 0; k <= 25; ++k)
            worst = std::max(worst, std::abs(special::zeta_real(-double(k)) -
                                             exact::zeta_neg_int(k).to_double()));
        s.residual("special/zeta_exact_integer_route", worst, 0.0,
                   "s = 0..-25 equals the rational route bit for bit");
    }
    {
        const struct { double sv, want; } table[] = {
            {0.5, -1.460354508809586812889},
            {1.5, 2.612375348685488343349},
            {2.0, 1.644934066848226436472},
            {3.0, 1.2020569031595942854},
            {-0.5, -0.2078862249773545660173},
            {-2.5, 0.008516928777850330542359},
            {29.5, 1.000000001317097430162},
            {0.0625, -0.5616129298029599895041},
            {-29.5, -30854533.47239676360956},
        };
        double worst = 0;
        for (const auto& row : table)
            worst = std::max(worst, rel_err(special::zeta_real(row.sv), row.want));
        s.residual("special/zeta_reference_values", worst, 1e-10,
                   "9 fixed arguments against 60-digit references");
    }
    {
        // zeta(s) Gamma(s) = int_0^inf t^{s-1}/(e^t - 1) dt.  [0,1] by the
        // Bernoulli expansion of 1/(e^t - 1), [1,60] by adaptive Simpson.
        double worst = 0;
        for (double sv : {1.5, 2.0, 3.0}) {
            double head = 0;
            for (int n = 0; n <= 40; ++n) {
                Rational bn = exact::bernoulli(static_cast<std::size_t>(n));
                if (bn.is_zero()) continue;
                head += (bn / exact::factorial(static_cast<unsigned long>(n))).to_double() /
                        (sv + n - 1.0);
            }
            auto f = [sv](double t) { return std::pow(t, sv - 1.0) / std::expm1(t); };
            double tail = integrate(f, 1.0, 60.0, 1e-12);
            worst = std::max(
                worst, rel_err(head + tail, special::zeta_real(sv) * special::gamma(sv)));
        }
        s.residual("special/zeta_integral_representation", worst, 1e-6,
                   "quadrature of t^{s-1}/(e^t-1) for s in {1.5, 2, 3}");
    }
    {
        bool ok = true;
        for (long n = -1000; n <= 1000 && ok; ++n) ok = special::sinpi(double(n)) == 0.0;
        for (long n = -100; n <= 100 && ok; ++n)
            ok = special::sinpi(n + 0.5) == (n % 2 == 0 ? 1.0 : -1.0);
        s.add("special/sinpi_exact_points", ok, 0, 0,
              "integers give exactly 0, half-integers exactly +-1");
    }
    {
        double worst = 0;
        for (double r : {0.5, 2.75, -2.5, 7.3})
            for (long k = 0; k <= 15; ++k)
                worst = std::max(worst, rel_err(special::binomial_real_gamma_form(r, k),
                                                special::binomial_real(r, k)));
        s.residual("special/binomial_product_vs_gamma", worst, 1e-9,
                   "falling-factorial form against the Gamma-ratio form");
    }
    return s.out;
}

std::vector<CheckResult> mu_suite() {
    Suite s;
    {
        bool ok = true;
        for (long r = 0; r <= 40 && ok; ++r) {
            mucore::MuValue v = mucore::mu(Rational(r));
            ok = v.integer_branch && v.exact.has_value() && v.exact->routes_agree;
            if (ok) {
                Rational closed = (r % 2 == 0 ? Rational(-1) : Rational(1)) /
                                  Rational((r + 1) * (r + 2));
                ok = v.exact->value == closed;
            }
        }
        s.add("mu/integer_route_agreement", ok, 0, 0,
              "zeta sum, Bernoulli sum and closed form agree for r <= 40");
    }
    {
        bool ok = true;
        Rational prev;
        for (long r = 0; r <= 60 && ok; ++r) {
            Rational v = mucore::mu_int_closed(r);
            ok = (r % 2 == 0) == v.is_negative();
            Rational a = v.abs();
            if (r > 0) ok = ok && a < prev;
            prev = a;
        }
        s.add("mu/sign_and_decay", ok, 0, 0,
              "sign (-1)^{r+1} and strictly decreasing magnitude");
    }
    {
        bool ok = true;
        for (long r = 0; r <= 10 && ok; ++r)
            for (long n = 1; n <= 10 && ok; ++n)
                ok = mucore::delta_exact(r, n) == mucore::delta_binomial_form(r, n);
        s.add("mu/delta_route_agreement", ok, 0, 0,
              "power rule vs binomial expansion, r,n <= 10");
    }
    {
        bool ok = true;
        for (long r = 0; r <= 10 && ok; ++r) {
            Rational sum(0);
            for (long n = 1; n <= 50; ++n) sum += mucore::delta_exact(r, n);
            ok = sum == Rational(50).pow(r + 1) / Rational(r + 1);
        }
        s.add("mu/delta_telescoping", ok, 0, 0,
              "slices assemble to N^{r+1}/(r+1) at N = 50");
    }
    {
        bool ok = true;
        double low = 2.0;
        for (long i = 0; i <= 10000; ++i) {
            double v = mucore::lambda(-50.0 + 0.01 * i);
            ok = ok && v > 0.78 && v <= 2.0 + 1e-12;
            low = std::min(low, v);
        }
        for (long n = -20; n <= 20; ++n)
            ok = ok && mucore::lambda(double(n)) == (n == -1 ? 2.0 : 1.0);
        s.add("mu/lambda_range", ok, low, 0.78,
              "10001-point grid over [-50,50] stays in (0.78, 2]; integers exact");
    }
    {
        const struct { double r; long n; double want; } table[] = {
            {0.25, 1, -0.32045126422857728279},
            {0.25, 2, 0.10970940913957557901},
            {0.25, 25, 0.0029380751537707755574},
            {0.25, 50, 0.0012313958315946445725},
            {0.25, 100, 0.00051692374889437199989},
            {0.25, 200, 0.00021716929561464955802},
            {0.5, 1, -0.20788622497735456602},
            {0.5, 2, 0.15720240222504213721},
            {0.5, 25, 0.0015275533763288871836},
            {0.5, 50, 0.00053595446051972233746},
            {0.5, 100, 0.00018877212398410861724},
            {0.5, 200, 0.000066615375043931374731},
            {1.5, 1, -0.02548520188983303595},
            {1.5, 2, 0.13042946684318288856},
            {1.5, 25, -0.000058502044780921172209},
            {1.5, 50, -9.9455466900567047651e-6},
            {1.5, 100, -1.7248214374182513251e-6},
            {1.5, 200, -3.0203444604301378971e-7},
            {2.75, 1, 0.0091471500690797642432},
            {2.75, 2, 0.022761544301626766924},
            {2.75, 25, 1.8856713921102710932e-6},
            {2.75, 50, 1.2550792382724073864e-7},
            {2.75, 100, 8.8442190316106517249e-9},
            {2.75, 200, 6.4034639405225982196e-10},
        };
        double worst = 0;
        for (const auto& row : table)
            worst = std::max(worst,
                             std::abs(mucore::mu_series_truncated(row.r, row.n) - row.want));
        s.residual("mu/series_reference_values", worst, 1e-12,
                   "24 frozen partial sums over r in {0.25, 0.5, 1.5, 2.75}");
    }
    {
        const struct { double r, mapped, factor; } table[] = {
            {0.5, -2.5, 0.75225277806367504926},
            {-0.5, -1.5, 1.1283791670955125739},
            {-2.5, 0.5, -0.28209479177387814347},
            {0.25, -2.25, 0.88261012105666980595},
            {1.5, -3.5, 0.30090111122547001971},
            {2.75, -4.75, 0.060291061589943816207},
        };
        double worst = 0;
        bool ok = true;
        for (const auto& row : table) {
            mucore::Reciprocity rec = mucore::reciprocity_map(row.r);
            ok = ok && rec.mapped_argument == row.mapped;
            worst = std::max(worst, rel_err(rec.factor, row.factor));
        }
        s.add("mu/reciprocity_reference_values", ok && worst <= 1e-12, worst, 1e-12,
              "sin(pi r) Gamma(-r-1) / pi against 60-digit references");
    }
    {
        std::mt19937 gen(11u);
        std::uniform_real_distribution<double> dist(-8.0, 6.0);
        double worst = 0;
        long used = 0;
        while (used < 1000) {
            double r = dist(gen);
            if (std::abs(r - std::round(r)) < 1e-3) continue;
            mucore::Reciprocity f1 = mucore::reciprocity_map(r);
            mucore::Reciprocity f2 = mucore::reciprocity_map(f1.mapped_argument);
            worst = std::max(worst, std::abs(f2.mapped_argument - r));
            double want = -special::sinpi(r) / (kPi * (r + 1.0));
            worst = std::max(worst, rel_err(f1.factor * f2.factor, want));
            ++used;
        }
        s.residual("mu/reciprocity_involution", worst, 1e-12,
                   "map is an involution and F(r) F(-r-2) = -sin(pi r)/(pi (r+1))");
    }
    {
        mucore::MuValue half = mucore::mu(Rational(1, 2));
        mucore::MuValue low = mucore::mu(Rational(-5, 2));
        bool ok = !half.integer_branch && half.certificate.has_value() &&
                  !low.integer_branch && low.certificate.has_value();
        double worst = 0;
        if (ok) {
            const mucore::ZeroCertificate& ch = *half.certificate;
            const mucore::ZeroCertificate& cl = *low.certificate;
            ok = !ch.reciprocity_argument.has_value() &&
                 cl.reciprocity_argument.has_value() && *cl.reciprocity_argument == 0.5;
            worst = rel_err(ch.lambda_value, 0.78779340921080621897);
            worst = std::max(
                worst, std::abs(ch.truncated_series_value - 6.6615375043931374731e-5));
            if (ok) {
                worst = std::max(worst,
                                 rel_err(*cl.reciprocity_factor, 0.75225277806367504926));
                worst = std::max(worst, std::abs(cl.truncated_series_value -
                                                 0.75225277806367504926 *
                                                     6.6615375043931374731e-5));
            }
        }
        s.add("mu/noninteger_zero_certificate", ok && worst <= 1e-9, worst, 1e-9,
              "r = 1/2 evaluates directly; r = -5/2 transports through -r-2");
    }
    return s.out;
}

std::vector<CheckResult> regint_suite() {
    Suite s;
    {
        // partial fractions telescope the partial sum to 1 - A(N+1) - A(N+2)
        // with A(m) the alternating harmonic partial sum.
        bool ok = true;
        Rational a1(0), a2(0); // A(N+1), A(N+2)
        for (long j = 1; j <= 2; ++j)
            a2 += Rational(j % 2 == 1 ? 1 : -1, j);
        a1 += Rational(1);
        for (long N = 0; N <= 100 && ok; ++N) {
            ok = regint::mu_sum_partial(N) == Rational(1) - a1 - a2;
            a1 += Rational((N + 2) % 2 == 1 ? 1 : -1, N + 2);
            a2 += Rational((N + 3) % 2 == 1 ? 1 : -1, N + 3);
        }
        s.add("regint/musum_telescoped", ok, 0, 0,
              "partial sums equal 1 - A(N+1) - A(N+2) for N <= 100");
    }
    {
        double d = std::abs(regint::mu_sum_partial(1000).to_double() -
                            regint::double_integral_remark());
        s.residual("regint/musum_limit_distance", d, 5e-7,
                   "N = 1000 partial sum sits within 5e-7 of 1 - log 4");
    }
    {
        regint::RegularizedResult res =
            regint::regularize_integral(regint::builtin_series("exp"), 20);
        s.residual("regint/exp_reciprocal_e",
                   std::abs(res.value - (-0.3678794411714423215955)), 1e-12,
                   "termwise sum at N = 20 against -1/e");
    }
    {
        const struct { const char* name; double limit; } table[] = {
            {"exp", -0.3678794411714423215955},
            {"geometric", -0.3862943611198906188345},
            {"sin", 0.1585290151921034933475},
            {"cos", -0.4596976941318602825991},
        };
        bool ok = true;
        double worst = 0;
        // 1e-15 slack absorbs the final double rounding of each side
        for (const auto& row : table)
            for (long n : {10L, 20L, 50L}) {
                regint::RegularizedResult res =
                    regint::regularize_integral(regint::builtin_series(row.name), n);
                double excess = std::abs(res.value - row.limit) - res.tail_estimate;
                worst = std::max(worst, excess);
                ok = ok && excess <= 1e-15;
            }
        for (const char* name : {"exp", "geometric"})
            for (long n : {10L, 20L, 50L}) {
                regint::RegularizedResult at_n =
                    regint::regularize_integral(regint::builtin_series(name), n);
                regint::RegularizedResult at_2n =
                    regint::regularize_integral(regint::builtin_series(name), 2 * n);
                double excess = std::abs(at_n.value - at_2n.value) - at_n.tail_estimate;
                worst = std::max(worst, excess);
                ok = ok && excess <= 1e-15;
            }
        s.add("regint/alternating_tail_bound", ok, worst, 1e-15,
              "|S_N - limit| and |S_N - S_2N| bounded by the first omitted term");
    }
    {
        regint::PowerSeries f = regint::builtin_series("exp");
        regint::PowerSeries g = regint::builtin_series("geometric");
        regint::PowerSeries h;
        h.name = "combo";
        h.coefficient = [&](long k) {
            return Rational(3) * f.coefficient(k) - Rational(2) * g.coefficient(k);
        };
        h.tail_bound = [](long n) {
            return 3.0 / std::tgamma(double(n) + 2.0) + 2.0 / double(n + 2);
        };
        const long n = 30;
        Rational combo = regint::regularize_integral(h, n).exact_sum;
        Rational split = Rational(3) * regint::regularize_integral(f, n).exact_sum -
                         Rational(2) * regint::regularize_integral(g, n).exact_sum;
        s.add("regint/exact_sum_linearity", combo == split, 0, 0,
              "sum(3 exp - 2 geometric) = 3 sum(exp) - 2 sum(geometric)");
    }
    {
        regint::RegularizedResult sin10 =
            regint::regularize_integral(regint::builtin_series("sin"), 10);
        regint::RegularizedResult cos10 =
            regint::regularize_integral(regint::builtin_series("cos"), 10);
        bool ok = sin10.exact_sum == Rational::parse("6327971/39916800") &&
                  sin10.closed_form && *sin10.closed_form == "1-sin(1)" &&
                  cos10.closed_form && *cos10.closed_form == "cos(1)-1" &&
                  regint::regularize_integral(regint::builtin_series("exp"), 5)
                          .closed_form.value_or("") == "-1/e" &&
                  regint::regularize_integral(regint::builtin_series("geometric"), 5)
                          .closed_form.value_or("") == "1-log(4)";
        double worst = std::abs(cos10.value - (-0.4596976941204371759927));
        s.add("regint/builtin_series_values", ok && worst <= 1e-15, worst, 1e-15,
              "exact N = 10 sums and closed-form tags for the builtins");
    }
    {
        double remark = regint::double_integral_remark();
        double a = std::abs(remark - (1.0 - 2.0 * std::log(2.0)));
        double b = std::abs(regint::mu_sum_partial(10000).to_double() - remark);
        s.add("regint/remark_consistency", a <= 1e-14 && b <= 5e-9, b, 5e-9,
              "1 - log 4 matches 1 - 2 log 2 and the N = 10^4 partial sum");
    }
    return s.out;
}

} // namespace

std::vector<CheckResult> verify_suite(const std::string& suite) {
    if (suite == "exact") return exact_suite();
    if (suite == "special") return special_suite();
    if (suite == "mu") return mu_suite();
    if (suite == "regint") return regint_suite();
    if (suite == "all") {
        std::vector<CheckResult> out = exact_suite();
        for (auto more : {special_suite(), mu_suite(), regint_suite()})
            out.insert(out.end(), std::make_move_iterator(more.begin()),
                       std::make_move_iterator(more.end()));
        return out;
    }
    throw Error(ErrorCode::bad_argument,
                "unknown suite \"" + suite + "\" (exact, special, mu, regint, all)");
}

} // namespace zetareg::cli
