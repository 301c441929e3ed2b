#include "zetareg/exact.hpp"

#include "zetareg/errors.hpp"

#include <mutex>

namespace zetareg::exact {

Rational binomial_exact(unsigned long m, long l) {
    if (l < 0 || static_cast<unsigned long>(l) > m) return Rational(0);
    Rational r;
    mpz_bin_uiui(mpq_numref(r.raw()), m, static_cast<unsigned long>(l));
    return r;
}

BernoulliTable& BernoulliTable::instance() {
    static BernoulliTable table;
    return table;
}

std::size_t BernoulliTable::max_index() const {
    std::shared_lock lock(mutex_);
    return values_.size() - 1;
}

Rational BernoulliTable::get(std::size_t n) {
    if (n > kMaxBernoulliIndex)
        throw Error(ErrorCode::argument_too_large,
                    "bernoulli index " + std::to_string(n) + " exceeds the cap of " +
                        std::to_string(kMaxBernoulliIndex));
    {
        std::shared_lock lock(mutex_);
        if (n < values_.size()) return values_[n];
    }
    std::unique_lock lock(mutex_);
    extend_to(n);
    return values_[n];
}

void BernoulliTable::extend_to(std::size_t n) {
    // B_j = -(1/(j+1)) sum_{k=0}^{j-1} C(j+1, k) B_k, appended strictly in
    // index order so every value is computed exactly once.
    for (std::size_t j = values_.size(); j <= n; ++j) {
        Rational sum(0);
        for (std::size_t k = 0; k < j; ++k)
            sum += binomial_exact(j + 1, static_cast<long>(k)) * values_[k];
        values_.push_back(-(sum / Rational(static_cast<long>(j) + 1)));
    }
}

Rational bernoulli(std::size_t n) { return BernoulliTable::instance().get(n); }

Rational zeta_neg_int(std::size_t k) {
    Rational b = bernoulli(k + 1);
    Rational v = b / Rational(static_cast<long>(k) + 1);
    return (k % 2 == 0) ? v : -v;
}

Rational bernoulli_binomial_sum(std::size_t r) {
    Rational sum(0);
    for (std::size_t k = 1; k <= r + 1; ++k)
        sum += binomial_exact(r + 2, static_cast<long>(k)) * bernoulli(k);
    return sum;
}

} // namespace zetareg::exact
