#pragma once

#include "zetareg/rational.hpp"

#include <cstddef>
#include <deque>
#include <shared_mutex>

namespace zetareg::exact {

// Index cap for the O(n^2) exact recurrences (Bernoulli table, hence zeta at
// negative integers and integer mu).  Far above anything the identities need;
// prevents unbounded stalls on absurd CLI arguments.
inline constexpr std::size_t kMaxBernoulliIndex = 512;

// C(m, l) exactly; 0 outside 0 <= l <= m (summation-friendly convention).
Rational binomial_exact(unsigned long m, long l);

// Memoized B_0..B_n via the defining recurrence
//   sum_{k=0}^{m-1} C(m,k) B_k = 0,  B_0 = 1  (forces B_1 = -1/2).
// Grow-only, filled in index order; values are never recomputed.  Concurrent
// readers are unrestricted; growth is serialized by a single-writer lock.
class BernoulliTable {
  public:
    static BernoulliTable& instance();

    Rational get(std::size_t n);
    std::size_t max_index() const;

  private:
    BernoulliTable() { values_.emplace_back(1); }
    void extend_to(std::size_t n);

    mutable std::shared_mutex mutex_;
    std::deque<Rational> values_; // index n -> B_n
};

Rational bernoulli(std::size_t n);

// zeta(-k) = (-1)^k B_{k+1} / (k+1), exactly.
Rational zeta_neg_int(std::size_t k);

// sum_{k=1}^{r+1} C(r+2, k) B_k; identically -1 for every r >= 0.
Rational bernoulli_binomial_sum(std::size_t r);

} // namespace zetareg::exact
