#ifndef MILD_MAGNUS_HPP
#define MILD_MAGNUS_HPP

#include <vector>

#include <gmpxx.h>

#include "mild/series.hpp"
#include "mild/words.hpp"

namespace mild {

inline constexpr int kDefaultTruncation = 12;

// Image of the word under the embedding x_i -> 1 + X_i of the completed
// group algebra into F_p<<X_1..X_d>>, truncated at degree `trunc` (>= 2).
// Exponents are unbounded; generator powers expand through binomials mod p,
// composite powers through binary powering of the expanded series.
TruncatedSeries expand(const GroupWord& w, long long p, int d, int trunc);

// Coefficients of (1+X)^e mod p up to degree trunc: C(e,k) by Lucas for
// e >= 0, and C(e,k) = (-1)^k C(-e+k-1, k) for e < 0.
std::vector<long long> generator_power_series(const mpz_class& e, long long p, int trunc);

struct DegreeResult {
    int value = 0;                   // the degree, or trunc when limited
    bool truncation_limited = false; // no nonzero term was visible below trunc
};

// Filtration level of w: the valuation of expand(w) - 1. The identity word
// reports truncation_limited at every truncation.
DegreeResult zassenhaus_degree(const GroupWord& w, long long p, int d, int trunc);

// Highest term of expand(w) - 1. Throws TruncationError when that series
// vanishes below the truncation; raise trunc and retry.
Monomial word_hat(const GroupWord& w, long long p, int d, int trunc);

// With f_x(y) = [x,y], builds f_{x_i0} applied to the n-fold composite
// f_{x_j0}^n at x_base. For 1 < j0 < base the highest term is
// X_base X_j0^n X_i0 (checked by tests through expand).
GroupWord iterated_commutator(int i0, int j0, int base, int n);

} // namespace mild

#endif
