#ifndef MILD_POINCARE_HPP
#define MILD_POINCARE_HPP

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace mild {

// Integer formal power series truncated after degree coeff.size() - 1.
// Arithmetic is exact; coefficients are unbounded.
struct IntSeries {
    std::vector<mpz_class> coeff;

    int maxdeg() const { return static_cast<int>(coeff.size()) - 1; }

    // "1, 5, 20 (mod t^3)"
    std::string str() const;

    bool operator==(const IntSeries& o) const { return coeff == o.coeff; }
};

IntSeries int_series_mul(const IntSeries& a, const IntSeries& b);

// Reciprocal through degree maxdeg; requires s[0] = 1.
IntSeries invert_unit_series(const IntSeries& s);

// Relation degrees: a finite multiset (each >= 2) plus an optional tail
// holding one relation in every degree >= tail_from (>= 2).
struct DegreeSpec {
    std::vector<int> finite;
    std::optional<int> tail_from;
};

// The polynomial-plus-tail 1 - d t + sum_i t^{n_i} (+ tail), materialized
// through degree N.
IntSeries degree_spec_denominator(int d, const DegreeSpec& spec, int N);

// Graded dimensions of the quotient algebra with d generators and the given
// relation degrees: the reciprocal of degree_spec_denominator.
IntSeries mild_poincare(int d, const DegreeSpec& spec, int N);

// (1 - d t + r t^2 + t^3 (1 + t + t^2 + ...))^-1 through degree N.
IntSeries theorem_main_series(int d, int r, int N);

// Index of the first negative coefficient, if any.
std::optional<int> check_nonnegative(const IntSeries& s);

} // namespace mild

#endif
