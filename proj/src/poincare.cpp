#include "mild/poincare.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mild {

std::string IntSeries::str() const {
    std::ostringstream out;
    for (std::size_t k = 0; k < coeff.size(); ++k) {
        if (k > 0) out << ", ";
        out << coeff[k].get_str();
    }
    out << " (mod t^" << coeff.size() << ")";
    return out.str();
}

IntSeries int_series_mul(const IntSeries& a, const IntSeries& b) {
    const std::size_t n = std::min(a.coeff.size(), b.coeff.size());
    IntSeries out;
    out.coeff.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeff[i] == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j) out.coeff[i + j] += a.coeff[i] * b.coeff[j];
    }
    return out;
}

IntSeries invert_unit_series(const IntSeries& s) {
    if (s.coeff.empty() || s.coeff[0] != 1) {
        throw std::invalid_argument("invert_unit_series: constant term must be 1");
    }
    IntSeries out;
    out.coeff.assign(s.coeff.size(), 0);
    out.coeff[0] = 1;
    for (std::size_t k = 1; k < s.coeff.size(); ++k) {
        mpz_class acc = 0;
        for (std::size_t j = 1; j <= k; ++j) acc += s.coeff[j] * out.coeff[k - j];
        out.coeff[k] = -acc;
    }
    return out;
}

IntSeries degree_spec_denominator(int d, const DegreeSpec& spec, int N) {
    if (d < 1) throw std::invalid_argument("degree_spec_denominator: d must be >= 1");
    if (N < 0) throw std::invalid_argument("degree_spec_denominator: N must be >= 0");
    IntSeries q;
    q.coeff.assign(static_cast<std::size_t>(N) + 1, 0);
    q.coeff[0] = 1;
    if (N >= 1) q.coeff[1] -= d;
    for (int n : spec.finite) {
        if (n < 2) throw std::invalid_argument("degree_spec_denominator: relation degrees must be >= 2");
        if (n <= N) q.coeff[static_cast<std::size_t>(n)] += 1;
    }
    if (spec.tail_from) {
        if (*spec.tail_from < 2) {
            throw std::invalid_argument("degree_spec_denominator: tail must start at degree >= 2");
        }
        for (int k = *spec.tail_from; k <= N; ++k) q.coeff[static_cast<std::size_t>(k)] += 1;
    }
    return q;
}

IntSeries mild_poincare(int d, const DegreeSpec& spec, int N) {
    return invert_unit_series(degree_spec_denominator(d, spec, N));
}

IntSeries theorem_main_series(int d, int r, int N) {
    if (r < 0) throw std::invalid_argument("theorem_main_series: r must be >= 0");
    DegreeSpec spec;
    spec.finite.assign(static_cast<std::size_t>(r), 2);
    spec.tail_from = 3;
    return mild_poincare(d, spec, N);
}

std::optional<int> check_nonnegative(const IntSeries& s) {
    for (std::size_t k = 0; k < s.coeff.size(); ++k) {
        if (s.coeff[k] < 0) return static_cast<int>(k);
    }
    return std::nullopt;
}

} // namespace mild
