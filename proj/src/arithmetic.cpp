#include "mild/arithmetic.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "mild/modular.hpp"

namespace mild {

namespace {

void check_odd_prime_p(long long p) {
    if (p < 3 || !is_prime(static_cast<std::uint64_t>(p))) {
        throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
    }
}

void check_tame(std::uint64_t ell, long long p) {
    if (!is_tame(ell, p)) {
        throw std::invalid_argument(std::to_string(ell) + " is not a tame prime for p = " +
                                    std::to_string(p));
    }
}

} // namespace

bool is_tame(std::uint64_t ell, long long p) {
    check_odd_prime_p(p);
    if (!is_prime(ell)) {
        throw std::invalid_argument(std::to_string(ell) + " is not prime");
    }
    return ell % static_cast<std::uint64_t>(p) == 1;
}

bool pth_power_residue(long long a, std::uint64_t ell, long long p) {
    check_tame(ell, p);
    long long r = a % static_cast<long long>(ell);
    if (r < 0) r += static_cast<long long>(ell);
    if (r == 0) {
        throw std::invalid_argument("pth_power_residue: argument divisible by " + std::to_string(ell));
    }
    return powmod(static_cast<std::uint64_t>(r), (ell - 1) / static_cast<std::uint64_t>(p), ell) == 1;
}

const std::optional<Fp>& LinkingMatrix::at(int i, int j) const {
    return entries.at(static_cast<std::size_t>(i - 1)).at(static_cast<std::size_t>(j - 1));
}

LinkingMatrix linking_matrix(long long p, const std::vector<std::uint64_t>& primes) {
    std::vector<std::uint64_t> roots;
    roots.reserve(primes.size());
    for (std::uint64_t ell : primes) {
        check_tame(ell, p);
        roots.push_back(smallest_primitive_root(ell));
    }
    return linking_matrix_with_roots(p, primes, roots);
}

LinkingMatrix linking_matrix_with_roots(long long p, const std::vector<std::uint64_t>& primes,
                                        const std::vector<std::uint64_t>& roots) {
    check_odd_prime_p(p);
    if (primes.empty()) throw std::invalid_argument("linking_matrix: empty prime set");
    if (roots.size() != primes.size()) {
        throw std::invalid_argument("linking_matrix: need one primitive root per prime");
    }
    std::set<std::uint64_t> distinct(primes.begin(), primes.end());
    if (distinct.size() != primes.size()) {
        throw std::invalid_argument("linking_matrix: primes must be pairwise distinct");
    }
    LinkingMatrix m;
    m.p = p;
    m.primes = primes;
    m.roots = roots;
    const std::size_t d = primes.size();
    m.entries.assign(d, std::vector<std::optional<Fp>>(d));
    for (std::size_t j = 0; j < d; ++j) {
        check_tame(primes[j], p);
        const std::uint64_t ell = primes[j];
        const std::uint64_t g = roots[j];
        // validate the root by checking the order directly
        for (std::uint64_t q : prime_factors(ell - 1)) {
            if (powmod(g, (ell - 1) / q, ell) == 1) {
                throw std::invalid_argument(std::to_string(g) + " is not a primitive root mod " +
                                            std::to_string(ell));
            }
        }
        for (std::size_t i = 0; i < d; ++i) {
            if (i == j) continue;
            const std::uint64_t dlog = discrete_log(g, primes[i] % ell, ell);
            m.entries[i][j] = Fp(static_cast<long long>(dlog % static_cast<std::uint64_t>(p)), p);
        }
    }
    return m;
}

TruncatedSeries relation_initial_form(int i, const LinkingMatrix& matrix) {
    const int d = matrix.size();
    if (i < 1 || i > d) throw std::invalid_argument("relation_initial_form: row out of range");
    TruncatedSeries form(matrix.p, d, 3);
    for (int j = 1; j <= d; ++j) {
        if (j == i) continue;
        const long long a = matrix.at(i, j)->value();
        if (a == 0) continue;
        form.add_term(Monomial::word(d, {i, j}), a);
        form.add_term(Monomial::word(d, {j, i}), -a);
    }
    return form;
}

PresentationSketch presentation_hats(long long p, const std::vector<std::uint64_t>& primes) {
    return presentation_hats(linking_matrix(p, primes));
}

PresentationSketch presentation_hats(const LinkingMatrix& matrix) {
    PresentationSketch sketch;
    sketch.p = matrix.p;
    sketch.d = matrix.size();
    for (int i = 1; i <= sketch.d; ++i) {
        TruncatedSeries form = relation_initial_form(i, matrix);
        if (form.is_zero()) {
            sketch.zero_rows.push_back(i);
            sketch.hats.emplace_back(std::nullopt);
        } else {
            Monomial hat = highest_term(form);
            sketch.unordered_pairs.emplace_back(std::min(hat.idx[0], hat.idx[1]),
                                                std::max(hat.idx[0], hat.idx[1]));
            sketch.hats.emplace_back(std::move(hat));
        }
        sketch.forms.push_back(std::move(form));
    }
    return sketch;
}

long long shafarevich_rank(const RankInputs& in) {
    if (in.delta != 0 && in.delta != 1) throw std::invalid_argument("delta must be 0 or 1");
    if (in.sizeS < 0 || in.r1 < 0 || in.r2 < 0 || in.sizeT < 0 || in.dimV < 0) {
        throw std::invalid_argument("rank inputs must be nonnegative");
    }
    return in.sizeS - (in.r1 + in.r2) - 1 - in.sizeT + in.delta + in.dimV;
}

double alpha_bound(long long r1, long long r2, long long sizeT) {
    if (r1 < 0 || r2 < 0 || sizeT < 0) throw std::invalid_argument("alpha_bound: negative input");
    return 3.0 + 2.0 * std::sqrt(2.0 + static_cast<double>(r1 + r2 + sizeT));
}

LemmaReport lemma_easy_check(int d, long long r1, long long r2, long long sizeT) {
    if (d < 4) throw std::invalid_argument("lemma_easy_check: d must be >= 4");
    LemmaReport report;
    report.alpha = alpha_bound(r1, r2, sizeT);
    report.hypothesis_met = static_cast<double>(d) > report.alpha;
    if (!report.hypothesis_met) return report;
    const long long lhs = d + r1 + r2 + sizeT - 1;
    for (int c = 2; c <= d - 1; ++c) {
        const long long rhs = static_cast<long long>(d - c) * (c - 1);
        if (!(lhs < rhs)) report.failing_c.push_back(c);
    }
    report.holds = report.failing_c.empty();
    return report;
}

std::optional<std::uint64_t> find_prime(long long p,
                                        const std::vector<ResidueConstraint>& constraints,
                                        std::uint64_t bound) {
    check_odd_prime_p(p);
    for (const auto& c : constraints) check_tame(c.ell, p);
    for (std::uint64_t q = 2; q <= bound; ++q) {
        if (q % static_cast<std::uint64_t>(p) != 1 || !is_prime(q)) continue;
        bool skip = false;
        for (const auto& c : constraints) {
            if (c.ell == q) skip = true;
        }
        if (skip) continue;
        bool ok = true;
        for (const auto& c : constraints) {
            const bool res = (c.direction == ConstraintDirection::NewModExisting)
                                 ? pth_power_residue(static_cast<long long>(q), c.ell, p)
                                 : pth_power_residue(static_cast<long long>(c.ell), q, p);
            if (res != c.want_residue) {
                ok = false;
                break;
            }
        }
        if (ok) return q;
    }
    return std::nullopt;
}

} // namespace mild
