#include "mild/magnus.hpp"

#include <stdexcept>
#include <string>

#include "mild/errors.hpp"

namespace mild {

namespace {

void validate(const GroupWord& w, long long /*p*/, int d, int trunc) {
    if (trunc < 2) throw std::invalid_argument("truncation must be >= 2");
    const int top = w.max_generator();
    if (top > d) {
        throw std::invalid_argument("word uses x" + std::to_string(top) +
                                    " but the ambient rank is " + std::to_string(d));
    }
}

// C(n, k) mod p for 0 <= k < p via the factorial-free row recurrence.
long long small_binom(long long n, long long k, long long p) {
    if (k < 0 || k > n) return 0;
    long long num = 1, den = 1;
    for (long long t = 0; t < k; ++t) {
        num = (num * ((n - t) % p)) % p;
        den = (den * ((t + 1) % p)) % p;
    }
    // den is invertible: 0 < k < p
    long long inv = 1, base = den, e = p - 2;
    while (e > 0) {
        if (e & 1) inv = (inv * base) % p;
        base = (base * base) % p;
        e >>= 1;
    }
    return (num * inv) % p;
}

// C(n, k) mod p by Lucas, n an unbounded nonnegative integer.
long long lucas_binom(const mpz_class& n, long long k, long long p) {
    const long pl = static_cast<long>(p);
    mpz_class nn = n;
    long long kk = k;
    long long result = 1;
    while (kk > 0 || nn > 0) {
        const long long nd = mpz_class(nn % pl).get_si();
        const long long kd = kk % p;
        if (kd > nd) return 0;
        result = (result * small_binom(nd, kd, p)) % p;
        nn /= pl;
        kk /= p;
        if (result == 0) return 0;
    }
    return result;
}

TruncatedSeries expand_impl(const GroupWord& w, long long p, int d, int trunc);

TruncatedSeries expand_inverse(const GroupWord& w, long long p, int d, int trunc) {
    using Kind = GroupWord::Kind;
    switch (w.kind) {
        case Kind::Generator: {
            // (1+X_i)^-1 is the alternating geometric series.
            TruncatedSeries s(p, d, trunc);
            std::vector<int> run;
            for (int k = 0; k < trunc; ++k) {
                s.add_term(Monomial::word(d, run), (k % 2 == 0) ? 1 : -1);
                run.push_back(w.generator);
            }
            return s;
        }
        case Kind::Inverse:
            return expand_impl(w.children[0], p, d, trunc);
        case Kind::Product: {
            // (u_1...u_k)^-1 = u_k^-1 ... u_1^-1
            TruncatedSeries acc = TruncatedSeries::constant(p, d, trunc, 1);
            for (auto it = w.children.rbegin(); it != w.children.rend(); ++it) {
                acc = series_mul(acc, expand_inverse(*it, p, d, trunc));
            }
            return acc;
        }
        case Kind::Power:
            return expand_impl(GroupWord::power(w.children[0], -w.exponent), p, d, trunc);
        case Kind::Commutator:
            // [a,b]^-1 = [b,a]
            return expand_impl(GroupWord::commutator(w.children[1], w.children[0]), p, d, trunc);
    }
    throw std::logic_error("unreachable word kind");
}

TruncatedSeries expand_power(const GroupWord& base, const mpz_class& e, long long p, int d,
                             int trunc) {
    if (base.kind == GroupWord::Kind::Generator) {
        const auto coeffs = generator_power_series(e, p, trunc);
        TruncatedSeries s(p, d, trunc);
        std::vector<int> run;
        for (int k = 0; k < trunc; ++k) {
            s.add_term(Monomial::word(d, run), coeffs[k]);
            run.push_back(base.generator);
        }
        return s;
    }
    mpz_class exp = e;
    TruncatedSeries b = expand_impl(base, p, d, trunc);
    if (exp < 0) {
        b = invert_unit(b);
        exp = -exp;
    }
    TruncatedSeries acc = TruncatedSeries::constant(p, d, trunc, 1);
    while (exp > 0) {
        if (mpz_odd_p(exp.get_mpz_t())) acc = series_mul(acc, b);
        exp >>= 1;
        if (exp > 0) b = series_mul(b, b);
    }
    return acc;
}

TruncatedSeries expand_impl(const GroupWord& w, long long p, int d, int trunc) {
    using Kind = GroupWord::Kind;
    switch (w.kind) {
        case Kind::Generator: {
            TruncatedSeries s = TruncatedSeries::constant(p, d, trunc, 1);
            s.add_term(Monomial::gen(d, w.generator), 1);
            return s;
        }
        case Kind::Inverse:
            return expand_inverse(w.children[0], p, d, trunc);
        case Kind::Product: {
            TruncatedSeries acc = TruncatedSeries::constant(p, d, trunc, 1);
            for (const auto& c : w.children) acc = series_mul(acc, expand_impl(c, p, d, trunc));
            return acc;
        }
        case Kind::Power:
            return expand_power(w.children[0], w.exponent, p, d, trunc);
        case Kind::Commutator: {
            const auto& a = w.children[0];
            const auto& b = w.children[1];
            TruncatedSeries acc = series_mul(expand_inverse(a, p, d, trunc),
                                             expand_inverse(b, p, d, trunc));
            acc = series_mul(acc, expand_impl(a, p, d, trunc));
            return series_mul(acc, expand_impl(b, p, d, trunc));
        }
    }
    throw std::logic_error("unreachable word kind");
}

} // namespace

TruncatedSeries expand(const GroupWord& w, long long p, int d, int trunc) {
    validate(w, p, d, trunc);
    return expand_impl(w, p, d, trunc);
}

std::vector<long long> generator_power_series(const mpz_class& e, long long p, int trunc) {
    if (trunc < 1) throw std::invalid_argument("truncation must be >= 1");
    std::vector<long long> out(static_cast<std::size_t>(trunc), 0);
    if (e >= 0) {
        for (int k = 0; k < trunc; ++k) out[k] = lucas_binom(e, k, p);
    } else {
        const mpz_class m = -e;
        for (int k = 0; k < trunc; ++k) {
            const long long c = lucas_binom(m + k - 1, k, p);
            out[k] = (k % 2 == 0) ? c : (p - c) % p;
        }
    }
    return out;
}

DegreeResult zassenhaus_degree(const GroupWord& w, long long p, int d, int trunc) {
    TruncatedSeries s = expand(w, p, d, trunc);
    s.add_term(Monomial::unit(d), -1);
    const auto v = valuation(s);
    if (!v) return DegreeResult{trunc, true};
    return DegreeResult{*v, false};
}

Monomial word_hat(const GroupWord& w, long long p, int d, int trunc) {
    TruncatedSeries s = expand(w, p, d, trunc);
    s.add_term(Monomial::unit(d), -1);
    if (s.is_zero()) {
        throw TruncationError("word_hat: expand(w) - 1 has no terms below truncation " +
                              std::to_string(trunc) + "; raise the truncation");
    }
    return highest_term(s);
}

GroupWord iterated_commutator(int i0, int j0, int base, int n) {
    if (i0 < 1 || j0 < 1 || base < 1) throw std::invalid_argument("generator indices must be >= 1");
    if (i0 == j0 || i0 == base || j0 == base) {
        throw std::invalid_argument("iterated_commutator: indices must be pairwise distinct");
    }
    if (n < 0) throw std::invalid_argument("iterated_commutator: n must be >= 0");
    GroupWord w = GroupWord::gen(base);
    for (int k = 0; k < n; ++k) w = GroupWord::commutator(GroupWord::gen(j0), std::move(w));
    return GroupWord::commutator(GroupWord::gen(i0), std::move(w));
}

} // namespace mild
