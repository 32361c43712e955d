#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mild/errors.hpp"
#include "mild/magnus.hpp"
#include "mild/series.hpp"
#include "mild/words.hpp"

using namespace mild;

namespace {

Monomial mono(int d, std::vector<int> idx) { return Monomial::word(d, std::move(idx)); }

Monomial run_monomial(int d, int head, int letter, int count, int tail) {
    std::vector<int> idx{head};
    idx.insert(idx.end(), static_cast<std::size_t>(count), letter);
    idx.push_back(tail);
    return Monomial::word(d, std::move(idx));
}

GroupWord random_word(std::mt19937_64& rng, int d, int depth) {
    const int kind = depth == 0 ? 0 : static_cast<int>(rng() % 5);
    std::uniform_int_distribution<int> gen_dist(1, d);
    switch (kind) {
        case 1:
            return GroupWord::inverse(random_word(rng, d, depth - 1));
        case 2: {
            std::vector<GroupWord> ws;
            const int k = 2 + static_cast<int>(rng() % 2);
            for (int i = 0; i < k; ++i) ws.push_back(random_word(rng, d, depth - 1));
            return GroupWord::product(std::move(ws));
        }
        case 3: {
            const long e = static_cast<long>(rng() % 9) - 4;
            return GroupWord::power(random_word(rng, d, depth - 1), e);
        }
        case 4:
            return GroupWord::commutator(random_word(rng, d, depth - 1),
                                         random_word(rng, d, depth - 1));
        default:
            return GroupWord::gen(gen_dist(rng));
    }
}

// repeated-multiplication oracle for (1+X)^e
std::vector<long long> power_series_oracle(long e, long long p, int trunc) {
    TruncatedSeries base = series_add(TruncatedSeries::constant(p, 1, trunc, 1),
                                      TruncatedSeries::generator(p, 1, trunc, 1));
    if (e < 0) {
        base = invert_unit(base);
        e = -e;
    }
    TruncatedSeries acc = TruncatedSeries::constant(p, 1, trunc, 1);
    for (long k = 0; k < e; ++k) acc = series_mul(acc, base);
    std::vector<long long> out;
    for (int k = 0; k < trunc; ++k) {
        out.push_back(acc.coeff(Monomial::word(1, std::vector<int>(static_cast<std::size_t>(k), 1)))
                          .value());
    }
    return out;
}

} // namespace

TEST_CASE("word grammar") {
    CHECK(parse_word("[x1,[x2^9,x3]]").str() == "[x1,[x2^9,x3]]");
    CHECK(parse_word("x1*x2^-1").str() == "x1*x2^-1");
    CHECK(parse_word(" [ x1 , [ x2 ^ 9 , x3 ] ] ").str() == "[x1,[x2^9,x3]]");
    CHECK(parse_word("(x1*x2)^3").str() == "(x1*x2)^3");
    CHECK(parse_word("x12").max_generator() == 12);
    CHECK_THROWS_AS(parse_word("x"), ParseError);
    CHECK_THROWS_AS(parse_word("[x1"), ParseError);
    CHECK_THROWS_AS(parse_word("x1^"), ParseError);
    CHECK_THROWS_AS(parse_word(""), ParseError);
    CHECK_THROWS_AS(parse_word("x1)"), ParseError);
}

TEST_CASE("expand basics") {
    // x1*x2 -> (1+X1)(1+X2)
    TruncatedSeries s = expand(parse_word("x1*x2"), 3, 2, 6);
    CHECK(s.coeff(Monomial::unit(2)).value() == 1);
    CHECK(s.coeff(mono(2, {1})).value() == 1);
    CHECK(s.coeff(mono(2, {2})).value() == 1);
    CHECK(s.coeff(mono(2, {1, 2})).value() == 1);
    CHECK(s.terms().size() == 4);

    CHECK_THROWS_AS(expand(parse_word("x3"), 3, 2, 6), std::invalid_argument);
    CHECK_THROWS_AS(expand(parse_word("x1"), 3, 2, 1), std::invalid_argument);
}

TEST_CASE("expand x2^(p^n) has only the p^n-th binomial") {
    // oracle: repeated squaring of (1+X2)
    for (int n = 1; n <= 2; ++n) {
        long e = 1;
        for (int k = 0; k < n; ++k) e *= 3;
        TruncatedSeries got = expand(GroupWord::power(GroupWord::gen(2), mpz_class(e)), 3, 2, 12);
        TruncatedSeries base = expand(GroupWord::gen(2), 3, 2, 12);
        TruncatedSeries oracle = TruncatedSeries::constant(3, 2, 12, 1);
        for (long k = 0; k < e; ++k) oracle = series_mul(oracle, base);
        CHECK(got == oracle);
        TruncatedSeries expected = TruncatedSeries::constant(3, 2, 12, 1);
        if (e < 12) {
            expected.add_term(mono(2, std::vector<int>(static_cast<std::size_t>(e), 2)), 1);
        }
        CHECK(got == expected);
    }
}

TEST_CASE("expand commutator against the four-factor oracle") {
    // [x2,x3] = x2^-1 x3^-1 x2 x3 multiplied out with series ops
    const long long p = 3;
    const int d = 3, N = 3;
    TruncatedSeries a = expand(parse_word("x2"), p, d, N);
    TruncatedSeries b = expand(parse_word("x3"), p, d, N);
    TruncatedSeries oracle =
        series_mul(series_mul(invert_unit(a), invert_unit(b)), series_mul(a, b));
    TruncatedSeries got = expand(parse_word("[x2,x3]"), p, d, N);
    CHECK(got == oracle);
    CHECK(got.str() == "1 + 1*X2.X3 + 2*X3.X2 + O(>=3)");
}

TEST_CASE("generator power series") {
    // e = -1: alternating signs
    auto cs = generator_power_series(mpz_class(-1), 5, 8);
    for (int k = 0; k < 8; ++k) CHECK(cs[static_cast<std::size_t>(k)] == (k % 2 == 0 ? 1 : 4));

    // e = 0: identity
    cs = generator_power_series(mpz_class(0), 5, 8);
    CHECK(cs[0] == 1);
    for (int k = 1; k < 8; ++k) CHECK(cs[static_cast<std::size_t>(k)] == 0);

    // e = p^n: only k in {0, p^n} below the truncation
    cs = generator_power_series(mpz_class(9), 3, 12);
    for (int k = 0; k < 12; ++k) {
        CHECK(cs[static_cast<std::size_t>(k)] == ((k == 0 || k == 9) ? 1 : 0));
    }

    // against the repeated-multiplication oracle
    for (long e = -64; e <= 64; ++e) {
        auto got = generator_power_series(mpz_class(e), 3, 30);
        CHECK(got == power_series_oracle(e, 3, 30));
    }
    for (long e : {3L, 9L, 27L}) {
        auto got = generator_power_series(mpz_class(e), 3, 30);
        CHECK(got == power_series_oracle(e, 3, 30));
    }

    // huge exponents stay exact (ell - 1 for a tame prime)
    auto big = generator_power_series(mpz_class(336), 3, 4);
    CHECK(big[0] == 1);
    CHECK(big[1] == 0);  // 336 = 0 mod 3
    CHECK(big[2] == 0);  // C(336,2) = 168*335 = 0 mod 3
}

TEST_CASE("zassenhaus degree") {
    CHECK(zassenhaus_degree(parse_word("x1"), 3, 3, 8).value == 1);
    CHECK(!zassenhaus_degree(parse_word("x1"), 3, 3, 8).truncation_limited);
    CHECK(zassenhaus_degree(parse_word("[x2,x3]"), 3, 3, 8).value == 2);
    // [x1,[x2^p,x3]] has degree p + 2
    CHECK(zassenhaus_degree(parse_word("[x1,[x2^3,x3]]"), 3, 3, 8).value == 5);

    const auto identity = zassenhaus_degree(parse_word("x1*x1^-1"), 3, 3, 8);
    CHECK(identity.truncation_limited);
    CHECK(identity.value == 8);
}

TEST_CASE("word hats") {
    CHECK(word_hat(parse_word("x5"), 3, 5, 6) == mono(5, {5}));
    // [x1,[x2^(p^n),x3]] -> X3.X2^(p^n).X1
    CHECK(word_hat(parse_word("[x1,[x2^3,x3]]"), 3, 3, 13) == run_monomial(3, 3, 2, 3, 1));
    CHECK(word_hat(parse_word("[x1,[x2^9,x3]]"), 3, 3, 13) == run_monomial(3, 3, 2, 9, 1));
    CHECK_THROWS_AS(word_hat(parse_word("x1*x1^-1"), 3, 3, 8), TruncationError);
}

TEST_CASE("iterated commutators") {
    CHECK(iterated_commutator(1, 2, 3, 1).str() == "[x1,[x2,x3]]");
    CHECK(iterated_commutator(1, 2, 3, 0).str() == "[x1,x3]");
    CHECK(iterated_commutator(1, 4, 5, 2).str() == "[x1,[x4,[x4,x5]]]");
    CHECK(word_hat(iterated_commutator(1, 4, 5, 2), 3, 5, 6) == run_monomial(5, 5, 4, 2, 1));
    CHECK_THROWS_AS(iterated_commutator(1, 1, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(iterated_commutator(1, 2, 3, -1), std::invalid_argument);
}

TEST_CASE("composite hats X_b X_j^n X_1") {
    for (int n = 1; n <= 8; ++n) {
        CHECK(word_hat(iterated_commutator(1, 2, 3, n), 3, 3, n + 4) == run_monomial(3, 3, 2, n, 1));
    }
    for (int j = 2; j <= 4; ++j) {
        for (int b = j + 1; b <= 5; ++b) {
            for (int n = 1; n <= 4; ++n) {
                CHECK(word_hat(iterated_commutator(1, j, b, n), 3, 5, n + 4) ==
                      run_monomial(5, b, j, n, 1));
            }
        }
    }
}

TEST_CASE("expand is a homomorphism") {
    std::mt19937_64 rng(4242);
    const long long p = 3;
    const int d = 3, N = 6;
    for (int iter = 0; iter < 200; ++iter) {
        GroupWord u = random_word(rng, d, 2);
        GroupWord v = random_word(rng, d, 2);
        TruncatedSeries eu = expand(u, p, d, N);
        TruncatedSeries ev = expand(v, p, d, N);
        CHECK(expand(GroupWord::product({u, v}), p, d, N) == series_mul(eu, ev));
        CHECK(series_mul(expand(GroupWord::inverse(u), p, d, N), eu) ==
              TruncatedSeries::constant(p, d, N, 1));
    }
}

TEST_CASE("filtration properties") {
    std::mt19937_64 rng(999);
    const long long p = 3;
    const int d = 3, N = 8;
    for (int iter = 0; iter < 120; ++iter) {
        GroupWord u = random_word(rng, d, 2);
        GroupWord v = random_word(rng, d, 2);
        const auto du = zassenhaus_degree(u, p, d, N);
        const auto dv = zassenhaus_degree(v, p, d, N);
        const auto dc = zassenhaus_degree(GroupWord::commutator(u, v), p, d, N);
        // deg[u,v] >= deg u + deg v (both finite)
        if (!du.truncation_limited && !dv.truncation_limited) {
            CHECK(dc.value >= std::min(du.value + dv.value, N));
        }
        // conjugation preserves the degree
        GroupWord g = random_word(rng, d, 1);
        GroupWord conj = GroupWord::product({g, u, GroupWord::inverse(g)});
        const auto dconj = zassenhaus_degree(conj, p, d, N);
        CHECK(dconj.value == du.value);
        CHECK(dconj.truncation_limited == du.truncation_limited);
    }
}
