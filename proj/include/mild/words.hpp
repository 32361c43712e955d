#ifndef MILD_WORDS_HPP
#define MILD_WORDS_HPP

#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace mild {

// Expression tree over a free pro-p group: generators, inverses, products,
// integer powers (unbounded exponents), and commutators [a,b] = a^-1 b^-1 a b.
struct GroupWord {
    enum class Kind { Generator, Inverse, Product, Power, Commutator };

    Kind kind = Kind::Generator;
    int generator = 0;          // Kind::Generator
    mpz_class exponent;         // Kind::Power
    std::vector<GroupWord> children;

    static GroupWord gen(int i);
    static GroupWord inverse(GroupWord w);
    static GroupWord product(std::vector<GroupWord> ws);
    static GroupWord power(GroupWord base, mpz_class e);
    static GroupWord commutator(GroupWord a, GroupWord b);

    // Largest generator index appearing in the word (0 for empty products).
    int max_generator() const;

    // Renders in the same grammar parse_word accepts.
    std::string str() const;
};

// Grammar (whitespace insignificant):
//   word      := term { '*' term }
//   term      := atom [ '^' integer ]
//   atom      := generator | '[' word ',' word ']' | '(' word ')'
//   generator := 'x' digits
//   integer   := ['-'] digits
// Throws ParseError on malformed input.
GroupWord parse_word(std::string_view text);

} // namespace mild

#endif
