#ifndef MILD_SERIES_HPP
#define MILD_SERIES_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mild {

// Element of F_p for an odd prime p. Value is kept reduced to [0, p).
class Fp {
  public:
    Fp(long long value, long long p);

    long long value() const { return value_; }
    long long modulus() const { return p_; }
    bool is_zero() const { return value_ == 0; }

    Fp operator+(const Fp& o) const;
    Fp operator-(const Fp& o) const;
    Fp operator*(const Fp& o) const;
    Fp operator-() const;
    Fp inverse() const;
    bool operator==(const Fp& o) const { return value_ == o.value_ && p_ == o.p_; }

  private:
    long long value_;
    long long p_;
};

// Word in the generators X_1..X_d; the empty word is the unit monomial.
// Every X_i has degree 1, so degree = length.
struct Monomial {
    int d = 0;                // ambient generator count
    std::vector<int> idx;     // 1-based generator indices

    int degree() const { return static_cast<int>(idx.size()); }
    bool is_unit() const { return idx.empty(); }

    static Monomial unit(int d);
    static Monomial gen(int d, int i);
    static Monomial word(int d, std::vector<int> indices);

    // "X3.X2.X1"; the unit monomial prints as "1".
    std::string str() const;
    static Monomial parse(std::string_view text, int d);

    bool operator==(const Monomial& o) const { return d == o.d && idx == o.idx; }
};

enum class Ordering { Less, Equal, Greater };

// The total order on monomials: lower degree is greater; at equal degree,
// left-to-right lexicographic with X_1 < X_2 < ... < X_d.
// Monomials over different ambient d are not comparable (usage error).
Ordering monomial_compare(const Monomial& a, const Monomial& b);

// Strict weak order arranging monomials greatest-first (print order).
struct MonomialDescending {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.idx.size() != b.idx.size()) return a.idx.size() < b.idx.size();
        return b.idx < a.idx;
    }
};

// Element of F_p<<X_1..X_d>> with all terms of degree >= trunc discarded.
// Stored coefficients are nonzero; the term map iterates greatest-first,
// which is also ascending degree.
class TruncatedSeries {
  public:
    using TermMap = std::map<Monomial, long long, MonomialDescending>;

    TruncatedSeries(long long p, int d, int trunc);

    static TruncatedSeries constant(long long p, int d, int trunc, long long c);
    static TruncatedSeries generator(long long p, int d, int trunc, int i);

    long long p() const { return p_; }
    int d() const { return d_; }
    int trunc() const { return trunc_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    Fp coeff(const Monomial& m) const;

    // Adds c * m, reducing mod p and dropping the term if the coefficient
    // cancels or the degree reaches the truncation.
    void add_term(const Monomial& m, long long c);

    bool operator==(const TruncatedSeries& o) const;

    // "2*X3.X2 + 1*X2.X3 + O(>=6)"; the constant term prints bare.
    std::string str() const;
    static TruncatedSeries parse(std::string_view text, long long p, int d, int default_trunc);

  private:
    long long p_;
    int d_;
    int trunc_;
    TermMap terms_;
};

// Ring operations. Operands must agree on p and d; the result carries
// truncation min(N_s, N_t).
TruncatedSeries series_add(const TruncatedSeries& s, const TruncatedSeries& t);
TruncatedSeries series_sub(const TruncatedSeries& s, const TruncatedSeries& t);
TruncatedSeries series_mul(const TruncatedSeries& s, const TruncatedSeries& t);
TruncatedSeries series_neg(const TruncatedSeries& s);
TruncatedSeries series_scale(const TruncatedSeries& s, long long c);

// Minimum degree carrying a nonzero coefficient. nullopt means no nonzero
// term below the truncation: the valuation is >= trunc, and for data that
// was never truncated this is omega(0) = infinity.
std::optional<int> valuation(const TruncatedSeries& s);

// Greatest monomial with nonzero coefficient. Throws std::domain_error on
// the zero series.
Monomial highest_term(const TruncatedSeries& s);

// Homogeneous component of degree valuation(s). Throws on the zero series.
TruncatedSeries initial_form(const TruncatedSeries& s);

// Terms of degree exactly k.
TruncatedSeries homogeneous_part(const TruncatedSeries& s, int k);

// Multiplicative inverse; the constant term must be nonzero.
TruncatedSeries invert_unit(const TruncatedSeries& s);

} // namespace mild

#endif
