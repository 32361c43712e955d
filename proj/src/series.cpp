#include "mild/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "mild/errors.hpp"
#include "mild/modular.hpp"

namespace mild {

namespace {

long long reduce(long long v, long long p) {
    v %= p;
    if (v < 0) v += p;
    return v;
}

void check_odd_prime(long long p) {
    if (p < 3 || p % 2 == 0 || !is_prime(static_cast<std::uint64_t>(p))) {
        throw std::invalid_argument("modulus must be an odd prime, got " + std::to_string(p));
    }
}

void check_same_ring(const TruncatedSeries& s, const TruncatedSeries& t) {
    if (s.p() != t.p()) throw std::invalid_argument("series over different primes");
    if (s.d() != t.d()) throw std::invalid_argument("series over different generator counts");
}

} // namespace

Fp::Fp(long long value, long long p) : value_(0), p_(p) {
    check_odd_prime(p);
    value_ = reduce(value, p);
}

Fp Fp::operator+(const Fp& o) const {
    if (p_ != o.p_) throw std::invalid_argument("field elements over different primes");
    return Fp(value_ + o.value_, p_);
}

Fp Fp::operator-(const Fp& o) const {
    if (p_ != o.p_) throw std::invalid_argument("field elements over different primes");
    return Fp(value_ - o.value_, p_);
}

Fp Fp::operator*(const Fp& o) const {
    if (p_ != o.p_) throw std::invalid_argument("field elements over different primes");
    return Fp(value_ * o.value_, p_);
}

Fp Fp::operator-() const { return Fp(-value_, p_); }

Fp Fp::inverse() const {
    if (value_ == 0) throw std::domain_error("inverse of zero in F_p");
    return Fp(static_cast<long long>(powmod(static_cast<std::uint64_t>(value_),
                                            static_cast<std::uint64_t>(p_ - 2),
                                            static_cast<std::uint64_t>(p_))),
              p_);
}

Monomial Monomial::unit(int d) {
    if (d < 1) throw std::invalid_argument("ambient generator count must be >= 1");
    return Monomial{d, {}};
}

Monomial Monomial::gen(int d, int i) {
    return word(d, {i});
}

Monomial Monomial::word(int d, std::vector<int> indices) {
    if (d < 1) throw std::invalid_argument("ambient generator count must be >= 1");
    for (int i : indices) {
        if (i < 1 || i > d) {
            throw std::invalid_argument("generator index " + std::to_string(i) +
                                        " out of range [1, " + std::to_string(d) + "]");
        }
    }
    return Monomial{d, std::move(indices)};
}

std::string Monomial::str() const {
    if (idx.empty()) return "1";
    std::string out;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (k > 0) out += '.';
        out += 'X';
        out += std::to_string(idx[k]);
    }
    return out;
}

Monomial Monomial::parse(std::string_view text, int d) {
    if (text == "1") return unit(d);
    std::vector<int> indices;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] != 'X') throw ParseError("monomial: expected 'X' in '" + std::string(text) + "'");
        ++pos;
        std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == start) throw ParseError("monomial: missing index in '" + std::string(text) + "'");
        indices.push_back(std::stoi(std::string(text.substr(start, pos - start))));
        if (pos < text.size()) {
            if (text[pos] != '.') throw ParseError("monomial: expected '.' in '" + std::string(text) + "'");
            ++pos;
            if (pos == text.size()) throw ParseError("monomial: trailing '.' in '" + std::string(text) + "'");
        }
    }
    if (indices.empty()) throw ParseError("monomial: empty text");
    return word(d, std::move(indices));
}

Ordering monomial_compare(const Monomial& a, const Monomial& b) {
    if (a.d != b.d) {
        throw std::invalid_argument("monomials over different ambient generator counts (" +
                                    std::to_string(a.d) + " vs " + std::to_string(b.d) + ")");
    }
    // Same degree means same length, so the lexicographic step below never
    // compares a word against a proper prefix of itself.
    if (a.idx.size() != b.idx.size()) {
        return a.idx.size() < b.idx.size() ? Ordering::Greater : Ordering::Less;
    }
    if (a.idx < b.idx) return Ordering::Less;
    if (b.idx < a.idx) return Ordering::Greater;
    return Ordering::Equal;
}

TruncatedSeries::TruncatedSeries(long long p, int d, int trunc) : p_(p), d_(d), trunc_(trunc) {
    check_odd_prime(p);
    if (d < 1) throw std::invalid_argument("generator count must be >= 1");
    if (trunc < 1) throw std::invalid_argument("truncation degree must be >= 1");
}

TruncatedSeries TruncatedSeries::constant(long long p, int d, int trunc, long long c) {
    TruncatedSeries s(p, d, trunc);
    s.add_term(Monomial::unit(d), c);
    return s;
}

TruncatedSeries TruncatedSeries::generator(long long p, int d, int trunc, int i) {
    TruncatedSeries s(p, d, trunc);
    s.add_term(Monomial::gen(d, i), 1);
    return s;
}

Fp TruncatedSeries::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return Fp(it == terms_.end() ? 0 : it->second, p_);
}

void TruncatedSeries::add_term(const Monomial& m, long long c) {
    if (m.d != d_) throw std::invalid_argument("monomial over a different generator count");
    if (m.degree() >= trunc_) return;
    auto [it, inserted] = terms_.try_emplace(m, 0);
    it->second = reduce(it->second + c, p_);
    if (it->second == 0) terms_.erase(it);
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
    return p_ == o.p_ && d_ == o.d_ && trunc_ == o.trunc_ && terms_ == o.terms_;
}

std::string TruncatedSeries::str() const {
    std::ostringstream out;
    for (const auto& [m, c] : terms_) {
        if (m.is_unit()) {
            out << c;
        } else {
            out << c << '*' << m.str();
        }
        out << " + ";
    }
    if (terms_.empty()) out << "0 + ";
    out << "O(>=" << trunc_ << ")";
    return out.str();
}

TruncatedSeries TruncatedSeries::parse(std::string_view text, long long p, int d,
                                       int default_trunc) {
    auto trim = [](std::string_view v) {
        while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
        while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
        return v;
    };
    // Split on '+' at top level; the canonical form never nests.
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == '+') {
            parts.push_back(trim(text.substr(start, i - start)));
            start = i + 1;
        }
    }
    int trunc = default_trunc;
    std::vector<std::pair<Monomial, long long>> collected;
    for (auto part : parts) {
        if (part.empty()) throw ParseError("series: empty term");
        if (part.substr(0, 4) == "O(>=") {
            if (part.back() != ')') throw ParseError("series: malformed truncation marker");
            trunc = std::stoi(std::string(part.substr(4, part.size() - 5)));
            continue;
        }
        auto star = part.find('*');
        if (star == std::string_view::npos) {
            // bare integer: the constant term (or a lone 0)
            long long c = std::stoll(std::string(part));
            if (c != 0) collected.emplace_back(Monomial::unit(d), c);
        } else {
            long long c = std::stoll(std::string(trim(part.substr(0, star))));
            Monomial m = Monomial::parse(trim(part.substr(star + 1)), d);
            collected.emplace_back(std::move(m), c);
        }
    }
    TruncatedSeries s(p, d, trunc);
    for (auto& [m, c] : collected) s.add_term(m, c);
    return s;
}

TruncatedSeries series_add(const TruncatedSeries& s, const TruncatedSeries& t) {
    check_same_ring(s, t);
    TruncatedSeries out(s.p(), s.d(), std::min(s.trunc(), t.trunc()));
    for (const auto& [m, c] : s.terms()) out.add_term(m, c);
    for (const auto& [m, c] : t.terms()) out.add_term(m, c);
    return out;
}

TruncatedSeries series_sub(const TruncatedSeries& s, const TruncatedSeries& t) {
    return series_add(s, series_neg(t));
}

TruncatedSeries series_neg(const TruncatedSeries& s) {
    return series_scale(s, -1);
}

TruncatedSeries series_scale(const TruncatedSeries& s, long long c) {
    TruncatedSeries out(s.p(), s.d(), s.trunc());
    for (const auto& [m, coeff] : s.terms()) out.add_term(m, coeff * c);
    return out;
}

TruncatedSeries series_mul(const TruncatedSeries& s, const TruncatedSeries& t) {
    check_same_ring(s, t);
    const int trunc = std::min(s.trunc(), t.trunc());
    TruncatedSeries out(s.p(), s.d(), trunc);
    for (const auto& [ms, cs] : s.terms()) {
        if (ms.degree() >= trunc) break;              // terms iterate by ascending degree
        for (const auto& [mt, ct] : t.terms()) {
            if (ms.degree() + mt.degree() >= trunc) break;
            Monomial prod{ms.d, ms.idx};
            prod.idx.insert(prod.idx.end(), mt.idx.begin(), mt.idx.end());
            out.add_term(prod, cs * ct);
        }
    }
    return out;
}

std::optional<int> valuation(const TruncatedSeries& s) {
    if (s.is_zero()) return std::nullopt;
    return s.terms().begin()->first.degree();
}

Monomial highest_term(const TruncatedSeries& s) {
    if (s.is_zero()) {
        throw std::domain_error("highest_term: the zero series has no highest term");
    }
    return s.terms().begin()->first;
}

TruncatedSeries initial_form(const TruncatedSeries& s) {
    auto v = valuation(s);
    if (!v) throw std::domain_error("initial_form: undefined for the zero series");
    return homogeneous_part(s, *v);
}

TruncatedSeries homogeneous_part(const TruncatedSeries& s, int k) {
    TruncatedSeries out(s.p(), s.d(), s.trunc());
    for (const auto& [m, c] : s.terms()) {
        if (m.degree() > k) break;
        if (m.degree() == k) out.add_term(m, c);
    }
    return out;
}

TruncatedSeries invert_unit(const TruncatedSeries& s) {
    const Fp c0 = s.coeff(Monomial::unit(s.d()));
    if (c0.is_zero()) {
        throw std::domain_error("invert_unit: constant term is zero");
    }
    // s = c0(1 - u) with omega(u) >= 1, so s^-1 = c0^-1 sum_k u^k.
    const long long inv0 = c0.inverse().value();
    TruncatedSeries u = series_scale(s, -inv0);
    u.add_term(Monomial::unit(s.d()), 1);
    TruncatedSeries acc = TruncatedSeries::constant(s.p(), s.d(), s.trunc(), 1);
    TruncatedSeries power = acc;
    for (int k = 1; k < s.trunc(); ++k) {
        power = series_mul(power, u);
        if (power.is_zero()) break;
        acc = series_add(acc, power);
    }
    return series_scale(acc, inv0);
}

} // namespace mild
