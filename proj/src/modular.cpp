#include "mild/modular.hpp"

#include <stdexcept>
#include <string>

namespace mild {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t f = 5; f * f <= n; f += 6) {
        if (n % f == 0 || n % (f + 2) == 0) return false;
    }
    return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t r = 1;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t f = 2; f * f <= n; f += (f == 2 ? 1 : 2)) {
        if (n % f == 0) {
            out.push_back(f);
            while (n % f == 0) n /= f;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

static bool is_primitive_root(std::uint64_t g, std::uint64_t ell,
                              const std::vector<std::uint64_t>& factors) {
    for (std::uint64_t q : factors) {
        if (powmod(g, (ell - 1) / q, ell) == 1) return false;
    }
    return true;
}

std::uint64_t smallest_primitive_root(std::uint64_t ell) {
    return next_primitive_root(ell, 1);
}

std::uint64_t next_primitive_root(std::uint64_t ell, std::uint64_t after) {
    if (!is_prime(ell) || ell < 3) {
        throw std::invalid_argument("primitive root: modulus must be an odd prime, got " +
                                    std::to_string(ell));
    }
    const auto factors = prime_factors(ell - 1);
    for (std::uint64_t g = after + 1; g < ell; ++g) {
        if (is_primitive_root(g, ell, factors)) return g;
    }
    throw std::domain_error("no primitive root beyond " + std::to_string(after) +
                            " modulo " + std::to_string(ell));
}

std::uint64_t discrete_log(std::uint64_t g, std::uint64_t x, std::uint64_t ell) {
    constexpr std::uint64_t kDeskScaleBound = 1ull << 21;
    if (ell >= kDeskScaleBound) {
        throw std::invalid_argument("discrete_log: modulus " + std::to_string(ell) +
                                    " exceeds the desk-scale bound");
    }
    x %= ell;
    if (x == 0) throw std::invalid_argument("discrete_log: argument divisible by the modulus");
    std::uint64_t cur = 1;
    for (std::uint64_t k = 0; k < ell - 1; ++k) {
        if (cur == x) return k;
        cur = mulmod(cur, g, ell);
    }
    throw std::domain_error("discrete_log: base " + std::to_string(g) +
                            " is not a primitive root modulo " + std::to_string(ell));
}

} // namespace mild
