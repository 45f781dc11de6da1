#include "hurwitz/numtheory.hpp"

#include "hurwitz/errors.hpp"

#include <numeric>
#include <string>

namespace hurwitz {

bool is_rational_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::int64_t totient(std::int64_t n) {
    std::int64_t result = n;
    for (std::int64_t d = 2; d <= n / d; ++d) {
        if (n % d != 0) continue;
        while (n % d == 0) n /= d;
        result -= result / d;
    }
    if (n > 1) result -= result / n;
    return result;
}

std::int64_t floor_div(std::int64_t num, std::int64_t den) {
    std::int64_t q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
}

std::int64_t mod_floor(std::int64_t n, std::int64_t m) {
    std::int64_t r = n % m;
    return r < 0 ? r + m : r;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

void require_odd_prime(std::int64_t p) {
    if (p == 2 || !is_rational_prime(p))
        throw UnsupportedPrime("modulus must be an odd prime, got " + std::to_string(p));
}

} // namespace hurwitz
