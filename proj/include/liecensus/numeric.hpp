#ifndef LIECENSUS_NUMERIC_HPP
#define LIECENSUS_NUMERIC_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace liecensus {

inline bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

// Distinct prime divisors, ascending.
inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

// q = p^f; throws unless q is a prime power.
inline std::pair<unsigned, unsigned> prime_power(std::uint64_t q)
{
    auto ps = prime_divisors(q);
    if (q < 2 || ps.size() != 1)
        throw invalid_argument("not a prime power: " + std::to_string(q));
    unsigned f = 0;
    while (q > 1) {
        q /= ps[0];
        ++f;
    }
    return {static_cast<unsigned>(ps[0]), f};
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw cap_exceeded("64-bit integer overflow");
    return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw cap_exceeded("64-bit integer overflow");
    return r;
}

inline std::int64_t checked_pow(std::int64_t base, unsigned e)
{
    std::int64_t r = 1;
    for (unsigned i = 0; i < e; ++i)
        r = checked_mul(r, base);
    return r;
}

} // namespace liecensus

#endif
