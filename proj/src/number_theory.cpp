#include "lefschetz/number_theory.hpp"

#include <algorithm>
#include <numeric>

#include "lefschetz/errors.hpp"

namespace lefschetz {

namespace {

void require_positive(std::uint64_t m) {
    if (m == 0) throw PreconditionError("arithmetic function argument must be >= 1");
}

}  // namespace

int mobius(std::uint64_t m) {
    require_positive(m);
    int sign = 1;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        m /= p;
        if (m % p == 0) return 0;
        sign = -sign;
    }
    if (m > 1) sign = -sign;
    return sign;
}

std::vector<std::uint64_t> divisors(std::uint64_t m) {
    require_positive(m);
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= m; ++d) {
        if (m % d != 0) continue;
        small.push_back(d);
        if (d != m / d) large.push_back(m / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::uint64_t euler_phi(std::uint64_t m) {
    require_positive(m);
    std::uint64_t result = m;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

std::uint64_t lcm(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

}  // namespace lefschetz
