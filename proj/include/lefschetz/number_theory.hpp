#pragma once

#include <cstdint>
#include <vector>

namespace lefschetz {

/// Classical Moebius function; m must be >= 1.
int mobius(std::uint64_t m);

/// All positive divisors of m, ascending; m must be >= 1.
std::vector<std::uint64_t> divisors(std::uint64_t m);

/// Euler's totient; m must be >= 1.
std::uint64_t euler_phi(std::uint64_t m);

std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

}  // namespace lefschetz
