#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "lefschetz/polynomial.hpp"
#include "lefschetz/scalar.hpp"

namespace lefschetz {

/// Rational power series truncated at an explicit order N: coefficients of
/// t^0 .. t^N are exact, everything above is unknown. Binary operations on
/// series of different orders work at the smaller order.
class PowerSeries {
   public:
    /// The zero series at the given order.
    explicit PowerSeries(std::size_t order);
    PowerSeries(std::vector<Rational> coeffs, std::size_t order);

    static PowerSeries one(std::size_t order);
    static PowerSeries from_polynomial(const Polynomial& p, std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
    Rational& operator[](std::size_t i) { return coeffs_.at(i); }

    PowerSeries truncated(std::size_t order) const;
    /// S(t^s), same order.
    PowerSeries substitute_power(std::size_t s) const;

    PowerSeries& operator+=(const PowerSeries& rhs);
    PowerSeries& operator-=(const PowerSeries& rhs);
    PowerSeries& operator*=(const Rational& k);
    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
    friend PowerSeries operator*(PowerSeries a, const Rational& k) { return a *= k; }
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    friend bool operator==(const PowerSeries& a, const PowerSeries& b) = default;

   private:
    std::vector<Rational> coeffs_;
};

/// Multiplicative inverse; constant term must be nonzero.
PowerSeries inverse(const PowerSeries& s);
/// exp(S); constant term must be 0.
PowerSeries exp(const PowerSeries& s);
/// log(S); constant term must be 1.
PowerSeries log(const PowerSeries& s);
/// The unique R with R(0) = 1 and R^root = S; S(0) must be 1.
PowerSeries nth_root(const PowerSeries& s, std::size_t root);
/// S^e for a non-negative integer e.
PowerSeries pow(const PowerSeries& s, std::size_t e);

std::ostream& operator<<(std::ostream& os, const PowerSeries& s);

}  // namespace lefschetz
