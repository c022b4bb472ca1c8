#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

#include "lefschetz/polynomial.hpp"
#include "lefschetz/power_series.hpp"

namespace lefschetz {

/// Quotient of integer polynomials in canonical form:
///   - numerator and denominator have no common factor of positive degree,
///   - the integer contents of numerator and denominator are coprime,
///   - the denominator has a positive leading coefficient.
/// The canonical form is unique, so equality is structural.
class RationalFunction {
   public:
    /// The constant 1.
    RationalFunction();
    /// Normalizes num/den. Throws PreconditionError when den is zero.
    RationalFunction(const Polynomial& num, const Polynomial& den);
    explicit RationalFunction(const Polynomial& p) : RationalFunction(p, Polynomial{1}) {}

    const Polynomial& numerator() const noexcept { return num_; }
    const Polynomial& denominator() const noexcept { return den_; }

    bool is_one() const;
    /// deg(numerator) - deg(denominator); the zero function reports
    /// -degree(denominator) - 1 by convention of deg(0) = -1.
    long degree() const { return num_.degree() - den_.degree(); }
    /// Value at t = 0; throws PreconditionError if the denominator vanishes.
    Rational value_at_zero() const;

    /// Taylor expansion at 0 to the given order; needs den(0) != 0.
    PowerSeries expand(std::size_t order) const;
    /// F(t^s).
    RationalFunction substitute_power(std::size_t s) const;
    /// F^e for any integer e (negative powers invert; 0^e with e < 0 throws).
    RationalFunction pow(long e) const;
    RationalFunction inverse() const;

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

    std::string to_string(const std::string& var = "t") const;

   private:
    Polynomial num_;
    Polynomial den_;
};

/// Canonical form of num/den (same as the two-argument constructor).
RationalFunction normalize(const Polynomial& num, const Polynomial& den);

/// G with G(0) = 1 and G^s = F, when F(0) = 1 and F is an s-th power in
/// Q(t). Throws NotAPerfectPower otherwise.
RationalFunction nth_root(const RationalFunction& f, std::size_t s);

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

}  // namespace lefschetz
