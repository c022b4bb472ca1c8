#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lefschetz/scalar.hpp"

namespace lefschetz {

/// Univariate polynomial with arbitrary-precision integer coefficients, stored
/// in ascending degree without trailing zeros. The zero polynomial has no
/// coefficients and degree -1.
class Polynomial {
   public:
    Polynomial() = default;
    Polynomial(std::initializer_list<long> ascending);
    explicit Polynomial(std::vector<Integer> ascending);

    static Polynomial constant(const Integer& c);
    static Polynomial monomial(const Integer& c, std::size_t degree);

    const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
    const Integer& leading() const;

    /// Non-negative gcd of the coefficients (0 for the zero polynomial).
    Integer content() const;
    /// Divides by the content; the sign of the leading coefficient is kept.
    Polynomial primitive_part() const;

    Rational evaluate(const Rational& x) const;

    /// t^n * p(1/t); requires n >= degree.
    Polynomial reversed(std::size_t n) const;
    /// p(t^s).
    Polynomial substitute_power(std::size_t s) const;
    Polynomial pow(std::size_t e) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Integer& k);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Integer& k) { return a *= k; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    /// Human form in ascending powers, e.g. "1 - 2*t + t^2".
    std::string to_string(const std::string& var = "t") const;

   private:
    void trim();
    std::vector<Integer> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// a / b when b divides a in Z[t]; nullopt otherwise. b must be nonzero.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

/// Greatest common divisor in Z[t] with positive leading coefficient;
/// gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace lefschetz
