#include "lefschetz/rational_function.hpp"

#include <optional>
#include <ostream>
#include <vector>

#include "lefschetz/errors.hpp"

namespace lefschetz {

namespace {

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
    auto q = divide_exact(a, b);
    if (!q) throw InternalCheckFailure("gcd does not divide its argument");
    return *q;
}

// Rational-coefficient polynomial R with R(0) = 1 and R^s = p / p(0), as a
// vector of exact coefficients; nullopt when no such polynomial exists.
std::optional<std::vector<Rational>> polynomial_root(const Polynomial& p, std::size_t s) {
    const auto deg = static_cast<std::size_t>(p.degree());
    if (deg % s != 0) return std::nullopt;
    const Rational c0(p.coeff(0));
    PowerSeries normalized = PowerSeries::from_polynomial(p, deg) * (1 / c0);
    PowerSeries root = nth_root(normalized, s);
    const std::size_t root_deg = deg / s;
    std::vector<Rational> coeffs(root.coefficients().begin(), root.coefficients().begin() + static_cast<long>(root_deg) + 1);
    // A degree-d polynomial raised to s has degree d*s = deg, so agreement
    // through t^deg is exact polynomial equality.
    if (pow(PowerSeries(coeffs, deg), s) != normalized) return std::nullopt;
    return coeffs;
}

Integer denominator_lcm(const std::vector<Rational>& v, Integer acc) {
    for (const auto& q : v) mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), q.get_den_mpz_t());
    return acc;
}

Polynomial scaled_to_integer(const std::vector<Rational>& v, const Integer& scale) {
    std::vector<Integer> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rational x = v[i] * Rational(scale);
        if (!is_integer(x)) throw InternalCheckFailure("common denominator did not clear a coefficient");
        out[i] = x.get_num();
    }
    return Polynomial(std::move(out));
}

}  // namespace

RationalFunction::RationalFunction() : num_{1}, den_{1} {}

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw PreconditionError("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = Polynomial{};
        den_ = Polynomial{1};
        return;
    }
    Polynomial g = gcd(num, den).primitive_part();
    num_ = exact_quotient(num, g);
    den_ = exact_quotient(den, g);
    Integer c;
    mpz_gcd(c.get_mpz_t(), num_.content().get_mpz_t(), den_.content().get_mpz_t());
    if (c != 1) {
        num_ = exact_quotient(num_, Polynomial::constant(c));
        den_ = exact_quotient(den_, Polynomial::constant(c));
    }
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RationalFunction normalize(const Polynomial& num, const Polynomial& den) { return RationalFunction(num, den); }

bool RationalFunction::is_one() const { return num_ == den_; }

Rational RationalFunction::value_at_zero() const {
    if (den_.coeff(0) == 0) throw PreconditionError("rational function has a pole at 0");
    return ratio(num_.coeff(0), den_.coeff(0));
}

PowerSeries RationalFunction::expand(std::size_t order) const {
    if (den_.coeff(0) == 0) throw PreconditionError("rational function has a pole at 0");
    return PowerSeries::from_polynomial(num_, order) * lefschetz::inverse(PowerSeries::from_polynomial(den_, order));
}

RationalFunction RationalFunction::substitute_power(std::size_t s) const {
    return RationalFunction(num_.substitute_power(s), den_.substitute_power(s));
}

RationalFunction RationalFunction::inverse() const {
    if (num_.is_zero()) throw PreconditionError("inverse of the zero rational function");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    const auto u = static_cast<std::size_t>(e);
    return RationalFunction(num_.pow(u), den_.pow(u));
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

std::string RationalFunction::to_string(const std::string& var) const {
    if (den_ == Polynomial{1}) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }

RationalFunction nth_root(const RationalFunction& f, std::size_t s) {
    if (s == 0) throw PreconditionError("zeroth root");
    if (f.denominator().coeff(0) == 0 || f.value_at_zero() != 1)
        throw PreconditionError("rational root needs F(0) = 1");
    if (s == 1) return f;
    auto num_root = polynomial_root(f.numerator(), s);
    auto den_root = polynomial_root(f.denominator(), s);
    if (!num_root || !den_root)
        throw NotAPerfectPower("rational function is not a perfect " + std::to_string(s) + "-th power");
    Integer scale = denominator_lcm(*den_root, denominator_lcm(*num_root, Integer(1)));
    RationalFunction g(scaled_to_integer(*num_root, scale), scaled_to_integer(*den_root, scale));
    if (g.pow(static_cast<long>(s)) != f) throw InternalCheckFailure("reconstructed root does not reproduce F");
    return g;
}

}  // namespace lefschetz
