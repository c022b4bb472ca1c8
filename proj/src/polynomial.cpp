#include "lefschetz/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "lefschetz/errors.hpp"

namespace lefschetz {

Polynomial::Polynomial(std::initializer_list<long> ascending) {
    coeffs_.reserve(ascending.size());
    for (long c : ascending) coeffs_.emplace_back(c);
    trim();
}

Polynomial::Polynomial(std::vector<Integer> ascending) : coeffs_(std::move(ascending)) { trim(); }

Polynomial Polynomial::constant(const Integer& c) { return Polynomial(std::vector<Integer>{c}); }

Polynomial Polynomial::monomial(const Integer& c, std::size_t degree) {
    std::vector<Integer> v(degree + 1);
    v[degree] = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Integer& Polynomial::leading() const {
    if (coeffs_.empty()) throw PreconditionError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Integer Polynomial::content() const {
    Integer g = 0;
    for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

Polynomial Polynomial::primitive_part() const {
    if (is_zero()) return {};
    Integer g = content();
    std::vector<Integer> v(coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(v[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
    return Polynomial(std::move(v));
}

Rational Polynomial::evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

Polynomial Polynomial::reversed(std::size_t n) const {
    if (degree() > static_cast<long>(n)) throw PreconditionError("reversal length below degree");
    std::vector<Integer> v(n + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[n - i] = coeffs_[i];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::substitute_power(std::size_t s) const {
    if (s == 0) throw PreconditionError("substitution t -> t^0");
    if (is_zero()) return {};
    std::vector<Integer> v((coeffs_.size() - 1) * s + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * s] = coeffs_[i];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::pow(std::size_t e) const {
    Polynomial result = constant(1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e > 0) base = base * base;
    }
    return result;
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Integer& k) {
    for (auto& c : coeffs_) c *= k;
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            mpz_addmul(v[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
    return Polynomial(std::move(v));
}

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Integer& c = coeffs_[i];
        if (c == 0) continue;
        Integer mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (i == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << '*';
        os << var;
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw PreconditionError("polynomial division by zero");
    if (a.is_zero()) return Polynomial{};
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<Integer> rem = a.coefficients();
    const auto& bc = b.coefficients();
    const std::size_t db = bc.size() - 1;
    std::vector<Integer> quot(rem.size() - db);
    Integer q;
    for (std::size_t i = quot.size(); i-- > 0;) {
        const Integer& top = rem[i + db];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), bc.back().get_mpz_t())) return std::nullopt;
        mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), bc.back().get_mpz_t());
        quot[i] = q;
        for (std::size_t j = 0; j <= db; ++j) mpz_submul(rem[i + j].get_mpz_t(), q.get_mpz_t(), bc[j].get_mpz_t());
    }
    for (std::size_t i = 0; i < db; ++i)
        if (rem[i] != 0) return std::nullopt;
    return Polynomial(std::move(quot));
}

namespace {

// lc(b)^e * a mod b for a suitable e; only its primitive part is used.
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b) {
    const long db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        Polynomial shifted = Polynomial::monomial(a.leading(), static_cast<std::size_t>(a.degree() - db)) * b;
        a = a * b.leading() - shifted;
    }
    return a;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero()) return b.leading() < 0 ? -b : b;
    if (b.is_zero()) return a.leading() < 0 ? -a : a;
    Integer c;
    mpz_gcd(c.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    Polynomial x = a.primitive_part();
    Polynomial y = b.primitive_part();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        Polynomial r = pseudo_remainder(x, y);
        x = std::move(y);
        y = r.primitive_part();
    }
    Polynomial g = x.primitive_part() * c;
    return g.leading() < 0 ? -g : g;
}

}  // namespace lefschetz
