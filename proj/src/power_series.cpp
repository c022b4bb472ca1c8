#include "lefschetz/power_series.hpp"

#include <algorithm>
#include <ostream>

#include "lefschetz/errors.hpp"

namespace lefschetz {

PowerSeries::PowerSeries(std::size_t order) : coeffs_(order + 1) {}

PowerSeries::PowerSeries(std::vector<Rational> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1);
}

PowerSeries PowerSeries::one(std::size_t order) {
    PowerSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

PowerSeries PowerSeries::from_polynomial(const Polynomial& p, std::size_t order) {
    PowerSeries s(order);
    for (std::size_t i = 0; i <= order && i < p.coefficients().size(); ++i) s.coeffs_[i] = p.coefficients()[i];
    return s;
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
    if (order > this->order()) throw PreconditionError("cannot raise the truncation order of a series");
    return PowerSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(order) + 1), order);
}

PowerSeries PowerSeries::substitute_power(std::size_t s) const {
    if (s == 0) throw PreconditionError("substitution t -> t^0");
    PowerSeries out(order());
    for (std::size_t i = 0; i * s <= order(); ++i) out.coeffs_[i * s] = coeffs_[i];
    return out;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& rhs) {
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& rhs) {
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

PowerSeries& PowerSeries::operator*=(const Rational& k) {
    for (auto& c : coeffs_) c *= k;
    return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    PowerSeries out(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; i + j <= n; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
}

PowerSeries inverse(const PowerSeries& s) {
    if (s[0] == 0) throw PreconditionError("series inverse needs a nonzero constant term");
    const std::size_t n = s.order();
    PowerSeries r(n);
    r[0] = 1 / s[0];
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc = 0;
        for (std::size_t j = 1; j <= k; ++j) acc += s[j] * r[k - j];
        r[k] = -acc * r[0];
    }
    return r;
}

// E = exp(S) satisfies E' = S'E, i.e. k e_k = sum_{j=1..k} j s_j e_{k-j}.
PowerSeries exp(const PowerSeries& s) {
    if (s[0] != 0) throw PreconditionError("series exp needs constant term 0");
    const std::size_t n = s.order();
    PowerSeries e(n);
    e[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc = 0;
        for (std::size_t j = 1; j <= k; ++j)
            if (s[j] != 0) acc += Rational(static_cast<long>(j)) * s[j] * e[k - j];
        e[k] = acc / static_cast<long>(k);
    }
    return e;
}

// L = log(S) satisfies S' = L'S, i.e. k s_k = sum_{j=1..k} j l_j s_{k-j}.
PowerSeries log(const PowerSeries& s) {
    if (s[0] != 1) throw PreconditionError("series log needs constant term 1");
    const std::size_t n = s.order();
    PowerSeries l(n);
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc = Rational(static_cast<long>(k)) * s[k];
        for (std::size_t j = 1; j < k; ++j)
            if (l[j] != 0) acc -= Rational(static_cast<long>(j)) * l[j] * s[k - j];
        l[k] = acc / static_cast<long>(k);
    }
    return l;
}

// R = S^a with a = 1/root and s_0 = 1 obeys
//   k r_k = sum_{j=1..k} ((a + 1) j - k) s_j r_{k-j}.
PowerSeries nth_root(const PowerSeries& s, std::size_t root) {
    if (root == 0) throw PreconditionError("zeroth root");
    if (s[0] != 1) throw PreconditionError("series root needs constant term 1");
    const std::size_t n = s.order();
    const Rational a(1, static_cast<long>(root));
    PowerSeries r(n);
    r[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc = 0;
        for (std::size_t j = 1; j <= k; ++j) {
            if (s[j] == 0) continue;
            Rational w = (a + 1) * static_cast<long>(j) - static_cast<long>(k);
            acc += w * s[j] * r[k - j];
        }
        r[k] = acc / static_cast<long>(k);
    }
    return r;
}

PowerSeries pow(const PowerSeries& s, std::size_t e) {
    PowerSeries result = PowerSeries::one(s.order());
    PowerSeries base = s;
    while (e > 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e > 0) base = base * base;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const PowerSeries& s) {
    bool first = true;
    for (std::size_t i = 0; i <= s.order(); ++i) {
        if (s[i] == 0) continue;
        os << (first ? "" : " + ") << s[i].get_str();
        if (i > 0) os << "*t^" << i;
        first = false;
    }
    if (first) os << '0';
    return os << " + O(t^" << s.order() + 1 << ')';
}

}  // namespace lefschetz
