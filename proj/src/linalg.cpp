#include "lefschetz/linalg.hpp"

#include <utility>

#include "lefschetz/errors.hpp"
#include "lefschetz/kernels.hpp"

namespace lefschetz {

namespace {

void require_square(const Matrix& m, const char* what) {
    if (!m.is_square()) throw PreconditionError(std::string(what) + ": matrix is not square");
}

// Upper Hessenberg form similar to m (Gaussian elimination with row/column
// pivoting applied as a similarity).
Matrix hessenberg(Matrix h) {
    const std::size_t n = h.rows();
    for (std::size_t m = 1; m + 1 < n; ++m) {
        std::size_t pivot = m;
        while (pivot < n && h(pivot, m - 1) == 0) ++pivot;
        if (pivot == n) continue;
        if (pivot != m) {
            for (std::size_t c = 0; c < n; ++c) std::swap(h(pivot, c), h(m, c));
            for (std::size_t r = 0; r < n; ++r) std::swap(h(r, pivot), h(r, m));
        }
        for (std::size_t j = m + 1; j < n; ++j) {
            if (h(j, m - 1) == 0) continue;
            const Rational u = h(j, m - 1) / h(m, m - 1);
            for (std::size_t c = 0; c < n; ++c) h(j, c) -= u * h(m, c);
            for (std::size_t r = 0; r < n; ++r) h(r, m) += u * h(r, j);
        }
    }
    return h;
}

using RatPoly = std::vector<Rational>;

void axpy(RatPoly& acc, const Rational& k, const RatPoly& p) {
    if (acc.size() < p.size()) acc.resize(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) acc[i] += k * p[i];
}

}  // namespace

Rational determinant(const Matrix& m) { return kernels::determinant(m); }

std::vector<Rational> char_poly_rational(const Matrix& m) {
    require_square(m, "char_poly");
    const std::size_t n = m.rows();
    const Matrix h = hessenberg(m);
    // p[k] = characteristic polynomial of the leading k x k block of h.
    std::vector<RatPoly> p(n + 1);
    p[0] = {Rational(1)};
    for (std::size_t k = 1; k <= n; ++k) {
        RatPoly next(k + 1);
        for (std::size_t i = 0; i < p[k - 1].size(); ++i) {
            next[i + 1] += p[k - 1][i];
            next[i] -= h(k - 1, k - 1) * p[k - 1][i];
        }
        Rational prod = 1;
        for (std::size_t i = k - 1; i >= 1; --i) {
            prod *= h(i, i - 1);
            if (prod == 0) break;
            axpy(next, -(h(i - 1, k - 1) * prod), p[i - 1]);
        }
        p[k] = std::move(next);
    }
    return p[n];
}

Polynomial char_poly(const Matrix& m) {
    const auto coeffs = char_poly_rational(m);
    Integer scale = 1;
    for (const auto& c : coeffs) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> ints(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        Rational x = coeffs[i] * Rational(scale);
        ints[i] = x.get_num();
    }
    Polynomial p(std::move(ints));
    return scale == 1 ? p : p.primitive_part();
}

Polynomial det_one_minus_t(const Matrix& m) {
    require_square(m, "det(I - tM)");
    if (!m.is_integral()) throw PreconditionError("det(I - tM) needs an integer matrix");
    return char_poly(m).reversed(m.rows());
}

Rational trace_power(const Matrix& m, std::size_t power) {
    require_square(m, "trace_power");
    if (power == 0) throw PreconditionError("trace_power: iterates start at 1");
    Matrix result;
    bool have = false;
    Matrix base = m;
    while (power > 0) {
        if (power & 1U) {
            result = have ? result * base : base;
            have = true;
        }
        power >>= 1U;
        if (power > 0) base = base * base;
    }
    return result.trace();
}

std::vector<Rational> power_sums(const Matrix& m, std::size_t m_max) {
    require_square(m, "power_sums");
    const std::size_t n = m.rows();
    const auto chi = char_poly_rational(m);
    // c[j] is the coefficient of t^(n-j).
    std::vector<Rational> c(n + 1);
    for (std::size_t j = 0; j <= n; ++j) c[j] = chi[n - j];
    std::vector<Rational> p(m_max + 1);
    for (std::size_t k = 1; k <= m_max; ++k) {
        Rational acc = 0;
        for (std::size_t j = 1; j <= std::min(k - 1, n); ++j) acc += c[j] * p[k - j];
        if (k <= n) acc += Rational(static_cast<long>(k)) * c[k];
        p[k] = -acc;
    }
    return {p.begin() + 1, p.end()};
}

Rational trace_power_newton(const Matrix& m, std::size_t power) {
    if (power == 0) throw PreconditionError("trace_power: iterates start at 1");
    return power_sums(m, power).back();
}

Matrix exterior_power(const Matrix& a, std::size_t k) {
    require_square(a, "exterior_power");
    if (k > a.rows()) throw PreconditionError("exterior_power: k exceeds the matrix size");
    return kernels::compound(a, k);
}

Matrix compound_matrix(const Matrix& a, std::size_t k) { return kernels::compound(a, k); }

}  // namespace lefschetz
