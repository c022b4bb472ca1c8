#include "lefschetz/torus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "lefschetz/errors.hpp"
#include "lefschetz/kernels.hpp"
#include "lefschetz/linalg.hpp"
#include "lefschetz/number_theory.hpp"

namespace lefschetz {

namespace {

std::vector<std::size_t> prefix_offsets(const std::vector<std::size_t>& dims) {
    std::vector<std::size_t> off(dims.size() + 1, 0);
    for (std::size_t i = 0; i < dims.size(); ++i) off[i + 1] = off[i] + dims[i];
    return off;
}

std::vector<SpaceSignature> torus_spaces(const std::vector<std::size_t>& dims) {
    std::vector<SpaceSignature> spaces;
    spaces.reserve(dims.size());
    for (auto n : dims) spaces.push_back(SpaceSignature::torus(n));
    return spaces;
}

std::string one_based(const Covector& c) {
    return "delta_" + std::to_string(c.summand + 1) + "^" + std::to_string(c.index + 1);
}

}  // namespace

// --- toral wedge description ----------------------------------------------

ToralWedgeSpec ToralWedgeSpec::constant(std::vector<std::size_t> dims) {
    ToralWedgeSpec spec;
    const std::size_t s = dims.size();
    spec.dims = std::move(dims);
    spec.coords.assign(s, std::vector<std::optional<Matrix>>(s));
    return spec;
}

ToralWedgeSpec ToralWedgeSpec::from_assembled_h1(std::vector<std::size_t> dims, const Matrix& h1) {
    const auto off = prefix_offsets(dims);
    if (h1.rows() != off.back() || h1.cols() != off.back())
        throw DimensionMismatch("assembled H_1 matrix is " + std::to_string(h1.rows()) + "x" +
                                std::to_string(h1.cols()) + ", expected " + std::to_string(off.back()) + "x" +
                                std::to_string(off.back()));
    ToralWedgeSpec spec = constant(std::move(dims));
    for (std::size_t i = 0; i < spec.summands(); ++i)
        for (std::size_t j = 0; j < spec.summands(); ++j) {
            Matrix b = h1.block(off[j], off[i], spec.dims[j], spec.dims[i]);
            if (!b.is_zero()) spec.coords[i][j] = std::move(b);
        }
    return spec;
}

Matrix ToralWedgeSpec::assembled_h1() const {
    const auto off = prefix_offsets(dims);
    Matrix out(off.back(), off.back());
    for (std::size_t i = 0; i < summands(); ++i)
        for (std::size_t j = 0; j < summands(); ++j)
            if (coords[i][j]) out.set_block(off[j], off[i], *coords[i][j]);
    return out;
}

GradedLinearMap torus_graded_between(const Matrix& a, std::size_t n_src, std::size_t n_dst) {
    if (a.rows() != n_dst || a.cols() != n_src)
        throw DimensionMismatch("H_1 block is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                ", expected " + std::to_string(n_dst) + "x" + std::to_string(n_src));
    std::vector<Matrix> blocks;
    const std::size_t top = std::max(n_src, n_dst);
    for (std::size_t k = 1; k <= top; ++k) {
        if (k <= n_src && k <= n_dst)
            blocks.push_back(compound_matrix(a, k));
        else
            blocks.push_back(Matrix(kernels::binomial(n_dst, k), kernels::binomial(n_src, k)));
    }
    return GradedLinearMap(SpaceSignature::torus(n_src), SpaceSignature::torus(n_dst), std::move(blocks));
}

GradedLinearMap torus_graded_from_h1(const Matrix& a) {
    if (!a.is_square()) throw DimensionMismatch("self-map of a torus needs a square H_1 matrix");
    return torus_graded_between(a, a.cols(), a.rows());
}

WedgeMapHomology build_toral_wedge(const ToralWedgeSpec& spec) {
    const std::size_t s = spec.summands();
    if (spec.coords.size() != s) throw DimensionMismatch("coordinate grid does not match the number of tori");
    CoordinateGrid grid(s, std::vector<std::optional<GradedLinearMap>>(s));
    for (std::size_t i = 0; i < s; ++i) {
        if (spec.coords[i].size() != s) throw DimensionMismatch("coordinate grid does not match the number of tori");
        for (std::size_t j = 0; j < s; ++j) {
            const auto& c = spec.coords[i][j];
            if (!c) continue;
            if (!c->is_integral())
                throw PreconditionError("coordinate " + std::to_string(i + 1) + " -> " + std::to_string(j + 1) +
                                        " has a non-integer H_1 entry");
            try {
                grid[i][j] = torus_graded_between(*c, spec.dims[i], spec.dims[j]);
            } catch (const DimensionMismatch& e) {
                throw DimensionMismatch("coordinate " + std::to_string(i + 1) + " -> " + std::to_string(j + 1) + ": " +
                                        e.what());
            }
        }
    }
    return WedgeMapHomology::assemble(torus_spaces(spec.dims), std::move(grid));
}

// --- realizability ----------------------------------------------------------

ObstructionReport check_h1_realizability(const Matrix& h1, const std::vector<std::size_t>& dims) {
    const auto off = prefix_offsets(dims);
    const std::size_t total = off.back();
    if (h1.rows() != total || h1.cols() != total)
        throw DimensionMismatch("H_1 matrix is " + std::to_string(h1.rows()) + "x" + std::to_string(h1.cols()) +
                                ", tori need " + std::to_string(total) + "x" + std::to_string(total));
    if (!h1.is_integral()) throw PreconditionError("H_1 action must be an integer matrix");
    const std::size_t s = dims.size();
    // Cohomology action P = h1^T; the image of the covector at global index g
    // is column g of P, i.e. row g of h1. Its component in summand l is the
    // slice of that row over summand l's columns.
    auto image = [&](std::size_t g, std::size_t l, std::size_t b) -> const Rational& { return h1(g, off[l] + b); };

    ObstructionReport report;
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t a = 0; a < dims[i]; ++a)
            for (std::size_t j = i + 1; j < s; ++j)
                for (std::size_t c = 0; c < dims[j]; ++c)
                    for (std::size_t l = 0; l < s; ++l)
                        for (std::size_t b1 = 0; b1 < dims[l]; ++b1)
                            for (std::size_t b2 = b1 + 1; b2 < dims[l]; ++b2) {
                                const std::size_t gu = off[i] + a, gv = off[j] + c;
                                Rational minor = image(gu, l, b1) * image(gv, l, b2) - image(gu, l, b2) * image(gv, l, b1);
                                if (minor == 0) continue;
                                report.witness = ObstructionWitness{{i, a}, {j, c}, l, {b1, b2}, minor};
                                return report;
                            }

    report.passes = true;
    // Degree-k cohomology: a basis class delta_i^A (A a k-subset) maps to the
    // sum over l of the wedge of the l-components of the images of its
    // factors; mixed products across summands vanish. The coefficient on
    // delta_l^B is the k x k determinant of those components on columns B.
    const std::size_t top = dims.empty() ? 0 : *std::max_element(dims.begin(), dims.end());
    for (std::size_t k = 1; k <= top; ++k) {
        std::vector<std::size_t> koff(s + 1, 0);
        std::vector<std::vector<std::vector<std::size_t>>> subsets(s);
        for (std::size_t i = 0; i < s; ++i) {
            subsets[i] = kernels::combinations(dims[i], k);
            koff[i + 1] = koff[i] + subsets[i].size();
        }
        Matrix cohom(koff[s], koff[s]);
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t ai = 0; ai < subsets[i].size(); ++ai)
                for (std::size_t l = 0; l < s; ++l)
                    for (std::size_t bi = 0; bi < subsets[l].size(); ++bi) {
                        Matrix comps(k, k);
                        for (std::size_t r = 0; r < k; ++r)
                            for (std::size_t q = 0; q < k; ++q)
                                comps(r, q) = image(off[i] + subsets[i][ai][r], l, subsets[l][bi][q]);
                        cohom(koff[l] + bi, koff[i] + ai) = kernels::determinant(std::move(comps));
                    }
        report.induced.push_back(cohom.transpose());
    }
    return report;
}

std::string describe(const ObstructionWitness& w) {
    std::ostringstream os;
    os << "images of " << one_based(w.first) << " and " << one_based(w.second) << " have wedge product "
       << to_string(w.coefficient) << " * delta_" << (w.summand + 1) << "^" << (w.generators.first + 1) << " ^ delta_"
       << (w.summand + 1) << "^" << (w.generators.second + 1) << " in summand " << (w.summand + 1)
       << ", but their cup product vanishes in the wedge";
    return os.str();
}

// --- lppf -------------------------------------------------------------------

LppfReport lppf_report(const ToralWedgeSpec& spec) {
    const WedgeMapHomology w = build_toral_wedge(spec);
    LppfReport r;
    r.zeta = zeta_det(w);
    r.is_lppf = r.zeta.is_one();
    r.zeta_degree = r.zeta.degree();
    r.eigen_nonzero = determinant(spec.assembled_h1()) != 0;
    const StructureReport st = classify(w);
    const bool equal_tori =
        !spec.dims.empty() && std::all_of(spec.dims.begin(), spec.dims.end(), [&](auto n) { return n == spec.dims[0]; });
    r.hypotheses_hold = st.is_permutative && equal_tori && spec.summands() >= 2 && r.eigen_nonzero;
    if (!st.is_permutative) r.notes.push_back("map is not permutative; no claim about zeta");
    if (spec.summands() == 1)
        r.notes.push_back("single torus: a map with nonzero eigenvalues can still have zeta = 1 (e.g. the identity)");
    if (!r.eigen_nonzero) r.notes.push_back("H_1 action is singular; no claim about zeta");
    r.notes.push_back("degree of zeta (deg num - deg den): " + std::to_string(r.zeta_degree));
    if (r.hypotheses_hold && r.is_lppf)
        throw InternalCheckFailure("permutative map with nonsingular H_1 action on a wedge of tori has zeta = 1");
    return r;
}

// --- cyclotomic -------------------------------------------------------------

Polynomial cyclotomic_polynomial(std::uint64_t d) {
    if (d == 0) throw PreconditionError("Phi_0 is undefined");
    // t^d - 1 divided by Phi_e for every proper divisor e.
    Polynomial p = Polynomial::monomial(1, d) - Polynomial{1};
    for (auto e : divisors(d)) {
        if (e == d) break;
        auto q = divide_exact(p, cyclotomic_polynomial(e));
        if (!q) throw InternalCheckFailure("cyclotomic division failed");
        p = *q;
    }
    return p;
}

CyclotomicCertificate cyclotomic_factorization(const Polynomial& p) {
    if (p.is_zero()) throw PreconditionError("zero polynomial");
    CyclotomicCertificate cert;
    std::vector<Integer> c = p.coefficients();
    while (c.size() > 1 && c.front() == 0) {
        c.erase(c.begin());
        ++cert.t_power;
    }
    Polynomial rest(std::move(c));
    const auto deg = static_cast<std::uint64_t>(rest.degree());
    // phi(d) >= sqrt(d / 2), so phi(d) <= deg forces d <= 2 deg^2.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> candidates;
    for (std::uint64_t d = 1; d <= 2 * deg * deg + 2; ++d) {
        const auto ph = euler_phi(d);
        if (ph <= deg) candidates.emplace_back(ph, d);
    }
    std::sort(candidates.begin(), candidates.end());
    std::map<std::uint64_t, Polynomial> cache;
    std::map<std::uint64_t, std::size_t> mult;
    for (const auto& [ph, d] : candidates) {
        if (static_cast<std::uint64_t>(rest.degree()) < ph) continue;
        auto it = cache.find(d);
        if (it == cache.end()) it = cache.emplace(d, cyclotomic_polynomial(d)).first;
        while (rest.degree() >= static_cast<long>(ph)) {
            auto q = divide_exact(rest, it->second);
            if (!q) break;
            rest = *q;
            ++mult[d];
        }
    }
    cert.quasi_unipotent = rest.degree() == 0 && (rest.coeff(0) == 1 || rest.coeff(0) == -1);
    cert.factors.assign(mult.begin(), mult.end());
    return cert;
}

CyclotomicCertificate is_quasi_unipotent(const WedgeMapHomology& w) {
    if (!w.is_integral()) throw PreconditionError("quasi-unipotence needs an integer matrix");
    if (w.top_degree() == 0) return CyclotomicCertificate{true, 0, {}};
    return cyclotomic_factorization(char_poly(w.assembled(1)));
}

CyclotomicCertificate is_quasi_unipotent(const ToralWedgeSpec& spec) {
    return cyclotomic_factorization(char_poly(spec.assembled_h1()));
}

std::optional<std::uint64_t> lefschetz_period(const WedgeMapHomology& w) {
    if (!w.is_integral()) throw PreconditionError("period needs integer matrices");
    std::uint64_t period = 1;
    for (const auto& m : w.assembled_all()) {
        if (m.rows() == 0) continue;
        const auto cert = cyclotomic_factorization(char_poly(m));
        if (!cert.quasi_unipotent) return std::nullopt;
        for (const auto& [d, e] : cert.factors) period = lcm(period, d);
    }
    return period;
}

// --- t^n - c ----------------------------------------------------------------

Matrix companion_gc(std::size_t n, const Integer& c) {
    if (n == 0) throw PreconditionError("companion matrix of size 0");
    Matrix a(n, n);
    for (std::size_t i = 1; i < n; ++i) a(i, i - 1) = 1;
    a(0, n - 1) = c;
    return a;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

GcScanReport gc_scan(std::size_t n, const std::vector<Integer>& c_list, std::size_t s,
                                   std::size_t m_max) {
    if (n == 0 || s == 0 || m_max == 0) throw PreconditionError("scan needs n, s, m_max >= 1");
    if (c_list.size() != 1 && c_list.size() != s)
        throw PreconditionError("give one c or one c per summand (" + std::to_string(s) + ")");
    GcScanReport rep;
    rep.n = n;
    rep.s = s;
    rep.m_max = m_max;
    rep.c_values = c_list.size() == 1 ? std::vector<Integer>(s, c_list[0]) : c_list;
    rep.preconditions_hold = n % 2 == 1 && is_prime(n) &&
                             std::all_of(rep.c_values.begin(), rep.c_values.end(), [](const Integer& c) { return c > 2; });

    auto check = [&](bool ok, const std::string& what) {
        if (ok) return;
        if (rep.preconditions_hold)
            rep.assertion_failures.push_back(what);
        else
            rep.observations.push_back("(not asserted) " + what);
    };

    // Single-torus sequences, one per distinct c.
    std::set<Integer> distinct(rep.c_values.begin(), rep.c_values.end());
    for (const auto& c : distinct) {
        ToralWedgeSpec single = ToralWedgeSpec::constant({n});
        single.coords[0][0] = companion_gc(n, c);
        DoldSequence d = dold_sequence(build_toral_wedge(single), m_max);
        for (std::size_t m = 1; m <= m_max; ++m)
            check(d.at(m) < 0, "l(g_c^" + std::to_string(m) + ") = " + d.at(m).get_str() + " is not negative for c = " +
                                   c.get_str());
        rep.single.emplace_back(c, std::move(d));
    }

    ToralWedgeSpec spec = ToralWedgeSpec::constant(std::vector<std::size_t>(s, n));
    for (std::size_t i = 0; i < s; ++i) spec.coords[i][(i + 1) % s] = companion_gc(n, rep.c_values[i]);
    const WedgeMapHomology w = build_toral_wedge(spec);
    const IterateTable table(w, m_max);
    rep.wedge_dold = mobius_transform(lefschetz_sequence(table));
    rep.wedge_aper = aper_from(rep.wedge_dold);

    for (std::size_t m = 1; m <= m_max; ++m) {
        if (m % s != 0) {
            if (m > 1)
                check(rep.wedge_dold.at(m) == 0,
                      "l(f^" + std::to_string(m) + ") = " + rep.wedge_dold.at(m).get_str() + " although s does not divide m");
            continue;
        }
        int sign = 0;
        bool certified = true;
        for (std::size_t i = 0; i < s && certified; ++i) {
            const Integer v = coordinate_dold(w, table, i, m);
            const int sg = v > 0 ? 1 : (v < 0 ? -1 : 0);
            if (sg == 0 || (sign != 0 && sg != sign)) certified = false;
            sign = sg;
        }
        if (certified && m > 1) {
            rep.certified.push_back(m);
            check(rep.wedge_aper.contains(m), "m = " + std::to_string(m) + " certified but not an algebraic period");
        }
    }
    if (s == 1)
        check(rep.wedge_aper.members.size() == m_max, "APer does not contain every m <= " + std::to_string(m_max));
    else
        rep.observations.push_back("s > 1: every m not divisible by s (m > 1) has l(f^m) = 0, so APer is not all of N");
    if (!rep.preconditions_hold) rep.observations.push_back("preconditions (n odd prime, c > 2) fail; checks are only observed");
    return rep;
}

}  // namespace lefschetz
