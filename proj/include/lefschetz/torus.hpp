#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lefschetz/invariants.hpp"
#include "lefschetz/wedge.hpp"

namespace lefschetz {

/// A self-map of T^{n_1} v ... v T^{n_s} given by the H_1 actions of its
/// coordinates. coords[i][j] (X_i -> X_j) is an n_j x n_i integer matrix or
/// nullopt for the constant coordinate.
struct ToralWedgeSpec {
    std::vector<std::size_t> dims;
    std::vector<std::vector<std::optional<Matrix>>> coords;

    /// All-constant map on the given tori.
    static ToralWedgeSpec constant(std::vector<std::size_t> dims);
    /// Cuts an assembled degree-1 matrix into coordinate blocks (block row j,
    /// block column i is X_i -> X_j); zero blocks become constant.
    static ToralWedgeSpec from_assembled_h1(std::vector<std::size_t> dims, const Matrix& h1);

    std::size_t summands() const noexcept { return dims.size(); }
    /// Assembled degree-1 matrix.
    Matrix assembled_h1() const;
};

/// Graded action on H_*(T^n) of a map whose H_1 action is the square matrix
/// a: the degree-k block is the k-th exterior power.
GradedLinearMap torus_graded_from_h1(const Matrix& a);

/// Same for a map T^{n_src} -> T^{n_dst} with H_1 action an n_dst x n_src matrix.
GradedLinearMap torus_graded_between(const Matrix& a, std::size_t n_src, std::size_t n_dst);

/// Lifts every coordinate by exterior powers and assembles. Throws
/// DimensionMismatch on a wrongly shaped H_1 block.
WedgeMapHomology build_toral_wedge(const ToralWedgeSpec& spec);

// --- realizability ----------------------------------------------------------

/// Degree-1 cohomology basis element: generator `index` of summand `summand`
/// (both 0-based).
struct Covector {
    std::size_t summand = 0;
    std::size_t index = 0;
};

struct ObstructionWitness {
    Covector first;
    Covector second;
    /// Summand in which the images of `first` and `second` have a nonzero
    /// wedge product.
    std::size_t summand = 0;
    /// Generators (0-based, ascending) of that summand carrying the nonzero
    /// 2x2 minor, and its value.
    std::pair<std::size_t, std::size_t> generators{0, 0};
    Rational coefficient;
};

struct ObstructionReport {
    bool passes = false;
    std::optional<ObstructionWitness> witness;
    /// On pass: induced homology matrices in degrees 1..max(dims), built from
    /// products of degree-1 cohomology classes within each summand.
    std::vector<Matrix> induced;
};

/// Necessary condition for an R x R integer matrix to be the H_1 action of a
/// self-map of a wedge of tori: under the transposed (cohomology) action,
/// degree-1 classes from distinct summands must have images whose
/// components in every summand wedge to zero, because their cup product
/// vanishes in the wedge. Passing is not a proof of realizability.
ObstructionReport check_h1_realizability(const Matrix& h1, const std::vector<std::size_t>& dims);

std::string describe(const ObstructionWitness& w);

// --- Lefschetz periodic point freeness --------------------------------------

struct LppfReport {
    bool is_lppf = false;
    RationalFunction zeta;
    long zeta_degree = 0;
    /// det of the assembled H_1 matrix is nonzero.
    bool eigen_nonzero = false;
    /// Permutative, equal tori, s >= 2 and eigen_nonzero: zeta must not be 1.
    bool hypotheses_hold = false;
    std::vector<std::string> notes;
};

/// Throws InternalCheckFailure if the hypotheses hold and zeta == 1.
LppfReport lppf_report(const ToralWedgeSpec& spec);

// --- quasi-unipotence -------------------------------------------------------

/// Phi_d.
Polynomial cyclotomic_polynomial(std::uint64_t d);

struct CyclotomicCertificate {
    bool quasi_unipotent = false;
    /// Power of t dividing the polynomial.
    std::size_t t_power = 0;
    /// (d, multiplicity) for every Phi_d factor found, ascending d.
    std::vector<std::pair<std::uint64_t, std::size_t>> factors;
};

/// Whether p = +-t^e * prod Phi_d, by exact division with candidate Phi_d
/// tried in order of increasing totient.
CyclotomicCertificate cyclotomic_factorization(const Polynomial& p);

/// Certificate for the characteristic polynomial of the assembled H_1 matrix.
CyclotomicCertificate is_quasi_unipotent(const WedgeMapHomology& w);
CyclotomicCertificate is_quasi_unipotent(const ToralWedgeSpec& spec);

/// When every degree is quasi-unipotent, the traces of iterates (hence L and
/// l) are periodic in m with period dividing the returned lcm of cyclotomic
/// indices.
std::optional<std::uint64_t> lefschetz_period(const WedgeMapHomology& w);

// --- t^n - c scans ----------------------------------------------------------

/// Companion matrix of t^n - c.
Matrix companion_gc(std::size_t n, const Integer& c);

bool is_prime(std::uint64_t n);

struct GcScanReport {
    std::size_t n = 0;
    std::size_t s = 0;
    std::size_t m_max = 0;
    /// c for each summand's nonconstant coordinate i -> i+1 (mod s).
    std::vector<Integer> c_values;
    /// n odd prime and every c > 2.
    bool preconditions_hold = false;
    DoldSequence wedge_dold;
    AperSet wedge_aper;
    /// Dold coefficients of the single-torus map g_c, one per distinct c.
    std::vector<std::pair<Integer, DoldSequence>> single;
    /// m certified to be algebraic periods by the coordinate formula: s | m
    /// and all coordinate Dold values at m nonzero with one sign.
    std::vector<std::size_t> certified;
    /// Checks that failed although the preconditions hold.
    std::vector<std::string> assertion_failures;
    /// Everything else worth reporting, including checks that were only
    /// observed because the preconditions fail.
    std::vector<std::string> observations;
};

/// Builds the cyclic permutative map on s copies of T^n with coordinates
/// g_{c_i} and scans l up to m_max. c_list may have one entry (reused) or s.
GcScanReport gc_scan(std::size_t n, const std::vector<Integer>& c_list, std::size_t s, std::size_t m_max);

}  // namespace lefschetz
