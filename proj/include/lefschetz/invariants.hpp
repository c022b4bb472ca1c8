#pragma once

// Periodic-point invariants of a wedge self-map, each along two routes:
// the definitions (traces of iterates, determinant product, Moebius
// transform) and the reduction formulas for permutative maps squared by
// blocks, which express everything through the diagonal coordinates of
// iterates.

#include <cstddef>
#include <optional>
#include <vector>

#include "lefschetz/power_series.hpp"
#include "lefschetz/rational_function.hpp"
#include "lefschetz/wedge.hpp"

namespace lefschetz {

/// L(f^m) for m = 1..size(). Index with at(m).
struct LefschetzSequence {
    std::vector<Integer> values;

    std::size_t size() const noexcept { return values.size(); }
    const Integer& at(std::size_t m) const { return values.at(m - 1); }
    friend bool operator==(const LefschetzSequence&, const LefschetzSequence&) = default;
};

/// Dold coefficients l(f^m) for m = 1..size().
struct DoldSequence {
    std::vector<Integer> values;

    std::size_t size() const noexcept { return values.size(); }
    const Integer& at(std::size_t m) const { return values.at(m - 1); }
    friend bool operator==(const DoldSequence&, const DoldSequence&) = default;
};

/// {m <= m_max : l(f^m) != 0}.
struct AperSet {
    std::vector<std::size_t> members;
    std::size_t m_max = 0;

    bool contains(std::size_t m) const;
    friend bool operator==(const AperSet&, const AperSet&) = default;
};

/// 1 + sum_k (-1)^k trace(degree-k block) for a self-map of one summand.
/// A map that is zero in all positive degrees has Lefschetz number 1.
Integer lefschetz_number(const GradedLinearMap& self_map);
Integer lefschetz_number(const std::vector<Matrix>& positive_degrees);

/// zeta of a self-map of one summand: prod_k det(I - t g_k)^((-1)^(k+1)),
/// degree 0 included.
RationalFunction zeta_function(const GradedLinearMap& self_map);

// --- definitions ------------------------------------------------------------

Integer lefschetz_direct(const WedgeMapHomology& w, std::size_t m);
LefschetzSequence lefschetz_sequence(const IterateTable& table);
LefschetzSequence lefschetz_sequence(const WedgeMapHomology& w, std::size_t m_max);

RationalFunction zeta_det(const WedgeMapHomology& w);
/// exp(sum_{m<=order} L(f^m) t^m / m), truncated at `order`.
PowerSeries zeta_series(const WedgeMapHomology& w, std::size_t order);

/// Moebius transform l(m) = sum_{r | m} mu(m/r) L(r).
DoldSequence mobius_transform(const LefschetzSequence& l);
/// Inverse transform L(m) = sum_{r | m} l(r).
LefschetzSequence divisor_sum(const DoldSequence& d);

Integer dold(const WedgeMapHomology& w, std::size_t m);
DoldSequence dold_sequence(const WedgeMapHomology& w, std::size_t m_max);

/// Members of APer up to m_max. When the reduction formulas apply, also
/// checks that every member m > 1 is an algebraic period of some diagonal
/// coordinate and throws InternalCheckFailure otherwise.
AperSet aper_upto(const WedgeMapHomology& w, std::size_t m_max);
AperSet aper_from(const DoldSequence& d);

struct EulerProductCheck {
    bool agrees = false;
    std::optional<std::size_t> first_mismatch;  // coefficient index
    DoldSequence dold;
};

/// Compares exp(-sum_{m<=order} l(f^m)/m log(1 - t^m)) with the expansion of
/// zeta_det(w), through t^order.
EulerProductCheck euler_product_check(const WedgeMapHomology& w, std::size_t order);

// --- reduction formulas ---------------------------------------------------
// All throw NotApplicable unless classify(w) is permutative and squared by
// blocks.

/// 1 + sum over cycles of length s_l dividing m of sum_{i in cycle}
/// (L((f^m)_ii) - 1).
Integer lefschetz_by_cycles(const WedgeMapHomology& w, std::size_t m);
LefschetzSequence lefschetz_by_cycles_sequence(const WedgeMapHomology& w, const IterateTable& table);

/// 1/(1-t) * prod over cycles of ( prod_{i in cycle} (1 - t^s) zeta_{(f^s)_ii}(t^s) )^(1/s).
/// NotAPerfectPower would mean the structural precondition is violated.
RationalFunction zeta_by_cycles(const WedgeMapHomology& w);

/// Per-coordinate Dold value sum_{r | m} mu(m/r) L((f^r)_ii).
Integer coordinate_dold(const WedgeMapHomology& w, const IterateTable& table, std::size_t i, std::size_t m);

/// For m > 1 the sum over cycles of length dividing m of the coordinate Dold
/// values of the cycle's members; l(f) = L(f).
Integer dold_by_cycles(const WedgeMapHomology& w, std::size_t m);
DoldSequence dold_by_cycles_sequence(const WedgeMapHomology& w, const IterateTable& table);

// --- cross-checked bundle -------------------------------------------------

struct InvariantTables {
    LefschetzSequence lefschetz;
    DoldSequence dold;
    RationalFunction zeta;
    AperSet aper;
    /// True when the reduction formulas ran and agreed with the definitions.
    bool cross_checked = false;
};

/// Everything up to m_max along the definitions, plus the formula paths when
/// they apply. Any disagreement throws InternalCheckFailure.
InvariantTables compute_invariants(const WedgeMapHomology& w, std::size_t m_max);

}  // namespace lefschetz
