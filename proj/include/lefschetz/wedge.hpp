#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "lefschetz/matrix.hpp"

namespace lefschetz {

/// Rational Betti numbers of a path-connected summand, degrees 0..n.
class SpaceSignature {
   public:
    /// betti[0] must be 1.
    explicit SpaceSignature(std::vector<std::size_t> betti);
    /// Betti numbers C(n, k) of the n-torus.
    static SpaceSignature torus(std::size_t n);

    std::size_t dimension() const noexcept { return betti_.size() - 1; }
    /// Betti number in degree k; 0 above the dimension.
    std::size_t betti(std::size_t k) const noexcept { return k < betti_.size() ? betti_[k] : 0; }
    const std::vector<std::size_t>& betti_numbers() const noexcept { return betti_; }

    friend bool operator==(const SpaceSignature&, const SpaceSignature&) = default;

   private:
    std::vector<std::size_t> betti_;
};

/// Action of a pointed map X -> Y on H_k(-; Q) for k >= 1. The degree-0
/// action is the identity and is never stored. Degree k is a
/// target.betti(k) x source.betti(k) matrix; degrees run 1..max(dim X, dim Y).
class GradedLinearMap {
   public:
    /// blocks[k-1] is the degree-k matrix; missing trailing degrees are zero.
    /// Throws DimensionMismatch on a wrongly shaped block.
    GradedLinearMap(SpaceSignature source, SpaceSignature target, std::vector<Matrix> blocks);
    /// Degrees absent from the map are zero.
    GradedLinearMap(SpaceSignature source, SpaceSignature target, const std::map<std::size_t, Matrix>& by_degree);

    static GradedLinearMap zero(const SpaceSignature& source, const SpaceSignature& target);

    const SpaceSignature& source() const noexcept { return source_; }
    const SpaceSignature& target() const noexcept { return target_; }
    std::size_t top_degree() const noexcept { return blocks_.size(); }
    /// Degree-k matrix, 1 <= k <= top_degree().
    const Matrix& degree(std::size_t k) const;
    bool is_zero() const;

    friend bool operator==(const GradedLinearMap&, const GradedLinearMap&) = default;

   private:
    SpaceSignature source_;
    SpaceSignature target_;
    std::vector<Matrix> blocks_;
};

/// coords[i][j] is the coordinate X_i -> X_j; nullopt is the constant map.
using CoordinateGrid = std::vector<std::vector<std::optional<GradedLinearMap>>>;

/// Graded homology action of a self-map of X_1 v ... v X_s.
///
/// In degree k the assembled matrix acts on the direct sum of the H_k(X_i),
/// summands in order. Coordinate X_i -> X_j sits at block row j, block
/// column i (columns are inputs).
class WedgeMapHomology {
   public:
    /// Throws DimensionMismatch naming the offending coordinate and degree.
    static WedgeMapHomology assemble(std::vector<SpaceSignature> spaces, CoordinateGrid coords);
    /// Splits per-degree assembled matrices (degrees 1..) into coordinate
    /// blocks. All-zero blocks become constant coordinates.
    static WedgeMapHomology from_assembled(std::vector<SpaceSignature> spaces, const std::vector<Matrix>& degrees);

    std::size_t summands() const noexcept { return spaces_.size(); }
    const std::vector<SpaceSignature>& spaces() const noexcept { return spaces_; }
    /// Largest summand dimension.
    std::size_t top_degree() const noexcept { return assembled_.size(); }
    /// Betti number of the wedge: 1 in degree 0, the sum over summands above.
    std::size_t betti(std::size_t k) const;

    /// Degree-k assembled matrix, 1 <= k <= top_degree().
    const Matrix& assembled(std::size_t k) const;
    const std::vector<Matrix>& assembled_all() const noexcept { return assembled_; }

    const std::optional<GradedLinearMap>& coordinate(std::size_t from, std::size_t to) const;
    /// Present and nonzero in some degree.
    bool has_coordinate(std::size_t from, std::size_t to) const;

    /// Row/column offset of summand i inside degree k.
    std::size_t offset(std::size_t k, std::size_t i) const;
    /// Block (row `to`, column `from`) of a degree-k matrix over the wedge.
    Matrix block(const Matrix& degree_k, std::size_t k, std::size_t from, std::size_t to) const;
    /// The coordinate from -> to of a graded map given by per-degree
    /// matrices over the wedge (e.g. an iterate).
    GradedLinearMap coordinate_of(const std::vector<Matrix>& degrees, std::size_t from, std::size_t to) const;

    bool is_integral() const;

   private:
    WedgeMapHomology(std::vector<SpaceSignature> spaces, CoordinateGrid coords, std::vector<Matrix> assembled);

    std::vector<SpaceSignature> spaces_;
    CoordinateGrid coords_;
    std::vector<Matrix> assembled_;
};

struct StructureReport {
    bool is_diagonal = false;
    bool is_permutative = false;
    /// sigma as 0-based images, sigma[i] = target of summand i.
    std::optional<std::vector<std::size_t>> permutation;
    /// Cycles of sigma, each listed from its smallest index in sigma order;
    /// cycles sorted by smallest index.
    std::optional<std::vector<std::vector<std::size_t>>> cycles;
    bool is_squared_by_blocks = false;
    bool is_cyclic = false;

    bool reduction_formulas_apply() const noexcept { return is_permutative && is_squared_by_blocks; }
};

/// Permutative iff each summand maps nontrivially into at most one summand
/// and no two summands share a target. Constant coordinates are completed to
/// a bijection by closing every chain i1 -> i2 -> ... -> ik on itself, which
/// yields the finest cycle structure compatible with the nonzero pattern.
StructureReport classify(const WedgeMapHomology& w);

/// Connected components of the graph with an edge {i, j} whenever the
/// coordinate i -> j or j -> i is nonzero. Components sorted by smallest
/// member; members ascending; 0-based.
std::vector<std::vector<std::size_t>> decompose(const WedgeMapHomology& w);

/// Per-degree assembled matrices of f^m (degrees 1..top), m >= 1.
std::vector<Matrix> iterate(const WedgeMapHomology& w, std::size_t m);

/// Precomputed iterates f, f^2, ..., f^m_max in every degree. Immutable after
/// construction; safe to share between threads.
class IterateTable {
   public:
    /// Degrees are computed in parallel when OpenMP is enabled.
    IterateTable(const WedgeMapHomology& w, std::size_t m_max);

    std::size_t max_iterate() const noexcept { return m_max_; }
    /// Degree-k matrix of f^m, 1 <= m <= max_iterate().
    const Matrix& power(std::size_t k, std::size_t m) const;
    /// All degrees of f^m.
    std::vector<Matrix> degrees(std::size_t m) const;
    /// trace of f^m in degree k.
    Rational trace(std::size_t k, std::size_t m) const { return power(k, m).trace(); }

   private:
    std::size_t m_max_;
    std::vector<std::vector<Matrix>> powers_;  // [k-1][m-1]
};

}  // namespace lefschetz
