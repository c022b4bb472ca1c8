#include "lefschetz/wedge.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lefschetz/errors.hpp"
#include "lefschetz/kernels.hpp"

namespace lefschetz {

namespace {

std::string shape(std::size_t r, std::size_t c) { return std::to_string(r) + "x" + std::to_string(c); }

std::size_t max_dimension(const std::vector<SpaceSignature>& spaces) {
    std::size_t top = 0;
    for (const auto& s : spaces) top = std::max(top, s.dimension());
    return top;
}

const Matrix kEmpty;

}  // namespace

// ---------------------------------------------------------------------------
// SpaceSignature

SpaceSignature::SpaceSignature(std::vector<std::size_t> betti) : betti_(std::move(betti)) {
    if (betti_.empty() || betti_[0] != 1)
        throw PreconditionError("summands must be path-connected: betti[0] has to be 1");
    while (betti_.size() > 1 && betti_.back() == 0) betti_.pop_back();
}

SpaceSignature SpaceSignature::torus(std::size_t n) {
    std::vector<std::size_t> b(n + 1);
    for (std::size_t k = 0; k <= n; ++k) b[k] = kernels::binomial(n, k);
    return SpaceSignature(std::move(b));
}

// ---------------------------------------------------------------------------
// GradedLinearMap

GradedLinearMap::GradedLinearMap(SpaceSignature source, SpaceSignature target, std::vector<Matrix> blocks)
    : source_(std::move(source)), target_(std::move(target)), blocks_(std::move(blocks)) {
    const std::size_t top = std::max(source_.dimension(), target_.dimension());
    if (blocks_.size() > top) {
        for (std::size_t k = top + 1; k <= blocks_.size(); ++k)
            if (!blocks_[k - 1].empty())
                throw DimensionMismatch("degree " + std::to_string(k) + " block supplied above the top degree " +
                                        std::to_string(top));
        blocks_.resize(top);
    }
    while (blocks_.size() < top) {
        const std::size_t k = blocks_.size() + 1;
        blocks_.emplace_back(target_.betti(k), source_.betti(k));
    }
    for (std::size_t k = 1; k <= top; ++k) {
        const Matrix& b = blocks_[k - 1];
        const std::size_t rows = target_.betti(k), cols = source_.betti(k);
        // A 0x0 placeholder stands for the zero map when the shape is clear.
        if (b.rows() == 0 && b.cols() == 0 && (rows != 0 || cols != 0)) {
            blocks_[k - 1] = Matrix(rows, cols);
            continue;
        }
        if (b.rows() != rows || b.cols() != cols)
            throw DimensionMismatch("degree " + std::to_string(k) + " block is " + shape(b.rows(), b.cols()) +
                                    ", expected " + shape(rows, cols));
    }
}

GradedLinearMap::GradedLinearMap(SpaceSignature source, SpaceSignature target,
                                 const std::map<std::size_t, Matrix>& by_degree)
    : GradedLinearMap(source, target, [&] {
          std::vector<Matrix> blocks;
          for (const auto& [k, m] : by_degree) {
              if (k == 0) throw DimensionMismatch("degree 0 is implicit and cannot be supplied");
              if (blocks.size() < k) blocks.resize(k);
              blocks[k - 1] = m;
          }
          return blocks;
      }()) {}

GradedLinearMap GradedLinearMap::zero(const SpaceSignature& source, const SpaceSignature& target) {
    return GradedLinearMap(source, target, std::vector<Matrix>{});
}

const Matrix& GradedLinearMap::degree(std::size_t k) const {
    if (k == 0 || k > blocks_.size()) throw PreconditionError("degree out of range: " + std::to_string(k));
    return blocks_[k - 1];
}

bool GradedLinearMap::is_zero() const {
    return std::all_of(blocks_.begin(), blocks_.end(), [](const Matrix& m) { return m.is_zero(); });
}

// ---------------------------------------------------------------------------
// WedgeMapHomology

WedgeMapHomology::WedgeMapHomology(std::vector<SpaceSignature> spaces, CoordinateGrid coords,
                                   std::vector<Matrix> assembled)
    : spaces_(std::move(spaces)), coords_(std::move(coords)), assembled_(std::move(assembled)) {}

WedgeMapHomology WedgeMapHomology::assemble(std::vector<SpaceSignature> spaces, CoordinateGrid coords) {
    const std::size_t s = spaces.size();
    if (coords.empty()) coords.assign(s, std::vector<std::optional<GradedLinearMap>>(s));
    if (coords.size() != s) throw DimensionMismatch("coordinate grid has " + std::to_string(coords.size()) + " rows for " + std::to_string(s) + " summands");
    for (std::size_t i = 0; i < s; ++i) {
        if (coords[i].empty()) coords[i].resize(s);
        if (coords[i].size() != s) throw DimensionMismatch("coordinate grid row " + std::to_string(i + 1) + " has the wrong length");
        for (std::size_t j = 0; j < s; ++j) {
            const auto& c = coords[i][j];
            if (!c) continue;
            if (!(c->source() == spaces[i]) || !(c->target() == spaces[j]))
                throw DimensionMismatch("coordinate " + std::to_string(i + 1) + "->" + std::to_string(j + 1) +
                                        " does not match the declared summand signatures");
        }
    }

    const std::size_t top = max_dimension(spaces);
    std::vector<Matrix> assembled;
    assembled.reserve(top);
    for (std::size_t k = 1; k <= top; ++k) {
        std::size_t dim = 0;
        std::vector<std::size_t> offset(s);
        for (std::size_t i = 0; i < s; ++i) {
            offset[i] = dim;
            dim += spaces[i].betti(k);
        }
        Matrix m(dim, dim);
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < s; ++j) {
                const auto& c = coords[i][j];
                if (!c || k > c->top_degree()) continue;
                m.set_block(offset[j], offset[i], c->degree(k));
            }
        assembled.push_back(std::move(m));
    }
    return WedgeMapHomology(std::move(spaces), std::move(coords), std::move(assembled));
}

WedgeMapHomology WedgeMapHomology::from_assembled(std::vector<SpaceSignature> spaces, const std::vector<Matrix>& degrees) {
    const std::size_t s = spaces.size();
    const std::size_t top = max_dimension(spaces);
    if (degrees.size() > top) throw DimensionMismatch("assembled matrices supplied above the top degree");
    for (std::size_t k = 1; k <= degrees.size(); ++k) {
        std::size_t dim = 0;
        for (const auto& sp : spaces) dim += sp.betti(k);
        const Matrix& m = degrees[k - 1];
        if (m.rows() != dim || m.cols() != dim)
            throw DimensionMismatch("assembled degree " + std::to_string(k) + " matrix is " + shape(m.rows(), m.cols()) +
                                    ", expected " + shape(dim, dim));
    }
    // Build an all-constant wedge just to reuse its offsets for extraction.
    WedgeMapHomology layout = assemble(spaces, {});
    CoordinateGrid coords(s, std::vector<std::optional<GradedLinearMap>>(s));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) {
            std::vector<Matrix> blocks;
            for (std::size_t k = 1; k <= degrees.size(); ++k) blocks.push_back(layout.block(degrees[k - 1], k, i, j));
            GradedLinearMap g(spaces[i], spaces[j], std::move(blocks));
            if (!g.is_zero()) coords[i][j] = std::move(g);
        }
    return assemble(std::move(spaces), std::move(coords));
}

std::size_t WedgeMapHomology::betti(std::size_t k) const {
    if (k == 0) return 1;
    std::size_t b = 0;
    for (const auto& s : spaces_) b += s.betti(k);
    return b;
}

const Matrix& WedgeMapHomology::assembled(std::size_t k) const {
    if (k == 0) throw PreconditionError("degree 0 is implicit");
    if (k > assembled_.size()) return kEmpty;
    return assembled_[k - 1];
}

const std::optional<GradedLinearMap>& WedgeMapHomology::coordinate(std::size_t from, std::size_t to) const {
    return coords_.at(from).at(to);
}

bool WedgeMapHomology::has_coordinate(std::size_t from, std::size_t to) const {
    const auto& c = coordinate(from, to);
    return c && !c->is_zero();
}

std::size_t WedgeMapHomology::offset(std::size_t k, std::size_t i) const {
    std::size_t off = 0;
    for (std::size_t j = 0; j < i; ++j) off += spaces_[j].betti(k);
    return off;
}

Matrix WedgeMapHomology::block(const Matrix& degree_k, std::size_t k, std::size_t from, std::size_t to) const {
    return degree_k.block(offset(k, to), offset(k, from), spaces_.at(to).betti(k), spaces_.at(from).betti(k));
}

GradedLinearMap WedgeMapHomology::coordinate_of(const std::vector<Matrix>& degrees, std::size_t from, std::size_t to) const {
    std::vector<Matrix> blocks;
    for (std::size_t k = 1; k <= degrees.size(); ++k) blocks.push_back(block(degrees[k - 1], k, from, to));
    return GradedLinearMap(spaces_.at(from), spaces_.at(to), std::move(blocks));
}

bool WedgeMapHomology::is_integral() const {
    return std::all_of(assembled_.begin(), assembled_.end(), [](const Matrix& m) { return m.is_integral(); });
}

// ---------------------------------------------------------------------------
// Structure

StructureReport classify(const WedgeMapHomology& w) {
    const std::size_t s = w.summands();
    StructureReport report;
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::size_t> next(s, kNone), prev(s, kNone);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) {
            if (!w.has_coordinate(i, j)) continue;
            if (next[i] != kNone || prev[j] != kNone) return report;  // two targets, or a shared target
            next[i] = j;
            prev[j] = i;
        }

    // Close each maximal chain (it starts at a summand nobody maps into and
    // ends at one that maps nowhere) back onto its own start.
    std::vector<std::size_t> sigma = next;
    for (std::size_t start = 0; start < s; ++start) {
        if (prev[start] != kNone) continue;
        std::size_t end = start;
        while (next[end] != kNone) end = next[end];
        sigma[end] = start;
    }

    std::vector<std::vector<std::size_t>> cycles;
    std::vector<bool> seen(s, false);
    for (std::size_t i = 0; i < s; ++i) {
        if (seen[i]) continue;
        std::vector<std::size_t> cycle;
        for (std::size_t j = i; !seen[j]; j = sigma[j]) {
            seen[j] = true;
            cycle.push_back(j);
        }
        cycles.push_back(std::move(cycle));
    }

    report.is_permutative = true;
    report.is_diagonal = std::all_of(cycles.begin(), cycles.end(), [](const auto& c) { return c.size() == 1; });
    report.is_cyclic = cycles.size() == 1;
    report.is_squared_by_blocks = std::all_of(cycles.begin(), cycles.end(), [&](const auto& c) {
        return std::all_of(c.begin(), c.end(), [&](std::size_t i) { return w.spaces()[i] == w.spaces()[c.front()]; });
    });
    report.permutation = std::move(sigma);
    report.cycles = std::move(cycles);
    return report;
}

std::vector<std::vector<std::size_t>> decompose(const WedgeMapHomology& w) {
    const std::size_t s = w.summands();
    std::vector<std::size_t> parent(s);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j)
            if (i != j && w.has_coordinate(i, j)) {
                std::size_t a = find(i), b = find(j);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
    std::vector<std::vector<std::size_t>> components;
    std::vector<std::size_t> slot(s, static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < s; ++i) {
        std::size_t root = find(i);
        if (slot[root] == static_cast<std::size_t>(-1)) {
            slot[root] = components.size();
            components.emplace_back();
        }
        components[slot[root]].push_back(i);
    }
    return components;
}

std::vector<Matrix> iterate(const WedgeMapHomology& w, std::size_t m) {
    if (m == 0) throw PreconditionError("iterates start at 1");
    std::vector<Matrix> out;
    for (const auto& a : w.assembled_all()) {
        Matrix result = a;
        Matrix base = a;
        std::size_t e = m - 1;
        while (e > 0) {
            if (e & 1U) result = result * base;
            e >>= 1U;
            if (e > 0) base = base * base;
        }
        out.push_back(std::move(result));
    }
    return out;
}

// ---------------------------------------------------------------------------
// IterateTable

IterateTable::IterateTable(const WedgeMapHomology& w, std::size_t m_max) : m_max_(m_max), powers_(w.top_degree()) {
    const auto top = static_cast<std::ptrdiff_t>(w.top_degree());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < top; ++k)
        powers_[static_cast<std::size_t>(k)] = kernels::powers(w.assembled(static_cast<std::size_t>(k) + 1), m_max);
}

const Matrix& IterateTable::power(std::size_t k, std::size_t m) const {
    if (m == 0 || m > m_max_) throw PreconditionError("iterate " + std::to_string(m) + " outside the table");
    if (k == 0) throw PreconditionError("degree 0 is implicit");
    if (k > powers_.size()) return kEmpty;
    return powers_[k - 1][m - 1];
}

std::vector<Matrix> IterateTable::degrees(std::size_t m) const {
    std::vector<Matrix> out;
    for (std::size_t k = 1; k <= powers_.size(); ++k) out.push_back(power(k, m));
    return out;
}

}  // namespace lefschetz
