#include "lefschetz/invariants.hpp"

#include <algorithm>
#include <string>

#include "lefschetz/errors.hpp"
#include "lefschetz/linalg.hpp"
#include "lefschetz/number_theory.hpp"

namespace lefschetz {

namespace {

void require_integral(const WedgeMapHomology& w) {
    if (!w.is_integral()) throw PreconditionError("invariants need integer homology matrices");
}

void require_positive(std::size_t m) {
    if (m == 0) throw PreconditionError("iterates start at 1");
}

StructureReport require_reducible(const WedgeMapHomology& w) {
    StructureReport r = classify(w);
    if (!r.reduction_formulas_apply())
        throw NotApplicable(r.is_permutative ? "map is permutative but not squared by blocks"
                                             : "map is not permutative");
    return r;
}

Integer to_integer(const Rational& q) {
    if (!is_integer(q)) throw InternalCheckFailure("non-integer trace of an integer matrix");
    return q.get_num();
}

RationalFunction alternating_determinants(const std::vector<Matrix>& positive_degrees) {
    // Degree 0 contributes det(1 - t)^(-1).
    Polynomial num{1}, den{1, -1};
    for (std::size_t k = 1; k <= positive_degrees.size(); ++k) {
        Polynomial d = det_one_minus_t(positive_degrees[k - 1]);
        if (k % 2 == 1)
            num = num * d;
        else
            den = den * d;
    }
    return RationalFunction(num, den);
}

Polynomial one_minus_t_pow(std::size_t s) { return Polynomial{1} - Polynomial::monomial(1, s); }

template <class Seq>
void require_same(const Seq& a, const Seq& b, const char* what) {
    for (std::size_t m = 1; m <= a.size(); ++m)
        if (a.at(m) != b.at(m))
            throw InternalCheckFailure(std::string(what) + " paths disagree at m = " + std::to_string(m) + ": " +
                                       a.at(m).get_str() + " vs " + b.at(m).get_str());
}

bool divides(std::size_t s, std::size_t m) { return m % s == 0; }

}  // namespace

bool AperSet::contains(std::size_t m) const { return std::binary_search(members.begin(), members.end(), m); }

Integer lefschetz_number(const std::vector<Matrix>& positive_degrees) {
    Rational total = 1;
    for (std::size_t k = 1; k <= positive_degrees.size(); ++k) {
        const Matrix& b = positive_degrees[k - 1];
        if (b.rows() == 0) continue;
        if (k % 2)
            total -= b.trace();
        else
            total += b.trace();
    }
    return to_integer(total);
}

Integer lefschetz_number(const GradedLinearMap& self_map) {
    if (!(self_map.source() == self_map.target())) throw PreconditionError("Lefschetz number of a non-self map");
    std::vector<Matrix> blocks;
    for (std::size_t k = 1; k <= self_map.top_degree(); ++k) blocks.push_back(self_map.degree(k));
    return lefschetz_number(blocks);
}

RationalFunction zeta_function(const GradedLinearMap& self_map) {
    if (!(self_map.source() == self_map.target())) throw PreconditionError("zeta function of a non-self map");
    std::vector<Matrix> blocks;
    for (std::size_t k = 1; k <= self_map.top_degree(); ++k) blocks.push_back(self_map.degree(k));
    return alternating_determinants(blocks);
}

// --- definitions ------------------------------------------------------------

Integer lefschetz_direct(const WedgeMapHomology& w, std::size_t m) {
    require_positive(m);
    require_integral(w);
    return lefschetz_number(iterate(w, m));
}

LefschetzSequence lefschetz_sequence(const IterateTable& table) {
    LefschetzSequence seq;
    for (std::size_t m = 1; m <= table.max_iterate(); ++m) seq.values.push_back(lefschetz_number(table.degrees(m)));
    return seq;
}

LefschetzSequence lefschetz_sequence(const WedgeMapHomology& w, std::size_t m_max) {
    require_integral(w);
    return lefschetz_sequence(IterateTable(w, m_max));
}

RationalFunction zeta_det(const WedgeMapHomology& w) {
    require_integral(w);
    return alternating_determinants(w.assembled_all());
}

PowerSeries zeta_series(const WedgeMapHomology& w, std::size_t order) {
    if (order == 0) throw PreconditionError("zeta_series: order must be >= 1");
    const LefschetzSequence l = lefschetz_sequence(w, order);
    PowerSeries exponent(order);
    for (std::size_t m = 1; m <= order; ++m) exponent[m] = ratio(l.at(m), Integer(static_cast<unsigned long>(m)));
    return exp(exponent);
}

DoldSequence mobius_transform(const LefschetzSequence& l) {
    DoldSequence d;
    for (std::size_t m = 1; m <= l.size(); ++m) {
        Integer acc = 0;
        for (auto r : divisors(m)) {
            const int mu = mobius(m / r);
            if (mu != 0) acc += mu * l.at(r);
        }
        d.values.push_back(acc);
    }
    return d;
}

LefschetzSequence divisor_sum(const DoldSequence& d) {
    LefschetzSequence l;
    for (std::size_t m = 1; m <= d.size(); ++m) {
        Integer acc = 0;
        for (auto r : divisors(m)) acc += d.at(r);
        l.values.push_back(acc);
    }
    return l;
}

Integer dold(const WedgeMapHomology& w, std::size_t m) {
    require_positive(m);
    return dold_sequence(w, m).at(m);
}

DoldSequence dold_sequence(const WedgeMapHomology& w, std::size_t m_max) {
    return mobius_transform(lefschetz_sequence(w, m_max));
}

AperSet aper_from(const DoldSequence& d) {
    AperSet a;
    a.m_max = d.size();
    for (std::size_t m = 1; m <= d.size(); ++m)
        if (d.at(m) != 0) a.members.push_back(m);
    return a;
}

AperSet aper_upto(const WedgeMapHomology& w, std::size_t m_max) {
    require_positive(m_max);
    require_integral(w);
    const IterateTable table(w, m_max);
    const DoldSequence d = mobius_transform(lefschetz_sequence(table));
    AperSet a = aper_from(d);
    const StructureReport r = classify(w);
    if (!r.reduction_formulas_apply()) return a;
    // Containment in the union of the diagonal coordinates' periods. At m = 1
    // the coordinate sum is offset by the base point, so only m > 1 is checked.
    for (std::size_t m : a.members) {
        if (m == 1) continue;
        bool covered = false;
        for (std::size_t i = 0; i < w.summands() && !covered; ++i) covered = coordinate_dold(w, table, i, m) != 0;
        if (!covered)
            throw InternalCheckFailure("algebraic period " + std::to_string(m) + " not carried by any diagonal coordinate");
    }
    return a;
}

EulerProductCheck euler_product_check(const WedgeMapHomology& w, std::size_t order) {
    if (order == 0) throw PreconditionError("euler_product_check: order must be >= 1");
    EulerProductCheck result;
    result.dold = dold_sequence(w, order);
    PowerSeries exponent(order);
    for (std::size_t m = 1; m <= order; ++m) {
        const Integer& l = result.dold.at(m);
        if (l == 0) continue;
        PowerSeries factor = log(PowerSeries::from_polynomial(one_minus_t_pow(m), order));
        exponent -= factor * ratio(l, Integer(static_cast<unsigned long>(m)));
    }
    const PowerSeries product = exp(exponent);
    const PowerSeries expected = zeta_det(w).expand(order);
    result.agrees = true;
    for (std::size_t i = 0; i <= order; ++i)
        if (product[i] != expected[i]) {
            result.agrees = false;
            result.first_mismatch = i;
            break;
        }
    return result;
}

// --- reduction formulas ---------------------------------------------------

Integer lefschetz_by_cycles(const WedgeMapHomology& w, std::size_t m) {
    require_positive(m);
    require_integral(w);
    return lefschetz_by_cycles_sequence(w, IterateTable(w, m)).at(m);
}

LefschetzSequence lefschetz_by_cycles_sequence(const WedgeMapHomology& w, const IterateTable& table) {
    const StructureReport r = require_reducible(w);
    LefschetzSequence seq;
    for (std::size_t m = 1; m <= table.max_iterate(); ++m) {
        const std::vector<Matrix> fm = table.degrees(m);
        Integer total = 1;
        for (const auto& cycle : *r.cycles) {
            if (!divides(cycle.size(), m)) continue;
            for (std::size_t i : cycle) total += lefschetz_number(w.coordinate_of(fm, i, i)) - 1;
        }
        seq.values.push_back(total);
    }
    return seq;
}

RationalFunction zeta_by_cycles(const WedgeMapHomology& w) {
    require_integral(w);
    const StructureReport r = require_reducible(w);
    RationalFunction zeta(Polynomial{1}, Polynomial{1, -1});
    for (const auto& cycle : *r.cycles) {
        const std::size_t s = cycle.size();
        const std::vector<Matrix> fs = iterate(w, s);
        RationalFunction inner;
        for (std::size_t i : cycle) {
            RationalFunction coord = zeta_function(w.coordinate_of(fs, i, i)).substitute_power(s);
            inner = inner * RationalFunction(one_minus_t_pow(s)) * coord;
        }
        zeta = zeta * nth_root(inner, s);
    }
    return zeta;
}

Integer coordinate_dold(const WedgeMapHomology& w, const IterateTable& table, std::size_t i, std::size_t m) {
    Integer acc = 0;
    for (auto r : divisors(m)) {
        const int mu = mobius(m / r);
        if (mu == 0) continue;
        acc += mu * lefschetz_number(w.coordinate_of(table.degrees(r), i, i));
    }
    return acc;
}

Integer dold_by_cycles(const WedgeMapHomology& w, std::size_t m) {
    require_positive(m);
    require_integral(w);
    return dold_by_cycles_sequence(w, IterateTable(w, m)).at(m);
}

DoldSequence dold_by_cycles_sequence(const WedgeMapHomology& w, const IterateTable& table) {
    const StructureReport r = require_reducible(w);
    DoldSequence seq;
    if (table.max_iterate() == 0) return seq;
    // l(f) = L(f), taken from the reduction formula for L.
    Integer first = 1;
    {
        const std::vector<Matrix> f1 = table.degrees(1);
        for (const auto& cycle : *r.cycles)
            if (cycle.size() == 1)
                for (std::size_t i : cycle) first += lefschetz_number(w.coordinate_of(f1, i, i)) - 1;
    }
    seq.values.push_back(first);
    for (std::size_t m = 2; m <= table.max_iterate(); ++m) {
        Integer total = 0;
        for (const auto& cycle : *r.cycles) {
            if (!divides(cycle.size(), m)) continue;
            for (std::size_t i : cycle) total += coordinate_dold(w, table, i, m);
        }
        seq.values.push_back(total);
    }
    return seq;
}

// --- cross-checked bundle -------------------------------------------------

InvariantTables compute_invariants(const WedgeMapHomology& w, std::size_t m_max) {
    require_positive(m_max);
    require_integral(w);
    const IterateTable table(w, m_max);
    InvariantTables out;
    out.lefschetz = lefschetz_sequence(table);
    out.dold = mobius_transform(out.lefschetz);
    out.zeta = zeta_det(w);
    out.aper = aper_from(out.dold);

    if (out.zeta.value_at_zero() != 1) throw InternalCheckFailure("zeta(0) != 1");
    const PowerSeries series = zeta_series(w, std::min<std::size_t>(m_max, 16));
    if (series != out.zeta.expand(series.order()))
        throw InternalCheckFailure("exponential series and determinant formula disagree");
    if (divisor_sum(out.dold) != out.lefschetz) throw InternalCheckFailure("Moebius round trip failed");

    if (classify(w).reduction_formulas_apply()) {
        require_same(out.lefschetz, lefschetz_by_cycles_sequence(w, table), "Lefschetz number");
        require_same(out.dold, dold_by_cycles_sequence(w, table), "Dold coefficient");
        if (zeta_by_cycles(w) != out.zeta) throw InternalCheckFailure("zeta function paths disagree");
        out.aper = aper_upto(w, m_max);
        out.cross_checked = true;
    }
    return out;
}

}  // namespace lefschetz
