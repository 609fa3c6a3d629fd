#pragma once

#include "gepner/multipoly.hpp"

#include <vector>

namespace gepner {

struct Division {
    std::vector<MultiPoly> quotients; // one per divisor
    MultiPoly remainder;
};

/// Multivariate division with full reduction of the remainder (grevlex).
Division divide(const MultiPoly& p, const std::vector<MultiPoly>& divisors);

/// Reduced Gröbner basis under grevlex.
///
/// When cofactors are tracked, basis[i] == sum_j cofactors[i][j] * generators[j]
/// holds exactly. The basis is sorted by leading monomial (smallest first)
/// and every element is monic, so the output is deterministic.
struct GroebnerBasis {
    std::vector<std::string> vars;
    std::vector<MultiPoly> generators;
    std::vector<MultiPoly> basis;
    std::vector<std::vector<MultiPoly>> cofactors; // empty unless tracked

    bool is_unit_ideal() const;
    MultiPoly normal_form(const MultiPoly& p) const;
    bool contains(const MultiPoly& p) const { return normal_form(p).is_zero(); }
    /// Quotients with respect to the original generators plus remainder.
    /// Requires tracked cofactors.
    Division divide_by_generators(const MultiPoly& p) const;
};

GroebnerBasis groebner(const std::vector<MultiPoly>& generators, bool track_cofactors = false);

} // namespace gepner
