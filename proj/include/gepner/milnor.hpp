#pragma once

#include "gepner/groebner.hpp"
#include "gepner/matrix.hpp"
#include "gepner/multipoly.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gepner::milnor {

/// Raised when the Jacobian ideal is not zero-dimensional.
class NonIsolatedSingularity : public std::runtime_error {
public:
    NonIsolatedSingularity(const std::string& what, std::string witness)
        : std::runtime_error(what)
        , witness_(std::move(witness))
    {
    }
    const std::string& witness() const { return witness_; }

private:
    std::string witness_;
};

std::vector<MultiPoly> jacobian_ideal(const MultiPoly& f);

/// Determinant of the matrix of second partials.
MultiPoly hessian(const MultiPoly& f);

/// Determinant of a small square polynomial matrix (cofactor expansion).
MultiPoly poly_determinant(const std::vector<std::vector<MultiPoly>>& m);

/// Unique weights w with every monomial of f of weighted degree 1, if any.
std::optional<std::vector<Rational>> quasi_homogeneous_weights(const MultiPoly& f);

/// Standard monomials of a zero-dimensional ideal with the given leading
/// monomials, sorted ascending in grevlex. Throws NonIsolatedSingularity
/// naming a variable without a pure-power leading monomial.
std::vector<Exponent> standard_monomials(const std::vector<MultiPoly>& basis, const std::vector<std::string>& vars);

/// Quotient ring k[z]/(df) with its monomial basis and multiplication.
class MilnorAlgebra {
public:
    explicit MilnorAlgebra(MultiPoly f, bool track_cofactors = false);

    const MultiPoly& polynomial() const { return f_; }
    const std::vector<std::string>& vars() const { return f_.vars(); }
    const GroebnerBasis& groebner_basis() const { return gb_; }
    const std::vector<Exponent>& basis() const { return basis_; }
    std::size_t dimension() const { return basis_.size(); }
    MultiPoly basis_element(std::size_t i) const;
    std::optional<std::size_t> index_of(const Exponent& e) const;

    /// Coordinates of the class of p in the monomial basis.
    std::vector<Rational> normal_form(const MultiPoly& p) const;
    MultiPoly reduce(const MultiPoly& p) const { return gb_.normal_form(p); }
    MultiPoly from_coords(const std::vector<Rational>& v) const;

    /// Matrix of multiplication by p; column j holds the coordinates of p * e_j.
    QMatrix multiplication_matrix(const MultiPoly& p) const;
    /// structure[a] = multiplication_matrix(e_a), computed on first use.
    const std::vector<QMatrix>& structure() const;

    const std::optional<std::vector<Rational>>& weights() const { return weights_; }

private:
    MultiPoly f_;
    GroebnerBasis gb_;
    std::vector<Exponent> basis_;
    std::map<Exponent, std::size_t> index_;
    mutable std::vector<QMatrix> structure_;
    std::optional<std::vector<Rational>> weights_;
};

/// Residue functional normalized by lambda(hess f) = mu.
struct ResidueFunctional {
    std::vector<Rational> values; // lambda(e_i)
    QMatrix gram;                 // lambda(e_i e_j)
    Exponent socle;               // the unique basis monomial of top weight
    Rational socle_weight;
};

/// Requires a quasi-homogeneous polynomial; throws std::domain_error when the
/// Gram matrix is degenerate.
ResidueFunctional residue_functional(const MilnorAlgebra& a);

} // namespace gepner::milnor
