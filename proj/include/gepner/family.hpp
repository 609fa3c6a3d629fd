#pragma once

#include "gepner/matrix.hpp"
#include "gepner/milnor.hpp"
#include "gepner/multipoly.hpp"
#include "gepner/trunc_series.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gepner {

/// Polynomial in the fiber variables z whose coefficients are truncated
/// series in the unfolding parameters t.
class FamilyPoly {
public:
    using TermMap = std::map<Exponent, TruncSeries>;

    FamilyPoly() = default;
    FamilyPoly(std::size_t zvars, int params, int order);
    static FamilyPoly from_poly(const MultiPoly& p, int params, int order);
    /// Sum of p_i(z) * s_i(t).
    static FamilyPoly from_terms(const std::vector<MultiPoly>& polys, const std::vector<TruncSeries>& coeffs);

    std::size_t zvars() const { return zvars_; }
    int params() const { return params_; }
    int order() const { return order_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    TruncSeries coeff(const Exponent& e) const;
    void add_term(const Exponent& e, const TruncSeries& c);

    FamilyPoly& operator+=(const FamilyPoly& o);
    FamilyPoly& operator-=(const FamilyPoly& o);
    friend FamilyPoly operator+(FamilyPoly a, const FamilyPoly& b) { return a += b; }
    friend FamilyPoly operator-(FamilyPoly a, const FamilyPoly& b) { return a -= b; }
    friend FamilyPoly operator*(const FamilyPoly& a, const FamilyPoly& b);
    friend FamilyPoly operator*(const TruncSeries& s, const FamilyPoly& a);
    FamilyPoly operator-() const;
    friend bool operator==(const FamilyPoly& a, const FamilyPoly& b);

    FamilyPoly times_poly(const MultiPoly& p) const;
    FamilyPoly derivative_z(std::size_t i) const;
    FamilyPoly derivative_t(int a) const;
    FamilyPoly truncated(int order) const;
    /// Value at t = 0.
    MultiPoly at_origin(const std::vector<std::string>& zvars) const;

private:
    void prune();

    std::size_t zvars_ = 0;
    int params_ = 0;
    int order_ = -1;
    TermMap terms_;
};

/// f + sum_a t_a * phi_a.
struct Unfolding {
    MultiPoly f;
    std::vector<MultiPoly> deformations;
    std::vector<std::string> params;

    Unfolding(MultiPoly f, std::vector<MultiPoly> deformations, std::vector<std::string> params = {});
    /// Versal unfolding whose deformations are the standard monomials of J_f.
    static Unfolding versal(const MultiPoly& f, const std::string& stem = "t");

    std::size_t size() const { return deformations.size(); }
    MultiPoly total() const;
    FamilyPoly as_family(int order) const;
    /// Weights 1 - wt(phi_a) when f and every phi_a are weighted-homogeneous.
    std::optional<std::vector<Rational>> parameter_weights() const;
};

class BasisDegenerates : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The Milnor algebras k[z][[t]]/(d_z f~) mod t^{d+1}, trivialized by the
/// standard monomials of the fiber at t = 0.
class FamilyMilnorAlgebra {
public:
    FamilyMilnorAlgebra(Unfolding u, int order);

    const Unfolding& unfolding() const { return u_; }
    const milnor::MilnorAlgebra& fiber() const { return fiber_; }
    int order() const { return order_; }
    int params() const { return static_cast<int>(u_.size()); }
    std::size_t dimension() const { return fiber_.dimension(); }
    const std::vector<FamilyPoly>& partials() const { return partials_; }

    struct Reduction {
        std::vector<TruncSeries> coords;   // remainder in the frozen basis
        std::vector<FamilyPoly> quotients; // h = sum_i q_i d_i f~ + remainder
    };
    Reduction reduce(const FamilyPoly& h) const;
    std::vector<TruncSeries> normal_form(const FamilyPoly& h) const { return reduce(h).coords; }
    FamilyPoly from_coords(const std::vector<TruncSeries>& c) const;

    /// Column j holds the coordinates of h * e_j.
    SeriesMatrix multiplication_matrix(const FamilyPoly& h) const;
    /// Multiplication by the class of d f~ / d t_a.
    SeriesMatrix kodaira_spencer(int a) const;

    /// Hessian-normalized residue of h dz / (d_1 f~ ... d_n f~).
    TruncSeries residue(const FamilyPoly& h) const;
    /// lambda_t(e_i e_j * density).
    SeriesMatrix gram(const FamilyPoly& density) const;
    SeriesMatrix gram() const;
    /// lambda_t(v_a v_b * density) for arbitrary family elements v.
    SeriesMatrix pairing(const std::vector<FamilyPoly>& v, const FamilyPoly& density) const;

    /// Exponents N with z_i^{N_i} = sum_j a_ij d_j f~ exactly to the order.
    const std::vector<int>& transformation_exponents() const;

private:
    struct MonomialDivision {
        std::vector<MultiPoly> quotients;
        std::vector<Rational> remainder;
    };
    const MonomialDivision& divide_monomial(const Exponent& e) const;
    void build_residue() const;

    Unfolding u_;
    int order_;
    milnor::MilnorAlgebra fiber_;
    std::vector<FamilyPoly> partials_;
    std::vector<FamilyPoly> perturbations_; // d_i f~ - d_i f
    mutable std::map<Exponent, MonomialDivision> cache_;
    mutable std::optional<std::vector<int>> exponents_;
    mutable FamilyPoly det_;
};

} // namespace gepner
