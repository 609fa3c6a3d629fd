#pragma once

#include "gepner/family.hpp"
#include "gepner/frobenius.hpp"

#include <string>
#include <vector>

namespace gepner::saito {

/// Euler field sum_a (1 - wt(phi_a)) t_a d/dt_a. Throws std::domain_error for
/// non-quasi-homogeneous input.
SeriesVector euler_field(const Unfolding& u, int order);

/// Matrix whose column a holds the family normal form of phi_a.
SeriesMatrix deformation_frame(const FamilyMilnorAlgebra& fam);

/// Saito data attached to zeta = P dz: Kodaira-Spencer product, residue metric
/// of zeta, the class of 1 as unit, the quasi-homogeneous Euler field.
struct SaitoStructure {
    PreSaitoData presaito;
    SeriesVector omega; // flat section in the tangent frame
    FrobeniusData frobenius;
};

/// Requires the residue metric of zeta to be nondegenerate at the origin.
/// The pre-Saito data live on the tangent bundle: nabla is the Levi-Civita
/// connection, Phi_a = -(d_a *), R0 = E*, R_inf = nabla E.
SaitoStructure saito_structure(const FamilyMilnorAlgebra& fam, const FamilyPoly& density);

/// Flat coordinates x(t) of a flat metric, with x(0) = 0 and dx(0) = id.
struct FlatCoordinates {
    std::vector<TruncSeries> forward; // x(t)
    std::vector<TruncSeries> inverse; // t(x)
};
FlatCoordinates flat_coordinates(const SeriesMatrix& metric);

/// Rewrites the data in the flat coordinates; the result has flat_coords set.
FrobeniusData to_flat_coordinates(const FrobeniusData& f, const FlatCoordinates& x, const std::vector<std::string>& names);

struct AModel {
    Unfolding unfolding;
    SaitoStructure saito;
    FrobeniusData flat;
};

/// f = z^k with versal unfolding and primitive form dz; requires k >= 2.
AModel a_model(int k, int order);

/// Perturbative search for zeta = P dz with P(0) = 1, Euler-homogeneous
/// ansatz P = 1 + sum c_{m,b} t^m z^b over the frozen basis.
struct CandidatePrimitiveForm {
    FamilyPoly density;
    int order = 0;
    std::vector<std::size_t> free_parameters; // kernel dimension per order
    std::vector<std::size_t> unknowns;        // ansatz size per order
    std::size_t solution_dimension() const;   // counting the overall scalar
};

class InconsistentOrder : public std::runtime_error {
public:
    InconsistentOrder(int order, const std::string& what);
    int order;
};

/// Free parameters are set to zero. Every candidate should be re-certified
/// with saito_structure + verify_frobenius_axioms.
CandidatePrimitiveForm solve_primitive_form(const FamilyMilnorAlgebra& fam);

} // namespace gepner::saito
