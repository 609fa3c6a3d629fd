#pragma once

#include "gepner/matrix.hpp"
#include "gepner/trunc_series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gepner {

struct Check {
    std::string name;
    bool pass = true;
    std::string witness; // first offending entry and its lowest term
};

struct Certificate {
    std::string subject;
    std::vector<std::string> notes;
    std::vector<Check> checks;

    bool passed() const;
    void add(std::string name, bool pass, std::string witness = {});
    const Check* find(const std::string& name) const;
    std::string summary() const;
};

/// Formal Frobenius manifold to a finite order in coordinates t_1..t_m.
///
/// product[a] is the matrix of multiplication by d/dt_a: d_a * d_b =
/// sum_c product[a](c, b) d_c.
struct FrobeniusData {
    std::vector<std::string> coords;
    std::vector<SeriesMatrix> product;
    SeriesMatrix metric;
    std::vector<TruncSeries> unit;
    std::vector<TruncSeries> euler;
    bool flat_coords = false;

    std::size_t dimension() const { return coords.size(); }
    int order() const;
    /// Structure constants with all indices down: g(d_a * d_b, d_c).
    std::vector<SeriesMatrix> lowered() const;
};

/// Pre-Saito structure on a trivial bundle of rank r over the coordinates.
/// The connection is nabla_a = d_a + connection[a] on column vectors.
/// r_inf is a flat endomorphism entering Phi_a + nabla_a R0 = [Phi_a, R_inf];
/// zero gives the relation Phi + nabla R0 = 0.
struct PreSaitoData {
    std::vector<std::string> coords;
    std::size_t rank = 0;
    std::vector<SeriesMatrix> connection;
    std::vector<SeriesMatrix> higgs;
    SeriesMatrix r0;
    SeriesMatrix r_inf;
    SeriesMatrix metric;

    int order() const;
};

/// Sign bookkeeping of the primitive-form functor; see README.
enum class SignConvention { unit_normalized, as_written };
std::string to_string(SignConvention c);
SignConvention parse_sign_convention(const std::string& s);

/// Column vector of series coefficients.
using SeriesVector = std::vector<TruncSeries>;

/// Christoffel symbols gamma[k](i, j) of the Levi-Civita connection of g.
std::vector<SeriesMatrix> christoffel(const SeriesMatrix& g);
/// Riemann tensor entries R^l_{ijk}, as riemann[l][i](j, k).
std::vector<std::vector<SeriesMatrix>> riemann(const std::vector<SeriesMatrix>& gamma);

/// Lie derivative of the metric along a vector field.
SeriesMatrix lie_metric(const SeriesVector& v, const SeriesMatrix& g);
/// Lie derivative of the product tensor along v.
std::vector<SeriesMatrix> lie_product(const SeriesVector& v, const std::vector<SeriesMatrix>& c);
/// [v, w].
SeriesVector lie_bracket(const SeriesVector& v, const SeriesVector& w);
/// Multiplication operator of a vector field: sum_a v^a product[a].
SeriesMatrix multiplication_by(const SeriesVector& v, const std::vector<SeriesMatrix>& product);

struct FrobeniusVerification {
    Certificate certificate;
    std::optional<Rational> charge; // D with L_E g = D g, when it exists
};

FrobeniusVerification verify_frobenius_axioms(const FrobeniusData& f, int order);
Certificate verify_presaito(const PreSaitoData& p, int order);

/// Certificate for a candidate primitive form: flatness and invertibility of
/// xi -> Phi_xi(omega) at the origin.
Certificate verify_primitive_form(const PreSaitoData& p, const SeriesVector& omega, int order);

/// Transports the pre-Saito data to the base through xi -> Phi_xi(omega).
/// Throws std::domain_error when that map is singular at the origin.
FrobeniusData frobenius_from_primitive_form(
    const PreSaitoData& p, const SeriesVector& omega, SignConvention convention = SignConvention::unit_normalized);

} // namespace gepner
