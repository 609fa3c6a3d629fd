#pragma once

#include "gepner/quotient.hpp"

#include <memory>
#include <string>
#include <vector>

namespace gepner::zeta {

/// The matched unfoldings F~_N = F + sum s_b rep_b(x) and G~ = G + sum s_b psi_b(y)
/// with rep_b = psi_b(sigma(x)).
struct MatchedUnfoldings {
    Unfolding f_side;
    Unfolding g_side;
    Certificate certificate; // F~_N = G~ o sigma
};
MatchedUnfoldings matched_unfoldings(const quotient::ExactSequence& s, const quotient::Splitting& iota);

/// psi(y, s) dy |-> psi(sigma(x), s) w_n dx, as a density in x.
FamilyPoly j_isomorphism(const FamilyPoly& psi, std::size_t n);

/// Symmetric family density in x rewritten in the elementary symmetric
/// functions; throws std::invalid_argument if it is not symmetric.
FamilyPoly rewrite_in_elementary(const FamilyPoly& p, std::size_t n);

/// Exact quotient p / q of polynomials; throws std::invalid_argument otherwise.
MultiPoly exact_divide(const MultiPoly& p, const MultiPoly& q);

struct PairingComparison {
    Certificate certificate;
    Rational kappa;              // F-side Gram = kappa * G-side Gram
    std::vector<Rational> kappa_by_order;
};

/// Compares the residue pairings of G~ on psi_a dy with those of F~_N on j(psi_a dy)
/// at every order 0..d.
PairingComparison compare_residue_pairings(const quotient::ExactSequence& s, const quotient::Splitting& iota, int d);

struct ZetaResult {
    FamilyPoly density; // zeta = density dy
    std::shared_ptr<FamilyMilnorAlgebra> family;
    saito::SaitoStructure saito;
    FrobeniusVerification verification;
    Certificate comparison;
};

/// zeta = (omega / w_n) phi dy with phi the restricted F-side primitive form,
/// its Saito data on J_G, and the comparison with the quotient-side data.
/// kappa is the constant relating the two residue pairings.
ZetaResult assemble_zeta(const quotient::ExactSequence& s, const quotient::FixedLocus& m, const quotient::OmegaResult& omega,
    const quotient::Splitting& iota, const quotient::NStructure& n, const Rational& kappa);

} // namespace gepner::zeta
