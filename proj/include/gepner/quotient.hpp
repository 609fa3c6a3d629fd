#pragma once

#include "gepner/family.hpp"
#include "gepner/frobenius.hpp"
#include "gepner/milnor.hpp"
#include "gepner/saito.hpp"

#include <memory>
#include <string>
#include <vector>

namespace gepner::quotient {

/// Bases of the S_n-invariant and sign-isotypic parts of J_F, F = sum x_i^k.
struct Isotypic {
    std::size_t n = 0;
    std::vector<Exponent> orbit_reps;         // non-increasing exponents
    std::vector<MultiPoly> invariants;        // orbit sums
    std::vector<Exponent> anti_reps;          // strictly decreasing exponents
    std::vector<MultiPoly> antiinvariants;    // signed orbit sums
    std::map<Exponent, std::size_t> orbit_of; // every basis exponent -> orbit index

    /// Coordinates of a symmetric (resp. alternating) class given by its
    /// normal form in the monomial basis of J_F.
    std::vector<Rational> invariant_coords(const milnor::MilnorAlgebra& jf, const MultiPoly& p) const;
    std::vector<Rational> anti_coords(const milnor::MilnorAlgebra& jf, const MultiPoly& p) const;
};

/// Requires the monomial basis of J_F to be permutation stable.
Isotypic invariants_and_antiinvariants(const milnor::MilnorAlgebra& jf, std::size_t n);

/// 0 -> ker(w_n) -> J_F^W -> J_G -> 0.
struct ExactSequence {
    std::size_t k = 0;
    std::size_t n = 0;
    std::shared_ptr<milnor::MilnorAlgebra> jf;
    std::shared_ptr<milnor::MilnorAlgebra> jg;
    Isotypic iso;
    QMatrix projection; // invariant coords -> J_G coords
    QMatrix times_wn;   // invariant coords -> antiinvariant coords
    QMatrix induced;    // J_G -> antiinvariants with times_wn = induced * projection
    QMatrix kernel;     // basis of ker(w_n) in invariant coords
    std::size_t dim_kernel = 0;
    std::size_t dim_middle = 0;
    std::size_t dim_quotient = 0;
    Certificate certificate;
};

/// Class of a symmetric polynomial in J_G.
std::vector<Rational> project(const ExactSequence& s, const MultiPoly& symmetric);

ExactSequence build_exact_sequence(std::size_t k, std::size_t n);

/// Adjugate of the Jacobi matrix (d sigma_j / d x_i) and the two identities
/// F_i = sum_j (d sigma_j/d x_i) G_j(sigma), w_n G_j(sigma) = sum_i a_ij F_i.
struct JacobiMinors {
    MultiPoly determinant;
    std::vector<std::vector<MultiPoly>> coefficients; // a_ij
    Certificate certificate;
};
JacobiMinors jacobi_minor_identity(std::size_t k, std::size_t n);

/// Surjectivity of multiplication by w_n from invariants onto antiinvariants.
Certificate verify_wn_surjective(const ExactSequence& s);

enum class SplittingStrategy { monomial, weight_graded, custom };
std::string to_string(SplittingStrategy s);
SplittingStrategy parse_splitting(const std::string& s);

/// A right inverse of the projection; column b of lift holds the invariant
/// coordinates of the image of the b-th basis monomial of J_G.
struct Splitting {
    SplittingStrategy strategy = SplittingStrategy::monomial;
    QMatrix lift;
    std::vector<MultiPoly> representatives; // symmetric polynomials in x, one per column
};

/// Throws std::invalid_argument when a custom matrix is not a right inverse.
Splitting choose_splitting(const ExactSequence& s, SplittingStrategy strategy, const QMatrix* custom = nullptr);

/// Saito data of the versal unfolding of F over the full base M, the solved
/// primitive form, and their restriction to the sign part over M^W.
struct FixedLocus {
    int order = 0;
    std::shared_ptr<FamilyMilnorAlgebra> family; // full base, order + 1
    saito::CandidatePrimitiveForm primitive;
    saito::SaitoStructure full;
    std::vector<std::string> params;             // one per orbit
    std::vector<TruncSeries> embedding;          // t_alpha in terms of the orbit parameters
    QMatrix frame;                               // columns v_beta in the tangent frame of M
    PreSaitoData presaito;                       // rank C(k-1, n) over M^W
    Certificate equivariance;
    Certificate orthogonality;
    Certificate certificate;                     // verify_presaito
};

FixedLocus build_presaito(const ExactSequence& s, int order);

struct OmegaResult {
    SeriesVector omega;
    Certificate certificate; // flatness and surjectivity at the origin
};
OmegaResult build_omega(const ExactSequence& s, const FixedLocus& m);

/// Frobenius structure on N, the image of the splitting.
struct NStructure {
    std::vector<std::string> params;
    std::vector<TruncSeries> embedding; // orbit parameters in terms of s
    PreSaitoData presaito;
    SeriesVector omega;
    FrobeniusData frobenius;
    Certificate restriction; // invertibility at the origin
    FrobeniusVerification verification;
};
NStructure frobenius_on_N(const FixedLocus& m, const SeriesVector& omega, const Splitting& iota,
    SignConvention convention = SignConvention::unit_normalized);

} // namespace gepner::quotient
