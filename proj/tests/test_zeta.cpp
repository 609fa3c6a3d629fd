#include "test_main.hpp"

#include "gepner/symmetry.hpp"
#include "gepner/zeta.hpp"

using namespace gepner;
using namespace gepner::quotient;

TEST_CASE("exact division")
{
    auto xs = sym::x_vars(2);
    MultiPoly w = sym::vandermonde(2);
    MultiPoly p = MultiPoly::parse("x1^3 - x2^3", xs);
    CHECK(zeta::exact_divide(p, w) == MultiPoly::parse("x1^2 + x1*x2 + x2^2", xs));
    CHECK_THROWS_AS(zeta::exact_divide(MultiPoly::parse("x1^2", xs), w), std::invalid_argument);
}

TEST_CASE("j on simple forms")
{
    auto ys = sym::y_vars(2);
    auto xs = sym::x_vars(2);
    FamilyPoly one = FamilyPoly::from_poly(MultiPoly::constant(ys, 1), 3, 2);
    CHECK(zeta::j_isomorphism(one, 2) == FamilyPoly::from_poly(MultiPoly::parse("x1 - x2", xs), 3, 2));
    FamilyPoly y1 = FamilyPoly::from_poly(MultiPoly::parse("y1", ys), 3, 2);
    CHECK(zeta::j_isomorphism(y1, 2) == FamilyPoly::from_poly(MultiPoly::parse("x1^2 - x2^2", xs), 3, 2));
}

TEST_CASE("symmetric densities rewrite in elementary functions")
{
    auto xs = sym::x_vars(2);
    FamilyPoly p = FamilyPoly::from_terms({MultiPoly::parse("x1^2 + x2^2", xs), MultiPoly::parse("x1*x2", xs)},
        {TruncSeries::variable(2, 2, 0), TruncSeries::constant(2, 2, 3)});
    auto ys = sym::y_vars(2);
    FamilyPoly expect = FamilyPoly::from_terms({MultiPoly::parse("y1^2 - 2*y2", ys), MultiPoly::parse("y2", ys)},
        {TruncSeries::variable(2, 2, 0), TruncSeries::constant(2, 2, 3)});
    CHECK(zeta::rewrite_in_elementary(p, 2) == expect);
    FamilyPoly bad = FamilyPoly::from_poly(MultiPoly::parse("x1", xs), 2, 2);
    CHECK_THROWS_AS(zeta::rewrite_in_elementary(bad, 2), std::invalid_argument);
}

TEST_CASE("residue pairings at the origin against the fiber functionals")
{
    // brute force: lambda_F(psi_a(sigma) psi_b(sigma) w_n^2) vs lambda_G(psi_a psi_b)
    for (std::size_t k : {4, 5}) {
        CAPTURE(k);
        auto s = build_exact_sequence(k, 2);
        auto iota = choose_splitting(s, SplittingStrategy::monomial);
        auto rf = milnor::residue_functional(*s.jf);
        auto rg = milnor::residue_functional(*s.jg);
        auto lam = [](const milnor::MilnorAlgebra& a, const milnor::ResidueFunctional& r, const MultiPoly& h) {
            auto c = a.normal_form(h);
            Rational v = 0;
            for (std::size_t i = 0; i < c.size(); ++i) {
                v += c[i] * r.values[i];
            }
            return v;
        };
        MultiPoly w2 = sym::vandermonde(2) * sym::vandermonde(2);
        auto lj = zeta::compare_residue_pairings(s, iota, 0);
        CHECK(lj.certificate.passed());
        std::size_t m = iota.representatives.size();
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t b = 0; b < m; ++b) {
                MultiPoly ra = iota.representatives[a], rb = iota.representatives[b];
                Rational f = lam(*s.jf, rf, ra * rb * w2);
                Rational g = lam(*s.jg, rg, sym::rewrite_in_elementary(ra * rb));
                CHECK(f == lj.kappa * g);
            }
        }
    }
}

TEST_CASE("residue pairings under j with an order-independent constant")
{
    for (std::size_t k : {3, 4}) {
        CAPTURE(k);
        auto s = build_exact_sequence(k, 2);
        auto iota = choose_splitting(s, SplittingStrategy::monomial);
        auto lj = zeta::compare_residue_pairings(s, iota, 2);
        INFO(lj.certificate.summary());
        CHECK(lj.certificate.passed());
        CHECK(lj.kappa_by_order.size() == 3);
        MESSAGE("kappa(" << k << ",2) = " << lj.kappa.get_str());
    }
}

TEST_CASE("zeta reproduces the quotient structure")
{
    struct Case {
        std::size_t k;
        int order;
    };
    for (auto c : {Case{3, 3}, Case{4, 2}}) {
        CAPTURE(c.k);
        auto s = build_exact_sequence(c.k, 2);
        auto iota = choose_splitting(s, SplittingStrategy::monomial);
        auto m = build_presaito(s, c.order);
        auto w = build_omega(s, m);
        auto n = frobenius_on_N(m, w.omega, iota, SignConvention::unit_normalized);
        auto lj = zeta::compare_residue_pairings(s, iota, 0);
        auto z = zeta::assemble_zeta(s, m, w, iota, n, lj.kappa);
        INFO(z.comparison.summary());
        CHECK(z.comparison.passed());
        CHECK(z.verification.certificate.passed());
    }
}
