#include "test_main.hpp"

#include "gepner/saito.hpp"
#include "gepner/symmetry.hpp"

using namespace gepner;

TEST_CASE("Euler fields")
{
    Unfolding a2 = Unfolding::versal(MultiPoly::parse("z^3", {"z"}));
    auto e = saito::euler_field(a2, 2);
    CHECK(e[0] == TruncSeries::variable(2, 2, 0));
    CHECK(e[1] == TruncSeries::variable(2, 2, 1) * frac(2, 3));

    Unfolding f42 = Unfolding::versal(sym::fermat_polynomial(4, 2));
    auto idx = std::find(f42.deformations.begin(), f42.deformations.end(), MultiPoly::parse("x1*x2", sym::x_vars(2)));
    REQUIRE(idx != f42.deformations.end());
    int a = static_cast<int>(idx - f42.deformations.begin());
    CHECK(saito::euler_field(f42, 1)[a] == TruncSeries::variable(9, 1, a) * frac(1, 2));
    for (const auto& s : saito::euler_field(f42, 3)) {
        CHECK(s.constant_term() == 0);
    }
}

TEST_CASE("Kodaira-Spencer multiplication on A2")
{
    FamilyMilnorAlgebra fam(Unfolding::versal(MultiPoly::parse("z^3", {"z"})), 3);
    auto ks = fam.kodaira_spencer(1);
    CHECK(ks(0, 1) == TruncSeries::variable(2, 3, 1) * frac(-1, 3));
    CHECK(ks(1, 1).is_zero());
}

TEST_CASE("A-models pass every axiom at order 6")
{
    for (int k = 2; k <= 6; ++k) {
        CAPTURE(k);
        auto a = saito::a_model(k, 6);
        CHECK(verify_presaito(a.saito.presaito, 6).passed());
        CHECK(verify_primitive_form(a.saito.presaito, a.saito.omega, 6).passed());
        CHECK(verify_frobenius_axioms(a.saito.frobenius, 6).certificate.passed());
        auto flat = verify_frobenius_axioms(a.flat, 6);
        CHECK(flat.certificate.passed());
        CHECK(a.flat.flat_coords);
        // e = d/dt_0 in both coordinate systems
        CHECK(a.flat.unit[0] == TruncSeries::constant(k - 1, 6, 1));
        for (int i = 1; i < k - 1; ++i) {
            CHECK(a.flat.unit[i].is_zero());
        }
    }
}

TEST_CASE("A2 potential")
{
    // F = x0^2 x1 / 6 - x1^4 / 216 in flat coordinates
    auto a = saito::a_model(3, 6);
    MultiPoly F = MultiPoly::parse("1/6*x0^2*x1 - 1/216*x1^4", {"x0", "x1"});
    CHECK(a.saito.frobenius.metric(0, 1) == TruncSeries::constant(2, 6, frac(1, 3)));
    auto low = a.flat.lowered();
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            for (std::size_t k = 0; k < 2; ++k) {
                MultiPoly third = F.derivative(i).derivative(j).derivative(k);
                CHECK(low[i](j, k) == TruncSeries::from_poly(third, 6));
            }
        }
    }
}

TEST_CASE("flat coordinates of A4 make the metric constant")
{
    auto a = saito::a_model(5, 4);
    CHECK_FALSE((a.saito.frobenius.metric - SeriesMatrix::constant(a.saito.frobenius.metric.constant_part(), 4, 5)).is_zero());
    CHECK((a.flat.metric - SeriesMatrix::constant(a.flat.metric.constant_part(), 4, 5)).is_zero());
}

TEST_CASE("primitive form solver")
{
    for (int k = 2; k <= 6; ++k) {
        FamilyMilnorAlgebra fam(Unfolding::versal(MultiPoly::parse("z^" + std::to_string(k), {"z"})), 4);
        auto c = saito::solve_primitive_form(fam);
        CHECK(c.solution_dimension() == 1);
    }
    {
        FamilyMilnorAlgebra fam(Unfolding::versal(sym::gepner_polynomial(3, 2)), 3);
        auto c = saito::solve_primitive_form(fam);
        CHECK(c.density == FamilyPoly::from_poly(MultiPoly::constant(sym::y_vars(2), 1), 1, 3));
    }
    {
        FamilyMilnorAlgebra fam(Unfolding::versal(sym::gepner_polynomial(4, 2)), 2);
        auto c = saito::solve_primitive_form(fam);
        auto s = saito::saito_structure(fam, c.density);
        CHECK(verify_frobenius_axioms(s.frobenius, 2).certificate.passed());
    }
    {
        // one marginal direction, fixed at second order
        FamilyMilnorAlgebra fam(Unfolding::versal(sym::fermat_polynomial(4, 2)), 2);
        auto c = saito::solve_primitive_form(fam);
        CHECK(c.unknowns == std::vector<std::size_t>{1, 1});
        CHECK(c.free_parameters == std::vector<std::size_t>{1, 0});
        auto s = saito::saito_structure(fam, c.density);
        CHECK(verify_frobenius_axioms(s.frobenius, 2).certificate.passed());
        // the constant form is not flat
        auto bad = saito::saito_structure(fam, FamilyPoly::from_poly(MultiPoly::constant(sym::x_vars(2), 1), 9, 2));
        CHECK_FALSE(verify_frobenius_axioms(bad.frobenius, 2).certificate.find("metric flat")->pass);
    }
}
