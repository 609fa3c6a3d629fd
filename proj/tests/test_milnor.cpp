#include "test_main.hpp"

#include "gepner/groebner.hpp"
#include "gepner/milnor.hpp"
#include "gepner/symmetry.hpp"
#include "random_poly.hpp"

using namespace gepner;

TEST_CASE("Groebner basis of a Gepner Jacobian ideal")
{
    MultiPoly g = sym::gepner_polynomial(4, 2);
    auto gb = groebner(milnor::jacobian_ideal(g), true);
    CHECK_FALSE(gb.is_unit_ideal());
    auto std_monomials = milnor::standard_monomials(gb.basis, g.vars());
    CHECK(std_monomials.size() == 3);
    // cofactors express every basis element through the generators
    for (std::size_t i = 0; i < gb.basis.size(); ++i) {
        MultiPoly sum(g.vars());
        for (std::size_t j = 0; j < gb.generators.size(); ++j) {
            sum = sum + gb.cofactors[i][j] * gb.generators[j];
        }
        CHECK(sum == gb.basis[i]);
    }
}

TEST_CASE("Groebner basis reduces ideal members to zero")
{
    std::mt19937 rng(31);
    MultiPoly f = sym::fermat_polynomial(4, 2) + MultiPoly::parse("x1*x2^2", sym::x_vars(2));
    auto gens = milnor::jacobian_ideal(f);
    auto gb = groebner(gens);
    for (int trial = 0; trial < 10; ++trial) {
        MultiPoly a = testing::random_poly(rng, f.vars(), 3, 3);
        MultiPoly b = testing::random_poly(rng, f.vars(), 3, 3);
        CHECK(gb.contains(a * gens[0] + b * gens[1]));
    }
    CHECK(groebner({MultiPoly::parse("x", {"x", "y"}), MultiPoly::parse("x + 1", {"x", "y"})}).is_unit_ideal());
}

TEST_CASE("Milnor numbers")
{
    CHECK(milnor::MilnorAlgebra(sym::fermat_polynomial(4, 2)).dimension() == 9);
    CHECK(milnor::MilnorAlgebra(sym::gepner_polynomial(4, 2)).dimension() == 3);
    CHECK(milnor::MilnorAlgebra(sym::gepner_polynomial(5, 2)).dimension() == 6);
    CHECK_THROWS_AS(milnor::MilnorAlgebra(MultiPoly::parse("x^2*y", {"x", "y"})), milnor::NonIsolatedSingularity);
}

TEST_CASE("Hessian of the Fermat polynomial")
{
    CHECK(milnor::hessian(sym::fermat_polynomial(4, 2)) == MultiPoly::parse("144*x1^2*x2^2", sym::x_vars(2)));
}

TEST_CASE("Residue normalization in one variable")
{
    for (int k = 3; k <= 7; ++k) {
        MultiPoly f = MultiPoly::parse("z^" + std::to_string(k), {"z"});
        milnor::MilnorAlgebra a(f);
        auto r = milnor::residue_functional(a);
        auto idx = a.index_of(Exponent{k - 2});
        REQUIRE(idx);
        CHECK(r.values[*idx] == frac(1, k));
        CHECK(r.socle == Exponent{k - 2});
    }
}

TEST_CASE("Residue pairing is symmetric and invariant, hessian evaluates to mu")
{
    for (auto [k, n] : std::vector<std::pair<std::size_t, std::size_t>>{{3, 2}, {4, 2}, {5, 2}, {4, 3}}) {
        CAPTURE(k);
        CAPTURE(n);
        milnor::MilnorAlgebra a(sym::gepner_polynomial(k, n));
        auto r = milnor::residue_functional(a);
        CHECK(r.gram == r.gram.transpose());
        CHECK(r.gram.determinant() != 0);
        auto h = a.normal_form(milnor::hessian(a.polynomial()));
        Rational value = 0;
        for (std::size_t i = 0; i < h.size(); ++i) {
            value += h[i] * r.values[i];
        }
        CHECK(value == Rational(a.dimension()));
        // multiplication operators are self-adjoint for the pairing
        for (const auto& m : a.structure()) {
            CHECK(r.gram * m == (r.gram * m).transpose());
        }
    }
}

TEST_CASE("Milnor structure constants are associative and commutative")
{
    milnor::MilnorAlgebra a(sym::fermat_polynomial(3, 3));
    const auto& s = a.structure();
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = 0; j < s.size(); ++j) {
            CHECK(s[i] * s[j] == s[j] * s[i]);
        }
    }
}
