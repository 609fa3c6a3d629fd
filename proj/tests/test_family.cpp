#include "test_main.hpp"

#include "gepner/family.hpp"
#include "gepner/symmetry.hpp"
#include "random_poly.hpp"

using namespace gepner;

namespace {

// Sum of the residues of h dz / f' over all finite roots, read off at infinity:
// the coefficient of z^{-1} in the expansion of h / f' in powers of 1/z.
TruncSeries residue_at_infinity(const FamilyPoly& h, const FamilyPoly& fprime, int k)
{
    int m = h.params();
    int ord = h.order();
    // fprime = k z^{k-1} (1 + u), u a Laurent polynomial in 1/z with O(t) coefficients.
    std::map<int, TruncSeries> u;
    for (const auto& [e, c] : fprime.terms()) {
        if (e[0] == k - 1) {
            REQUIRE(c == TruncSeries::constant(m, ord, k));
            continue;
        }
        u.emplace(e[0] - (k - 1), c * frac(1, k));
    }
    // inv = sum_s (-u)^s, truncated in t automatically after ord + 1 terms.
    std::map<int, TruncSeries> inv{{0, TruncSeries::constant(m, ord, 1)}};
    std::map<int, TruncSeries> power = inv;
    for (int s = 1; s <= ord + 1; ++s) {
        std::map<int, TruncSeries> next;
        for (const auto& [pe, pc] : power) {
            for (const auto& [ue, uc] : u) {
                auto [it, fresh] = next.try_emplace(pe + ue, m, ord);
                it->second -= pc * uc;
            }
        }
        power = next;
        for (const auto& [e, c] : power) {
            auto [it, fresh] = inv.try_emplace(e, m, ord);
            it->second += c;
        }
    }
    TruncSeries r(m, ord);
    for (const auto& [he, hc] : h.terms()) {
        for (const auto& [ie, ic] : inv) {
            if (he[0] + ie - (k - 1) == -1) {
                r += hc * ic * frac(1, k);
            }
        }
    }
    return r;
}

} // namespace

TEST_CASE("A2 family reduction")
{
    Unfolding u(MultiPoly::parse("z^3", {"z"}), {MultiPoly::parse("1", {"z"}), MultiPoly::parse("z", {"z"})}, {"t0", "t1"});
    FamilyMilnorAlgebra fam(u, 2);
    auto nf = fam.normal_form(FamilyPoly::from_poly(MultiPoly::parse("z^2", {"z"}), 2, 2));
    CHECK(nf[0] == TruncSeries::from_poly(MultiPoly::parse("-1/3*t1", {"t0", "t1"}), 2));
    CHECK(nf[1].is_zero());
    SeriesMatrix g = fam.gram();
    CHECK(g(0, 0).is_zero());
    CHECK(g(0, 1) == TruncSeries::constant(2, 2, frac(1, 3)));
    CHECK(g(1, 1).is_zero());
}

TEST_CASE("family residue matches the residue at infinity in one variable")
{
    std::mt19937 rng(41);
    for (int k = 3; k <= 6; ++k) {
        CAPTURE(k);
        MultiPoly f = MultiPoly::parse("z^" + std::to_string(k), {"z"});
        Unfolding u = Unfolding::versal(f);
        int order = 4;
        FamilyMilnorAlgebra fam(u, order);
        FamilyPoly fprime = u.as_family(order).derivative_z(0);
        for (int trial = 0; trial < 5; ++trial) {
            MultiPoly hz = testing::random_poly(rng, {"z"}, 2 * k, 4);
            std::vector<MultiPoly> polys{hz, MultiPoly::parse("z", {"z"})};
            std::vector<TruncSeries> coeffs{TruncSeries::constant(u.size(), order, 1),
                testing::random_series(rng, u.size(), order, 3)};
            FamilyPoly h = FamilyPoly::from_terms(polys, coeffs);
            CHECK(fam.residue(h) == residue_at_infinity(h, fprime, k));
        }
    }
}

TEST_CASE("family residue at the origin reduces to the fixed residue")
{
    for (const MultiPoly& f : {sym::fermat_polynomial(4, 2), sym::gepner_polynomial(4, 2), sym::gepner_polynomial(4, 3)}) {
        FamilyMilnorAlgebra fam(Unfolding::versal(f), 1);
        auto r = milnor::residue_functional(fam.fiber());
        CHECK(fam.gram().constant_part() == r.gram);
    }
}

TEST_CASE("residue of the family Hessian is the Milnor number at every order")
{
    MultiPoly g = sym::gepner_polynomial(5, 2);
    Unfolding u = Unfolding::versal(g);
    int order = 3;
    FamilyMilnorAlgebra fam(u, order);
    FamilyPoly ft = u.as_family(order);
    std::vector<std::vector<FamilyPoly>> h(2, std::vector<FamilyPoly>(2));
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            h[i][j] = ft.derivative_z(i).derivative_z(j);
        }
    }
    FamilyPoly hess = h[0][0] * h[1][1] - h[0][1] * h[1][0];
    CHECK(fam.residue(hess) == TruncSeries::constant(u.size(), order, 6));
}

TEST_CASE("Kodaira-Spencer multiplication is commutative and associative")
{
    Unfolding u = Unfolding::versal(sym::gepner_polynomial(4, 2), "s");
    FamilyMilnorAlgebra fam(u, 3);
    std::vector<SeriesMatrix> ks;
    for (int a = 0; a < fam.params(); ++a) {
        ks.push_back(fam.kodaira_spencer(a));
    }
    for (std::size_t a = 0; a < ks.size(); ++a) {
        for (std::size_t b = 0; b < ks.size(); ++b) {
            CHECK(commutator(ks[a], ks[b]).is_zero());
        }
    }
    // Phi_a [1] = [phi_a] at the origin
    for (std::size_t a = 0; a < ks.size(); ++a) {
        auto c = fam.fiber().normal_form(u.deformations[a]);
        for (std::size_t i = 0; i < c.size(); ++i) {
            CHECK(ks[a](i, 0).constant_term() == c[i]);
        }
    }
}

TEST_CASE("custom deformation basis for G_{4,2}")
{
    auto y = sym::y_vars(2);
    Unfolding u(sym::gepner_polynomial(4, 2), {MultiPoly::parse("1", y), MultiPoly::parse("y1", y), MultiPoly::parse("y1^2", y)});
    FamilyMilnorAlgebra fam(u, 2);
    auto k2 = fam.kodaira_spencer(2);
    auto k1 = fam.kodaira_spencer(1);
    CHECK(commutator(k1, k2).is_zero());
    CHECK(fam.gram().constant_part().determinant() != 0);
}
