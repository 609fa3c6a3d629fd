#include "test_main.hpp"

#include "gepner/symmetry.hpp"
#include "random_poly.hpp"

using namespace gepner;

TEST_CASE("elementary and power sums")
{
    CHECK(sym::elementary_symmetric(2, 3) == MultiPoly::parse("x1*x2 + x1*x3 + x2*x3", sym::x_vars(3)));
    CHECK(sym::power_sum(3, 2) == MultiPoly::parse("x1^3 + x2^3", sym::x_vars(2)));
    CHECK(sym::permutations(3).size() == 6);
    int total = 0;
    for (const auto& p : sym::permutations(4)) {
        total += p.sign;
    }
    CHECK(total == 0);
}

TEST_CASE("Gepner polynomials in small cases")
{
    auto y2 = sym::y_vars(2);
    auto y3 = sym::y_vars(3);
    CHECK(sym::gepner_polynomial(3, 2) == MultiPoly::parse("y1^3 - 3*y1*y2", y2));
    CHECK(sym::gepner_polynomial(4, 2) == MultiPoly::parse("y1^4 - 4*y1^2*y2 + 2*y2^2", y2));
    CHECK(sym::gepner_polynomial(4, 3) == MultiPoly::parse("y1^4 - 4*y1^2*y2 + 2*y2^2 + 4*y1*y3", y3));
}

TEST_CASE("Gepner polynomial pulls back to the Fermat sum")
{
    for (std::size_t k = 2; k <= 7; ++k) {
        for (std::size_t n = 1; n < k; ++n) {
            CAPTURE(k);
            CAPTURE(n);
            MultiPoly g = sym::gepner_polynomial(k, n);
            CHECK(g.is_weighted_homogeneous(sym::y_weights(k, n)));
            CHECK(sym::to_x(g, n) == sym::fermat_polynomial(k, n));
        }
    }
}

TEST_CASE("Vandermonde is alternating and symmetrization lands in the right isotypic part")
{
    CHECK(sym::is_alternating(sym::vandermonde(3)));
    CHECK_FALSE(sym::is_symmetric(sym::vandermonde(3)));
    std::mt19937 rng(17);
    auto x = sym::x_vars(3);
    for (int trial = 0; trial < 10; ++trial) {
        MultiPoly p = testing::random_poly(rng, x, 4, 4);
        CHECK(sym::is_symmetric(sym::symmetrize(p, sym::Character::trivial)));
        CHECK(sym::is_alternating(sym::symmetrize(p, sym::Character::sign)));
    }
}

TEST_CASE("rewrite_in_elementary inverts the substitution")
{
    std::mt19937 rng(23);
    for (std::size_t n = 2; n <= 3; ++n) {
        auto x = sym::x_vars(n);
        for (int trial = 0; trial < 8; ++trial) {
            MultiPoly s = sym::symmetrize(testing::random_poly(rng, x, 4, 3), sym::Character::trivial);
            MultiPoly q = sym::rewrite_in_elementary(s);
            CHECK(sym::to_x(q, n) == s);
        }
    }
    CHECK_THROWS(sym::rewrite_in_elementary(sym::vandermonde(2)));
}
