#include "test_main.hpp"

#include "gepner/matrix.hpp"
#include "gepner/multipoly.hpp"
#include "gepner/trunc_series.hpp"
#include "random_poly.hpp"

using namespace gepner;

namespace {

MultiPoly P(const std::string& s, std::vector<std::string> vars = {})
{
    return MultiPoly::parse(s, std::move(vars));
}

} // namespace

TEST_CASE("poly_arith examples")
{
    auto xy = std::vector<std::string>{"x", "y"};
    CHECK((P("x+y", xy) * P("x-y", xy)) == P("x^2-y^2", xy));
    CHECK((P("3*x*y - 2", xy) * MultiPoly(xy)).is_zero());
    auto x12 = std::vector<std::string>{"x1", "x2"};
    MultiPoly s = P("x1+x2", x12);
    MultiPoly lhs = s.pow(3) - Rational(3) * s * P("x1*x2", x12);
    CHECK(lhs == P("x1^3+x2^3", x12));
}

TEST_CASE("operands over different variable sets are aligned by name")
{
    MultiPoly a = P("x + 1");
    MultiPoly b = P("y");
    MultiPoly c = a * b;
    CHECK(c.vars() == std::vector<std::string>{"x", "y"});
    CHECK(c == P("x*y + y"));
}

TEST_CASE("canonical text form round-trips")
{
    MultiPoly p = P("3*x1^2*x2 - 1/2*x2^3", {"x1", "x2"});
    CHECK(p.to_string() == "3*x1^2*x2 - 1/2*x2^3");
    CHECK(MultiPoly::parse(p.to_string(), p.vars()) == p);
    CHECK(MultiPoly({"x"}).to_string() == "0");
    CHECK_THROWS_AS(MultiPoly::parse("x^", {"x"}), std::invalid_argument);
    CHECK_THROWS_AS(MultiPoly::parse("z", {"x"}), std::invalid_argument);
}

TEST_CASE("grevlex leading terms")
{
    auto v = std::vector<std::string>{"x", "y", "z"};
    CHECK(P("x*z + y^2", v).leading_exponent() == Exponent{0, 2, 0});
    CHECK(P("x^2 + y^3", v).leading_exponent() == Exponent{0, 3, 0});
    CHECK(P("y - x^2", {"x", "y"}).leading_exponent() == Exponent{2, 0});
}

TEST_CASE("substitute examples")
{
    std::map<std::string, MultiPoly> a{{"y1", P("x1+x2", {"x1", "x2"})}};
    CHECK(P("y1^2", {"y1"}).substitute(a) == P("x1^2+2*x1*x2+x2^2", {"x1", "x2"}));
    MultiPoly p = P("x^3 - 2*x*y + 5", {"x", "y"});
    std::map<std::string, MultiPoly> id{{"x", P("x", {"x", "y"})}, {"y", P("y", {"x", "y"})}};
    CHECK(p.substitute(id) == p);
}

TEST_CASE("ring axioms on random triples")
{
    std::mt19937 rng(11);
    auto v = std::vector<std::string>{"a", "b", "c"};
    for (int trial = 0; trial < 25; ++trial) {
        MultiPoly p = testing::random_poly(rng, v, 3, 4);
        MultiPoly q = testing::random_poly(rng, v, 3, 4);
        MultiPoly r = testing::random_poly(rng, v, 2, 3);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p * q == q * p);
        CHECK((p - p).is_zero());
    }
}

TEST_CASE("substitution composes")
{
    std::mt19937 rng(5);
    auto v = std::vector<std::string>{"u", "v"};
    auto w = std::vector<std::string>{"s", "t"};
    for (int trial = 0; trial < 10; ++trial) {
        MultiPoly p = testing::random_poly(rng, v, 3, 4);
        std::map<std::string, MultiPoly> f{{"u", testing::random_poly(rng, w, 2, 3)}, {"v", testing::random_poly(rng, w, 2, 3)}};
        auto xs = std::vector<std::string>{"x"};
        std::map<std::string, MultiPoly> g{{"s", testing::random_poly(rng, xs, 2, 2)}, {"t", testing::random_poly(rng, xs, 2, 2)}};
        std::map<std::string, MultiPoly> gf;
        for (const auto& [name, img] : f) {
            gf.emplace(name, img.aligned_to(w).substitute(g));
        }
        CHECK(p.substitute(f).aligned_to(w).substitute(g) == p.substitute(gf));
    }
}

TEST_CASE("TruncSeries multiplication agrees with polynomial product then truncation")
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        int order = 1 + trial % 5;
        auto names = default_param_names(3);
        MultiPoly a = testing::random_poly(rng, names, order + 2, 6);
        MultiPoly b = testing::random_poly(rng, names, order + 2, 6);
        TruncSeries sa = TruncSeries::from_poly(a, order);
        TruncSeries sb = TruncSeries::from_poly(b, order);
        TruncSeries expected = TruncSeries::from_poly(a * b, order);
        CHECK(sa * sb == expected);
    }
}

TEST_CASE("TruncSeries truncation contract")
{
    TruncSeries a = TruncSeries::variable(2, 4, 0);
    TruncSeries b = TruncSeries::variable(2, 2, 1);
    CHECK((a * b).order() == 2);
    CHECK((a + b).order() == 2);
    CHECK(a.derivative(0).order() == 3);
    CHECK_THROWS_AS(b.truncated(3), std::logic_error);
}

TEST_CASE("TruncSeries inverse and composition")
{
    std::mt19937 rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        TruncSeries s = testing::random_series(rng, 2, 4, 6);
        s.add_term_key(0, 1 - s.constant_term() + 2);
        TruncSeries prod = s * s.inverse();
        CHECK(prod == TruncSeries::constant(2, 4, 1));
    }
    // (t0 + t1)^2 with t0 -> u^2, t1 -> u
    TruncSeries p = TruncSeries::from_poly(MultiPoly::parse("(t0+t1)^2", {"t0", "t1"}), 5);
    std::vector<TruncSeries> images{TruncSeries::from_poly(MultiPoly::parse("u^2", {"u"}), 5),
        TruncSeries::from_poly(MultiPoly::parse("u", {"u"}), 5)};
    CHECK(p.compose(images) == TruncSeries::from_poly(MultiPoly::parse("u^4 + 2*u^3 + u^2", {"u"}), 5));
}

TEST_CASE("linear_solve examples")
{
    QMatrix b(3, 1);
    b(0, 0) = 4;
    b(1, 0) = frac(-1, 2);
    b(2, 0) = 7;
    auto s = linear_solve(QMatrix::identity(3), b);
    CHECK(s.consistent);
    CHECK(s.particular == b);
    CHECK(s.kernel.cols() == 0);

    QMatrix row(1, 2);
    row(0, 0) = 1;
    row(0, 1) = 1;
    auto s2 = linear_solve(row, QMatrix(1, 1));
    CHECK(s2.consistent);
    CHECK(s2.kernel.cols() == 1);

    QMatrix z(2, 2);
    z(0, 0) = 1;
    z(1, 0) = 1;
    QMatrix rhs(2, 1);
    rhs(0, 0) = 1;
    rhs(1, 0) = 2;
    CHECK_FALSE(linear_solve(z, rhs).consistent);
}

TEST_CASE("linear_solve solutions back-substitute exactly")
{
    std::mt19937 rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t rows = 2 + trial % 4;
        std::size_t cols = 2 + (trial * 7) % 5;
        QMatrix a(rows, cols);
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) {
                a(i, j) = (trial + i + j) % 3 == 0 ? Rational(0) : testing::random_rational(rng);
            }
        }
        QMatrix x(cols, 1);
        for (std::size_t j = 0; j < cols; ++j) {
            x(j, 0) = testing::random_rational(rng);
        }
        QMatrix b = a * x;
        auto s = linear_solve(a, b);
        REQUIRE(s.consistent);
        CHECK(a * s.particular == b);
        CHECK((a * s.kernel).is_zero());
        CHECK(s.kernel.cols() + a.rank() == cols);
    }
}

TEST_CASE("series matrix inverse")
{
    std::mt19937 rng(4);
    SeriesMatrix m(3, 3, 2, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            m(i, j) = testing::random_series(rng, 2, 3, 4);
        }
        m(i, i).add_term_key(0, 10);
    }
    CHECK((m * m.inverse() - SeriesMatrix::identity(3, 2, 3)).is_zero());
}
