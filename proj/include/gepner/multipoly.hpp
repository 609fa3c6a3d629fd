#pragma once

#include "gepner/rational.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace gepner {

using Exponent = std::vector<int>;

int total_degree(const Exponent& e);

/// Graded reverse lexicographic comparison; returns true when a > b.
/// Variable order is the declared order: x1 > x2 > ... .
struct GrevlexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

bool divides(const Exponent& a, const Exponent& b);
Exponent exponent_sum(const Exponent& a, const Exponent& b);
Exponent exponent_difference(const Exponent& a, const Exponent& b); // requires divides(b, a)
Exponent exponent_lcm(const Exponent& a, const Exponent& b);

/// Sparse multivariate polynomial with rational coefficients.
///
/// Terms are kept in a map ordered by grevlex, largest first, so that
/// `terms().begin()` is the leading term. Zero coefficients are never stored.
/// Binary operations between polynomials over different variable lists align
/// both operands to the union of names (left operand's names first).
class MultiPoly {
public:
    using TermMap = std::map<Exponent, Rational, GrevlexGreater>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars);

    static MultiPoly constant(std::vector<std::string> vars, const Rational& c);
    static MultiPoly variable(std::vector<std::string> vars, std::size_t index);
    static MultiPoly variable(std::vector<std::string> vars, const std::string& name);
    static MultiPoly monomial(std::vector<std::string> vars, Exponent exp, const Rational& c = 1);

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;

    /// Requires !is_zero().
    const Exponent& leading_exponent() const;
    const Rational& leading_coeff() const;
    int total_degree() const; // -1 for the zero polynomial

    Rational coeff(const Exponent& e) const;
    void add_term(const Exponent& e, const Rational& c);

    /// Index of a variable name, or -1.
    int index_of(const std::string& name) const;

    /// Same polynomial expressed over `vars`, which must contain every
    /// variable that occurs with a nonzero exponent.
    MultiPoly aligned_to(const std::vector<std::string>& vars) const;

    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    MultiPoly& operator*=(const MultiPoly& other);
    MultiPoly& operator*=(const Rational& c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    MultiPoly operator-() const;

    /// Equality as polynomials (variables matched by name).
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

    MultiPoly pow(unsigned e) const;
    MultiPoly derivative(std::size_t var) const;
    MultiPoly derivative(const std::string& name) const;

    /// Multiplies by the monomial x^e (same variable list).
    MultiPoly shifted(const Exponent& e, const Rational& c = 1) const;

    /// Composition: every variable with a nonzero exponent must be mapped.
    /// The result lives over the union of the images' variable lists.
    MultiPoly substitute(const std::map<std::string, MultiPoly>& assignment) const;

    /// Permutes the variables: variable i of the result is variable perm[i] of this.
    MultiPoly permuted(const std::vector<std::size_t>& perm) const;

    /// Weighted degree of every term must agree; returns nullopt-like flag via bool.
    bool is_weighted_homogeneous(const std::vector<Rational>& weights, Rational* degree = nullptr) const;

    std::string to_string() const;

    /// Parses the canonical text form ("3*x1^2*x2 - 1/2*x2^3").
    /// When `vars` is empty the variables are taken in order of first appearance.
    static MultiPoly parse(std::string_view text, std::vector<std::string> vars = {});

private:
    std::vector<std::string> vars_;
    TermMap terms_;
};

Rational weighted_degree(const Exponent& e, const std::vector<Rational>& weights);
std::string monomial_string(const std::vector<std::string>& vars, const Exponent& e);
std::vector<std::string> numbered_vars(const std::string& stem, std::size_t n, std::size_t first = 1);
std::vector<std::string> union_vars(const std::vector<std::string>& a, const std::vector<std::string>& b);

} // namespace gepner
