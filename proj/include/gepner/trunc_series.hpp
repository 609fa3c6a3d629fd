#pragma once

#include "gepner/multipoly.hpp"
#include "gepner/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gepner {

/// Truncated multivariate power series in up to 16 parameters.
///
/// A series of order d is known modulo all monomials of total degree > d.
/// Binary operations return order min(d1, d2); differentiation lowers the
/// order by one. The order is never raised implicitly: `truncated` only
/// lowers it, and the only order-raising operations are multiplication by a
/// monomial and integration, both of which are exact.
///
/// Exponents are packed four bits per variable, so every individual exponent
/// must stay below 16 (guaranteed by order <= 15).
class TruncSeries {
public:
    using Key = std::uint64_t;
    static constexpr int max_vars = 16;
    static constexpr int max_order = 15;

    TruncSeries() = default;
    TruncSeries(int nvars, int order);

    static TruncSeries constant(int nvars, int order, const Rational& c);
    static TruncSeries variable(int nvars, int order, int index);
    /// Truncation of an exact polynomial (its variables are the parameters).
    static TruncSeries from_poly(const MultiPoly& p, int order);

    int nvars() const { return nvars_; }
    int order() const { return order_; }
    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational constant_term() const;
    Rational coeff(const Exponent& e) const;
    void add_term(const Exponent& e, const Rational& c);
    void add_term_key(Key k, const Rational& c);

    TruncSeries& operator+=(const TruncSeries& o);
    TruncSeries& operator-=(const TruncSeries& o);
    TruncSeries& operator*=(const Rational& c);
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(TruncSeries a, const Rational& c) { return a *= c; }
    friend TruncSeries operator*(const Rational& c, TruncSeries a) { return a *= c; }
    TruncSeries operator-() const;

    /// Exact equality of known coefficients up to the smaller order.
    friend bool operator==(const TruncSeries& a, const TruncSeries& b);

    /// a += b*c without materializing b*c.
    void add_product(const TruncSeries& b, const TruncSeries& c);

    TruncSeries derivative(int var) const;
    TruncSeries times_variable(int var) const;
    TruncSeries truncated(int order) const;
    TruncSeries homogeneous_part(int degree) const;
    /// Multiplicative inverse; requires a nonzero constant term.
    TruncSeries inverse() const;

    /// Substitutes series (without constant terms, or exact linear forms) for
    /// the variables. images.size() == nvars(); all images share nvars.
    TruncSeries compose(const std::vector<TruncSeries>& images) const;

    /// Exact polynomial in the given parameter names.
    MultiPoly to_poly(const std::vector<std::string>& names) const;
    std::string to_string(const std::vector<std::string>& names) const;

    /// Lowest-degree nonzero term rendered for witnesses ("" when zero).
    std::string lowest_term(const std::vector<std::string>& names) const;

    static Key pack(const Exponent& e);
    static Exponent unpack(Key k, int nvars);
    static int degree(Key k);

private:
    int nvars_ = 0;
    int order_ = -1;
    std::map<Key, Rational> terms_;
};

std::vector<std::string> default_param_names(int n, const std::string& stem = "t");

} // namespace gepner
