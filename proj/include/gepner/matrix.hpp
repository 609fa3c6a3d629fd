#pragma once

#include "gepner/rational.hpp"
#include "gepner/trunc_series.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace gepner {

/// Dense exact rational matrix.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols);
    static QMatrix identity(std::size_t n);
    static QMatrix column(const std::vector<Rational>& v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Rational> col(std::size_t c) const;
    std::vector<Rational> row(std::size_t r) const;
    QMatrix transpose() const;
    bool is_zero() const;

    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
    friend bool operator==(const QMatrix& a, const QMatrix& b) = default;
    std::vector<Rational> apply(const std::vector<Rational>& v) const;

    /// Reduced row echelon form; pivot columns returned through `pivots`.
    QMatrix rref(std::vector<std::size_t>* pivots = nullptr) const;
    std::size_t rank() const;
    /// Basis of {x : A x = 0}, one column per basis vector.
    QMatrix kernel() const;
    Rational determinant() const;
    /// Throws std::domain_error if singular.
    QMatrix inverse() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct LinearSolution {
    bool consistent = false;
    QMatrix particular; // cols x b.cols(); free variables set to zero
    QMatrix kernel;     // cols x nullity
};

/// Solves A X = B exactly. No approximation: inconsistency is reported.
LinearSolution linear_solve(const QMatrix& a, const QMatrix& b);

/// Matrix of truncated series (all entries share parameter count).
class SeriesMatrix {
public:
    SeriesMatrix() = default;
    SeriesMatrix(std::size_t rows, std::size_t cols, int nvars, int order);
    static SeriesMatrix identity(std::size_t n, int nvars, int order);
    static SeriesMatrix constant(const QMatrix& m, int nvars, int order);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    int nvars() const { return nvars_; }
    /// Minimum order over the entries.
    int order() const;

    TruncSeries& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const TruncSeries& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    SeriesMatrix transpose() const;
    QMatrix constant_part() const;
    bool is_zero() const;

    friend SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b);
    friend SeriesMatrix operator+(const SeriesMatrix& a, const SeriesMatrix& b);
    friend SeriesMatrix operator-(const SeriesMatrix& a, const SeriesMatrix& b);
    friend SeriesMatrix operator*(const Rational& c, const SeriesMatrix& a);
    friend SeriesMatrix operator*(const TruncSeries& c, const SeriesMatrix& a);
    SeriesMatrix operator-() const;
    std::vector<TruncSeries> apply(const std::vector<TruncSeries>& v) const;

    SeriesMatrix derivative(int var) const;
    SeriesMatrix truncated(int order) const;
    SeriesMatrix compose(const std::vector<TruncSeries>& images) const;
    /// Requires an invertible constant part.
    SeriesMatrix inverse() const;

    /// First nonzero entry rendered as "(r,c): term" or "".
    std::string first_nonzero(const std::vector<std::string>& names) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    int nvars_ = 0;
    std::vector<TruncSeries> data_;
};

SeriesMatrix commutator(const SeriesMatrix& a, const SeriesMatrix& b);

/// Determinant of a small square series matrix by cofactor expansion.
TruncSeries determinant(const SeriesMatrix& m);

} // namespace gepner
