#include "gepner/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace gepner {

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows)
    , cols_(cols)
    , data_(rows * cols)
{
}

QMatrix QMatrix::identity(std::size_t n)
{
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

QMatrix QMatrix::column(const std::vector<Rational>& v)
{
    QMatrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) {
        m(i, 0) = v[i];
    }
    return m;
}

std::vector<Rational> QMatrix::col(std::size_t c) const
{
    std::vector<Rational> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        v[r] = (*this)(r, c);
    }
    return v;
}

std::vector<Rational> QMatrix::row(std::size_t r) const
{
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
        data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

QMatrix QMatrix::transpose() const
{
    QMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

bool QMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
}

QMatrix operator*(const QMatrix& a, const QMatrix& b)
{
    if (a.cols_ != b.rows_) {
        throw std::invalid_argument("QMatrix product: dimension mismatch");
    }
    QMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols_; ++j) {
                r(i, j) += aik * b(k, j);
            }
        }
    }
    return r;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw std::invalid_argument("QMatrix sum: dimension mismatch");
    }
    QMatrix r(a);
    for (std::size_t i = 0; i < r.data_.size(); ++i) {
        r.data_[i] += b.data_[i];
    }
    return r;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw std::invalid_argument("QMatrix difference: dimension mismatch");
    }
    QMatrix r(a);
    for (std::size_t i = 0; i < r.data_.size(); ++i) {
        r.data_[i] -= b.data_[i];
    }
    return r;
}

std::vector<Rational> QMatrix::apply(const std::vector<Rational>& v) const
{
    return (*this * column(v)).col(0);
}

QMatrix QMatrix::rref(std::vector<std::size_t>* pivots) const
{
    QMatrix m(*this);
    std::vector<std::size_t> piv;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols_ && row < rows_; ++c) {
        std::size_t p = row;
        while (p < rows_ && m(p, c) == 0) {
            ++p;
        }
        if (p == rows_) {
            continue;
        }
        if (p != row) {
            for (std::size_t j = 0; j < cols_; ++j) {
                std::swap(m(p, j), m(row, j));
            }
        }
        Rational inv = 1 / m(row, c);
        for (std::size_t j = c; j < cols_; ++j) {
            m(row, j) *= inv;
        }
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row || m(i, c) == 0) {
                continue;
            }
            Rational f = m(i, c);
            for (std::size_t j = c; j < cols_; ++j) {
                m(i, j) -= f * m(row, j);
            }
        }
        piv.push_back(c);
        ++row;
    }
    if (pivots != nullptr) {
        *pivots = std::move(piv);
    }
    return m;
}

std::size_t QMatrix::rank() const
{
    std::vector<std::size_t> piv;
    rref(&piv);
    return piv.size();
}

QMatrix QMatrix::kernel() const
{
    std::vector<std::size_t> piv;
    QMatrix r = rref(&piv);
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : piv) {
        is_pivot[p] = true;
    }
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < cols_; ++c) {
        if (!is_pivot[c]) {
            free.push_back(c);
        }
    }
    QMatrix k(cols_, free.size());
    for (std::size_t j = 0; j < free.size(); ++j) {
        k(free[j], j) = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) {
            k(piv[i], j) = -r(i, free[j]);
        }
    }
    return k;
}

Rational QMatrix::determinant() const
{
    if (rows_ != cols_) {
        throw std::invalid_argument("determinant of non-square matrix");
    }
    QMatrix m(*this);
    Rational det = 1;
    for (std::size_t c = 0; c < cols_; ++c) {
        std::size_t p = c;
        while (p < rows_ && m(p, c) == 0) {
            ++p;
        }
        if (p == rows_) {
            return 0;
        }
        if (p != c) {
            for (std::size_t j = 0; j < cols_; ++j) {
                std::swap(m(p, j), m(c, j));
            }
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t i = c + 1; i < rows_; ++i) {
            if (m(i, c) == 0) {
                continue;
            }
            Rational f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < cols_; ++j) {
                m(i, j) -= f * m(c, j);
            }
        }
    }
    return det;
}

QMatrix QMatrix::inverse() const
{
    if (rows_ != cols_) {
        throw std::invalid_argument("inverse of non-square matrix");
    }
    LinearSolution s = linear_solve(*this, identity(rows_));
    if (!s.consistent || s.kernel.cols() != 0) {
        throw std::domain_error("matrix is singular");
    }
    return s.particular;
}

LinearSolution linear_solve(const QMatrix& a, const QMatrix& b)
{
    if (a.rows() != b.rows()) {
        throw std::invalid_argument("linear_solve: dimension mismatch");
    }
    QMatrix aug(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            aug(i, j) = a(i, j);
        }
        for (std::size_t j = 0; j < b.cols(); ++j) {
            aug(i, a.cols() + j) = b(i, j);
        }
    }
    std::vector<std::size_t> piv;
    QMatrix r = aug.rref(&piv);
    LinearSolution s;
    s.consistent = std::none_of(piv.begin(), piv.end(), [&](std::size_t p) { return p >= a.cols(); });
    s.particular = QMatrix(a.cols(), b.cols());
    if (s.consistent) {
        for (std::size_t i = 0; i < piv.size(); ++i) {
            for (std::size_t j = 0; j < b.cols(); ++j) {
                s.particular(piv[i], j) = r(i, a.cols() + j);
            }
        }
    }
    s.kernel = a.kernel();
    return s;
}

SeriesMatrix::SeriesMatrix(std::size_t rows, std::size_t cols, int nvars, int order)
    : rows_(rows)
    , cols_(cols)
    , nvars_(nvars)
    , data_(rows * cols, TruncSeries(nvars, order))
{
}

SeriesMatrix SeriesMatrix::identity(std::size_t n, int nvars, int order)
{
    SeriesMatrix m(n, n, nvars, order);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = TruncSeries::constant(nvars, order, 1);
    }
    return m;
}

SeriesMatrix SeriesMatrix::constant(const QMatrix& q, int nvars, int order)
{
    SeriesMatrix m(q.rows(), q.cols(), nvars, order);
    for (std::size_t i = 0; i < q.rows(); ++i) {
        for (std::size_t j = 0; j < q.cols(); ++j) {
            m(i, j) = TruncSeries::constant(nvars, order, q(i, j));
        }
    }
    return m;
}

int SeriesMatrix::order() const
{
    int o = TruncSeries::max_order;
    for (const auto& s : data_) {
        o = std::min(o, s.order());
    }
    return o;
}

SeriesMatrix SeriesMatrix::transpose() const
{
    SeriesMatrix t(cols_, rows_, nvars_, order());
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

QMatrix SeriesMatrix::constant_part() const
{
    QMatrix q(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            q(r, c) = (*this)(r, c).constant_term();
        }
    }
    return q;
}

bool SeriesMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const TruncSeries& s) { return s.is_zero(); });
}

SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b)
{
    if (a.cols_ != b.rows_) {
        throw std::invalid_argument("SeriesMatrix product: dimension mismatch");
    }
    int ord = std::min(a.order(), b.order());
    SeriesMatrix r(a.rows_, b.cols_, a.nvars_, ord);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const TruncSeries& aik = a(i, k);
            if (aik.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols_; ++j) {
                r(i, j).add_product(aik, b(k, j));
            }
        }
    }
    return r;
}

SeriesMatrix operator+(const SeriesMatrix& a, const SeriesMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw std::invalid_argument("SeriesMatrix sum: dimension mismatch");
    }
    SeriesMatrix r(a);
    for (std::size_t i = 0; i < r.data_.size(); ++i) {
        r.data_[i] += b.data_[i];
    }
    return r;
}

SeriesMatrix operator-(const SeriesMatrix& a, const SeriesMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw std::invalid_argument("SeriesMatrix difference: dimension mismatch");
    }
    SeriesMatrix r(a);
    for (std::size_t i = 0; i < r.data_.size(); ++i) {
        r.data_[i] -= b.data_[i];
    }
    return r;
}

SeriesMatrix operator*(const Rational& c, const SeriesMatrix& a)
{
    SeriesMatrix r(a);
    for (auto& s : r.data_) {
        s *= c;
    }
    return r;
}

SeriesMatrix operator*(const TruncSeries& c, const SeriesMatrix& a)
{
    SeriesMatrix r(a.rows_, a.cols_, a.nvars_, std::min(a.order(), c.order()));
    for (std::size_t i = 0; i < r.data_.size(); ++i) {
        r.data_[i] = c * a.data_[i];
    }
    return r;
}

SeriesMatrix SeriesMatrix::operator-() const
{
    return Rational(-1) * *this;
}

std::vector<TruncSeries> SeriesMatrix::apply(const std::vector<TruncSeries>& v) const
{
    if (v.size() != cols_) {
        throw std::invalid_argument("SeriesMatrix apply: dimension mismatch");
    }
    int ord = order();
    for (const auto& s : v) {
        ord = std::min(ord, s.order());
    }
    std::vector<TruncSeries> r(rows_, TruncSeries(nvars_, ord));
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            r[i].add_product((*this)(i, k), v[k]);
        }
    }
    return r;
}

SeriesMatrix SeriesMatrix::derivative(int var) const
{
    SeriesMatrix r(rows_, cols_, nvars_, order() - 1);
    for (std::size_t i = 0; i < data_.size(); ++i) {
        r.data_[i] = data_[i].derivative(var);
    }
    return r;
}

SeriesMatrix SeriesMatrix::truncated(int ord) const
{
    SeriesMatrix r(rows_, cols_, nvars_, ord);
    for (std::size_t i = 0; i < data_.size(); ++i) {
        r.data_[i] = data_[i].truncated(ord);
    }
    return r;
}

SeriesMatrix SeriesMatrix::compose(const std::vector<TruncSeries>& images) const
{
    int out_vars = images.empty() ? nvars_ : images.front().nvars();
    SeriesMatrix r(rows_, cols_, out_vars, 0);
    for (std::size_t i = 0; i < data_.size(); ++i) {
        r.data_[i] = data_[i].compose(images);
    }
    return r;
}

SeriesMatrix SeriesMatrix::inverse() const
{
    if (rows_ != cols_) {
        throw std::invalid_argument("inverse of non-square series matrix");
    }
    int ord = order();
    QMatrix c0 = constant_part();
    QMatrix c0inv = c0.inverse();
    SeriesMatrix c0inv_s = constant(c0inv, nvars_, ord);
    SeriesMatrix n = c0inv_s * (*this - constant(c0, nvars_, ord));
    // (I + N)^{-1} = sum (-N)^j; N has no constant part.
    SeriesMatrix sum = identity(rows_, nvars_, ord);
    SeriesMatrix power = sum;
    for (int j = 1; j <= ord; ++j) {
        power = -(power * n);
        if (power.is_zero()) {
            break;
        }
        sum = sum + power;
    }
    return sum * c0inv_s;
}

std::string SeriesMatrix::first_nonzero(const std::vector<std::string>& names) const
{
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            const auto& s = (*this)(r, c);
            if (!s.is_zero()) {
                return "(" + std::to_string(r) + "," + std::to_string(c) + "): " + s.lowest_term(names);
            }
        }
    }
    return "";
}

SeriesMatrix commutator(const SeriesMatrix& a, const SeriesMatrix& b)
{
    return a * b - b * a;
}

TruncSeries determinant(const SeriesMatrix& m)
{
    std::size_t n = m.rows();
    if (n != m.cols()) {
        throw std::invalid_argument("determinant of non-square series matrix");
    }
    if (n == 0) {
        return TruncSeries::constant(m.nvars(), m.order(), 1);
    }
    if (n == 1) {
        return m(0, 0);
    }
    TruncSeries det(m.nvars(), m.order());
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j).is_zero()) {
            continue;
        }
        SeriesMatrix minor(n - 1, n - 1, m.nvars(), m.order());
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) {
                    continue;
                }
                minor(r - 1, cc++) = m(r, c);
            }
        }
        TruncSeries term = m(0, j) * determinant(minor);
        if (j % 2 == 0) {
            det += term;
        } else {
            det -= term;
        }
    }
    return det;
}

} // namespace gepner
