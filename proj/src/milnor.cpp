#include "gepner/milnor.hpp"

#include <algorithm>

namespace gepner::milnor {

std::vector<MultiPoly> jacobian_ideal(const MultiPoly& f)
{
    std::vector<MultiPoly> j;
    for (std::size_t i = 0; i < f.nvars(); ++i) {
        j.push_back(f.derivative(i));
    }
    return j;
}

MultiPoly poly_determinant(const std::vector<std::vector<MultiPoly>>& m)
{
    std::size_t n = m.size();
    if (n == 0) {
        return MultiPoly::constant({}, 1);
    }
    if (n == 1) {
        return m[0][0];
    }
    MultiPoly det;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) {
            continue;
        }
        std::vector<std::vector<MultiPoly>> minor(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                if (c != j) {
                    minor[r - 1].push_back(m[r][c]);
                }
            }
        }
        MultiPoly term = m[0][j] * poly_determinant(minor);
        if (j % 2 == 0) {
            det += term;
        } else {
            det -= term;
        }
    }
    return det.aligned_to(m[0][0].vars());
}

MultiPoly hessian(const MultiPoly& f)
{
    std::size_t n = f.nvars();
    std::vector<std::vector<MultiPoly>> h(n, std::vector<MultiPoly>(n));
    for (std::size_t i = 0; i < n; ++i) {
        MultiPoly di = f.derivative(i);
        for (std::size_t j = 0; j < n; ++j) {
            h[i][j] = di.derivative(j);
        }
    }
    if (n == 0) {
        return MultiPoly::constant(f.vars(), 1);
    }
    return poly_determinant(h).aligned_to(f.vars());
}

std::optional<std::vector<Rational>> quasi_homogeneous_weights(const MultiPoly& f)
{
    std::size_t n = f.nvars();
    if (f.is_zero() || n == 0) {
        return std::nullopt;
    }
    QMatrix a(f.size(), n);
    QMatrix b(f.size(), 1);
    std::size_t r = 0;
    for (const auto& [e, c] : f.terms()) {
        for (std::size_t i = 0; i < n; ++i) {
            a(r, i) = e[i];
        }
        b(r, 0) = 1;
        ++r;
    }
    LinearSolution s = linear_solve(a, b);
    if (!s.consistent || s.kernel.cols() != 0) {
        return std::nullopt;
    }
    return s.particular.col(0);
}

std::vector<Exponent> standard_monomials(const std::vector<MultiPoly>& basis, const std::vector<std::string>& vars)
{
    std::size_t n = vars.size();
    std::vector<int> bound(n, -1);
    for (const auto& g : basis) {
        const Exponent& lt = g.leading_exponent();
        int nonzero = 0;
        std::size_t which = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (lt[i] > 0) {
                ++nonzero;
                which = i;
            }
        }
        if (nonzero == 0) {
            return {};
        }
        if (nonzero == 1 && (bound[which] < 0 || lt[which] < bound[which])) {
            bound[which] = lt[which];
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (bound[i] < 0) {
            throw NonIsolatedSingularity("Jacobian ideal is not zero-dimensional (no pure power of " + vars[i]
                    + " among leading monomials)",
                vars[i]);
        }
    }
    std::vector<Exponent> out;
    Exponent e(n, 0);
    while (true) {
        bool divisible = std::any_of(basis.begin(), basis.end(), [&](const MultiPoly& g) {
            return divides(g.leading_exponent(), e);
        });
        if (!divisible) {
            out.push_back(e);
        }
        std::size_t i = 0;
        while (i < n) {
            if (++e[i] < bound[i]) {
                break;
            }
            e[i] = 0;
            ++i;
        }
        if (i == n) {
            break;
        }
    }
    std::sort(out.begin(), out.end(), [](const Exponent& a, const Exponent& b) { return GrevlexGreater{}(b, a); });
    return out;
}

MilnorAlgebra::MilnorAlgebra(MultiPoly f, bool track_cofactors)
    : f_(std::move(f))
{
    if (f_.nvars() == 0) {
        throw std::invalid_argument("MilnorAlgebra: polynomial without variables");
    }
    auto jac = jacobian_ideal(f_);
    bool all_zero = std::all_of(jac.begin(), jac.end(), [](const MultiPoly& p) { return p.is_zero(); });
    if (all_zero) {
        throw NonIsolatedSingularity("Jacobian ideal is zero", f_.vars().front());
    }
    gb_ = groebner(jac, track_cofactors);
    basis_ = standard_monomials(gb_.basis, f_.vars());
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        index_.emplace(basis_[i], i);
    }
    weights_ = quasi_homogeneous_weights(f_);
}

const std::vector<QMatrix>& MilnorAlgebra::structure() const
{
    if (structure_.empty()) {
        for (std::size_t a = 0; a < basis_.size(); ++a) {
            structure_.push_back(multiplication_matrix(basis_element(a)));
        }
    }
    return structure_;
}

MultiPoly MilnorAlgebra::basis_element(std::size_t i) const
{
    return MultiPoly::monomial(vars(), basis_.at(i));
}

std::optional<std::size_t> MilnorAlgebra::index_of(const Exponent& e) const
{
    auto it = index_.find(e);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::vector<Rational> MilnorAlgebra::normal_form(const MultiPoly& p) const
{
    MultiPoly r = gb_.normal_form(p.aligned_to(vars()));
    std::vector<Rational> v(basis_.size());
    for (const auto& [e, c] : r.terms()) {
        v[index_.at(e)] = c;
    }
    return v;
}

MultiPoly MilnorAlgebra::from_coords(const std::vector<Rational>& v) const
{
    MultiPoly p(vars());
    for (std::size_t i = 0; i < v.size(); ++i) {
        p.add_term(basis_[i], v[i]);
    }
    return p;
}

QMatrix MilnorAlgebra::multiplication_matrix(const MultiPoly& p) const
{
    QMatrix m(basis_.size(), basis_.size());
    for (std::size_t j = 0; j < basis_.size(); ++j) {
        auto col = normal_form(p.aligned_to(vars()).shifted(basis_[j]));
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            m(i, j) = col[i];
        }
    }
    return m;
}

ResidueFunctional residue_functional(const MilnorAlgebra& a)
{
    if (!a.weights()) {
        throw std::domain_error("residue_functional: polynomial is not quasi-homogeneous");
    }
    const auto& w = *a.weights();
    ResidueFunctional r;
    r.socle_weight = 0;
    for (const auto& wi : w) {
        r.socle_weight += 1 - 2 * wi;
    }
    std::vector<std::size_t> top;
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        if (weighted_degree(a.basis()[i], w) == r.socle_weight) {
            top.push_back(i);
        }
    }
    auto hess = a.normal_form(hessian(a.polynomial()));
    if (top.size() != 1 || hess[top.front()] == 0) {
        throw std::domain_error("residue_functional: socle is not one-dimensional");
    }
    r.socle = a.basis()[top.front()];
    r.values.assign(a.dimension(), 0);
    r.values[top.front()] = Rational(static_cast<long>(a.dimension())) / hess[top.front()];
    r.gram = QMatrix(a.dimension(), a.dimension());
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        for (std::size_t j = 0; j < a.dimension(); ++j) {
            // only pairs of complementary weight can reach the socle
            if (weighted_degree(a.basis()[i], w) + weighted_degree(a.basis()[j], w) != r.socle_weight) {
                continue;
            }
            auto c = a.normal_form(MultiPoly::monomial(a.vars(), exponent_sum(a.basis()[i], a.basis()[j])));
            r.gram(i, j) = c[top.front()] * r.values[top.front()];
        }
    }
    if (r.gram.determinant() == 0) {
        throw std::domain_error("residue_functional: degenerate Gram matrix");
    }
    return r;
}

} // namespace gepner::milnor
