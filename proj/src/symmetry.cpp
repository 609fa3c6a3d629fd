#include "gepner/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gepner::sym {

std::vector<std::string> x_vars(std::size_t n)
{
    return numbered_vars("x", n);
}

std::vector<std::string> y_vars(std::size_t n)
{
    return numbered_vars("y", n);
}

std::vector<Permutation> permutations(std::size_t n)
{
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<Permutation> all;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (p[i] > p[j]) {
                    ++inversions;
                }
            }
        }
        all.push_back({p, inversions % 2 == 0 ? 1 : -1});
    } while (std::next_permutation(p.begin(), p.end()));
    return all;
}

MultiPoly elementary_symmetric(std::size_t i, std::size_t n)
{
    if (i < 1 || i > n) {
        throw std::out_of_range("elementary_symmetric: need 1 <= i <= n");
    }
    MultiPoly e(x_vars(n));
    // Enumerate i-subsets via a selection mask.
    std::vector<int> mask(n, 0);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(i), 1);
    std::sort(mask.begin(), mask.end());
    do {
        e.add_term(Exponent(mask.begin(), mask.end()), 1);
    } while (std::next_permutation(mask.begin(), mask.end()));
    return e;
}

MultiPoly power_sum(std::size_t k, std::size_t n)
{
    MultiPoly p(x_vars(n));
    for (std::size_t i = 0; i < n; ++i) {
        Exponent e(n, 0);
        e[i] = static_cast<int>(k);
        p.add_term(e, 1);
    }
    return p;
}

MultiPoly fermat_polynomial(std::size_t k, std::size_t n)
{
    return power_sum(k, n);
}

MultiPoly gepner_polynomial(std::size_t k, std::size_t n)
{
    if (k < 1 || n < 1) {
        throw std::invalid_argument("gepner_polynomial: need k >= 1 and n >= 1");
    }
    auto ys = y_vars(n);
    auto e = [&](std::size_t i) {
        return i <= n ? MultiPoly::variable(ys, i - 1) : MultiPoly(ys);
    };
    // Newton: p_m = sum_{i=1}^{m-1} (-1)^{i-1} e_i p_{m-i} + (-1)^{m-1} m e_m
    std::vector<MultiPoly> p(k + 1, MultiPoly(ys));
    for (std::size_t m = 1; m <= k; ++m) {
        MultiPoly acc(ys);
        for (std::size_t i = 1; i < m && i <= n; ++i) {
            MultiPoly t = e(i) * p[m - i];
            acc += (i % 2 == 1) ? t : -t;
        }
        if (m <= n) {
            MultiPoly t = Rational(static_cast<long>(m)) * e(m);
            acc += (m % 2 == 1) ? t : -t;
        }
        p[m] = acc;
    }
    return p[k];
}

MultiPoly vandermonde(std::size_t n)
{
    auto xs = x_vars(n);
    MultiPoly w = MultiPoly::constant(xs, 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            w *= MultiPoly::variable(xs, i) - MultiPoly::variable(xs, j);
        }
    }
    return w;
}

MultiPoly symmetrize(const MultiPoly& p, Character chi)
{
    MultiPoly r(p.vars());
    for (const auto& w : permutations(p.nvars())) {
        MultiPoly wp = p.permuted(w.images);
        if (chi == Character::sign && w.sign < 0) {
            r -= wp;
        } else {
            r += wp;
        }
    }
    return r;
}

namespace {

bool transposition_check(const MultiPoly& p, bool alternating)
{
    std::size_t n = p.nvars();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::swap(perm[i], perm[i + 1]);
        MultiPoly q = p.permuted(perm);
        if (!(q == (alternating ? -p : p))) {
            return false;
        }
    }
    return true;
}

} // namespace

bool is_symmetric(const MultiPoly& p)
{
    return transposition_check(p, false);
}

bool is_alternating(const MultiPoly& p)
{
    return transposition_check(p, true);
}

MultiPoly rewrite_in_elementary(const MultiPoly& p)
{
    if (!is_symmetric(p)) {
        throw std::invalid_argument("rewrite_in_elementary: input is not symmetric");
    }
    std::size_t n = p.nvars();
    auto ys = y_vars(n);
    std::vector<MultiPoly> sigmas;
    for (std::size_t i = 1; i <= n; ++i) {
        sigmas.push_back(elementary_symmetric(i, n));
    }
    MultiPoly rest = p.aligned_to(x_vars(n));
    MultiPoly q(ys);
    while (!rest.is_zero()) {
        const Exponent& a = rest.leading_exponent();
        Rational c = rest.leading_coeff();
        // Leading exponent of a symmetric polynomial is non-increasing.
        Exponent d(n, 0);
        MultiPoly prod = MultiPoly::constant(x_vars(n), c);
        for (std::size_t i = 0; i < n; ++i) {
            int next = i + 1 < n ? a[i + 1] : 0;
            d[i] = a[i] - next;
            if (d[i] < 0) {
                throw std::logic_error("rewrite_in_elementary: leading exponent not sorted");
            }
            if (d[i] > 0) {
                prod *= sigmas[i].pow(static_cast<unsigned>(d[i]));
            }
        }
        q.add_term(d, c);
        rest -= prod;
    }
    return q;
}

MultiPoly to_x(const MultiPoly& q, std::size_t n)
{
    std::map<std::string, MultiPoly> assignment;
    auto ys = y_vars(n);
    for (std::size_t i = 1; i <= n; ++i) {
        assignment.emplace(ys[i - 1], elementary_symmetric(i, n));
    }
    return q.aligned_to(ys).substitute(assignment).aligned_to(x_vars(n));
}

std::vector<Rational> x_weights(std::size_t k, std::size_t n)
{
    return std::vector<Rational>(n, frac(1, static_cast<long>(k)));
}

std::vector<Rational> y_weights(std::size_t k, std::size_t n)
{
    std::vector<Rational> w;
    for (std::size_t i = 1; i <= n; ++i) {
        w.push_back(frac(static_cast<long>(i), static_cast<long>(k)));
    }
    return w;
}

} // namespace gepner::sym
