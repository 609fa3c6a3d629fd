#pragma once

#include "gepner/multipoly.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace gepner::sym {

enum class Character { trivial, sign };

/// x1..xn and y1..yn.
std::vector<std::string> x_vars(std::size_t n);
std::vector<std::string> y_vars(std::size_t n);

/// All permutations of {0..n-1} in lexicographic order, with their signs.
struct Permutation {
    std::vector<std::size_t> images;
    int sign = 1;
};
std::vector<Permutation> permutations(std::size_t n);

/// Sum of all squarefree degree-i monomials in x1..xn. Requires 1 <= i <= n.
MultiPoly elementary_symmetric(std::size_t i, std::size_t n);
MultiPoly power_sum(std::size_t k, std::size_t n);

/// F_{k,n} = sum x_i^k.
MultiPoly fermat_polynomial(std::size_t k, std::size_t n);

/// The polynomial G in y1..yn with G(sigma(x)) = sum x_i^k, via Newton's identities.
MultiPoly gepner_polynomial(std::size_t k, std::size_t n);

/// prod_{i<j} (x_i - x_j).
MultiPoly vandermonde(std::size_t n);

/// sum over S_n of chi(w) * (w . p); p must live over x1..xn.
MultiPoly symmetrize(const MultiPoly& p, Character chi);

bool is_symmetric(const MultiPoly& p);
bool is_alternating(const MultiPoly& p);

/// q(y) with q(sigma(x)) = p; throws std::invalid_argument if p is not symmetric.
MultiPoly rewrite_in_elementary(const MultiPoly& p);

/// q(y1..yn) |-> q(sigma_1(x), ..., sigma_n(x)).
MultiPoly to_x(const MultiPoly& q, std::size_t n);

/// Weights making sum x_i^k weighted-homogeneous of weight 1 (x_i -> 1/k),
/// and the induced weights y_i -> i/k.
std::vector<Rational> x_weights(std::size_t k, std::size_t n);
std::vector<Rational> y_weights(std::size_t k, std::size_t n);

} // namespace gepner::sym
