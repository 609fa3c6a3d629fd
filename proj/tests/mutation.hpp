#pragma once

#include "random_poly.hpp"

#include "gepner/frobenius.hpp"

#include <random>
#include <string>

namespace gepner::testing {

struct Mutation {
    std::string where;
};

// Adds c * t^e with c != 0 and min_degree <= |e| <= max_degree to one entry.
inline Mutation perturb(std::mt19937& rng, TruncSeries& s, const std::string& where, int min_degree, int max_degree)
{
    std::uniform_int_distribution<int> deg(min_degree, max_degree);
    std::uniform_int_distribution<int> var(0, std::max(0, s.nvars() - 1));
    Exponent e(static_cast<std::size_t>(s.nvars()), 0);
    int d = s.nvars() == 0 ? 0 : deg(rng);
    for (int i = 0; i < d; ++i) {
        ++e[var(rng)];
    }
    Rational c = 0;
    while (c == 0) {
        c = random_rational(rng);
    }
    s.add_term(e, c);
    return {where};
}

inline std::size_t pick(std::mt19937& rng, std::size_t n)
{
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

inline Mutation mutate(std::mt19937& rng, FrobeniusData& f, int max_degree)
{
    std::size_t m = f.dimension();
    std::size_t a = pick(rng, m), b = pick(rng, m), c = pick(rng, m);
    switch (pick(rng, 4)) {
    case 0:
        return perturb(rng, f.metric(a, b), "metric", 0, max_degree);
    case 1:
        return perturb(rng, f.product[a](c, b), "product", 0, max_degree);
    case 2:
        return perturb(rng, f.unit[a], "unit", 0, max_degree);
    default:
        return perturb(rng, f.euler[a], "euler", 0, max_degree);
    }
}

inline Mutation mutate(std::mt19937& rng, PreSaitoData& p, int max_degree)
{
    std::size_t r = p.rank;
    std::size_t i = pick(rng, r), j = pick(rng, r), a = pick(rng, p.coords.size());
    switch (pick(rng, 5)) {
    case 0:
        return perturb(rng, p.connection[a](i, j), "connection", 0, max_degree);
    case 1:
        return perturb(rng, p.higgs[a](i, j), "higgs", 0, max_degree);
    case 2:
        return perturb(rng, p.r0(i, j), "R0", 0, max_degree);
    case 3:
        return perturb(rng, p.r_inf(i, j), "R_inf", 0, 0);
    default:
        return perturb(rng, p.metric(i, j), "metric", 0, max_degree);
    }
}

inline Mutation mutate(std::mt19937& rng, SeriesVector& omega, int max_degree)
{
    return perturb(rng, omega[pick(rng, omega.size())], "omega", 1, max_degree);
}

// The certificate fails and some failing check names a witness.
inline bool localized_failure(const Certificate& c)
{
    if (c.passed()) {
        return false;
    }
    for (const auto& ch : c.checks) {
        if (!ch.pass && !ch.witness.empty()) {
            return true;
        }
    }
    return false;
}

} // namespace gepner::testing
