#pragma once

#include "gepner/multipoly.hpp"
#include "gepner/trunc_series.hpp"

#include <random>

namespace gepner::testing {

inline Rational random_rational(std::mt19937& rng)
{
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    return frac(num(rng), den(rng));
}

inline MultiPoly random_poly(std::mt19937& rng, const std::vector<std::string>& vars, int max_degree, int terms)
{
    MultiPoly p(vars);
    std::uniform_int_distribution<int> ex(0, max_degree);
    for (int t = 0; t < terms; ++t) {
        Exponent e(vars.size());
        int budget = max_degree;
        for (auto& x : e) {
            x = std::min(ex(rng), budget);
            budget -= x;
        }
        p.add_term(e, random_rational(rng));
    }
    return p;
}

inline TruncSeries random_series(std::mt19937& rng, int nvars, int order, int terms)
{
    std::vector<std::string> names = default_param_names(nvars);
    return TruncSeries::from_poly(random_poly(rng, names, order + 1, terms), order);
}

} // namespace gepner::testing
