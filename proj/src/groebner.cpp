#include "gepner/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace gepner {

Division divide(const MultiPoly& p, const std::vector<MultiPoly>& divisors)
{
    const auto& vars = p.vars();
    Division d;
    d.quotients.assign(divisors.size(), MultiPoly(vars));
    d.remainder = MultiPoly(vars);
    std::vector<MultiPoly> divs;
    divs.reserve(divisors.size());
    for (const auto& g : divisors) {
        divs.push_back(g.aligned_to(vars));
    }
    MultiPoly rest = p;
    while (!rest.is_zero()) {
        Exponent lt = rest.leading_exponent();
        Rational lc = rest.leading_coeff();
        bool reduced = false;
        for (std::size_t i = 0; i < divs.size(); ++i) {
            if (divs[i].is_zero() || !divides(divs[i].leading_exponent(), lt)) {
                continue;
            }
            Exponent m = exponent_difference(lt, divs[i].leading_exponent());
            Rational c = lc / divs[i].leading_coeff();
            d.quotients[i].add_term(m, c);
            rest -= divs[i].shifted(m, c);
            reduced = true;
            break;
        }
        if (!reduced) {
            d.remainder.add_term(lt, lc);
            rest.add_term(lt, -lc);
        }
    }
    return d;
}

bool GroebnerBasis::is_unit_ideal() const
{
    return basis.size() == 1 && basis.front().is_constant() && !basis.front().is_zero();
}

MultiPoly GroebnerBasis::normal_form(const MultiPoly& p) const
{
    return divide(p.aligned_to(vars), basis).remainder;
}

Division GroebnerBasis::divide_by_generators(const MultiPoly& p) const
{
    if (cofactors.size() != basis.size()) {
        throw std::logic_error("divide_by_generators requires tracked cofactors");
    }
    Division byBasis = divide(p.aligned_to(vars), basis);
    Division out;
    out.remainder = byBasis.remainder;
    out.quotients.assign(generators.size(), MultiPoly(vars));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (byBasis.quotients[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < generators.size(); ++j) {
            out.quotients[j] += byBasis.quotients[i] * cofactors[i][j];
        }
    }
    return out;
}

namespace {

struct Element {
    MultiPoly poly;
    std::vector<MultiPoly> cof;
};

void combine_cofactors(std::vector<MultiPoly>& target, const std::vector<MultiPoly>& src, const MultiPoly& factor)
{
    for (std::size_t j = 0; j < target.size(); ++j) {
        target[j] -= factor * src[j];
    }
}

// Fully reduces e by the basis, updating cofactors.
void reduce(Element& e, const std::vector<Element>& basis, bool track, std::size_t skip = static_cast<std::size_t>(-1))
{
    std::vector<MultiPoly> divisors;
    divisors.reserve(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        divisors.push_back(i == skip ? MultiPoly(e.poly.vars()) : basis[i].poly);
    }
    Division d = divide(e.poly, divisors);
    if (track) {
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (!d.quotients[i].is_zero()) {
                combine_cofactors(e.cof, basis[i].cof, d.quotients[i]);
            }
        }
    }
    e.poly = d.remainder;
}

void make_monic(Element& e, bool track)
{
    Rational inv = 1 / e.poly.leading_coeff();
    e.poly *= inv;
    if (track) {
        for (auto& c : e.cof) {
            c *= inv;
        }
    }
}

} // namespace

GroebnerBasis groebner(const std::vector<MultiPoly>& generators, bool track_cofactors)
{
    GroebnerBasis out;
    if (generators.empty()) {
        throw std::invalid_argument("groebner: empty generator list");
    }
    std::vector<std::string> vars;
    for (const auto& g : generators) {
        vars = union_vars(vars, g.vars());
    }
    out.vars = vars;
    for (const auto& g : generators) {
        out.generators.push_back(g.aligned_to(vars));
    }
    const std::size_t ngen = generators.size();

    std::vector<Element> g;
    for (std::size_t j = 0; j < ngen; ++j) {
        if (out.generators[j].is_zero()) {
            continue;
        }
        Element e{out.generators[j], {}};
        if (track_cofactors) {
            e.cof.assign(ngen, MultiPoly(vars));
            e.cof[j] = MultiPoly::constant(vars, 1);
        }
        g.push_back(std::move(e));
    }
    if (g.empty()) {
        throw std::invalid_argument("groebner: all generators are zero");
    }

    // Pairs ordered by (lcm, j, i): the normal selection strategy.
    using Pair = std::tuple<Exponent, std::size_t, std::size_t>;
    auto pair_less = [](const Pair& a, const Pair& b) {
        GrevlexGreater gt;
        if (gt(std::get<0>(b), std::get<0>(a))) {
            return true;
        }
        if (gt(std::get<0>(a), std::get<0>(b))) {
            return false;
        }
        return std::tie(std::get<2>(a), std::get<1>(a)) < std::tie(std::get<2>(b), std::get<1>(b));
    };
    std::set<Pair, decltype(pair_less)> pending(pair_less);
    std::set<std::pair<std::size_t, std::size_t>> open;
    auto add_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            pending.emplace(exponent_lcm(g[i].poly.leading_exponent(), g[j].poly.leading_exponent()), i, j);
            open.emplace(i, j);
        }
    };
    for (std::size_t j = 0; j < g.size(); ++j) {
        add_pairs_for(j);
    }

    while (!pending.empty()) {
        auto [lcm, i, j] = *pending.begin();
        pending.erase(pending.begin());
        open.erase({i, j});
        const Exponent& li = g[i].poly.leading_exponent();
        const Exponent& lj = g[j].poly.leading_exponent();
        // Product criterion.
        if (exponent_sum(li, lj) == lcm) {
            continue;
        }
        // Chain criterion.
        bool chain = false;
        for (std::size_t k = 0; k < g.size() && !chain; ++k) {
            if (k == i || k == j || !divides(g[k].poly.leading_exponent(), lcm)) {
                continue;
            }
            auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
            if (!open.count(key(i, k)) && !open.count(key(j, k))) {
                chain = true;
            }
        }
        if (chain) {
            continue;
        }
        Exponent mi = exponent_difference(lcm, li);
        Exponent mj = exponent_difference(lcm, lj);
        Rational ci = 1 / g[i].poly.leading_coeff();
        Rational cj = 1 / g[j].poly.leading_coeff();
        Element s{g[i].poly.shifted(mi, ci) - g[j].poly.shifted(mj, cj), {}};
        if (track_cofactors) {
            s.cof.assign(ngen, MultiPoly(vars));
            for (std::size_t t = 0; t < ngen; ++t) {
                s.cof[t] = g[i].cof[t].shifted(mi, ci) - g[j].cof[t].shifted(mj, cj);
            }
        }
        reduce(s, g, track_cofactors);
        if (!s.poly.is_zero()) {
            make_monic(s, track_cofactors);
            g.push_back(std::move(s));
            add_pairs_for(g.size() - 1);
        }
    }

    // Minimalize: drop elements whose leading monomial is divisible by another's.
    std::vector<Element> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j) {
                continue;
            }
            const Exponent& a = g[i].poly.leading_exponent();
            const Exponent& b = g[j].poly.leading_exponent();
            if (divides(b, a) && (a != b || j < i)) {
                redundant = true;
            }
        }
        if (!redundant) {
            minimal.push_back(g[i]);
        }
    }
    // Interreduce.
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        reduce(minimal[i], minimal, track_cofactors, i);
        make_monic(minimal[i], track_cofactors);
    }
    std::sort(minimal.begin(), minimal.end(), [](const Element& a, const Element& b) {
        return GrevlexGreater{}(b.poly.leading_exponent(), a.poly.leading_exponent());
    });
    for (auto& e : minimal) {
        out.basis.push_back(std::move(e.poly));
        if (track_cofactors) {
            out.cofactors.push_back(std::move(e.cof));
        }
    }
    return out;
}

} // namespace gepner
