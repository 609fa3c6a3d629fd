#include "gepner/saito.hpp"

#include <stdexcept>

namespace gepner::saito {

SeriesVector euler_field(const Unfolding& u, int order)
{
    auto tw = u.parameter_weights();
    if (!tw) {
        throw std::domain_error("euler_field: unfolding is not quasi-homogeneous");
    }
    int m = static_cast<int>(u.size());
    SeriesVector e;
    for (int a = 0; a < m; ++a) {
        e.push_back(TruncSeries::variable(m, order, a) * (*tw)[a]);
    }
    return e;
}

SeriesMatrix deformation_frame(const FamilyMilnorAlgebra& fam)
{
    int m = fam.params();
    SeriesMatrix k(fam.dimension(), m, m, fam.order());
    for (int a = 0; a < m; ++a) {
        auto col = fam.normal_form(FamilyPoly::from_poly(fam.unfolding().deformations[a], m, fam.order()));
        for (std::size_t i = 0; i < col.size(); ++i) {
            k(i, a) = col[i];
        }
    }
    return k;
}

SaitoStructure saito_structure(const FamilyMilnorAlgebra& fam, const FamilyPoly& density)
{
    int m = fam.params();
    if (static_cast<std::size_t>(m) != fam.dimension()) {
        throw std::invalid_argument("saito_structure: unfolding is not versal");
    }
    const auto& u = fam.unfolding();
    SeriesMatrix k = deformation_frame(fam);
    if (k.constant_part().determinant() == 0) {
        throw std::invalid_argument("saito_structure: deformations do not span the Milnor algebra");
    }
    SeriesMatrix kinv = k.inverse();

    SaitoStructure s;
    FrobeniusData& f = s.frobenius;
    f.coords = u.params;
    for (int a = 0; a < m; ++a) {
        f.product.push_back(kinv * fam.kodaira_spencer(a) * k);
    }
    std::vector<FamilyPoly> frame;
    for (int a = 0; a < m; ++a) {
        frame.push_back(FamilyPoly::from_poly(u.deformations[a], m, fam.order()));
    }
    f.metric = fam.pairing(frame, density * density);
    if (f.metric.constant_part().determinant() == 0) {
        throw std::domain_error("saito_structure: residue metric degenerate at the origin");
    }
    auto one = fam.normal_form(FamilyPoly::from_poly(MultiPoly::constant(u.f.vars(), 1), m, fam.order()));
    f.unit = kinv.apply(one);
    f.euler = euler_field(u, fam.order());
    f.flat_coords = false;

    PreSaitoData& p = s.presaito;
    p.coords = u.params;
    p.rank = static_cast<std::size_t>(m);
    auto gamma = christoffel(f.metric);
    int gord = gamma.empty() ? fam.order() : gamma[0].order();
    for (int a = 0; a < m; ++a) {
        SeriesMatrix A(m, m, m, gord);
        for (int kk = 0; kk < m; ++kk) {
            for (int b = 0; b < m; ++b) {
                A(kk, b) = gamma[kk](a, b);
            }
        }
        p.connection.push_back(A);
        p.higgs.push_back(-f.product[a]);
    }
    p.r0 = multiplication_by(f.euler, f.product);
    p.r_inf = SeriesMatrix(m, m, m, gord);
    for (int kk = 0; kk < m; ++kk) {
        for (int b = 0; b < m; ++b) {
            TruncSeries v = f.euler[kk].derivative(b);
            for (int c = 0; c < m; ++c) {
                v.add_product(gamma[kk](b, c), f.euler[c]);
            }
            p.r_inf(kk, b) = v;
        }
    }
    p.metric = f.metric;
    s.omega = f.unit;
    return s;
}

FlatCoordinates flat_coordinates(const SeriesMatrix& metric)
{
    int m = static_cast<int>(metric.rows());
    int d = metric.order();
    auto gamma = christoffel(metric);
    FlatCoordinates out;
    for (int c = 0; c < m; ++c) {
        out.forward.push_back(TruncSeries::variable(m, d + 1, c));
    }
    // d_a d_b x^c = Gamma^e_ab d_e x^c; the degree p-1 part of the right side
    // only involves x up to degree p.
    for (int p = 1; p <= d; ++p) {
        std::vector<TruncSeries> add(m, TruncSeries(m, d + 1));
        for (int c = 0; c < m; ++c) {
            std::vector<TruncSeries> jac;
            for (int e = 0; e < m; ++e) {
                jac.push_back(out.forward[c].derivative(e));
            }
            for (int a = 0; a < m; ++a) {
                for (int b = 0; b < m; ++b) {
                    TruncSeries h(m, d - 1);
                    for (int e = 0; e < m; ++e) {
                        h.add_product(gamma[e](a, b), jac[e]);
                    }
                    add[c] += h.homogeneous_part(p - 1).times_variable(a).times_variable(b);
                }
            }
        }
        for (int c = 0; c < m; ++c) {
            out.forward[c] += add[c] * frac(1, (p + 1) * p);
        }
    }
    // t = x - N(t) solved by fixed point, N the nonlinear part of x.
    std::vector<TruncSeries> nonlinear;
    for (int c = 0; c < m; ++c) {
        nonlinear.push_back(out.forward[c] - TruncSeries::variable(m, d + 1, c));
    }
    for (int c = 0; c < m; ++c) {
        out.inverse.push_back(TruncSeries::variable(m, d + 1, c));
    }
    for (int it = 0; it <= d; ++it) {
        std::vector<TruncSeries> next;
        for (int c = 0; c < m; ++c) {
            next.push_back(TruncSeries::variable(m, d + 1, c) - nonlinear[c].compose(out.inverse));
        }
        out.inverse = std::move(next);
    }
    return out;
}

FrobeniusData to_flat_coordinates(const FrobeniusData& f, const FlatCoordinates& x, const std::vector<std::string>& names)
{
    std::size_t m = f.dimension();
    int nv = static_cast<int>(m);
    SeriesMatrix jac(m, m, nv, x.forward[0].order() - 1);
    for (std::size_t c = 0; c < m; ++c) {
        for (std::size_t a = 0; a < m; ++a) {
            jac(c, a) = x.forward[c].derivative(static_cast<int>(a));
        }
    }
    SeriesMatrix jinv = jac.inverse();
    FrobeniusData out;
    out.coords = names;
    out.flat_coords = true;
    out.metric = (jinv.transpose() * f.metric * jinv).compose(x.inverse);
    for (std::size_t a = 0; a < m; ++a) {
        SeriesMatrix mix(m, m, nv, f.order());
        for (std::size_t p = 0; p < m; ++p) {
            mix = mix + jinv(p, a) * f.product[p];
        }
        out.product.push_back((jac * mix * jinv).compose(x.inverse));
    }
    auto push = [&](const SeriesVector& v) {
        SeriesVector r = jac.apply(v);
        for (auto& s : r) {
            s = s.compose(x.inverse);
        }
        return r;
    };
    out.unit = push(f.unit);
    out.euler = push(f.euler);
    return out;
}

AModel a_model(int k, int order)
{
    if (k < 2) {
        throw std::invalid_argument("a_model requires k >= 2");
    }
    MultiPoly f = MultiPoly::parse("z^" + std::to_string(k), {"z"});
    Unfolding u = Unfolding::versal(f);
    // One extra order so the connection is known to the requested order.
    FamilyMilnorAlgebra fam(u, order + 1);
    FamilyPoly one = FamilyPoly::from_poly(MultiPoly::constant({"z"}, 1), fam.params(), fam.order());
    SaitoStructure s = saito_structure(fam, one);
    FlatCoordinates x = flat_coordinates(s.frobenius.metric);
    FrobeniusData flat = to_flat_coordinates(s.frobenius, x, default_param_names(fam.params(), "x"));
    return AModel{u, std::move(s), std::move(flat)};
}

std::size_t CandidatePrimitiveForm::solution_dimension() const
{
    std::size_t n = 1;
    for (auto x : free_parameters) {
        n += x;
    }
    return n;
}

InconsistentOrder::InconsistentOrder(int order_, const std::string& what)
    : std::runtime_error(what)
    , order(order_)
{
}

namespace {

using Residual = std::map<std::pair<std::size_t, TruncSeries::Key>, Rational>;

void collect(Residual& r, std::size_t& slot, const TruncSeries& s, int degree)
{
    for (const auto& [key, c] : s.terms()) {
        if (TruncSeries::degree(key) == degree) {
            r[{slot, key}] = c;
        }
    }
    ++slot;
}

// Curvature at t-degree p-2 and the potentiality defect at degree p-1.
Residual residual(const FamilyMilnorAlgebra& fam, const FamilyPoly& density, int p)
{
    FrobeniusData f = saito_structure(fam, density).frobenius;
    std::size_t m = f.dimension();
    Residual r;
    std::size_t slot = 0;
    auto gamma = christoffel(f.metric);
    if (p >= 2) {
        auto riem = riemann(gamma);
        for (std::size_t l = 0; l < m; ++l) {
            for (std::size_t i = 0; i < m; ++i) {
                for (std::size_t j = 0; j < m; ++j) {
                    for (std::size_t k = 0; k < m; ++k) {
                        collect(r, slot, riem[l][i](j, k), p - 2);
                    }
                }
            }
        }
    }
    auto low = f.lowered();
    auto nabla = [&](std::size_t d, std::size_t a, std::size_t b, std::size_t w) {
        TruncSeries s = low[a](b, w).derivative(static_cast<int>(d));
        for (std::size_t e = 0; e < m; ++e) {
            s.add_product(-gamma[e](d, a), low[e](b, w));
            s.add_product(-gamma[e](d, b), low[a](e, w));
            s.add_product(-gamma[e](d, w), low[a](b, e));
        }
        return s;
    };
    for (std::size_t d = 0; d < m; ++d) {
        for (std::size_t a = d + 1; a < m; ++a) {
            for (std::size_t b = 0; b < m; ++b) {
                for (std::size_t w = 0; w < m; ++w) {
                    collect(r, slot, nabla(d, a, b, w) - nabla(a, d, b, w), p - 1);
                }
            }
        }
    }
    return r;
}

void monomials_of_degree(int nvars, int degree, Exponent& cur, int var, std::vector<Exponent>& out)
{
    if (var == nvars - 1) {
        cur[var] = degree;
        out.push_back(cur);
        return;
    }
    for (int e = degree; e >= 0; --e) {
        cur[var] = e;
        monomials_of_degree(nvars, degree - e, cur, var + 1, out);
    }
    cur[var] = 0;
}

} // namespace

CandidatePrimitiveForm solve_primitive_form(const FamilyMilnorAlgebra& fam)
{
    const auto& u = fam.unfolding();
    auto tw = u.parameter_weights();
    const auto& w = fam.fiber().weights();
    if (!tw || !w) {
        throw std::domain_error("solve_primitive_form: unfolding is not quasi-homogeneous");
    }
    int m = fam.params();
    int d = fam.order();
    std::size_t n = u.f.nvars();
    CandidatePrimitiveForm out;
    out.order = d;
    out.density = FamilyPoly::from_poly(MultiPoly::constant(u.f.vars(), 1), m, d);
    const auto& basis = fam.fiber().basis();
    for (int p = 1; p <= d; ++p) {
        std::vector<Exponent> tmons;
        Exponent cur(m, 0);
        if (m > 0) {
            monomials_of_degree(m, p, cur, 0, tmons);
        }
        std::vector<FamilyPoly> ansatz;
        for (const auto& tm : tmons) {
            Rational tweight = 0;
            for (int a = 0; a < m; ++a) {
                tweight += tm[a] * (*tw)[a];
            }
            for (const auto& b : basis) {
                if (tweight + weighted_degree(b, *w) != 0) {
                    continue;
                }
                FamilyPoly term(n, m, d);
                TruncSeries c(m, d);
                c.add_term(tm, 1);
                term.add_term(b, c);
                ansatz.push_back(std::move(term));
            }
        }
        out.unknowns.push_back(ansatz.size());
        if (ansatz.empty()) {
            out.free_parameters.push_back(0);
            continue;
        }
        Residual r0 = residual(fam, out.density, p);
        std::vector<Residual> cols;
        std::map<std::pair<std::size_t, TruncSeries::Key>, std::size_t> rows;
        for (const auto& [key, c] : r0) {
            rows.emplace(key, rows.size());
        }
        for (const auto& t : ansatz) {
            Residual ri = residual(fam, out.density + t, p);
            for (const auto& [key, c] : r0) {
                ri[key] -= c;
            }
            for (const auto& [key, c] : ri) {
                rows.emplace(key, rows.size());
            }
            cols.push_back(std::move(ri));
        }
        QMatrix a(rows.size(), ansatz.size());
        QMatrix rhs(rows.size(), 1);
        for (const auto& [key, c] : r0) {
            rhs(rows.at(key), 0) = -c;
        }
        for (std::size_t j = 0; j < cols.size(); ++j) {
            for (const auto& [key, c] : cols[j]) {
                a(rows.at(key), j) = c;
            }
        }
        auto sol = linear_solve(a, rhs);
        if (!sol.consistent) {
            throw InconsistentOrder(p, "no primitive form ansatz solves the order " + std::to_string(p) + " equations");
        }
        out.free_parameters.push_back(sol.kernel.cols());
        for (std::size_t j = 0; j < ansatz.size(); ++j) {
            if (sol.particular(j, 0) != 0) {
                FamilyPoly step = ansatz[j];
                out.density += TruncSeries::constant(m, d, sol.particular(j, 0)) * step;
            }
        }
    }
    return out;
}

} // namespace gepner::saito
