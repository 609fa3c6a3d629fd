#include "gepner/frobenius.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gepner {

bool Certificate::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void Certificate::add(std::string name, bool pass, std::string witness)
{
    checks.push_back(Check{std::move(name), pass, std::move(witness)});
}

const Check* Certificate::find(const std::string& name) const
{
    for (const auto& c : checks) {
        if (c.name == name) {
            return &c;
        }
    }
    return nullptr;
}

std::string Certificate::summary() const
{
    std::ostringstream out;
    out << subject << ": " << (passed() ? "pass" : "FAIL");
    for (const auto& c : checks) {
        if (!c.pass) {
            out << "\n  " << c.name << " failed at " << c.witness;
        }
    }
    return out.str();
}

namespace {

int min_order(const std::vector<SeriesMatrix>& ms, int start)
{
    for (const auto& m : ms) {
        start = std::min(start, m.order());
    }
    return start;
}

int min_order(const SeriesVector& v, int start)
{
    for (const auto& s : v) {
        start = std::min(start, s.order());
    }
    return start;
}

std::string indexed(const std::string& label, const std::string& inner)
{
    return label + " " + inner;
}

// Collects the first failure over a family of matrices that should vanish.
struct ZeroCheck {
    explicit ZeroCheck(const std::vector<std::string>& n)
        : names(n)
    {
    }

    const std::vector<std::string>& names;
    std::string witness;
    bool pass = true;

    void operator()(const SeriesMatrix& m, const std::string& label)
    {
        if (!pass || m.is_zero()) {
            return;
        }
        pass = false;
        witness = indexed(label, m.first_nonzero(names));
    }
    void operator()(const TruncSeries& s, const std::string& label)
    {
        if (!pass || s.is_zero()) {
            return;
        }
        pass = false;
        witness = label + ": " + s.lowest_term(names);
    }
};

std::string idx(std::initializer_list<std::size_t> xs)
{
    std::string s = "[";
    bool first = true;
    for (auto x : xs) {
        s += (first ? "" : ",") + std::to_string(x);
        first = false;
    }
    return s + "]";
}

} // namespace

int FrobeniusData::order() const
{
    int o = min_order(product, metric.order());
    o = min_order(unit, o);
    return min_order(euler, o);
}

std::vector<SeriesMatrix> FrobeniusData::lowered() const
{
    // c_abw = sum_k product[a](k, b) g(k, w)
    std::vector<SeriesMatrix> out;
    for (const auto& ca : product) {
        out.push_back(ca.transpose() * metric);
    }
    return out;
}

int PreSaitoData::order() const
{
    int o = min_order(connection, metric.order());
    o = min_order(higgs, o);
    return std::min({o, r0.order(), r_inf.order()});
}

std::string to_string(SignConvention c)
{
    return c == SignConvention::unit_normalized ? "unit-normalized" : "as-written";
}

SignConvention parse_sign_convention(const std::string& s)
{
    if (s == "unit-normalized") {
        return SignConvention::unit_normalized;
    }
    if (s == "as-written") {
        return SignConvention::as_written;
    }
    throw std::invalid_argument("unknown sign convention: " + s);
}

std::vector<SeriesMatrix> christoffel(const SeriesMatrix& g)
{
    std::size_t m = g.rows();
    SeriesMatrix ginv = g.inverse();
    std::vector<SeriesMatrix> dg;
    for (std::size_t l = 0; l < m; ++l) {
        dg.push_back(g.derivative(static_cast<int>(l)));
    }
    int ord = g.order() - 1;
    std::vector<SeriesMatrix> gamma(m, SeriesMatrix(m, m, g.nvars(), ord));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i; j < m; ++j) {
            // lowered symbol [ij, l]
            std::vector<TruncSeries> low;
            for (std::size_t l = 0; l < m; ++l) {
                low.push_back((dg[i](j, l) + dg[j](i, l) - dg[l](i, j)) * frac(1, 2));
            }
            for (std::size_t k = 0; k < m; ++k) {
                TruncSeries s(g.nvars(), ord);
                for (std::size_t l = 0; l < m; ++l) {
                    s.add_product(ginv(k, l), low[l]);
                }
                gamma[k](i, j) = s;
                gamma[k](j, i) = s;
            }
        }
    }
    return gamma;
}

std::vector<std::vector<SeriesMatrix>> riemann(const std::vector<SeriesMatrix>& gamma)
{
    std::size_t m = gamma.size();
    int nv = m ? gamma[0].nvars() : 0;
    int ord = min_order(gamma, TruncSeries::max_order) - 1;
    std::vector<std::vector<SeriesMatrix>> r(m, std::vector<SeriesMatrix>(m, SeriesMatrix(m, m, nv, ord)));
    for (std::size_t l = 0; l < m; ++l) {
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                for (std::size_t k = 0; k < m; ++k) {
                    TruncSeries s = gamma[l](j, k).derivative(static_cast<int>(i)) - gamma[l](i, k).derivative(static_cast<int>(j));
                    for (std::size_t p = 0; p < m; ++p) {
                        s.add_product(gamma[l](i, p), gamma[p](j, k));
                        s.add_product(-gamma[l](j, p), gamma[p](i, k));
                    }
                    r[l][i](j, k) = s;
                }
            }
        }
    }
    return r;
}

SeriesMatrix lie_metric(const SeriesVector& v, const SeriesMatrix& g)
{
    std::size_t m = g.rows();
    int ord = std::min(min_order(v, TruncSeries::max_order), g.order()) - 1;
    SeriesMatrix r(m, m, g.nvars(), ord);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            TruncSeries s(g.nvars(), ord);
            for (std::size_t c = 0; c < m; ++c) {
                s.add_product(v[c], g(a, b).derivative(static_cast<int>(c)));
                s.add_product(g(c, b), v[c].derivative(static_cast<int>(a)));
                s.add_product(g(a, c), v[c].derivative(static_cast<int>(b)));
            }
            r(a, b) = s;
        }
    }
    return r;
}

std::vector<SeriesMatrix> lie_product(const SeriesVector& v, const std::vector<SeriesMatrix>& c)
{
    std::size_t m = c.size();
    int nv = m ? c[0].nvars() : 0;
    int ord = std::min(min_order(v, TruncSeries::max_order), min_order(c, TruncSeries::max_order)) - 1;
    std::vector<std::vector<TruncSeries>> dv(m);
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t l = 0; l < m; ++l) {
            dv[k].push_back(v[k].derivative(static_cast<int>(l))); // d_l v^k
        }
    }
    std::vector<SeriesMatrix> r(m, SeriesMatrix(m, m, nv, ord));
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t k = 0; k < m; ++k) {
            for (std::size_t b = 0; b < m; ++b) {
                TruncSeries s(nv, ord);
                for (std::size_t l = 0; l < m; ++l) {
                    s.add_product(v[l], c[a](k, b).derivative(static_cast<int>(l)));
                    s.add_product(-c[a](l, b), dv[k][l]);
                    s.add_product(c[l](k, b), dv[l][a]);
                    s.add_product(c[a](k, l), dv[l][b]);
                }
                r[a](k, b) = s;
            }
        }
    }
    return r;
}

SeriesVector lie_bracket(const SeriesVector& v, const SeriesVector& w)
{
    std::size_t m = v.size();
    int ord = std::min(min_order(v, TruncSeries::max_order), min_order(w, TruncSeries::max_order)) - 1;
    int nv = m ? v[0].nvars() : 0;
    SeriesVector r(m, TruncSeries(nv, ord));
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t l = 0; l < m; ++l) {
            r[k].add_product(v[l], w[k].derivative(static_cast<int>(l)));
            r[k].add_product(-w[l], v[k].derivative(static_cast<int>(l)));
        }
    }
    return r;
}

SeriesMatrix multiplication_by(const SeriesVector& v, const std::vector<SeriesMatrix>& product)
{
    std::size_t m = product.size();
    int ord = std::min(min_order(v, TruncSeries::max_order), min_order(product, TruncSeries::max_order));
    SeriesMatrix r(m, m, product[0].nvars(), ord);
    for (std::size_t a = 0; a < m; ++a) {
        r = r + v[a] * product[a];
    }
    return r;
}

FrobeniusVerification verify_frobenius_axioms(const FrobeniusData& input, int order)
{
    FrobeniusVerification out;
    Certificate& cert = out.certificate;
    cert.subject = "frobenius";
    std::size_t m = input.dimension();
    if (input.product.size() != m || input.unit.size() != m || input.euler.size() != m || input.metric.rows() != m
        || input.metric.cols() != m) {
        throw std::invalid_argument("verify_frobenius_axioms: malformed dimensions");
    }
    int ord = std::min(order, input.order());
    cert.notes.push_back("verified to order " + std::to_string(ord));
    const auto& names = input.coords;
    int nv = static_cast<int>(m);

    FrobeniusData f = input;
    for (auto& c : f.product) {
        c = c.truncated(ord);
    }
    f.metric = f.metric.truncated(ord);
    for (auto& s : f.unit) {
        s = s.truncated(ord);
    }
    for (auto& s : f.euler) {
        s = s.truncated(ord);
    }
    const SeriesMatrix& g = f.metric;

    // (i) metric
    {
        ZeroCheck z{names};
        z(g - g.transpose(), "g - g^T");
        cert.add("metric symmetric", z.pass, z.witness);
    }
    bool nondegenerate = g.constant_part().determinant() != 0;
    cert.add("metric nondegenerate at origin", nondegenerate, nondegenerate ? "" : "det g(0) = 0");
    std::vector<SeriesMatrix> gamma;
    if (nondegenerate) {
        gamma = christoffel(g);
    } else {
        gamma.assign(m, SeriesMatrix(m, m, nv, ord - 1));
    }
    {
        ZeroCheck z{names};
        if (f.flat_coords) {
            z(g - SeriesMatrix::constant(g.constant_part(), nv, ord), "g - g(0)");
        } else if (nondegenerate && ord >= 2) {
            auto r = riemann(gamma);
            for (std::size_t l = 0; l < m; ++l) {
                for (std::size_t i = 0; i < m; ++i) {
                    z(r[l][i], "R^" + std::to_string(l) + "_" + std::to_string(i));
                }
            }
        }
        cert.add("metric flat", z.pass, z.witness);
    }

    // (ii) product
    {
        ZeroCheck z{names};
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t b = 0; b < m; ++b) {
                for (std::size_t k = 0; k < m; ++k) {
                    z(f.product[a](k, b) - f.product[b](k, a), "c^" + std::to_string(k) + idx({a, b}) + " - c^" + std::to_string(k) + idx({b, a}));
                }
            }
        }
        cert.add("product commutative", z.pass, z.witness);
    }
    {
        ZeroCheck z{names};
        for (std::size_t a = 0; a < m && z.pass; ++a) {
            for (std::size_t b = 0; b < m && z.pass; ++b) {
                SeriesMatrix lhs = f.product[a] * f.product[b];
                for (std::size_t c = 0; c < m; ++c) {
                    lhs = lhs - f.product[a](c, b) * f.product[c];
                }
                z(lhs, "C_a C_b - C_(a*b) " + idx({a, b}));
            }
        }
        cert.add("product associative", z.pass, z.witness);
    }
    auto low = f.lowered();
    {
        ZeroCheck z{names};
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t b = 0; b < m; ++b) {
                for (std::size_t w = 0; w < m; ++w) {
                    z(low[a](b, w) - low[w](b, a), "g(a*b,w) - g(w*b,a) " + idx({a, b, w}));
                }
            }
        }
        cert.add("metric invariant", z.pass, z.witness);
    }
    {
        ZeroCheck z{names};
        // nabla_d c_abw, compared under d <-> a
        auto nabla = [&](std::size_t d, std::size_t a, std::size_t b, std::size_t w) {
            TruncSeries s = low[a](b, w).derivative(static_cast<int>(d));
            for (std::size_t e = 0; e < m; ++e) {
                s.add_product(-gamma[e](d, a), low[e](b, w));
                s.add_product(-gamma[e](d, b), low[a](e, w));
                s.add_product(-gamma[e](d, w), low[a](b, e));
            }
            return s;
        };
        for (std::size_t d = 0; d < m && z.pass; ++d) {
            for (std::size_t a = d + 1; a < m && z.pass; ++a) {
                for (std::size_t b = 0; b < m && z.pass; ++b) {
                    for (std::size_t w = 0; w < m && z.pass; ++w) {
                        z(nabla(d, a, b, w) - nabla(a, d, b, w), "nabla c " + idx({d, a, b, w}));
                    }
                }
            }
        }
        cert.add("potentiality", z.pass, z.witness);
    }

    // (iii) unit
    {
        ZeroCheck z{names};
        z(multiplication_by(f.unit, f.product) - SeriesMatrix::identity(m, nv, ord), "e* - id");
        cert.add("unit", z.pass, z.witness);
    }
    {
        ZeroCheck z{names};
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t k = 0; k < m; ++k) {
                TruncSeries s = f.unit[k].derivative(static_cast<int>(a));
                for (std::size_t b = 0; b < m; ++b) {
                    s.add_product(gamma[k](a, b), f.unit[b]);
                }
                z(s, "nabla_" + std::to_string(a) + " e^" + std::to_string(k));
            }
        }
        cert.add("unit flat", z.pass, z.witness);
    }

    // (iv) Euler field
    {
        SeriesMatrix lg = lie_metric(f.euler, g);
        std::optional<Rational> charge;
        QMatrix g0 = g.constant_part();
        for (std::size_t a = 0; a < m && !charge; ++a) {
            for (std::size_t b = 0; b < m && !charge; ++b) {
                if (g0(a, b) != 0) {
                    charge = lg(a, b).constant_term() / g0(a, b);
                }
            }
        }
        ZeroCheck z{names};
        if (charge) {
            z(lg - *charge * g, "L_E g - D g");
            cert.notes.push_back("charge D = " + gepner::to_string(*charge));
        } else {
            z.pass = false;
            z.witness = "g(0) = 0";
        }
        cert.add("euler metric", z.pass, z.witness);
        if (z.pass) {
            out.charge = charge;
        }
    }
    {
        ZeroCheck z{names};
        auto lc = lie_product(f.euler, f.product);
        for (std::size_t a = 0; a < m; ++a) {
            z(lc[a] - f.product[a], "L_E c - c, a=" + std::to_string(a));
        }
        cert.add("euler product", z.pass, z.witness);
    }
    {
        ZeroCheck z{names};
        auto br = lie_bracket(f.euler, f.unit);
        for (std::size_t k = 0; k < m; ++k) {
            z(br[k] + f.unit[k], "[E,e] + e, component " + std::to_string(k));
        }
        cert.add("euler unit", z.pass, z.witness);
    }
    return out;
}

Certificate verify_presaito(const PreSaitoData& input, int order)
{
    Certificate cert;
    cert.subject = "pre-saito";
    std::size_t m = input.coords.size();
    std::size_t r = input.rank;
    auto square = [r](const SeriesMatrix& x) { return x.rows() == r && x.cols() == r; };
    if (input.connection.size() != m || input.higgs.size() != m || !square(input.r0) || !square(input.r_inf) || !square(input.metric)
        || !std::all_of(input.connection.begin(), input.connection.end(), square)
        || !std::all_of(input.higgs.begin(), input.higgs.end(), square)) {
        throw std::invalid_argument("verify_presaito: malformed dimensions");
    }
    int ord = std::min(order, input.order());
    cert.notes.push_back("verified to order " + std::to_string(ord));
    cert.notes.push_back(input.r_inf.is_zero() ? "R_inf = 0" : "R_inf nonzero");
    const auto& names = input.coords;
    auto tr = [ord](const SeriesMatrix& x) { return x.truncated(ord); };
    std::vector<SeriesMatrix> A, Phi;
    for (std::size_t a = 0; a < m; ++a) {
        A.push_back(tr(input.connection[a]));
        Phi.push_back(tr(input.higgs[a]));
    }
    SeriesMatrix R0 = tr(input.r0);
    SeriesMatrix Rinf = tr(input.r_inf);
    SeriesMatrix G = tr(input.metric);
    auto d = [](const SeriesMatrix& x, std::size_t a) { return x.derivative(static_cast<int>(a)); };
    auto nabla = [&](const SeriesMatrix& x, std::size_t a) { return d(x, a) + commutator(A[a], x); };

    {
        ZeroCheck z{names};
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t b = a + 1; b < m; ++b) {
                z(d(A[b], a) - d(A[a], b) + commutator(A[a], A[b]), "curvature " + idx({a, b}));
            }
        }
        cert.add("connection flat", z.pass, z.witness);
    }
    {
        ZeroCheck z{names};
        for (std::size_t a = 0; a < m; ++a) {
            z(d(G, a) - A[a].transpose() * G - G * A[a], "nabla_" + std::to_string(a) + " g");
        }
        cert.add("metric flat", z.pass, z.witness);
    }
    bool nondegenerate = G.constant_part().determinant() != 0;
    cert.add("metric nondegenerate at origin", nondegenerate, nondegenerate ? "" : "det g(0) = 0");
    {
        ZeroCheck z{names};
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t b = a + 1; b < m; ++b) {
                z(nabla(Phi[b], a) - nabla(Phi[a], b), "nabla_a Phi_b - nabla_b Phi_a " + idx({a, b}));
            }
        }
        cert.add("higgs closed", z.pass, z.witness);
    }
    {
        ZeroCheck z{names};
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t b = a + 1; b < m; ++b) {
                z(commutator(Phi[a], Phi[b]), "[Phi_a, Phi_b] " + idx({a, b}));
            }
        }
        cert.add("higgs commuting", z.pass, z.witness);
    }
    {
        ZeroCheck z{names};
        for (std::size_t a = 0; a < m; ++a) {
            z(commutator(R0, Phi[a]), "[R0, Phi_" + std::to_string(a) + "]");
        }
        cert.add("R0 commutes with higgs", z.pass, z.witness);
    }
    {
        ZeroCheck z{names};
        for (std::size_t a = 0; a < m; ++a) {
            z(Phi[a] + nabla(R0, a) - commutator(Phi[a], Rinf), "Phi_a + nabla_a R0 - [Phi_a, R_inf], a=" + std::to_string(a));
        }
        cert.add("higgs equals minus nabla R0", z.pass, z.witness);
    }
    {
        ZeroCheck z{names};
        for (std::size_t a = 0; a < m; ++a) {
            z(nabla(Rinf, a), "nabla_" + std::to_string(a) + " R_inf");
        }
        cert.add("R_inf flat", z.pass, z.witness);
    }
    {
        ZeroCheck z{names};
        for (std::size_t a = 0; a < m; ++a) {
            z(Phi[a].transpose() * G - G * Phi[a], "Phi_" + std::to_string(a) + "^T g - g Phi_" + std::to_string(a));
        }
        cert.add("higgs self-adjoint", z.pass, z.witness);
    }
    {
        ZeroCheck z{names};
        z(R0.transpose() * G - G * R0, "R0^T g - g R0");
        cert.add("R0 self-adjoint", z.pass, z.witness);
    }
    return cert;
}

namespace {

SeriesMatrix period_map(const PreSaitoData& p, const SeriesVector& omega)
{
    std::size_t m = p.coords.size();
    int ord = std::min(p.order(), min_order(omega, TruncSeries::max_order));
    SeriesMatrix psi(p.rank, m, static_cast<int>(m), ord);
    for (std::size_t a = 0; a < m; ++a) {
        auto col = p.higgs[a].apply(omega);
        for (std::size_t i = 0; i < p.rank; ++i) {
            psi(i, a) = col[i];
        }
    }
    return psi;
}

} // namespace

Certificate verify_primitive_form(const PreSaitoData& p, const SeriesVector& omega, int order)
{
    Certificate cert;
    cert.subject = "primitive form";
    if (omega.size() != p.rank) {
        throw std::invalid_argument("verify_primitive_form: section has wrong rank");
    }
    int ord = std::min({order, p.order(), min_order(omega, TruncSeries::max_order)});
    cert.notes.push_back("verified to order " + std::to_string(ord));
    SeriesVector w;
    for (const auto& s : omega) {
        w.push_back(s.truncated(ord));
    }
    ZeroCheck z{p.coords};
    for (std::size_t a = 0; a < p.coords.size(); ++a) {
        auto aw = p.connection[a].truncated(ord).apply(w);
        for (std::size_t i = 0; i < p.rank; ++i) {
            z(w[i].derivative(static_cast<int>(a)) + aw[i], "nabla_" + std::to_string(a) + " omega^" + std::to_string(i));
        }
    }
    cert.add("section flat", z.pass, z.witness);
    QMatrix psi0 = period_map(p, w).constant_part();
    bool square = psi0.rows() == psi0.cols();
    bool invertible = square && psi0.determinant() != 0;
    std::string why = !square ? "rank " + std::to_string(p.rank) + " != dim " + std::to_string(p.coords.size())
                              : "det phi_omega(0) = 0";
    cert.add("phi_omega invertible at origin", invertible, invertible ? "" : why);
    return cert;
}

FrobeniusData frobenius_from_primitive_form(const PreSaitoData& p, const SeriesVector& omega, SignConvention convention)
{
    std::size_t m = p.coords.size();
    if (omega.size() != p.rank || p.rank != m) {
        throw std::domain_error("primitive form: rank and base dimension differ");
    }
    SeriesMatrix psi = period_map(p, omega);
    if (psi.constant_part().determinant() == 0) {
        throw std::domain_error("primitive form: phi_omega is singular at the origin");
    }
    SeriesMatrix psi_inv = psi.inverse();
    FrobeniusData f;
    f.coords = p.coords;
    for (std::size_t a = 0; a < m; ++a) {
        f.product.push_back(psi_inv * (-p.higgs[a]) * psi);
    }
    Rational s = convention == SignConvention::unit_normalized ? Rational(-1) : Rational(1);
    SeriesVector r0w = p.r0.apply(omega);
    f.unit = psi_inv.apply(omega);
    f.euler = psi_inv.apply(r0w);
    for (std::size_t i = 0; i < m; ++i) {
        f.unit[i] *= s;
        f.euler[i] *= s;
    }
    f.metric = psi.transpose() * p.metric * psi;
    f.flat_coords = false;
    return f;
}

} // namespace gepner
