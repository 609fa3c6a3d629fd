#include "gepner/quotient.hpp"

#include "gepner/groebner.hpp"
#include "gepner/symmetry.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gepner::quotient {

namespace {

bool non_increasing(const Exponent& e)
{
    return std::is_sorted(e.begin(), e.end(), std::greater<>());
}

bool strictly_decreasing(const Exponent& e)
{
    return std::adjacent_find(e.begin(), e.end(), std::less_equal<>()) == e.end();
}

Exponent sorted_down(Exponent e)
{
    std::sort(e.begin(), e.end(), std::greater<>());
    return e;
}

// Sign of the permutation sorting e (distinct entries) into decreasing order.
int sorting_sign(const Exponent& e)
{
    int inv = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::size_t j = i + 1; j < e.size(); ++j) {
            inv += e[i] < e[j] ? 1 : 0;
        }
    }
    return inv % 2 == 0 ? 1 : -1;
}

std::string exponent_name(const std::string& stem, const Exponent& e)
{
    std::string s = stem;
    for (int x : e) {
        s += std::to_string(x);
    }
    return s;
}

std::size_t basis_index(const milnor::MilnorAlgebra& a, const Exponent& e)
{
    auto i = a.index_of(e);
    if (!i) {
        throw std::logic_error("exponent outside the monomial basis");
    }
    return *i;
}

std::vector<Exponent> monomials_up_to(std::size_t n, int degree)
{
    std::vector<Exponent> out;
    Exponent cur(n, 0);
    // odometer over all exponents with total degree <= degree
    while (true) {
        out.push_back(cur);
        std::size_t i = 0;
        for (; i < n; ++i) {
            ++cur[i];
            int total = 0;
            for (int x : cur) {
                total += x;
            }
            if (total <= degree) {
                break;
            }
            cur[i] = 0;
        }
        if (i == n) {
            break;
        }
    }
    return out;
}

} // namespace

std::vector<Rational> Isotypic::invariant_coords(const milnor::MilnorAlgebra& jf, const MultiPoly& p) const
{
    auto c = jf.normal_form(p);
    std::vector<Rational> out(orbit_reps.size());
    for (std::size_t i = 0; i < orbit_reps.size(); ++i) {
        out[i] = c[basis_index(jf, orbit_reps[i])];
    }
    for (std::size_t b = 0; b < c.size(); ++b) {
        if (c[b] != out[orbit_of.at(jf.basis()[b])]) {
            throw std::invalid_argument("invariant_coords: class is not symmetric");
        }
    }
    return out;
}

std::vector<Rational> Isotypic::anti_coords(const milnor::MilnorAlgebra& jf, const MultiPoly& p) const
{
    auto c = jf.normal_form(p);
    std::vector<Rational> out(anti_reps.size());
    std::map<Exponent, std::size_t> pos;
    for (std::size_t i = 0; i < anti_reps.size(); ++i) {
        out[i] = c[basis_index(jf, anti_reps[i])];
        pos.emplace(anti_reps[i], i);
    }
    for (std::size_t b = 0; b < c.size(); ++b) {
        const Exponent& e = jf.basis()[b];
        Exponent s = sorted_down(e);
        Rational expect = strictly_decreasing(s) ? out[pos.at(s)] * sorting_sign(e) : Rational(0);
        if (c[b] != expect) {
            throw std::invalid_argument("anti_coords: class is not alternating");
        }
    }
    return out;
}

Isotypic invariants_and_antiinvariants(const milnor::MilnorAlgebra& jf, std::size_t n)
{
    Isotypic iso;
    iso.n = n;
    const auto& vars = jf.vars();
    if (vars.size() != n) {
        throw std::invalid_argument("invariants_and_antiinvariants: variable count differs from n");
    }
    auto perms = sym::permutations(n);
    for (const auto& e : jf.basis()) {
        for (const auto& w : perms) {
            Exponent we(n);
            for (std::size_t i = 0; i < n; ++i) {
                we[i] = e[w.images[i]];
            }
            if (!jf.index_of(we)) {
                throw std::invalid_argument("monomial basis is not permutation stable");
            }
        }
    }
    for (const auto& e : jf.basis()) {
        if (non_increasing(e)) {
            iso.orbit_reps.push_back(e);
            std::set<Exponent> orbit;
            MultiPoly sum(vars);
            for (const auto& w : perms) {
                Exponent we(n);
                for (std::size_t i = 0; i < n; ++i) {
                    we[i] = e[w.images[i]];
                }
                if (orbit.insert(we).second) {
                    sum.add_term(we, 1);
                }
            }
            iso.invariants.push_back(sum);
        }
        if (strictly_decreasing(e)) {
            iso.anti_reps.push_back(e);
            MultiPoly sum(vars);
            for (const auto& w : perms) {
                Exponent we(n);
                for (std::size_t i = 0; i < n; ++i) {
                    we[i] = e[w.images[i]];
                }
                sum.add_term(we, w.sign);
            }
            iso.antiinvariants.push_back(sum);
        }
    }
    for (std::size_t i = 0; i < iso.orbit_reps.size(); ++i) {
        iso.orbit_of[iso.orbit_reps[i]] = i;
    }
    for (const auto& e : jf.basis()) {
        iso.orbit_of[e] = iso.orbit_of.at(sorted_down(e));
    }
    return iso;
}

std::vector<Rational> project(const ExactSequence& s, const MultiPoly& symmetric)
{
    return s.jg->normal_form(sym::rewrite_in_elementary(symmetric.aligned_to(sym::x_vars(s.n))));
}

namespace {

bool columns_span_zero(const QMatrix& m)
{
    return m.is_zero();
}

} // namespace

ExactSequence build_exact_sequence(std::size_t k, std::size_t n)
{
    if (n < 1 || k <= n) {
        throw std::invalid_argument("exact sequence requires k > n >= 1");
    }
    ExactSequence s;
    s.k = k;
    s.n = n;
    s.jf = std::make_shared<milnor::MilnorAlgebra>(sym::fermat_polynomial(k, n));
    s.jg = std::make_shared<milnor::MilnorAlgebra>(sym::gepner_polynomial(k, n));
    s.iso = invariants_and_antiinvariants(*s.jf, n);
    const auto& iso = s.iso;
    std::size_t W = iso.invariants.size();
    std::size_t A = iso.antiinvariants.size();
    std::size_t muG = s.jg->dimension();
    MultiPoly wn = sym::vandermonde(n);
    Certificate& cert = s.certificate;
    cert.subject = "exact sequence k=" + std::to_string(k) + " n=" + std::to_string(n);

    s.projection = QMatrix(muG, W);
    s.times_wn = QMatrix(A, W);
    for (std::size_t i = 0; i < W; ++i) {
        auto p = project(s, iso.invariants[i]);
        auto q = iso.anti_coords(*s.jf, iso.invariants[i] * wn);
        for (std::size_t r = 0; r < muG; ++r) {
            s.projection(r, i) = p[r];
        }
        for (std::size_t r = 0; r < A; ++r) {
            s.times_wn(r, i) = q[r];
        }
    }
    Rational expected = binomial(static_cast<long>(k - 1), static_cast<long>(n));
    cert.add("dim J_G = C(k-1,n)", Rational(static_cast<long>(muG)) == expected,
        "dim J_G = " + std::to_string(muG) + ", C(k-1,n) = " + expected.get_str());
    cert.add("antiinvariant dimension = C(k-1,n)", Rational(static_cast<long>(A)) == expected, "antiinvariants: " + std::to_string(A));

    // I_F^W is spanned by symmetrizations of x^a dF/dx_1; past the top degree
    // of J_G everything lands in I_G, so bounded degrees suffice.
    {
        int top = 0;
        for (const auto& b : s.jg->basis()) {
            int deg = 0;
            for (std::size_t i = 0; i < n; ++i) {
                deg += static_cast<int>(i + 1) * b[i];
            }
            top = std::max(top, deg);
        }
        auto xs = sym::x_vars(n);
        MultiPoly f1 = s.jf->polynomial().derivative(std::size_t{0});
        bool ok = true;
        std::string witness;
        int budget = top - static_cast<int>(k - 1);
        if (budget >= 0) {
            for (const auto& a : monomials_up_to(n, budget)) {
                MultiPoly sym_elem = sym::symmetrize(MultiPoly::monomial(xs, a) * f1, sym::Character::trivial);
                auto c = project(s, sym_elem);
                if (std::any_of(c.begin(), c.end(), [](const Rational& r) { return r != 0; })) {
                    ok = false;
                    witness = "symmetrization of " + monomial_string(xs, a) + " * dF/dx1";
                    break;
                }
            }
        }
        cert.add("I_F^W in I_G", ok, witness);
    }
    // w_n * G_j(sigma) in I_F for the generators of I_G
    {
        bool ok = true;
        std::string witness;
        for (std::size_t j = 0; j < n; ++j) {
            MultiPoly gj = sym::to_x(s.jg->polynomial().derivative(j), n);
            if (!s.jf->reduce(wn * gj).is_zero()) {
                ok = false;
                witness = "w_n * dG/dy" + std::to_string(j + 1);
                break;
            }
        }
        cert.add("w_n I_G in I_F", ok, witness);
    }
    s.kernel = s.projection.kernel();
    cert.add("composite zero", columns_span_zero(s.times_wn * s.kernel), "w_n * ker(pi) != 0");
    {
        auto sol = linear_solve(s.projection.transpose(), s.times_wn.transpose());
        cert.add("w_n factors through J_G", sol.consistent, "no induced map");
        if (sol.consistent) {
            s.induced = sol.particular.transpose();
        }
    }
    std::size_t rank_pi = s.projection.rank();
    std::size_t rank_w = s.times_wn.rank();
    cert.add("projection surjective", rank_pi == muG, "rank " + std::to_string(rank_pi) + " < " + std::to_string(muG));
    s.dim_middle = W;
    s.dim_quotient = muG;
    s.dim_kernel = W - rank_w;
    cert.add("dimension additivity", s.dim_kernel + muG == W,
        std::to_string(s.dim_kernel) + " + " + std::to_string(muG) + " != " + std::to_string(W));
    cert.add("w_n surjective onto antiinvariants", rank_w == A, "rank " + std::to_string(rank_w) + " < " + std::to_string(A));
    cert.notes.push_back("dims (ker, J_F^W, J_G) = (" + std::to_string(s.dim_kernel) + ", " + std::to_string(W) + ", "
        + std::to_string(muG) + ")");
    return s;
}

JacobiMinors jacobi_minor_identity(std::size_t k, std::size_t n)
{
    if (n < 1 || k <= n) {
        throw std::invalid_argument("jacobi_minor_identity requires k > n >= 1");
    }
    JacobiMinors out;
    Certificate& cert = out.certificate;
    cert.subject = "jacobi minors k=" + std::to_string(k) + " n=" + std::to_string(n);
    MultiPoly F = sym::fermat_polynomial(k, n);
    MultiPoly G = sym::gepner_polynomial(k, n);
    MultiPoly wn = sym::vandermonde(n);
    std::vector<std::vector<MultiPoly>> jac(n, std::vector<MultiPoly>(n));
    std::vector<MultiPoly> sigmas;
    for (std::size_t j = 0; j < n; ++j) {
        sigmas.push_back(sym::elementary_symmetric(j + 1, n));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            jac[i][j] = sigmas[j].derivative(i);
        }
    }
    out.determinant = milnor::poly_determinant(jac);
    int sign = out.determinant == wn ? 1 : (out.determinant == -wn ? -1 : 0);
    cert.add("det Jacobi = +-w_n", sign != 0, "det = " + out.determinant.to_string());
    cert.notes.push_back(sign >= 0 ? "det Jacobi = w_n" : "det Jacobi = -w_n");

    std::vector<MultiPoly> gsig;
    for (std::size_t j = 0; j < n; ++j) {
        gsig.push_back(sym::to_x(G.derivative(j), n));
    }
    {
        bool ok = true;
        std::string witness;
        for (std::size_t i = 0; i < n && ok; ++i) {
            MultiPoly rhs(F.vars());
            for (std::size_t j = 0; j < n; ++j) {
                rhs += jac[i][j] * gsig[j];
            }
            if (!(rhs == F.derivative(i))) {
                ok = false;
                witness = "dF/dx" + std::to_string(i + 1);
            }
        }
        cert.add("chain rule", ok, witness);
    }
    // a_ij = +-adj(Jac)_{ji}: sum_i adj_{ji} Jac_{il} = det delta_jl.
    out.coefficients.assign(n, std::vector<MultiPoly>(n, MultiPoly(F.vars())));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            MultiPoly cof = MultiPoly::constant(F.vars(), 1);
            if (n > 1) {
                std::vector<std::vector<MultiPoly>> minor;
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == i) {
                        continue;
                    }
                    std::vector<MultiPoly> row;
                    for (std::size_t c = 0; c < n; ++c) {
                        if (c != j) {
                            row.push_back(jac[r][c]);
                        }
                    }
                    minor.push_back(std::move(row));
                }
                cof = milnor::poly_determinant(minor);
            }
            Rational sgn = ((i + j) % 2 == 0 ? 1 : -1) * (sign == 0 ? 1 : sign);
            out.coefficients[i][j] = cof * sgn;
        }
    }
    {
        bool ok = sign != 0;
        std::string witness = ok ? "" : "determinant";
        for (std::size_t j = 0; j < n && ok; ++j) {
            MultiPoly rhs(F.vars());
            for (std::size_t i = 0; i < n; ++i) {
                rhs += out.coefficients[i][j] * F.derivative(i);
            }
            if (!(rhs == wn * gsig[j])) {
                ok = false;
                witness = "w_n dG/dy" + std::to_string(j + 1) + "(sigma)";
            }
        }
        cert.add("minor identity", ok, witness);
    }
    return out;
}

Certificate verify_wn_surjective(const ExactSequence& s)
{
    Certificate cert;
    cert.subject = "multiplication by w_n k=" + std::to_string(s.k) + " n=" + std::to_string(s.n);
    std::size_t r = s.times_wn.rank();
    std::size_t a = s.iso.antiinvariants.size();
    cert.add("surjective onto antiinvariants", r == a, "rank " + std::to_string(r) + " of " + std::to_string(a));
    cert.notes.push_back("matrix " + std::to_string(s.times_wn.rows()) + "x" + std::to_string(s.times_wn.cols()) + ", rank "
        + std::to_string(r));
    return cert;
}

std::string to_string(SplittingStrategy s)
{
    switch (s) {
    case SplittingStrategy::monomial:
        return "monomial";
    case SplittingStrategy::weight_graded:
        return "weight-graded";
    case SplittingStrategy::custom:
        return "custom";
    }
    return "?";
}

SplittingStrategy parse_splitting(const std::string& s)
{
    if (s == "monomial") {
        return SplittingStrategy::monomial;
    }
    if (s == "weight-graded") {
        return SplittingStrategy::weight_graded;
    }
    if (s == "custom") {
        return SplittingStrategy::custom;
    }
    throw std::invalid_argument("unknown splitting strategy: " + s);
}

Splitting choose_splitting(const ExactSequence& s, SplittingStrategy strategy, const QMatrix* custom)
{
    std::size_t W = s.iso.invariants.size();
    std::size_t muG = s.jg->dimension();
    Splitting out;
    out.strategy = strategy;
    out.lift = QMatrix(W, muG);
    switch (strategy) {
    case SplittingStrategy::monomial:
        for (std::size_t b = 0; b < muG; ++b) {
            auto c = s.iso.invariant_coords(*s.jf, sym::to_x(s.jg->basis_element(b), s.n));
            for (std::size_t i = 0; i < W; ++i) {
                out.lift(i, b) = c[i];
            }
        }
        break;
    case SplittingStrategy::weight_graded: {
        // ker(w_n) is graded, so its complement in orbit-sum coordinates
        // (standard inner product) is spanned by homogeneous classes.
        QMatrix complement = s.kernel.transpose().kernel();
        if (s.kernel.cols() == 0) {
            complement = QMatrix::identity(W);
        }
        QMatrix restricted = s.projection * complement;
        if (restricted.rows() != restricted.cols() || restricted.determinant() == 0) {
            throw std::domain_error("weight-graded splitting: complement not mapped isomorphically");
        }
        out.lift = complement * restricted.inverse();
        break;
    }
    case SplittingStrategy::custom:
        if (!custom || custom->rows() != W || custom->cols() != muG) {
            throw std::invalid_argument("custom splitting: matrix has the wrong shape");
        }
        out.lift = *custom;
        break;
    }
    if (!(s.projection * out.lift == QMatrix::identity(muG))) {
        throw std::invalid_argument("splitting is not a right inverse of the projection");
    }
    for (std::size_t b = 0; b < muG; ++b) {
        MultiPoly rep(sym::x_vars(s.n));
        for (std::size_t i = 0; i < W; ++i) {
            if (out.lift(i, b) != 0) {
                rep += s.iso.invariants[i] * out.lift(i, b);
            }
        }
        out.representatives.push_back(rep);
    }
    return out;
}

namespace {

struct Restrictor {
    const QMatrix& frame;
    const std::vector<std::size_t>& rows; // basis index of each anti rep
    std::string failure;

    // Operator on the tangent frame (already restricted) to an operator on E.
    SeriesMatrix operator()(const SeriesMatrix& x, const std::vector<std::string>& names, const std::string& label)
    {
        std::size_t r = frame.cols();
        SeriesMatrix v = SeriesMatrix::constant(frame, x.nvars(), x.order());
        SeriesMatrix y = x * v;
        SeriesMatrix c(r, r, x.nvars(), x.order());
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < r; ++j) {
                c(i, j) = y(rows[i], j);
            }
        }
        SeriesMatrix residual = y - v * c;
        if (!residual.is_zero() && failure.empty()) {
            failure = label + " " + residual.first_nonzero(names);
        }
        return c;
    }
};

SeriesMatrix restricted(const SeriesMatrix& m, const std::vector<TruncSeries>& images, int order)
{
    return m.compose(images).truncated(order);
}

} // namespace

FixedLocus build_presaito(const ExactSequence& s, int order)
{
    FixedLocus out;
    out.order = order;
    const auto& jf = *s.jf;
    const auto& iso = s.iso;
    std::size_t n = s.n;
    std::size_t mu = jf.dimension();
    std::vector<std::string> tnames;
    std::vector<MultiPoly> defs;
    for (const auto& e : jf.basis()) {
        tnames.push_back(exponent_name("t", e));
        defs.push_back(MultiPoly::monomial(jf.vars(), e));
    }
    Unfolding u(jf.polynomial(), defs, tnames);
    out.family = std::make_shared<FamilyMilnorAlgebra>(u, order + 1);
    out.primitive = saito::solve_primitive_form(*out.family);
    out.full = saito::saito_structure(*out.family, out.primitive.density);
    const FrobeniusData& fd = out.full.frobenius;
    const PreSaitoData& ps = out.full.presaito;
    int M = static_cast<int>(mu);

    // Equivariance under adjacent transpositions of the variables.
    out.equivariance.subject = "S_n equivariance";
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::vector<std::size_t> p(mu);
        for (std::size_t a = 0; a < mu; ++a) {
            Exponent e = jf.basis()[a];
            std::swap(e[i], e[i + 1]);
            p[a] = basis_index(jf, e);
        }
        std::vector<TruncSeries> images;
        for (std::size_t a = 0; a < mu; ++a) {
            images.push_back(TruncSeries::variable(M, out.family->order(), static_cast<int>(p[a])));
        }
        std::string tag = "(" + std::to_string(i + 1) + " " + std::to_string(i + 2) + ")";
        bool ok_g = true, ok_c = true, ok_e = true, ok_E = true;
        std::string wg, wc, we, wE;
        for (std::size_t a = 0; a < mu; ++a) {
            if (ok_e && !(fd.unit[p[a]].compose(images) == fd.unit[a])) {
                ok_e = false;
                we = "e^" + std::to_string(a);
            }
            if (ok_E && !(fd.euler[p[a]].compose(images) == fd.euler[a])) {
                ok_E = false;
                wE = "E^" + std::to_string(a);
            }
            for (std::size_t b = 0; b < mu; ++b) {
                if (ok_g && !(fd.metric(p[a], p[b]).compose(images) == fd.metric(a, b))) {
                    ok_g = false;
                    wg = "g" + std::to_string(a) + "," + std::to_string(b);
                }
                for (std::size_t c = 0; c < mu && ok_c; ++c) {
                    if (!(fd.product[p[a]](p[c], p[b]).compose(images) == fd.product[a](c, b))) {
                        ok_c = false;
                        wc = "c^" + std::to_string(c) + "_" + std::to_string(a) + "," + std::to_string(b);
                    }
                }
            }
        }
        out.equivariance.add("metric " + tag, ok_g, wg);
        out.equivariance.add("product " + tag, ok_c, wc);
        out.equivariance.add("unit " + tag, ok_e, we);
        out.equivariance.add("euler " + tag, ok_E, wE);
    }

    // The fixed locus t_alpha = u_{orbit(alpha)}.
    std::size_t q = iso.orbit_reps.size();
    for (const auto& e : iso.orbit_reps) {
        out.params.push_back(exponent_name("u", e));
    }
    int Q = static_cast<int>(q);
    int ford = out.family->order();
    for (std::size_t a = 0; a < mu; ++a) {
        out.embedding.push_back(TruncSeries::variable(Q, ford, static_cast<int>(iso.orbit_of.at(jf.basis()[a]))));
    }
    std::size_t r = iso.anti_reps.size();
    out.frame = QMatrix(mu, r);
    std::vector<std::size_t> rows;
    auto perms = sym::permutations(n);
    for (std::size_t j = 0; j < r; ++j) {
        rows.push_back(basis_index(jf, iso.anti_reps[j]));
        for (const auto& w : perms) {
            Exponent we(n);
            for (std::size_t i = 0; i < n; ++i) {
                we[i] = iso.anti_reps[j][w.images[i]];
            }
            out.frame(basis_index(jf, we), j) = w.sign;
        }
    }

    PreSaitoData& p = out.presaito;
    p.coords = out.params;
    p.rank = r;
    Restrictor restrict_op{out.frame, rows, {}};
    for (std::size_t o = 0; o < q; ++o) {
        SeriesMatrix A(mu, mu, M, ps.connection[0].order());
        SeriesMatrix Phi(mu, mu, M, ps.higgs[0].order());
        for (std::size_t a = 0; a < mu; ++a) {
            if (iso.orbit_of.at(jf.basis()[a]) == o) {
                A = A + ps.connection[a];
                Phi = Phi + ps.higgs[a];
            }
        }
        p.connection.push_back(restrict_op(restricted(A, out.embedding, order), p.coords, "connection"));
        p.higgs.push_back(restrict_op(restricted(Phi, out.embedding, order), p.coords, "higgs"));
    }
    p.r0 = restrict_op(restricted(ps.r0, out.embedding, order), p.coords, "R0");
    p.r_inf = restrict_op(restricted(ps.r_inf, out.embedding, order), p.coords, "R_inf");
    SeriesMatrix g = restricted(ps.metric, out.embedding, order);
    SeriesMatrix v = SeriesMatrix::constant(out.frame, Q, order);
    p.metric = v.transpose() * g * v;
    out.equivariance.add("operators preserve the sign part", restrict_op.failure.empty(), restrict_op.failure);

    // ker(a) is g-orthogonal to E iff g(v_j, .) is again alternating.
    out.orthogonality.subject = "orthogonality";
    {
        SeriesMatrix gv = g * v;
        bool ok = true;
        std::string witness;
        for (std::size_t j = 0; j < r && ok; ++j) {
            for (std::size_t a = 0; a < mu && ok; ++a) {
                const Exponent& e = jf.basis()[a];
                Exponent sd = sorted_down(e);
                TruncSeries expect(Q, order);
                if (strictly_decreasing(sd)) {
                    expect = gv(basis_index(jf, sd), j) * Rational(sorting_sign(e));
                }
                if (!((gv(a, j) - expect).is_zero())) {
                    ok = false;
                    witness = "g(v_" + std::to_string(j) + ", d/dt" + monomial_string(jf.vars(), e) + ")";
                }
            }
        }
        out.orthogonality.add("ker a orthogonal to E", ok, witness);
    }
    out.certificate = verify_presaito(p, order);
    return out;
}

OmegaResult build_omega(const ExactSequence& s, const FixedLocus& m)
{
    const PreSaitoData& p = m.presaito;
    std::size_t r = p.rank;
    int Q = static_cast<int>(p.coords.size());
    int d = m.order;
    Exponent delta(s.n);
    for (std::size_t i = 0; i < s.n; ++i) {
        delta[i] = static_cast<int>(s.n - 1 - i);
    }
    auto it = std::find(s.iso.anti_reps.begin(), s.iso.anti_reps.end(), delta);
    if (it == s.iso.anti_reps.end()) {
        throw std::domain_error("build_omega: w_n vanishes in J_F");
    }
    std::size_t idelta = static_cast<std::size_t>(it - s.iso.anti_reps.begin());
    OmegaResult out;
    out.omega.assign(r, TruncSeries(Q, d));
    out.omega[idelta] = TruncSeries::constant(Q, d, 1);
    // d_O omega = -A_O omega; integrate degree by degree along the Euler field.
    for (int deg = 1; deg <= d; ++deg) {
        SeriesVector add(r, TruncSeries(Q, d));
        for (int o = 0; o < Q; ++o) {
            auto aw = p.connection[o].apply(out.omega);
            for (std::size_t i = 0; i < r; ++i) {
                add[i] -= aw[i].homogeneous_part(deg - 1).times_variable(o).truncated(d);
            }
        }
        for (std::size_t i = 0; i < r; ++i) {
            out.omega[i] += add[i] * frac(1, deg);
        }
    }
    Certificate& cert = out.certificate;
    cert.subject = "omega";
    {
        bool ok = true;
        std::string witness;
        for (int o = 0; o < Q && ok; ++o) {
            auto aw = p.connection[o].apply(out.omega);
            for (std::size_t i = 0; i < r && ok; ++i) {
                TruncSeries x = out.omega[i].derivative(o) + aw[i];
                if (!x.is_zero()) {
                    ok = false;
                    witness = "nabla_" + p.coords[o] + " omega^" + std::to_string(i) + ": " + x.lowest_term(p.coords);
                }
            }
        }
        cert.add("section flat", ok, witness);
    }
    QMatrix psi0(r, static_cast<std::size_t>(Q));
    for (int o = 0; o < Q; ++o) {
        QMatrix phi0 = p.higgs[o].constant_part();
        for (std::size_t i = 0; i < r; ++i) {
            psi0(i, o) = phi0(i, idelta);
        }
    }
    std::size_t rank = psi0.rank();
    cert.add("phi_omega surjective at origin", rank == r, "rank " + std::to_string(rank) + " of " + std::to_string(r));
    return out;
}

NStructure frobenius_on_N(const FixedLocus& m, const SeriesVector& omega, const Splitting& iota, SignConvention convention)
{
    NStructure out;
    const PreSaitoData& p = m.presaito;
    std::size_t q = p.coords.size();
    std::size_t muG = iota.lift.cols();
    int S = static_cast<int>(muG);
    int d = m.order;
    for (std::size_t b = 0; b < muG; ++b) {
        out.params.push_back("s" + std::to_string(b));
    }
    for (std::size_t o = 0; o < q; ++o) {
        TruncSeries x(S, d);
        for (std::size_t b = 0; b < muG; ++b) {
            if (iota.lift(o, b) != 0) {
                x += TruncSeries::variable(S, d, static_cast<int>(b)) * iota.lift(o, b);
            }
        }
        out.embedding.push_back(x);
    }
    PreSaitoData& n = out.presaito;
    n.coords = out.params;
    n.rank = p.rank;
    for (std::size_t b = 0; b < muG; ++b) {
        SeriesMatrix A(p.rank, p.rank, static_cast<int>(q), d);
        SeriesMatrix Phi(p.rank, p.rank, static_cast<int>(q), d);
        for (std::size_t o = 0; o < q; ++o) {
            if (iota.lift(o, b) != 0) {
                A = A + iota.lift(o, b) * p.connection[o];
                Phi = Phi + iota.lift(o, b) * p.higgs[o];
            }
        }
        n.connection.push_back(A.compose(out.embedding));
        n.higgs.push_back(Phi.compose(out.embedding));
    }
    n.r0 = p.r0.compose(out.embedding);
    n.r_inf = p.r_inf.compose(out.embedding);
    n.metric = p.metric.compose(out.embedding);
    for (const auto& w : omega) {
        out.omega.push_back(w.compose(out.embedding));
    }
    out.restriction = verify_primitive_form(n, out.omega, d);
    out.restriction.subject = "restriction to N";
    if (!out.restriction.passed()) {
        throw std::domain_error("frobenius_on_N: " + out.restriction.summary());
    }
    out.frobenius = frobenius_from_primitive_form(n, out.omega, convention);
    out.verification = verify_frobenius_axioms(out.frobenius, d);
    out.verification.certificate.subject = "frobenius on N";
    out.verification.certificate.notes.push_back("sign convention: " + to_string(convention));
    return out;
}

} // namespace gepner::quotient
