#include "gepner/zeta.hpp"

#include "gepner/symmetry.hpp"

#include <algorithm>
#include <stdexcept>

namespace gepner::zeta {

namespace {

Exponent sorted_down(Exponent e)
{
    std::sort(e.begin(), e.end(), std::greater<>());
    return e;
}

std::vector<std::string> s_names(std::size_t m)
{
    std::vector<std::string> out;
    for (std::size_t b = 0; b < m; ++b) {
        out.push_back("s" + std::to_string(b));
    }
    return out;
}

} // namespace

MultiPoly exact_divide(const MultiPoly& p, const MultiPoly& q)
{
    if (q.is_zero()) {
        throw std::invalid_argument("exact_divide: division by zero");
    }
    MultiPoly rest = p.aligned_to(q.vars());
    MultiPoly quotient(q.vars());
    while (!rest.is_zero()) {
        const Exponent& lp = rest.leading_exponent();
        if (!divides(q.leading_exponent(), lp)) {
            throw std::invalid_argument("exact_divide: remainder " + rest.to_string());
        }
        MultiPoly t = MultiPoly::monomial(q.vars(), exponent_difference(lp, q.leading_exponent()),
            rest.leading_coeff() / q.leading_coeff());
        quotient += t;
        rest -= t * q;
    }
    return quotient;
}

MatchedUnfoldings matched_unfoldings(const quotient::ExactSequence& s, const quotient::Splitting& iota)
{
    std::size_t m = iota.representatives.size();
    std::vector<MultiPoly> psi;
    for (const auto& rep : iota.representatives) {
        psi.push_back(sym::rewrite_in_elementary(rep));
    }
    MatchedUnfoldings out{Unfolding(s.jf->polynomial(), iota.representatives, s_names(m)),
        Unfolding(s.jg->polynomial(), psi, s_names(m)), {}};
    out.certificate.subject = "matched unfoldings";
    bool ok = sym::to_x(s.jg->polynomial(), s.n) == s.jf->polynomial();
    std::string witness = ok ? "" : "F != G o sigma";
    for (std::size_t b = 0; b < m && ok; ++b) {
        if (!(sym::to_x(psi[b], s.n) == iota.representatives[b])) {
            ok = false;
            witness = "deformation " + std::to_string(b);
        }
    }
    out.certificate.add("F~_N = G~ o sigma", ok, witness);
    // chain rule for the total differential, parameter by parameter
    bool chain = ok;
    for (std::size_t i = 0; i < s.n && chain; ++i) {
        MultiPoly lhs = out.f_side.f.derivative(i);
        MultiPoly rhs(lhs.vars());
        for (std::size_t j = 0; j < s.n; ++j) {
            rhs += sym::elementary_symmetric(j + 1, s.n).derivative(i) * sym::to_x(out.g_side.f.derivative(j), s.n);
        }
        chain = lhs == rhs;
        for (std::size_t b = 0; b < m && chain; ++b) {
            MultiPoly l = out.f_side.deformations[b].derivative(i);
            MultiPoly r(l.vars());
            for (std::size_t j = 0; j < s.n; ++j) {
                r += sym::elementary_symmetric(j + 1, s.n).derivative(i) * sym::to_x(psi[b].derivative(j), s.n);
            }
            chain = l == r;
        }
    }
    out.certificate.add("dF~_N = d(G~ o sigma)", chain, "chain rule");
    return out;
}

FamilyPoly j_isomorphism(const FamilyPoly& psi, std::size_t n)
{
    MultiPoly wn = sym::vandermonde(n);
    auto ys = sym::y_vars(n);
    std::vector<MultiPoly> polys;
    std::vector<TruncSeries> coeffs;
    for (const auto& [e, c] : psi.terms()) {
        polys.push_back(sym::to_x(MultiPoly::monomial(ys, e), n) * wn);
        coeffs.push_back(c);
    }
    if (polys.empty()) {
        return FamilyPoly(n, psi.params(), psi.order());
    }
    return FamilyPoly::from_terms(polys, coeffs);
}

FamilyPoly rewrite_in_elementary(const FamilyPoly& p, std::size_t n)
{
    auto xs = sym::x_vars(n);
    std::vector<MultiPoly> polys;
    std::vector<TruncSeries> coeffs;
    for (const auto& [e, c] : p.terms()) {
        for (const auto& w : sym::permutations(n)) {
            Exponent we(n);
            for (std::size_t i = 0; i < n; ++i) {
                we[i] = e[w.images[i]];
            }
            if (!(p.coeff(we) == c)) {
                throw std::invalid_argument("rewrite_in_elementary: density is not symmetric");
            }
        }
        Exponent r = sorted_down(e);
        if (r != e) {
            continue;
        }
        // symmetrize sums over S_n; divide by the stabilizer size to get the orbit sum
        Rational stab = 1;
        for (std::size_t i = 0; i < n;) {
            std::size_t j = i;
            while (j < n && e[j] == e[i]) {
                ++j;
            }
            for (std::size_t f = 2; f <= j - i; ++f) {
                stab *= static_cast<long>(f);
            }
            i = j;
        }
        polys.push_back(sym::rewrite_in_elementary(sym::symmetrize(MultiPoly::monomial(xs, e), sym::Character::trivial)) * (1 / stab));
        coeffs.push_back(c);
    }
    if (polys.empty()) {
        return FamilyPoly(n, p.params(), p.order());
    }
    return FamilyPoly::from_terms(polys, coeffs);
}

PairingComparison compare_residue_pairings(const quotient::ExactSequence& s, const quotient::Splitting& iota, int d)
{
    PairingComparison out;
    Certificate& cert = out.certificate;
    cert.subject = "residue pairings under j, k=" + std::to_string(s.k) + " n=" + std::to_string(s.n);
    auto matched = matched_unfoldings(s, iota);
    cert.add("unfoldings match", matched.certificate.passed(), matched.certificate.summary());
    int m = static_cast<int>(iota.representatives.size());
    bool all_prop = true;
    std::string witness;
    for (int p = 0; p <= d; ++p) {
        FamilyMilnorAlgebra fg(matched.g_side, p);
        FamilyMilnorAlgebra ff(matched.f_side, p);
        std::vector<FamilyPoly> gframe, fframe;
        for (int b = 0; b < m; ++b) {
            gframe.push_back(FamilyPoly::from_poly(matched.g_side.deformations[b], m, p));
            fframe.push_back(j_isomorphism(gframe.back(), s.n));
        }
        FamilyPoly one_g = FamilyPoly::from_poly(MultiPoly::constant(s.jg->vars(), 1), m, p);
        FamilyPoly one_f = FamilyPoly::from_poly(MultiPoly::constant(s.jf->vars(), 1), m, p);
        SeriesMatrix gg = fg.pairing(gframe, one_g).truncated(p);
        SeriesMatrix gf = ff.pairing(fframe, one_f).truncated(p);
        Rational kappa = 0;
        QMatrix g0 = gg.constant_part();
        QMatrix f0 = gf.constant_part();
        for (int a = 0; a < m && kappa == 0; ++a) {
            for (int b = 0; b < m; ++b) {
                if (g0(a, b) != 0) {
                    kappa = f0(a, b) / g0(a, b);
                    break;
                }
            }
        }
        out.kappa_by_order.push_back(kappa);
        SeriesMatrix diff = gf - kappa * gg;
        if (kappa == 0 || !diff.is_zero()) {
            all_prop = false;
            if (witness.empty()) {
                witness = "order " + std::to_string(p) + ": "
                    + (kappa == 0 ? std::string("G-side pairing vanishes") : diff.first_nonzero(matched.g_side.params));
            }
        }
    }
    cert.add("pairings proportional", all_prop, witness);
    bool same = std::all_of(out.kappa_by_order.begin(), out.kappa_by_order.end(),
        [&](const Rational& r) { return r == out.kappa_by_order.front(); });
    out.kappa = out.kappa_by_order.empty() ? Rational(0) : out.kappa_by_order.front();
    cert.add("kappa independent of order", same, "kappa varies with the order");
    cert.notes.push_back("kappa = " + out.kappa.get_str());
    return out;
}

ZetaResult assemble_zeta(const quotient::ExactSequence& s, const quotient::FixedLocus& m, const quotient::OmegaResult& omega,
    const quotient::Splitting& iota, const quotient::NStructure& n, const Rational& kappa)
{
    ZetaResult out;
    Certificate& cert = out.comparison;
    cert.subject = "zeta cross-check k=" + std::to_string(s.k) + " n=" + std::to_string(s.n);
    int d = m.order;
    int S = static_cast<int>(iota.representatives.size());
    auto matched = matched_unfoldings(s, iota);
    cert.add("unfoldings match", matched.certificate.passed(), matched.certificate.summary());

    // t -> u -> s
    std::vector<TruncSeries> images;
    for (const auto& e : m.embedding) {
        images.push_back(e.compose(n.embedding).truncated(d));
    }
    FamilyPoly phi(s.n, S, d);
    for (const auto& [e, c] : m.primitive.density.terms()) {
        phi.add_term(e, c.compose(images).truncated(d));
    }
    FamilyPoly phi_y;
    try {
        phi_y = rewrite_in_elementary(phi, s.n);
        cert.add("phi symmetric", true, "");
    } catch (const std::invalid_argument& err) {
        cert.add("phi symmetric", false, err.what());
        return out;
    }

    // omega / w_n: each antiinvariant frame vector divided by w_n, then rewritten in y
    MultiPoly wn = sym::vandermonde(s.n);
    std::vector<MultiPoly> quotients;
    bool divisible = true;
    std::string div_witness;
    for (const auto& a : s.iso.antiinvariants) {
        try {
            quotients.push_back(sym::rewrite_in_elementary(exact_divide(a, wn)));
        } catch (const std::invalid_argument& err) {
            divisible = false;
            div_witness = err.what();
            break;
        }
    }
    cert.add("omega divisible by w_n", divisible, div_witness);
    if (!divisible) {
        return out;
    }
    std::vector<TruncSeries> coeffs;
    for (const auto& w : n.omega) {
        coeffs.push_back(w.truncated(d));
    }
    FamilyPoly ratio = FamilyPoly::from_terms(quotients, coeffs);
    out.density = (ratio * phi_y).truncated(d);
    MultiPoly at0 = out.density.at_origin(s.jg->vars());
    cert.add("zeta at origin is a constant multiple of dy", at0.is_constant() && !at0.is_zero(),
        "zeta(0) = " + at0.to_string() + " dy");

    out.family = std::make_shared<FamilyMilnorAlgebra>(matched.g_side, d);
    out.saito = saito::saito_structure(*out.family, out.density);
    const FrobeniusData& z = out.saito.frobenius;
    const FrobeniusData& q = n.frobenius;
    out.verification = verify_frobenius_axioms(z, d);
    out.verification.certificate.subject = "zeta-induced frobenius";

    auto names = matched.g_side.params;
    bool prod = true;
    std::string wp;
    for (int a = 0; a < S && prod; ++a) {
        SeriesMatrix diff = q.product[a].truncated(d) - z.product[a].truncated(d);
        if (!diff.is_zero()) {
            prod = false;
            wp = "c_" + std::to_string(a) + " " + diff.first_nonzero(names);
        }
    }
    cert.add("structure constants equal", prod, wp);
    bool unit = true, euler = true;
    std::string wu, we;
    for (int a = 0; a < S; ++a) {
        TruncSeries du = q.unit[a].truncated(d) - z.unit[a].truncated(d);
        if (unit && !du.is_zero()) {
            unit = false;
            wu = "e^" + std::to_string(a) + ": " + du.lowest_term(names);
        }
        TruncSeries de = q.euler[a].truncated(d) - z.euler[a].truncated(d);
        if (euler && !de.is_zero()) {
            euler = false;
            we = "E^" + std::to_string(a) + ": " + de.lowest_term(names);
        }
    }
    cert.add("units equal", unit, wu);
    cert.add("euler fields equal", euler, we);
    SeriesMatrix dm = q.metric.truncated(d) - kappa * z.metric.truncated(d);
    cert.add("metric = kappa * zeta metric", dm.is_zero(), dm.is_zero() ? "" : dm.first_nonzero(names));
    cert.notes.push_back("kappa = " + kappa.get_str());
    return out;
}

} // namespace gepner::zeta
