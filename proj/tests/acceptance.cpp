// Acceptance suite: one line per criterion, exit status 0 iff all pass.
#include "mutation.hpp"

#include "gepner/quotient.hpp"
#include "gepner/saito.hpp"
#include "gepner/symmetry.hpp"
#include "gepner/zeta.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace gepner;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

const std::vector<std::pair<std::size_t, std::size_t>> grid = {
    {3, 2}, {4, 2}, {4, 3}, {5, 2}, {5, 3}, {5, 4}, {6, 2}, {6, 3}, {7, 2}};

std::string kn(std::size_t k, std::size_t n)
{
    return "(" + std::to_string(k) + "," + std::to_string(n) + ")";
}

Outcome gepner_identity()
{
    Outcome o;
    int count = 0;
    for (std::size_t k = 2; k <= 7; ++k) {
        for (std::size_t n = 1; n < k; ++n) {
            ++count;
            if (!(sym::to_x(sym::gepner_polynomial(k, n), n) == sym::fermat_polynomial(k, n))) {
                o.pass = false;
                o.detail = "mismatch at " + kn(k, n);
                return o;
            }
        }
    }
    o.detail = std::to_string(count) + " instances with 1 <= n < k <= 7";
    return o;
}

Outcome dimension_formula()
{
    Outcome o;
    std::ostringstream d;
    for (auto [k, n] : grid) {
        milnor::MilnorAlgebra a(sym::gepner_polynomial(k, n));
        Rational c = binomial(static_cast<long>(k - 1), static_cast<long>(n));
        d << kn(k, n) << "=" << a.dimension() << " ";
        if (Rational(static_cast<long>(a.dimension())) != c) {
            o.pass = false;
        }
    }
    o.detail = d.str() + "(all equal C(k-1,n))";
    return o;
}

Outcome exact_sequences()
{
    Outcome o;
    for (auto [k, n] : grid) {
        auto s = quotient::build_exact_sequence(k, n);
        for (const char* name : {"composite zero", "I_F^W in I_G", "dimension additivity", "antiinvariant dimension = C(k-1,n)",
                 "projection surjective"}) {
            const Check* c = s.certificate.find(name);
            if (!c || !c->pass) {
                o.pass = false;
                o.detail = kn(k, n) + ": " + name;
                return o;
            }
        }
    }
    o.detail = "9 instances: composite zero, I_F^W in I_G, additivity, antiinvariant count";
    return o;
}

Outcome jacobi_minors()
{
    Outcome o;
    for (auto [k, n] : grid) {
        auto j = quotient::jacobi_minor_identity(k, n);
        if (!j.certificate.passed()) {
            o.pass = false;
            o.detail = kn(k, n) + ": " + j.certificate.summary();
            return o;
        }
    }
    o.detail = "9 instances, polynomial identity exact";
    return o;
}

Outcome a_models()
{
    Outcome o;
    const int d = 6;
    std::ostringstream out;
    for (int k = 3; k <= 6; ++k) {
        auto a = saito::a_model(k, d);
        bool ok = verify_presaito(a.saito.presaito, d).passed()
            && verify_primitive_form(a.saito.presaito, a.saito.omega, d).passed()
            && verify_frobenius_axioms(a.saito.frobenius, d).certificate.passed()
            && verify_frobenius_axioms(a.flat, d).certificate.passed();
        FamilyMilnorAlgebra fam(Unfolding::versal(MultiPoly::parse("z^" + std::to_string(k), {"z"})), d);
        auto c = saito::solve_primitive_form(fam);
        ok = ok && c.solution_dimension() == 1;
        out << "k=" << k << ":" << (ok ? "ok" : "FAIL") << " ";
        o.pass = o.pass && ok;
    }
    o.detail = out.str() + "order 6, solver solution space 1-dimensional";
    return o;
}

Outcome quotient_construction()
{
    Outcome o;
    std::ostringstream out;
    for (auto [k, d] : std::vector<std::pair<std::size_t, int>>{{3, 3}, {4, 2}}) {
        auto s = quotient::build_exact_sequence(k, 2);
        auto m = quotient::build_presaito(s, d);
        auto w = quotient::build_omega(s, m);
        auto iota = quotient::choose_splitting(s, quotient::SplittingStrategy::monomial);
        auto n = quotient::frobenius_on_N(m, w.omega, iota, SignConvention::unit_normalized);
        bool ok = m.certificate.passed() && m.equivariance.passed() && m.orthogonality.passed() && w.certificate.passed()
            && n.restriction.passed() && n.verification.certificate.passed();
        out << kn(k, 2) << " d=" << d << ":" << (ok ? "ok" : "FAIL") << " ";
        if (!ok) {
            o.detail = m.certificate.summary() + "; " + n.verification.certificate.summary();
        }
        o.pass = o.pass && ok;
    }
    if (o.pass) {
        o.detail = out.str() + "pre-Saito and Frobenius axioms";
    }
    return o;
}

Outcome wn_surjective()
{
    Outcome o;
    for (auto [k, n] : grid) {
        auto s = quotient::build_exact_sequence(k, n);
        if (!quotient::verify_wn_surjective(s).passed()) {
            o.pass = false;
            o.detail = kn(k, n);
            return o;
        }
    }
    o.detail = "rank of multiplication by w_n = C(k-1,n) on 9 instances";
    return o;
}

Outcome lemma_j()
{
    Outcome o;
    std::ostringstream out;
    for (std::size_t k : {3, 4, 5}) {
        auto s = quotient::build_exact_sequence(k, 2);
        auto iota = quotient::choose_splitting(s, quotient::SplittingStrategy::monomial);
        auto lj = zeta::compare_residue_pairings(s, iota, 2);
        out << kn(k, 2) << " kappa=" << lj.kappa.get_str() << " ";
        o.pass = o.pass && lj.certificate.passed();
    }
    o.detail = out.str() + "at orders 0,1,2";
    return o;
}

Outcome zeta_cross_check()
{
    Outcome o;
    std::ostringstream out;
    for (auto [k, d] : std::vector<std::pair<std::size_t, int>>{{3, 3}, {4, 2}}) {
        auto s = quotient::build_exact_sequence(k, 2);
        auto m = quotient::build_presaito(s, d);
        auto w = quotient::build_omega(s, m);
        auto iota = quotient::choose_splitting(s, quotient::SplittingStrategy::monomial);
        auto n = quotient::frobenius_on_N(m, w.omega, iota, SignConvention::unit_normalized);
        auto lj = zeta::compare_residue_pairings(s, iota, 0);
        auto z = zeta::assemble_zeta(s, m, w, iota, n, lj.kappa);
        bool ok = z.comparison.passed() && z.verification.certificate.passed();
        out << kn(k, 2) << " d=" << d << ":" << (ok ? "ok" : "FAIL") << " ";
        if (!ok) {
            o.detail = z.comparison.summary();
        }
        o.pass = o.pass && ok;
    }
    if (o.pass) {
        o.detail = out.str() + "structure constants, unit, Euler equal; metric equal up to kappa";
    }
    return o;
}

Outcome mutation_sensitivity()
{
    Outcome o;
    const int d = 5;
    auto a = saito::a_model(5, d);
    std::mt19937 rng(2024);
    int caught = 0;
    for (int i = 0; i < 10; ++i) {
        FrobeniusData f = a.flat;
        testing::mutate(rng, f, d - 2);
        caught += testing::localized_failure(verify_frobenius_axioms(f, d).certificate) ? 1 : 0;
        PreSaitoData p = a.saito.presaito;
        testing::mutate(rng, p, d - 2);
        caught += testing::localized_failure(verify_presaito(p, d)) ? 1 : 0;
        SeriesVector w = a.saito.omega;
        testing::mutate(rng, w, d - 1);
        caught += testing::localized_failure(verify_primitive_form(a.saito.presaito, w, d)) ? 1 : 0;
    }
    o.pass = caught == 30;
    o.detail = std::to_string(caught) + "/30 mutations caught with a witness (3 verifiers x 10)";
    return o;
}

} // namespace

int main()
{
    struct Criterion {
        int id;
        const char* name;
        double limit_s;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria = {
        {1, "Gepner identity", 5, gepner_identity},
        {2, "dimension formula", 60, dimension_formula},
        {3, "exact sequence", 120, exact_sequences},
        {4, "Jacobi-minor identity", 30, jacobi_minors},
        {5, "A-model certification", 600, a_models},
        {6, "quotient construction", 900, quotient_construction},
        {7, "surjectivity of multiplication by w_n", 10, wn_surjective},
        {8, "residue pairings under j", 300, lemma_j},
        {9, "zeta cross-check", 1200, zeta_cross_check},
        {10, "mutation sensitivity", 60, mutation_sensitivity},
    };
    bool all = true;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool pass = o.pass && sec <= c.limit_s;
        all = all && pass;
        std::cout << (pass ? "[PASS] " : "[FAIL] ") << std::setw(2) << c.id << " " << c.name << ": " << o.detail
                  << " | tolerance exact | " << std::fixed << std::setprecision(2) << sec << " s (limit " << c.limit_s
                  << " s)\n"
                  << std::defaultfloat;
    }
    return all ? 0 : 1;
}
