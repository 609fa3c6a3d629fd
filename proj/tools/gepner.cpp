// Command-line driver: every subcommand prints a JSON bundle (or CSV/text)
// and exits 0 iff all certificates in it pass.
#include "gepner/io.hpp"
#include "gepner/quotient.hpp"
#include "gepner/saito.hpp"
#include "gepner/symmetry.hpp"
#include "gepner/zeta.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace gepner;
using io::json;

namespace {

constexpr const char* version = "1.0.0";

struct Options {
    std::size_t k = 0;
    std::size_t n = 1;
    int order = 2;
    std::string splitting = "monomial";
    std::string convention = "unit-normalized";
    std::string format = "json";
    std::string output;
    bool timing = true;
    bool emit_all = false;
    bool check = false;
    std::string poly;
    std::string vars;
    bool fermat = false;
    std::string frobenius_file;
    std::string presaito_file;
    std::size_t max_k = 6;
};

class Bundle {
public:
    Bundle(std::string command, json inputs, const Options& opt)
        : opt_(opt)
    {
        doc_ = {{"tool", "gepner"}, {"version", version}, {"command", std::move(command)}, {"inputs", std::move(inputs)},
            {"conventions",
                {{"monomial order", "grevlex"}, {"residue normalization", "lambda(hess) = mu"},
                    {"sign convention", opt.convention}}},
            {"certificates", json::array()}, {"data", json::object()}};
    }

    void add(const Certificate& c)
    {
        passed_ = passed_ && c.passed();
        doc_["certificates"].push_back(io::to_json(c));
    }
    json& data() { return doc_["data"]; }

    template <class F>
    auto timed(const std::string& stage, F&& f)
    {
        auto start = std::chrono::steady_clock::now();
        auto result = f();
        auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        timing_[stage] = ms;
        return result;
    }

    int finish()
    {
        doc_["passed"] = passed_;
        if (opt_.timing) {
            doc_["timing_ms"] = timing_;
        }
        std::string text = doc_.dump(2) + "\n";
        if (opt_.output.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(opt_.output);
            if (!out) {
                std::cerr << "error: cannot write " << opt_.output << "\n";
                return 3;
            }
            out << text;
        }
        return passed_ ? 0 : 1;
    }

private:
    const Options& opt_;
    json doc_;
    json timing_ = json::object();
    bool passed_ = true;
};

void require_kn(const Options& opt)
{
    if (opt.n < 1 || opt.k <= opt.n) {
        throw CLI::ValidationError("--k/--n", "requires k > n >= 1 (got k=" + std::to_string(opt.k) + ", n="
            + std::to_string(opt.n) + ")");
    }
}

json family_to_json(const FamilyPoly& p, const std::vector<std::string>& zvars, const std::vector<std::string>& params)
{
    json out = json::object();
    for (const auto& [e, c] : p.terms()) {
        out[monomial_string(zvars, e)] = c.to_poly(params).to_string();
    }
    return out;
}

quotient::Splitting make_splitting(const quotient::ExactSequence& s, const std::string& spec)
{
    if (spec == "monomial" || spec == "weight-graded") {
        return quotient::choose_splitting(s, quotient::parse_splitting(spec));
    }
    if (!std::filesystem::exists(spec)) {
        throw CLI::ValidationError("--splitting", "expected monomial, weight-graded or a JSON file, got " + spec);
    }
    json j = io::read_json_file(spec);
    const json& rows = j.at("lift");
    QMatrix lift(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < lift.rows(); ++r) {
        for (std::size_t c = 0; c < lift.cols(); ++c) {
            lift(r, c) = Rational(rows[r][c].get<std::string>());
        }
    }
    return quotient::choose_splitting(s, quotient::SplittingStrategy::custom, &lift);
}

json splitting_to_json(const quotient::Splitting& iota)
{
    json lift = json::array();
    for (std::size_t r = 0; r < iota.lift.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < iota.lift.cols(); ++c) {
            row.push_back(to_string(iota.lift(r, c)));
        }
        lift.push_back(row);
    }
    json reps = json::array();
    for (const auto& p : iota.representatives) {
        reps.push_back(p.to_string());
    }
    return {{"strategy", quotient::to_string(iota.strategy)}, {"lift", lift}, {"representatives", reps}};
}

int run_poly(const Options& opt)
{
    require_kn(opt);
    MultiPoly g = sym::gepner_polynomial(opt.k, opt.n);
    bool ok = true;
    if (opt.check) {
        ok = sym::to_x(g, opt.n) == sym::fermat_polynomial(opt.k, opt.n);
    }
    if (opt.format == "text") {
        std::cout << g.to_string() << "\n";
        if (opt.check) {
            std::cout << "G(sigma(x)) = sum x_i^" << opt.k << ": " << (ok ? "pass" : "FAIL") << "\n";
        }
        return ok ? 0 : 1;
    }
    Bundle b("poly", {{"k", opt.k}, {"n", opt.n}}, opt);
    b.data()["G"] = g.to_string();
    if (opt.check) {
        Certificate c;
        c.subject = "Gepner identity";
        c.add("G(sigma(x)) = sum x_i^k", ok, ok ? "" : "mismatch");
        b.add(c);
    }
    return b.finish();
}

int run_milnor(const Options& opt)
{
    MultiPoly f;
    json inputs;
    if (!opt.poly.empty()) {
        std::vector<std::string> vars;
        std::stringstream ss(opt.vars);
        for (std::string v; std::getline(ss, v, ',');) {
            vars.push_back(v);
        }
        f = MultiPoly::parse(opt.poly, vars);
        inputs = {{"poly", opt.poly}};
    } else {
        require_kn(opt);
        f = opt.fermat ? sym::fermat_polynomial(opt.k, opt.n) : sym::gepner_polynomial(opt.k, opt.n);
        inputs = {{"k", opt.k}, {"n", opt.n}, {"fermat", opt.fermat}};
    }
    Bundle b("milnor", inputs, opt);
    milnor::MilnorAlgebra a(f);
    Certificate c;
    c.subject = "Milnor algebra of " + f.to_string();
    json basis = json::array();
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        basis.push_back(a.basis_element(i).to_string());
    }
    b.data()["polynomial"] = f.to_string();
    b.data()["milnor_number"] = a.dimension();
    b.data()["basis"] = basis;
    if (opt.poly.empty() && !opt.fermat) {
        Rational expect = binomial(static_cast<long>(opt.k - 1), static_cast<long>(opt.n));
        c.add("dim = C(k-1,n)", Rational(static_cast<long>(a.dimension())) == expect, "C(k-1,n) = " + to_string(expect));
    }
    if (a.weights()) {
        auto r = milnor::residue_functional(a);
        json values = json::array();
        for (const auto& v : r.values) {
            values.push_back(to_string(v));
        }
        b.data()["residue"] = values;
        b.data()["socle"] = monomial_string(f.vars(), r.socle);
        c.add("gram symmetric", r.gram == r.gram.transpose());
        c.add("gram nondegenerate", r.gram.determinant() != 0);
        auto h = a.normal_form(milnor::hessian(f));
        Rational lh = 0;
        for (std::size_t i = 0; i < h.size(); ++i) {
            lh += h[i] * r.values[i];
        }
        c.add("lambda(hess) = mu", lh == Rational(static_cast<long>(a.dimension())), to_string(lh));
    }
    b.add(c);
    return b.finish();
}

int run_amodel(const Options& opt)
{
    if (opt.k < 2) {
        throw CLI::ValidationError("--k", "requires k >= 2");
    }
    Bundle b("amodel", {{"k", opt.k}, {"order", opt.order}}, opt);
    auto a = b.timed("construct", [&] { return saito::a_model(static_cast<int>(opt.k), opt.order); });
    b.add(verify_presaito(a.saito.presaito, opt.order));
    b.add(verify_primitive_form(a.saito.presaito, a.saito.omega, opt.order));
    auto v = b.timed("verify", [&] { return verify_frobenius_axioms(a.flat, opt.order); });
    b.add(v.certificate);
    b.data()["frobenius"] = io::to_json(a.flat);
    if (v.charge) {
        b.data()["charge"] = to_string(*v.charge);
    }
    return b.finish();
}

int run_solve(const Options& opt)
{
    require_kn(opt);
    Bundle b("solve", {{"k", opt.k}, {"n", opt.n}, {"order", opt.order}}, opt);
    Unfolding u = Unfolding::versal(sym::gepner_polynomial(opt.k, opt.n));
    FamilyMilnorAlgebra fam(u, opt.order);
    auto c = b.timed("solve", [&] { return saito::solve_primitive_form(fam); });
    auto s = saito::saito_structure(fam, c.density);
    auto v = b.timed("verify", [&] { return verify_frobenius_axioms(s.frobenius, opt.order); });
    b.add(v.certificate);
    b.data()["density"] = family_to_json(c.density, u.f.vars(), u.params);
    b.data()["unknowns"] = c.unknowns;
    b.data()["free_parameters"] = c.free_parameters;
    b.data()["solution_dimension"] = c.solution_dimension();
    if (opt.emit_all) {
        b.data()["frobenius"] = io::to_json(s.frobenius);
    }
    return b.finish();
}

int run_pipeline(const Options& opt, bool zeta_only)
{
    require_kn(opt);
    SignConvention conv = parse_sign_convention(opt.convention);
    Bundle b(zeta_only ? "zeta" : "pipeline",
        {{"k", opt.k}, {"n", opt.n}, {"order", opt.order}, {"splitting", opt.splitting}}, opt);
    auto s = b.timed("exact sequence", [&] { return quotient::build_exact_sequence(opt.k, opt.n); });
    auto iota = make_splitting(s, opt.splitting);
    if (!zeta_only) {
        b.add(s.certificate);
        b.add(b.timed("jacobi minors", [&] { return quotient::jacobi_minor_identity(opt.k, opt.n); }).certificate);
        b.add(quotient::verify_wn_surjective(s));
    }
    auto m = b.timed("pre-Saito", [&] { return quotient::build_presaito(s, opt.order); });
    auto w = b.timed("omega", [&] { return quotient::build_omega(s, m); });
    auto nstr = b.timed("frobenius on N", [&] { return quotient::frobenius_on_N(m, w.omega, iota, conv); });
    if (!zeta_only) {
        b.add(m.equivariance);
        b.add(m.orthogonality);
        b.add(m.certificate);
        b.add(w.certificate);
        b.add(nstr.restriction);
        b.add(nstr.verification.certificate);
    }
    auto lj = b.timed("residue pairings", [&] { return zeta::compare_residue_pairings(s, iota, std::min(opt.order, 2)); });
    b.add(lj.certificate);
    auto z = b.timed("zeta", [&] { return zeta::assemble_zeta(s, m, w, iota, nstr, lj.kappa); });
    b.add(z.comparison);
    b.add(z.verification.certificate);
    b.data()["kappa"] = to_string(lj.kappa);
    b.data()["zeta"] = family_to_json(z.density, s.jg->vars(), nstr.params);
    b.data()["solver_free_parameters"] = m.primitive.free_parameters;
    if (nstr.verification.charge) {
        b.data()["charge"] = to_string(*nstr.verification.charge);
    }
    b.data()["splitting"] = splitting_to_json(iota);
    if (opt.emit_all || zeta_only) {
        b.data()["frobenius"] = io::to_json(nstr.frobenius);
    }
    if (opt.emit_all) {
        b.data()["presaito"] = io::to_json(m.presaito);
        b.data()["omega"] = json::array();
        for (const auto& x : w.omega) {
            b.data()["omega"].push_back(x.to_poly(m.presaito.coords).to_string());
        }
    }
    return b.finish();
}

int run_verify(const Options& opt)
{
    if (opt.frobenius_file.empty() == opt.presaito_file.empty()) {
        throw CLI::ValidationError("verify", "give exactly one of --frobenius and --presaito");
    }
    if (!opt.frobenius_file.empty()) {
        auto f = io::frobenius_from_json(io::read_json_file(opt.frobenius_file));
        int order = opt.order >= 0 ? std::min(opt.order, f.order()) : f.order();
        Bundle b("verify", {{"frobenius", opt.frobenius_file}, {"order", order}}, opt);
        auto v = verify_frobenius_axioms(f, order);
        b.add(v.certificate);
        if (v.charge) {
            b.data()["charge"] = to_string(*v.charge);
        }
        return b.finish();
    }
    auto p = io::presaito_from_json(io::read_json_file(opt.presaito_file));
    int order = opt.order >= 0 ? std::min(opt.order, p.order()) : p.order();
    Bundle b("verify", {{"presaito", opt.presaito_file}, {"order", order}}, opt);
    b.add(verify_presaito(p, order));
    return b.finish();
}

int run_grid(const Options& opt)
{
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!opt.output.empty()) {
        file.open(opt.output);
        if (!file) {
            std::cerr << "error: cannot write " << opt.output << "\n";
            return 3;
        }
        out = &file;
    }
    *out << "k,n,dim_J_G,binomial,exact_sequence,jacobi_minors,wn_surjective";
    if (opt.timing) {
        *out << ",seconds";
    }
    *out << "\n";
    bool all = true;
    for (std::size_t k = 3; k <= opt.max_k; ++k) {
        for (std::size_t n = 2; n < k; ++n) {
            auto start = std::chrono::steady_clock::now();
            auto s = quotient::build_exact_sequence(k, n);
            auto j = quotient::jacobi_minor_identity(k, n);
            auto p = quotient::verify_wn_surjective(s);
            double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            auto pf = [](bool x) { return x ? "pass" : "FAIL"; };
            *out << k << "," << n << "," << s.dim_quotient << ","
                 << to_string(binomial(static_cast<long>(k - 1), static_cast<long>(n))) << "," << pf(s.certificate.passed())
                 << "," << pf(j.certificate.passed()) << "," << pf(p.passed());
            if (opt.timing) {
                *out << "," << sec;
            }
            *out << "\n";
            all = all && s.certificate.passed() && j.certificate.passed() && p.passed();
        }
    }
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact Frobenius and Saito structures for Fermat and Gepner singularities"};
    app.set_config("--config", "", "TOML-style file with the same keys as the flags");
    app.require_subcommand(1);
    Options opt;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--output,-o", opt.output, "write to this file instead of stdout");
        sub->add_flag("!--no-timing", opt.timing, "omit wall-clock timings");
    };
    auto kn = [&](CLI::App* sub, bool need_n) {
        sub->add_option("--k", opt.k, "exponent k")->required();
        auto o = sub->add_option("--n", opt.n, "number of variables n");
        if (need_n) {
            o->required();
        }
    };

    auto* poly = app.add_subcommand("poly", "print G_{k,n}");
    kn(poly, true);
    poly->add_flag("--check", opt.check, "verify G(sigma(x)) = sum x_i^k");
    poly->add_option("--format", opt.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    common(poly);

    auto* mil = app.add_subcommand("milnor", "Milnor algebra, residue pairing");
    mil->add_option("--k", opt.k, "exponent k");
    mil->add_option("--n", opt.n, "number of variables n");
    mil->add_flag("--fermat", opt.fermat, "use F_{k,n} instead of G_{k,n}");
    mil->add_option("--poly", opt.poly, "explicit polynomial");
    mil->add_option("--vars", opt.vars, "comma separated variable names for --poly");
    common(mil);

    auto* am = app.add_subcommand("amodel", "flat A_{k-1} Frobenius manifold");
    am->add_option("--k", opt.k, "exponent k")->required();
    am->add_option("--order", opt.order, "truncation order")->check(CLI::Range(0, 14));
    common(am);

    auto* sol = app.add_subcommand("solve", "primitive form solver on G_{k,n}");
    kn(sol, true);
    sol->add_option("--order", opt.order, "truncation order")->check(CLI::Range(0, 14));
    sol->add_flag("--emit-all", opt.emit_all, "include the Frobenius data");
    common(sol);

    auto pipeline_opts = [&](CLI::App* sub) {
        kn(sub, true);
        sub->add_option("--order", opt.order, "truncation order")->check(CLI::Range(0, 13));
        sub->add_option("--splitting", opt.splitting, "monomial, weight-graded, or a JSON file with a lift matrix");
        sub->add_option("--convention", opt.convention, "unit-normalized or as-written")
            ->check(CLI::IsMember({"unit-normalized", "as-written"}));
        sub->add_flag("--emit-all", opt.emit_all, "include all intermediate data");
        common(sub);
    };
    auto* ze = app.add_subcommand("zeta", "primitive form of G from the quotient construction");
    pipeline_opts(ze);
    auto* pipe = app.add_subcommand("pipeline", "full quotient pipeline with all certificates");
    pipeline_opts(pipe);

    auto* ver = app.add_subcommand("verify", "check axioms of data in a JSON file");
    opt.order = 2;
    int verify_order = -1;
    ver->add_option("--frobenius", opt.frobenius_file, "Frobenius data JSON");
    ver->add_option("--presaito", opt.presaito_file, "pre-Saito data JSON");
    ver->add_option("--order", verify_order, "check up to this order (default: the data's order)");
    common(ver);

    auto* grid = app.add_subcommand("grid", "verification grid as CSV");
    grid->add_option("--max-k", opt.max_k, "largest k")->check(CLI::Range(3, 9));
    common(grid);

    try {
        app.parse(argc, argv);
        if (ver->parsed()) {
            opt.order = verify_order;
            return run_verify(opt);
        }
        if (poly->parsed()) {
            return run_poly(opt);
        }
        if (mil->parsed()) {
            return run_milnor(opt);
        }
        if (am->parsed()) {
            return run_amodel(opt);
        }
        if (sol->parsed()) {
            return run_solve(opt);
        }
        if (ze->parsed()) {
            return run_pipeline(opt, true);
        }
        if (pipe->parsed()) {
            return run_pipeline(opt, false);
        }
        return run_grid(opt);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
