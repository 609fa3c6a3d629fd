#include "gepner/family.hpp"

#include <algorithm>
#include <stdexcept>

namespace gepner {

FamilyPoly::FamilyPoly(std::size_t zvars, int params, int order)
    : zvars_(zvars)
    , params_(params)
    , order_(order)
{
}

FamilyPoly FamilyPoly::from_poly(const MultiPoly& p, int params, int order)
{
    FamilyPoly r(p.nvars(), params, order);
    for (const auto& [e, c] : p.terms()) {
        r.terms_.emplace(e, TruncSeries::constant(params, order, c));
    }
    return r;
}

FamilyPoly FamilyPoly::from_terms(const std::vector<MultiPoly>& polys, const std::vector<TruncSeries>& coeffs)
{
    if (polys.empty() || polys.size() != coeffs.size()) {
        throw std::invalid_argument("FamilyPoly::from_terms: size mismatch");
    }
    int order = coeffs[0].order();
    for (const auto& c : coeffs) {
        order = std::min(order, c.order());
    }
    FamilyPoly r(polys[0].nvars(), coeffs[0].nvars(), order);
    for (std::size_t i = 0; i < polys.size(); ++i) {
        for (const auto& [e, c] : polys[i].terms()) {
            r.add_term(e, coeffs[i] * c);
        }
    }
    return r;
}

TruncSeries FamilyPoly::coeff(const Exponent& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? TruncSeries(params_, order_) : it->second;
}

void FamilyPoly::add_term(const Exponent& e, const TruncSeries& c)
{
    if (e.size() != zvars_) {
        throw std::invalid_argument("FamilyPoly: exponent length mismatch");
    }
    auto [it, fresh] = terms_.try_emplace(e, params_, order_);
    it->second += c.order() > order_ ? c.truncated(order_) : c;
    if (it->second.is_zero()) {
        terms_.erase(it);
    }
}

void FamilyPoly::prune()
{
    for (auto it = terms_.begin(); it != terms_.end();) {
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
}

FamilyPoly& FamilyPoly::operator+=(const FamilyPoly& o)
{
    if (o.order_ < order_) {
        *this = truncated(o.order_);
    }
    for (const auto& [e, c] : o.terms_) {
        add_term(e, c);
    }
    return *this;
}

FamilyPoly& FamilyPoly::operator-=(const FamilyPoly& o)
{
    return *this += -o;
}

FamilyPoly FamilyPoly::operator-() const
{
    FamilyPoly r = *this;
    for (auto& [e, c] : r.terms_) {
        c *= Rational(-1);
    }
    return r;
}

FamilyPoly operator*(const FamilyPoly& a, const FamilyPoly& b)
{
    if (a.zvars_ != b.zvars_ || a.params_ != b.params_) {
        throw std::invalid_argument("FamilyPoly: shape mismatch");
    }
    FamilyPoly r(a.zvars_, a.params_, std::min(a.order_, b.order_));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            auto [it, fresh] = r.terms_.try_emplace(exponent_sum(ea, eb), r.params_, r.order_);
            it->second.add_product(ca, cb);
        }
    }
    r.prune();
    return r;
}

FamilyPoly operator*(const TruncSeries& s, const FamilyPoly& a)
{
    FamilyPoly r(a.zvars_, a.params_, std::min(a.order_, s.order()));
    for (const auto& [e, c] : a.terms_) {
        TruncSeries prod(r.params_, r.order_);
        prod.add_product(s, c);
        if (!prod.is_zero()) {
            r.terms_.emplace(e, std::move(prod));
        }
    }
    return r;
}

bool operator==(const FamilyPoly& a, const FamilyPoly& b)
{
    FamilyPoly d = a - b;
    return d.is_zero();
}

FamilyPoly FamilyPoly::times_poly(const MultiPoly& p) const
{
    if (p.nvars() != zvars_) {
        throw std::invalid_argument("FamilyPoly::times_poly: variable count mismatch");
    }
    FamilyPoly r(zvars_, params_, order_);
    for (const auto& [e, c] : terms_) {
        for (const auto& [pe, pc] : p.terms()) {
            r.add_term(exponent_sum(e, pe), c * pc);
        }
    }
    return r;
}

FamilyPoly FamilyPoly::derivative_z(std::size_t i) const
{
    FamilyPoly r(zvars_, params_, order_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) {
            continue;
        }
        Exponent d = e;
        --d[i];
        r.add_term(d, c * Rational(e[i]));
    }
    return r;
}

FamilyPoly FamilyPoly::derivative_t(int a) const
{
    FamilyPoly r(zvars_, params_, order_ - 1);
    for (const auto& [e, c] : terms_) {
        r.add_term(e, c.derivative(a));
    }
    return r;
}

FamilyPoly FamilyPoly::truncated(int order) const
{
    FamilyPoly r(zvars_, params_, order);
    for (const auto& [e, c] : terms_) {
        r.add_term(e, c.truncated(order));
    }
    return r;
}

MultiPoly FamilyPoly::at_origin(const std::vector<std::string>& zvars) const
{
    MultiPoly p(zvars);
    for (const auto& [e, c] : terms_) {
        p.add_term(e, c.constant_term());
    }
    return p;
}

Unfolding::Unfolding(MultiPoly f_, std::vector<MultiPoly> deformations_, std::vector<std::string> params_)
    : f(std::move(f_))
    , deformations(std::move(deformations_))
    , params(std::move(params_))
{
    for (auto& p : deformations) {
        if (union_vars(f.vars(), p.vars()) != f.vars()) {
            throw std::invalid_argument("unfolding term uses variables absent from f");
        }
        p = p.aligned_to(f.vars());
    }
    if (params.empty()) {
        params = default_param_names(static_cast<int>(deformations.size()));
    }
    if (params.size() != deformations.size()) {
        throw std::invalid_argument("unfolding: parameter name count mismatch");
    }
    if (static_cast<int>(deformations.size()) > TruncSeries::max_vars) {
        throw std::invalid_argument("unfolding: too many parameters");
    }
}

Unfolding Unfolding::versal(const MultiPoly& f, const std::string& stem)
{
    milnor::MilnorAlgebra a(f);
    std::vector<MultiPoly> defs;
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        defs.push_back(a.basis_element(i));
    }
    return Unfolding(f, defs, default_param_names(static_cast<int>(defs.size()), stem));
}

MultiPoly Unfolding::total() const
{
    auto vars = union_vars(f.vars(), params);
    MultiPoly r = f.aligned_to(vars);
    for (std::size_t a = 0; a < deformations.size(); ++a) {
        r += deformations[a].aligned_to(vars) * MultiPoly::variable(vars, params[a]);
    }
    return r;
}

FamilyPoly Unfolding::as_family(int order) const
{
    int m = static_cast<int>(size());
    FamilyPoly r = FamilyPoly::from_poly(f, m, order);
    for (int a = 0; a < m; ++a) {
        r += FamilyPoly::from_terms({deformations[a]}, {TruncSeries::variable(m, order, a)});
    }
    return r;
}

std::optional<std::vector<Rational>> Unfolding::parameter_weights() const
{
    auto w = milnor::quasi_homogeneous_weights(f);
    if (!w) {
        return std::nullopt;
    }
    std::vector<Rational> out;
    for (const auto& p : deformations) {
        Rational deg;
        if (p.is_zero() || !p.is_weighted_homogeneous(*w, &deg)) {
            return std::nullopt;
        }
        out.push_back(1 - deg);
    }
    return out;
}

FamilyMilnorAlgebra::FamilyMilnorAlgebra(Unfolding u, int order)
    : u_(std::move(u))
    , order_(order)
    , fiber_(u_.f, true)
{
    if (order < 0 || order > TruncSeries::max_order) {
        throw std::invalid_argument("family order out of range");
    }
    int m = params();
    std::size_t n = u_.f.nvars();
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<MultiPoly> polys;
        std::vector<TruncSeries> coeffs;
        for (int a = 0; a < m; ++a) {
            polys.push_back(u_.deformations[a].derivative(i));
            coeffs.push_back(TruncSeries::variable(m, order, a));
        }
        FamilyPoly pert = m == 0 ? FamilyPoly(n, 0, order) : FamilyPoly::from_terms(polys, coeffs);
        partials_.push_back(FamilyPoly::from_poly(u_.f.derivative(i), m, order) + pert);
        perturbations_.push_back(std::move(pert));
    }
}

const FamilyMilnorAlgebra::MonomialDivision& FamilyMilnorAlgebra::divide_monomial(const Exponent& e) const
{
    auto it = cache_.find(e);
    if (it != cache_.end()) {
        return it->second;
    }
    Division d = fiber_.groebner_basis().divide_by_generators(MultiPoly::monomial(fiber_.vars(), e));
    MonomialDivision md{std::move(d.quotients), fiber_.normal_form(d.remainder)};
    return cache_.emplace(e, std::move(md)).first->second;
}

FamilyMilnorAlgebra::Reduction FamilyMilnorAlgebra::reduce(const FamilyPoly& h) const
{
    int m = params();
    std::size_t n = fiber_.vars().size();
    int ord = std::min(order_, h.order());
    Reduction out;
    out.coords.assign(dimension(), TruncSeries(m, ord));
    out.quotients.assign(n, FamilyPoly(n, m, ord));
    FamilyPoly cur = h.truncated(ord);
    // Each pass moves the t-adic valuation of the leftover up by one.
    for (int pass = 0; pass <= ord + 1 && !cur.is_zero(); ++pass) {
        std::vector<FamilyPoly> q(n, FamilyPoly(n, m, ord));
        for (const auto& [e, c] : cur.terms()) {
            const auto& md = divide_monomial(e);
            for (std::size_t b = 0; b < md.remainder.size(); ++b) {
                if (md.remainder[b] != 0) {
                    out.coords[b] += c * md.remainder[b];
                }
            }
            for (std::size_t i = 0; i < n; ++i) {
                for (const auto& [qe, qc] : md.quotients[i].terms()) {
                    q[i].add_term(qe, c * qc);
                }
            }
        }
        FamilyPoly next(n, m, ord);
        for (std::size_t i = 0; i < n; ++i) {
            next -= q[i] * perturbations_[i];
            out.quotients[i] += q[i];
        }
        cur = std::move(next);
    }
    if (!cur.is_zero()) {
        throw std::logic_error("family reduction did not terminate");
    }
    return out;
}

FamilyPoly FamilyMilnorAlgebra::from_coords(const std::vector<TruncSeries>& c) const
{
    std::vector<MultiPoly> polys;
    for (std::size_t b = 0; b < dimension(); ++b) {
        polys.push_back(fiber_.basis_element(b));
    }
    return FamilyPoly::from_terms(polys, c);
}

SeriesMatrix FamilyMilnorAlgebra::multiplication_matrix(const FamilyPoly& h) const
{
    std::size_t mu = dimension();
    int ord = std::min(order_, h.order());
    SeriesMatrix r(mu, mu, params(), ord);
    for (std::size_t j = 0; j < mu; ++j) {
        auto col = normal_form(h.times_poly(fiber_.basis_element(j)));
        for (std::size_t i = 0; i < mu; ++i) {
            r(i, j) = col[i];
        }
    }
    return r;
}

SeriesMatrix FamilyMilnorAlgebra::kodaira_spencer(int a) const
{
    return multiplication_matrix(FamilyPoly::from_poly(u_.deformations.at(a), params(), order_));
}

namespace {

FamilyPoly family_determinant(const std::vector<std::vector<FamilyPoly>>& a)
{
    std::size_t n = a.size();
    if (n == 1) {
        return a[0][0];
    }
    FamilyPoly r(a[0][0].zvars(), a[0][0].params(), a[0][0].order());
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<FamilyPoly>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<FamilyPoly> row;
            for (std::size_t c = 0; c < n; ++c) {
                if (c != j) {
                    row.push_back(a[i][c]);
                }
            }
            minor.push_back(std::move(row));
        }
        FamilyPoly term = a[0][j] * family_determinant(minor);
        if (j % 2 == 0) {
            r += term;
        } else {
            r -= term;
        }
    }
    return r;
}

} // namespace

void FamilyMilnorAlgebra::build_residue() const
{
    if (exponents_) {
        return;
    }
    std::size_t n = fiber_.vars().size();
    int m = params();
    std::vector<int> N(n, 1);
    auto w = fiber_.weights();
    auto tw = u_.parameter_weights();
    if (w && tw) {
        // Weight bound past which z_i^N has no remainder in any order <= d.
        Rational top = 0;
        for (const auto& b : fiber_.basis()) {
            top = std::max(top, weighted_degree(b, *w));
        }
        Rational tmax = 0;
        for (const auto& x : *tw) {
            tmax = std::max(tmax, x);
        }
        Rational bound = top + order_ * tmax;
        for (std::size_t i = 0; i < n; ++i) {
            Rational q = bound / (*w)[i];
            mpz_class fl = q.get_num() / q.get_den();
            N[i] = static_cast<int>(fl.get_si()) + 1;
        }
    }
    std::vector<std::vector<FamilyPoly>> a(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (int attempt = 0;; ++attempt) {
            if (attempt > 64) {
                throw BasisDegenerates("residue transformation law: no power of a variable lies in the ideal");
            }
            Exponent e(n, 0);
            e[i] = N[i];
            auto red = reduce(FamilyPoly::from_poly(MultiPoly::monomial(fiber_.vars(), e), m, order_));
            bool zero = std::all_of(red.coords.begin(), red.coords.end(), [](const TruncSeries& s) { return s.is_zero(); });
            if (zero) {
                a[i] = std::move(red.quotients);
                break;
            }
            ++N[i];
        }
    }
    det_ = family_determinant(a);
    exponents_ = N;
}

const std::vector<int>& FamilyMilnorAlgebra::transformation_exponents() const
{
    build_residue();
    return *exponents_;
}

TruncSeries FamilyMilnorAlgebra::residue(const FamilyPoly& h) const
{
    build_residue();
    const auto& N = *exponents_;
    TruncSeries r(params(), std::min(order_, h.order()));
    for (const auto& [e, c] : h.terms()) {
        Exponent target(e.size());
        bool ok = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            target[i] = N[i] - 1 - e[i];
            ok = ok && target[i] >= 0;
        }
        if (!ok) {
            continue;
        }
        auto it = det_.terms().find(target);
        if (it != det_.terms().end()) {
            r.add_product(c, it->second);
        }
    }
    return r;
}

SeriesMatrix FamilyMilnorAlgebra::pairing(const std::vector<FamilyPoly>& v, const FamilyPoly& density) const
{
    std::size_t r = v.size();
    int ord = order_;
    for (const auto& x : v) {
        ord = std::min(ord, x.order());
    }
    ord = std::min(ord, density.order());
    SeriesMatrix g(r, r, params(), ord);
    for (std::size_t i = 0; i < r; ++i) {
        FamilyPoly vi = v[i] * density;
        for (std::size_t j = i; j < r; ++j) {
            g(i, j) = residue(vi * v[j]);
            g(j, i) = g(i, j);
        }
    }
    return g;
}

SeriesMatrix FamilyMilnorAlgebra::gram(const FamilyPoly& density) const
{
    std::vector<FamilyPoly> frame;
    for (std::size_t b = 0; b < dimension(); ++b) {
        frame.push_back(FamilyPoly::from_poly(fiber_.basis_element(b), params(), order_));
    }
    return pairing(frame, density);
}

SeriesMatrix FamilyMilnorAlgebra::gram() const
{
    return gram(FamilyPoly::from_poly(MultiPoly::constant(fiber_.vars(), 1), params(), order_));
}

} // namespace gepner
