#include "gepner/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace gepner {

int total_degree(const Exponent& e)
{
    return std::accumulate(e.begin(), e.end(), 0);
}

bool GrevlexGreater::operator()(const Exponent& a, const Exponent& b) const
{
    int da = total_degree(a);
    int db = total_degree(b);
    if (da != db) {
        return da > db;
    }
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) {
            return a[i] < b[i];
        }
    }
    return false;
}

bool divides(const Exponent& a, const Exponent& b)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) {
            return false;
        }
    }
    return true;
}

Exponent exponent_sum(const Exponent& a, const Exponent& b)
{
    Exponent r(a);
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] += b[i];
    }
    return r;
}

Exponent exponent_difference(const Exponent& a, const Exponent& b)
{
    Exponent r(a);
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] -= b[i];
    }
    return r;
}

Exponent exponent_lcm(const Exponent& a, const Exponent& b)
{
    Exponent r(a);
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] = std::max(a[i], b[i]);
    }
    return r;
}

Rational weighted_degree(const Exponent& e, const std::vector<Rational>& weights)
{
    Rational d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        d += e[i] * weights[i];
    }
    return d;
}

std::vector<std::string> numbered_vars(const std::string& stem, std::size_t n, std::size_t first)
{
    std::vector<std::string> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        v.push_back(stem + std::to_string(first + i));
    }
    return v;
}

std::vector<std::string> union_vars(const std::vector<std::string>& a, const std::vector<std::string>& b)
{
    std::vector<std::string> r(a);
    for (const auto& name : b) {
        if (std::find(r.begin(), r.end(), name) == r.end()) {
            r.push_back(name);
        }
    }
    return r;
}

MultiPoly::MultiPoly(std::vector<std::string> vars)
    : vars_(std::move(vars))
{
}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const Rational& c)
{
    MultiPoly p(std::move(vars));
    p.add_term(Exponent(p.nvars(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, std::size_t index)
{
    MultiPoly p(std::move(vars));
    if (index >= p.nvars()) {
        throw std::out_of_range("variable index out of range");
    }
    Exponent e(p.nvars(), 0);
    e[index] = 1;
    p.add_term(e, 1);
    return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, const std::string& name)
{
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) {
        throw std::invalid_argument("unknown variable " + name);
    }
    auto idx = static_cast<std::size_t>(it - vars.begin());
    return variable(std::move(vars), idx);
}

MultiPoly MultiPoly::monomial(std::vector<std::string> vars, Exponent exp, const Rational& c)
{
    MultiPoly p(std::move(vars));
    if (exp.size() != p.nvars()) {
        throw std::invalid_argument("exponent length does not match variable count");
    }
    p.add_term(exp, c);
    return p;
}

bool MultiPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && ::gepner::total_degree(terms_.begin()->first) == 0);
}

const Exponent& MultiPoly::leading_exponent() const
{
    if (terms_.empty()) {
        throw std::logic_error("leading term of zero polynomial");
    }
    return terms_.begin()->first;
}

const Rational& MultiPoly::leading_coeff() const
{
    if (terms_.empty()) {
        throw std::logic_error("leading term of zero polynomial");
    }
    return terms_.begin()->second;
}

int MultiPoly::total_degree() const
{
    int d = -1;
    for (const auto& [e, c] : terms_) {
        d = std::max(d, ::gepner::total_degree(e));
    }
    return d;
}

Rational MultiPoly::coeff(const Exponent& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

int MultiPoly::index_of(const std::string& name) const
{
    auto it = std::find(vars_.begin(), vars_.end(), name);
    return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

MultiPoly MultiPoly::aligned_to(const std::vector<std::string>& vars) const
{
    if (vars == vars_) {
        return *this;
    }
    std::vector<int> target(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(vars.begin(), vars.end(), vars_[i]);
        target[i] = it == vars.end() ? -1 : static_cast<int>(it - vars.begin());
    }
    MultiPoly r(vars);
    for (const auto& [e, c] : terms_) {
        Exponent ne(vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            if (target[i] < 0) {
                throw std::invalid_argument("cannot align: variable " + vars_[i] + " is missing");
            }
            ne[static_cast<std::size_t>(target[i])] = e[i];
        }
        r.add_term(ne, c);
    }
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other)
{
    if (other.vars_ != vars_) {
        auto u = union_vars(vars_, other.vars_);
        *this = aligned_to(u);
        MultiPoly o = other.aligned_to(u);
        for (const auto& [e, c] : o.terms_) {
            add_term(e, c);
        }
        return *this;
    }
    for (const auto& [e, c] : other.terms_) {
        add_term(e, c);
    }
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other)
{
    return *this += -other;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
    if (a.vars_ != b.vars_) {
        auto u = union_vars(a.vars_, b.vars_);
        return a.aligned_to(u) * b.aligned_to(u);
    }
    MultiPoly r(a.vars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            r.add_term(exponent_sum(ea, eb), ca * cb);
        }
    }
    return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other)
{
    *this = *this * other;
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) {
        v *= c;
    }
    return *this;
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly r(*this);
    for (auto& [e, v] : r.terms_) {
        v = -v;
    }
    return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b)
{
    if (a.vars_ == b.vars_) {
        return a.terms_ == b.terms_;
    }
    auto u = union_vars(a.vars_, b.vars_);
    return a.aligned_to(u).terms_ == b.aligned_to(u).terms_;
}

MultiPoly MultiPoly::pow(unsigned e) const
{
    MultiPoly result = constant(vars_, 1);
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1U) {
            result *= base;
        }
        e >>= 1U;
        if (e > 0) {
            base *= base;
        }
    }
    return result;
}

MultiPoly MultiPoly::derivative(std::size_t var) const
{
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) {
            continue;
        }
        Exponent ne(e);
        ne[var] -= 1;
        r.add_term(ne, c * e[var]);
    }
    return r;
}

MultiPoly MultiPoly::derivative(const std::string& name) const
{
    int idx = index_of(name);
    if (idx < 0) {
        return MultiPoly(vars_);
    }
    return derivative(static_cast<std::size_t>(idx));
}

MultiPoly MultiPoly::shifted(const Exponent& e, const Rational& c) const
{
    MultiPoly r(vars_);
    if (c == 0) {
        return r;
    }
    for (const auto& [te, tc] : terms_) {
        r.terms_.emplace_hint(r.terms_.end(), exponent_sum(te, e), tc * c);
    }
    return r;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& assignment) const
{
    std::vector<std::string> out_vars;
    for (const auto& [name, img] : assignment) {
        out_vars = union_vars(out_vars, img.vars());
    }
    std::vector<MultiPoly> images;
    images.reserve(vars_.size());
    std::vector<bool> mapped(vars_.size(), false);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = assignment.find(vars_[i]);
        if (it != assignment.end()) {
            images.push_back(it->second.aligned_to(out_vars));
            mapped[i] = true;
        } else {
            images.emplace_back(out_vars);
        }
    }
    // Cache powers per variable.
    std::vector<std::vector<MultiPoly>> powers(vars_.size());
    auto power = [&](std::size_t i, int k) -> const MultiPoly& {
        auto& cache = powers[i];
        if (cache.empty()) {
            cache.push_back(constant(out_vars, 1));
        }
        while (static_cast<int>(cache.size()) <= k) {
            cache.push_back(cache.back() * images[i]);
        }
        return cache[static_cast<std::size_t>(k)];
    };
    MultiPoly r(out_vars);
    for (const auto& [e, c] : terms_) {
        MultiPoly term = constant(out_vars, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            if (!mapped[i]) {
                throw std::invalid_argument("substitute: no image for variable " + vars_[i]);
            }
            term *= power(i, e[i]);
        }
        r += term;
    }
    return r;
}

MultiPoly MultiPoly::permuted(const std::vector<std::size_t>& perm) const
{
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        Exponent ne(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            ne[i] = e[perm[i]];
        }
        r.add_term(ne, c);
    }
    return r;
}

bool MultiPoly::is_weighted_homogeneous(const std::vector<Rational>& weights, Rational* degree) const
{
    bool first = true;
    Rational d;
    for (const auto& [e, c] : terms_) {
        Rational w = weighted_degree(e, weights);
        if (first) {
            d = w;
            first = false;
        } else if (w != d) {
            return false;
        }
    }
    if (degree != nullptr) {
        *degree = d;
    }
    return true;
}

std::string monomial_string(const std::vector<std::string>& vars, const Exponent& e)
{
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) {
            continue;
        }
        if (!s.empty()) {
            s += "*";
        }
        s += vars[i];
        if (e[i] > 1) {
            s += "^" + std::to_string(e[i]);
        }
    }
    return s.empty() ? "1" : s;
}

std::string MultiPoly::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = abs(c);
        bool neg = c < 0;
        if (first) {
            s += neg ? "-" : "";
        } else {
            s += neg ? " - " : " + ";
        }
        first = false;
        bool unit_monomial = ::gepner::total_degree(e) == 0;
        if (unit_monomial) {
            s += ::gepner::to_string(a);
        } else if (a == 1) {
            s += monomial_string(vars_, e);
        } else {
            s += ::gepner::to_string(a) + "*" + monomial_string(vars_, e);
        }
    }
    return s;
}

namespace {

// Recursive-descent parser over + - * / ^ ( ), integers and identifiers.
class Parser {
public:
    Parser(std::string_view text, std::vector<std::string> vars, bool fixed)
        : text_(text)
        , vars_(std::move(vars))
        , fixed_(fixed)
    {
    }

    MultiPoly run()
    {
        MultiPoly p = expr();
        skip();
        if (pos_ != text_.size()) {
            fail("unexpected character");
        }
        return p.aligned_to(vars_);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::vector<std::string> vars_;
    bool fixed_;

    [[noreturn]] void fail(const std::string& what) const
    {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c)
    {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MultiPoly expr()
    {
        MultiPoly p(vars_);
        bool neg = false;
        skip();
        if (accept('-')) {
            neg = true;
        } else {
            accept('+');
        }
        MultiPoly t = term();
        p += neg ? -t : t;
        while (true) {
            if (accept('+')) {
                p += term();
            } else if (accept('-')) {
                p -= term();
            } else {
                break;
            }
        }
        return p;
    }

    MultiPoly term()
    {
        MultiPoly p = factor();
        while (true) {
            if (accept('*')) {
                p *= factor();
            } else if (accept('/')) {
                MultiPoly d = factor();
                if (!d.is_constant() || d.is_zero()) {
                    fail("division only by nonzero constants");
                }
                p *= Rational(1) / d.coeff(Exponent(d.nvars(), 0));
            } else {
                break;
            }
        }
        return p;
    }

    MultiPoly factor()
    {
        if (accept('-')) {
            return -factor();
        }
        MultiPoly b = base();
        if (accept('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            if (start == pos_) {
                fail("expected exponent");
            }
            unsigned e = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
            b = b.pow(e);
        }
        return b;
    }

    MultiPoly base()
    {
        skip();
        if (pos_ >= text_.size()) {
            fail("unexpected end of input");
        }
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly p = expr();
            if (!accept(')')) {
                fail("expected ')'");
            }
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            Rational v(Integer(std::string(text_.substr(start, pos_ - start))));
            return MultiPoly::constant(vars_, v);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size()
                && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            std::string name(text_.substr(start, pos_ - start));
            auto it = std::find(vars_.begin(), vars_.end(), name);
            if (it == vars_.end()) {
                if (fixed_) {
                    fail("unknown variable " + name);
                }
                vars_.push_back(name);
            }
            return MultiPoly::variable(vars_, name);
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

} // namespace

MultiPoly MultiPoly::parse(std::string_view text, std::vector<std::string> vars)
{
    bool fixed = !vars.empty();
    return Parser(text, std::move(vars), fixed).run();
}

} // namespace gepner
