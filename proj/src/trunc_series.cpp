#include "gepner/trunc_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace gepner {

namespace {

void check_shape(int nvars, int order)
{
    if (nvars < 0 || nvars > TruncSeries::max_vars) {
        throw std::invalid_argument("TruncSeries supports at most 16 parameters");
    }
    if (order > TruncSeries::max_order) {
        throw std::invalid_argument("TruncSeries order above 15 is not supported");
    }
}

} // namespace

std::vector<std::string> default_param_names(int n, const std::string& stem)
{
    std::vector<std::string> v;
    for (int i = 0; i < n; ++i) {
        v.push_back(stem + std::to_string(i));
    }
    return v;
}

TruncSeries::TruncSeries(int nvars, int order)
    : nvars_(nvars)
    , order_(order)
{
    check_shape(nvars, order);
}

TruncSeries TruncSeries::constant(int nvars, int order, const Rational& c)
{
    TruncSeries s(nvars, order);
    if (order >= 0) {
        s.add_term_key(0, c);
    }
    return s;
}

TruncSeries TruncSeries::variable(int nvars, int order, int index)
{
    TruncSeries s(nvars, order);
    Exponent e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    s.add_term(e, 1);
    return s;
}

TruncSeries TruncSeries::from_poly(const MultiPoly& p, int order)
{
    TruncSeries s(static_cast<int>(p.nvars()), order);
    for (const auto& [e, c] : p.terms()) {
        s.add_term(e, c);
    }
    return s;
}

TruncSeries::Key TruncSeries::pack(const Exponent& e)
{
    Key k = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 0 || e[i] > 15) {
            throw std::out_of_range("series exponent out of packable range");
        }
        k |= static_cast<Key>(e[i]) << (4 * i);
    }
    return k;
}

Exponent TruncSeries::unpack(Key k, int nvars)
{
    Exponent e(static_cast<std::size_t>(nvars));
    for (int i = 0; i < nvars; ++i) {
        e[static_cast<std::size_t>(i)] = static_cast<int>((k >> (4 * i)) & 0xFU);
    }
    return e;
}

int TruncSeries::degree(Key k)
{
    Key x = (k & 0x0F0F0F0F0F0F0F0FULL) + ((k >> 4) & 0x0F0F0F0F0F0F0F0FULL);
    return static_cast<int>((x * 0x0101010101010101ULL) >> 56);
}

Rational TruncSeries::constant_term() const
{
    auto it = terms_.find(0);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational TruncSeries::coeff(const Exponent& e) const
{
    auto it = terms_.find(pack(e));
    return it == terms_.end() ? Rational(0) : it->second;
}

void TruncSeries::add_term(const Exponent& e, const Rational& c)
{
    if (total_degree(e) > order_) {
        return;
    }
    add_term_key(pack(e), c);
}

void TruncSeries::add_term_key(Key k, const Rational& c)
{
    if (c == 0 || degree(k) > order_) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o)
{
    if (o.nvars_ != nvars_) {
        throw std::invalid_argument("series parameter count mismatch");
    }
    if (o.order_ < order_) {
        *this = truncated(o.order_);
    }
    for (const auto& [k, c] : o.terms_) {
        add_term_key(k, c);
    }
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o)
{
    if (o.nvars_ != nvars_) {
        throw std::invalid_argument("series parameter count mismatch");
    }
    if (o.order_ < order_) {
        *this = truncated(o.order_);
    }
    for (const auto& [k, c] : o.terms_) {
        add_term_key(k, -c);
    }
    return *this;
}

TruncSeries& TruncSeries::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) {
        v *= c;
    }
    return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b)
{
    TruncSeries r(a.nvars_, std::min(a.order_, b.order_));
    r.add_product(a, b);
    return r;
}

void TruncSeries::add_product(const TruncSeries& b, const TruncSeries& c)
{
    if (b.nvars_ != nvars_ || c.nvars_ != nvars_) {
        throw std::invalid_argument("series parameter count mismatch");
    }
    int ord = std::min({order_, b.order_, c.order_});
    if (ord < order_) {
        *this = truncated(ord);
    }
    if (b.terms_.empty() || c.terms_.empty()) {
        return;
    }
    // Group c by degree so the inner loop stops early.
    std::vector<std::pair<int, const std::pair<const Key, Rational>*>> cs;
    cs.reserve(c.terms_.size());
    for (const auto& t : c.terms_) {
        cs.emplace_back(degree(t.first), &t);
    }
    std::stable_sort(cs.begin(), cs.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    Rational tmp;
    for (const auto& [kb, vb] : b.terms_) {
        int db = degree(kb);
        if (db > ord) {
            continue;
        }
        for (const auto& [dc, tc] : cs) {
            if (db + dc > ord) {
                break;
            }
            tmp = vb * tc->second;
            add_term_key(kb + tc->first, tmp);
        }
    }
}

TruncSeries TruncSeries::operator-() const
{
    TruncSeries r(*this);
    for (auto& [k, v] : r.terms_) {
        v = -v;
    }
    return r;
}

bool operator==(const TruncSeries& a, const TruncSeries& b)
{
    int ord = std::min(a.order_, b.order_);
    TruncSeries d = a.truncated(ord) - b.truncated(ord);
    return d.is_zero();
}

TruncSeries TruncSeries::derivative(int var) const
{
    TruncSeries r(nvars_, order_ - 1);
    Key unit = Key{1} << (4 * var);
    for (const auto& [k, c] : terms_) {
        int e = static_cast<int>((k >> (4 * var)) & 0xFU);
        if (e == 0) {
            continue;
        }
        r.add_term_key(k - unit, c * e);
    }
    return r;
}

TruncSeries TruncSeries::times_variable(int var) const
{
    TruncSeries r(nvars_, order_ + 1);
    Key unit = Key{1} << (4 * var);
    for (const auto& [k, c] : terms_) {
        if (((k >> (4 * var)) & 0xFU) == 0xFU) {
            throw std::out_of_range("series exponent overflow");
        }
        r.terms_.emplace(k + unit, c);
    }
    return r;
}

TruncSeries TruncSeries::truncated(int order) const
{
    if (order > order_) {
        throw std::logic_error("TruncSeries::truncated cannot raise the order");
    }
    TruncSeries r(nvars_, order);
    for (const auto& [k, c] : terms_) {
        if (degree(k) <= order) {
            r.terms_.emplace(k, c);
        }
    }
    return r;
}

TruncSeries TruncSeries::homogeneous_part(int deg) const
{
    TruncSeries r(nvars_, order_);
    for (const auto& [k, c] : terms_) {
        if (degree(k) == deg) {
            r.terms_.emplace(k, c);
        }
    }
    return r;
}

TruncSeries TruncSeries::inverse() const
{
    Rational c0 = constant_term();
    if (c0 == 0) {
        throw std::domain_error("series with zero constant term is not invertible");
    }
    // 1/(c0 (1 + u)) = (1/c0) * sum (-u)^j
    TruncSeries u = *this * (Rational(1) / c0);
    u.add_term_key(0, -1);
    TruncSeries result = constant(nvars_, order_, 1);
    TruncSeries power = result;
    for (int j = 1; j <= order_; ++j) {
        power = power * u;
        power *= -1;
        if (power.is_zero()) {
            break;
        }
        result += power;
    }
    result *= Rational(1) / c0;
    return result;
}

TruncSeries TruncSeries::compose(const std::vector<TruncSeries>& images) const
{
    if (static_cast<int>(images.size()) != nvars_) {
        throw std::invalid_argument("compose: one image per variable required");
    }
    if (images.empty()) {
        return *this;
    }
    int out_vars = images.front().nvars();
    int ord = order_;
    for (const auto& im : images) {
        if (im.constant_term() != 0) {
            throw std::invalid_argument("compose: images must vanish at the origin");
        }
        ord = std::min(ord, im.order());
    }
    TruncSeries result(out_vars, ord);
    // Power cache per variable.
    std::vector<std::vector<TruncSeries>> powers(static_cast<std::size_t>(nvars_));
    auto power = [&](int i, int e) -> const TruncSeries& {
        auto& cache = powers[static_cast<std::size_t>(i)];
        if (cache.empty()) {
            cache.push_back(constant(out_vars, ord, 1));
        }
        while (static_cast<int>(cache.size()) <= e) {
            cache.push_back(cache.back() * images[static_cast<std::size_t>(i)].truncated(std::min(ord, images[static_cast<std::size_t>(i)].order())));
        }
        return cache[static_cast<std::size_t>(e)];
    };
    for (const auto& [k, c] : terms_) {
        if (degree(k) > ord) {
            continue;
        }
        TruncSeries term = constant(out_vars, ord, c);
        for (int i = 0; i < nvars_; ++i) {
            int e = static_cast<int>((k >> (4 * i)) & 0xFU);
            if (e > 0) {
                term = term * power(i, e);
            }
        }
        result += term;
    }
    return result;
}

MultiPoly TruncSeries::to_poly(const std::vector<std::string>& names) const
{
    MultiPoly p(names);
    for (const auto& [k, c] : terms_) {
        p.add_term(unpack(k, nvars_), c);
    }
    return p;
}

std::string TruncSeries::to_string(const std::vector<std::string>& names) const
{
    std::string s = to_poly(names).to_string();
    return s + " + O(" + std::to_string(order_ + 1) + ")";
}

std::string TruncSeries::lowest_term(const std::vector<std::string>& names) const
{
    if (terms_.empty()) {
        return "";
    }
    const std::pair<const Key, Rational>* best = nullptr;
    for (const auto& t : terms_) {
        if (best == nullptr || degree(t.first) < degree(best->first)) {
            best = &t;
        }
    }
    MultiPoly p(names);
    p.add_term(unpack(best->first, nvars_), best->second);
    return p.to_string();
}

} // namespace gepner
