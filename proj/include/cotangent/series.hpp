#ifndef COTANGENT_SERIES_HPP
#define COTANGENT_SERIES_HPP

/**
 * Exact truncated power series.
 *
 * UniSeries is a series in one variable t known up to a fixed order
 * (inclusive). MultiSeries lives in the completed semigroup ring of Lambda:
 * every stored degree lies in Lambda and the series is truncated by height.
 * Each height slice of Lambda is finite, so a truncated MultiSeries is a
 * finite object.
 *
 * Factors of height zero such as x^[1,0] - 1 are not elements of the ring
 * (x^[1,0] is not in Lambda). They appear only as exact divisors, handled
 * slice by slice as univariate polynomial division.
 */

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "lattice.hpp"
#include "numeric.hpp"

namespace cotangent {

class UniSeries
{
public:
    explicit UniSeries(long order = 0) : coeffs_(checked_size(order)) {}

    /// Coefficients c[0], c[1], ...; entries beyond `order` are dropped.
    static UniSeries polynomial(std::initializer_list<long> coeffs, long order)
    {
        UniSeries s(order);
        long n = 0;
        for (long c : coeffs) {
            if (n <= order)
                s.coeffs_[n] = c;
            ++n;
        }
        return s;
    }

    static UniSeries monomial(long exponent, Integer c, long order)
    {
        UniSeries s(order);
        if (exponent >= 0 && exponent <= order)
            s.coeffs_[exponent] = std::move(c);
        return s;
    }

    long order() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

    Integer coeff(long n) const
    {
        if (n < 0 || n > order())
            return 0;
        return coeffs_[n];
    }

    void set(long n, Integer c)
    {
        if (n < 0 || n > order())
            throw std::out_of_range("exponent " + std::to_string(n) + " outside truncation order");
        coeffs_[n] = std::move(c);
    }

    const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }

    UniSeries truncated(long order) const
    {
        UniSeries s(order);
        for (long n = 0; n <= std::min(order, this->order()); ++n)
            s.coeffs_[n] = coeffs_[n];
        return s;
    }

    bool is_zero() const
    {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c == 0; });
    }

    /// Index of the first negative coefficient, if any.
    std::optional<long> first_negative() const
    {
        for (long n = 0; n <= order(); ++n)
            if (coeffs_[n] < 0)
                return n;
        return std::nullopt;
    }

    UniSeries operator-() const
    {
        UniSeries s = *this;
        for (auto& c : s.coeffs_)
            c = -c;
        return s;
    }

    friend UniSeries operator+(const UniSeries& a, const UniSeries& b)
    {
        UniSeries s(std::min(a.order(), b.order()));
        for (long n = 0; n <= s.order(); ++n)
            s.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
        return s;
    }

    friend UniSeries operator-(const UniSeries& a, const UniSeries& b) { return a + (-b); }

    friend UniSeries operator*(const UniSeries& a, const UniSeries& b)
    {
        UniSeries s(std::min(a.order(), b.order()));
        for (long p = 0; p <= s.order(); ++p) {
            if (a.coeffs_[p] == 0)
                continue;
            for (long q = 0; p + q <= s.order(); ++q)
                s.coeffs_[p + q] += a.coeffs_[p] * b.coeffs_[q];
        }
        return s;
    }

    friend UniSeries operator*(const Integer& c, const UniSeries& a)
    {
        UniSeries s = a;
        for (auto& x : s.coeffs_)
            x *= c;
        return s;
    }

    friend bool operator==(const UniSeries&, const UniSeries&) = default;

private:
    static std::size_t checked_size(long order)
    {
        if (order < 0)
            throw std::invalid_argument("truncation order must be >= 0, got " + std::to_string(order));
        return static_cast<std::size_t>(order) + 1;
    }

    std::vector<Integer> coeffs_;
};

/// Polynomial in the height-zero variable x^[1,0]: entry e is the coefficient of x^[e,0].
using SlicePolynomial = std::vector<Integer>;

class MultiSeries
{
public:
    MultiSeries(ConeContext ctx, long height_cut) : ctx_(ctx), cut_(height_cut)
    {
        if (height_cut < 0)
            throw std::invalid_argument("height cut must be >= 0, got " + std::to_string(height_cut));
    }

    static MultiSeries monomial(const ConeContext& ctx, MultiDegree r, long height_cut, Integer c = 1)
    {
        MultiSeries s(ctx, height_cut);
        s.add_term(r, std::move(c));
        return s;
    }

    static MultiSeries one(const ConeContext& ctx, long height_cut) { return monomial(ctx, {0, 0}, height_cut); }

    const ConeContext& context() const noexcept { return ctx_; }
    long height_cut() const noexcept { return cut_; }
    const std::map<MultiDegree, Integer>& terms() const noexcept { return terms_; }

    Integer coeff(MultiDegree r) const
    {
        auto it = terms_.find(r);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    /// Adds c*x^R. Degrees above the height cut are dropped; degrees outside
    /// Lambda are rejected.
    void add_term(MultiDegree r, const Integer& c)
    {
        if (!in_lambda(ctx_, r))
            throw std::invalid_argument("degree " + r.str() + " is not in Lambda");
        if (r.k > cut_ || c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(r, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    /// Height-k part as a polynomial in the first coordinate.
    SlicePolynomial slice(long k) const
    {
        SlicePolynomial p;
        for (auto it = terms_.lower_bound({0, k}); it != terms_.end() && it->first.k == k; ++it) {
            if (p.size() <= static_cast<std::size_t>(it->first.i))
                p.resize(it->first.i + 1);
            p[it->first.i] = it->second;
        }
        return p;
    }

    /// Sum of all coefficients at height k.
    Integer slice_total(long k) const
    {
        Integer total = 0;
        for (auto it = terms_.lower_bound({0, k}); it != terms_.end() && it->first.k == k; ++it)
            total += it->second;
        return total;
    }

    MultiSeries height_slice(long k) const
    {
        MultiSeries s(ctx_, cut_);
        for (auto it = terms_.lower_bound({0, k}); it != terms_.end() && it->first.k == k; ++it)
            s.terms_.insert(*it);
        return s;
    }

    MultiSeries truncated(long height_cut) const
    {
        MultiSeries s(ctx_, height_cut);
        for (const auto& [r, c] : terms_)
            if (r.k <= height_cut)
                s.terms_.emplace(r, c);
        return s;
    }

    std::optional<MultiDegree> first_negative() const
    {
        for (const auto& [r, c] : terms_)
            if (c < 0)
                return r;
        return std::nullopt;
    }

    bool is_zero() const noexcept { return terms_.empty(); }

    MultiSeries operator-() const
    {
        MultiSeries s = *this;
        for (auto& [r, c] : s.terms_)
            c = -c;
        return s;
    }

    friend MultiSeries operator*(const Integer& c, const MultiSeries& a)
    {
        MultiSeries s(a.ctx_, a.cut_);
        for (const auto& [r, x] : a.terms_)
            s.add_term(r, c * x);
        return s;
    }

    friend MultiSeries operator+(const MultiSeries& a, const MultiSeries& b)
    {
        require_same_context(a, b);
        MultiSeries s = a.truncated(std::min(a.cut_, b.cut_));
        for (const auto& [r, c] : b.terms_)
            s.add_term(r, c);
        return s;
    }

    friend MultiSeries operator-(const MultiSeries& a, const MultiSeries& b) { return a + (-b); }

    friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b)
    {
        require_same_context(a, b);
        MultiSeries s(a.ctx_, std::min(a.cut_, b.cut_));
        for (const auto& [ra, ca] : a.terms_) {
            if (ra.k > s.cut_)
                break;
            for (const auto& [rb, cb] : b.terms_) {
                if (ra.k + rb.k > s.cut_)
                    break;
                s.add_term(ra + rb, ca * cb);
            }
        }
        return s;
    }

    friend bool operator==(const MultiSeries& a, const MultiSeries& b)
    {
        return a.ctx_ == b.ctx_ && a.cut_ == b.cut_ && a.terms_ == b.terms_;
    }

private:
    static void require_same_context(const MultiSeries& a, const MultiSeries& b)
    {
        if (!(a.ctx_ == b.ctx_))
            throw std::invalid_argument("series over different cones (d=" + std::to_string(a.ctx_.d()) +
                                        " vs d=" + std::to_string(b.ctx_.d()) + ")");
    }

    ConeContext ctx_;
    long cut_;
    std::map<MultiDegree, Integer> terms_;
};

inline MultiSeries multi_add(const MultiSeries& a, const MultiSeries& b) { return a + b; }
inline MultiSeries multi_mul(const MultiSeries& a, const MultiSeries& b) { return a * b; }

/// Sum_{j>=0} (-1)^j x^{jR}, the inverse of 1 + x^R up to the height cut.
inline MultiSeries expand_inverse_one_plus(const ConeContext& ctx, MultiDegree r, long height_cut)
{
    if (r.k < 1)
        throw std::invalid_argument("geometric expansion needs ht(R) >= 1, got " + r.str());
    if (!in_lambda(ctx, r))
        throw std::invalid_argument("degree " + r.str() + " is not in Lambda");
    MultiSeries s(ctx, height_cut);
    for (long j = 0; j * r.k <= height_cut; ++j)
        s.add_term(j * r, j % 2 == 0 ? 1 : -1);
    return s;
}

/// (x^[1,0] - 1)^j as a slice polynomial.
inline SlicePolynomial x_minus_one_power(int j)
{
    SlicePolynomial p{1};
    for (int t = 0; t < j; ++t) {
        SlicePolynomial next(p.size() + 1);
        for (std::size_t e = 0; e < p.size(); ++e) {
            next[e + 1] += p[e];
            next[e] -= p[e];
        }
        p = std::move(next);
    }
    return p;
}

inline SlicePolynomial slice_multiply(const SlicePolynomial& a, const SlicePolynomial& b)
{
    if (a.empty() || b.empty())
        return {};
    SlicePolynomial p(a.size() + b.size() - 1);
    for (std::size_t x = 0; x < a.size(); ++x)
        for (std::size_t y = 0; y < b.size(); ++y)
            p[x + y] += a[x] * b[y];
    return p;
}

/// Exact division of every height slice by a height-zero polynomial. A
/// nonzero remainder in any slice is an invariant violation.
inline MultiSeries exact_divide_height_zero(const MultiSeries& numerator, SlicePolynomial divisor)
{
    while (!divisor.empty() && divisor.back() == 0)
        divisor.pop_back();
    if (divisor.empty())
        throw std::invalid_argument("division by the zero polynomial");
    const std::size_t deg = divisor.size() - 1;
    const Integer& lead = divisor.back();

    MultiSeries quotient(numerator.context(), numerator.height_cut());
    for (long k = 0; k <= numerator.height_cut(); ++k) {
        SlicePolynomial rem = numerator.slice(k);
        while (!rem.empty() && rem.back() == 0)
            rem.pop_back();
        if (rem.empty())
            continue;
        auto fail = [&] {
            throw invariant_violation("nonzero remainder in exact height-zero division",
                                      "height " + std::to_string(k));
        };
        if (rem.size() <= deg)
            fail();
        for (long top = static_cast<long>(rem.size()) - 1; top >= static_cast<long>(deg); --top) {
            if (rem[top] == 0)
                continue;
            if (rem[top] % lead != 0)
                fail();
            const Integer q = rem[top] / lead;
            const std::size_t shift = static_cast<std::size_t>(top) - deg;
            for (std::size_t e = 0; e <= deg; ++e)
                rem[shift + e] -= q * divisor[e];
            quotient.add_term({static_cast<long>(shift), k}, q);
        }
        for (std::size_t e = 0; e < deg && e < rem.size(); ++e)
            if (rem[e] != 0)
                fail();
    }
    return quotient;
}

/// Exact division by (x^[1,0] - 1)^j.
inline MultiSeries exact_divide_height_zero(const MultiSeries& numerator, int j)
{
    if (j < 1)
        throw std::invalid_argument("division power must be positive");
    return exact_divide_height_zero(numerator, x_minus_one_power(j));
}

/// x^R -> t^{ht(R)}.
inline UniSeries heightize(const MultiSeries& s)
{
    UniSeries out(s.height_cut());
    for (long k = 0; k <= s.height_cut(); ++k)
        out.set(k, s.slice_total(k));
    return out;
}

/// Division by t^j; the low coefficients must vanish. The order drops by j.
inline UniSeries divide_by_t_power(const UniSeries& s, long j)
{
    if (j < 0 || j > s.order())
        throw std::invalid_argument("cannot divide by t^" + std::to_string(j));
    for (long n = 0; n < j; ++n)
        if (s.coeff(n) != 0)
            throw std::invalid_argument("series is not divisible by t^" + std::to_string(j));
    UniSeries out(s.order() - j);
    for (long n = 0; n <= out.order(); ++n)
        out.set(n, s.coeff(n + j));
    return out;
}

/**
 * Truncated expansion of numerator / prod(denominators). The denominators are
 * polynomials (UniSeries whose coefficients are read up to their own order)
 * with nonzero constant term. Inversion runs over the rationals; a
 * non-integral result coefficient is an invariant violation.
 */
inline UniSeries uni_rational_eval(const UniSeries& numerator, const std::vector<UniSeries>& denominators, long order)
{
    std::vector<Rational> acc(order + 1);
    for (long n = 0; n <= order; ++n)
        acc[n] = Rational(numerator.coeff(n));
    for (const auto& den : denominators) {
        const Integer c0 = den.coeff(0);
        if (c0 == 0)
            throw std::invalid_argument("denominator has zero constant term");
        // acc <- acc / den, solved term by term.
        std::vector<Rational> out(order + 1);
        for (long n = 0; n <= order; ++n) {
            Rational v = acc[n];
            for (long j = 1; j <= std::min(n, den.order()); ++j)
                if (den.coeff(j) != 0)
                    v -= Rational(den.coeff(j)) * out[n - j];
            out[n] = v / Rational(c0);
        }
        acc = std::move(out);
    }
    UniSeries result(order);
    for (long n = 0; n <= order; ++n) {
        if (!is_integral(acc[n]))
            throw invariant_violation("non-integral coefficient " + to_string(acc[n]), "t^" + std::to_string(n));
        result.set(n, boost::multiprecision::numerator(acc[n]));
    }
    return result;
}

namespace detail {

inline nlohmann::json integer_to_json(const Integer& c)
{
    if (fits_int64(c))
        return c.convert_to<std::int64_t>();
    return c.str();
}

} // namespace detail

/// Canonical JSON form. Keys are sorted; terms are ordered by exponent and
/// zero coefficients are omitted. Coefficients outside the int64 range are
/// written as decimal strings.
inline nlohmann::json to_json(const UniSeries& s, std::optional<long> d = std::nullopt)
{
    nlohmann::json j;
    j["kind"] = "uni";
    j["cut"] = s.order();
    if (d)
        j["d"] = *d;
    auto terms = nlohmann::json::array();
    for (long n = 0; n <= s.order(); ++n)
        if (s.coeff(n) != 0)
            terms.push_back({{"deg", n}, {"c", detail::integer_to_json(s.coeff(n))}});
    j["terms"] = std::move(terms);
    return j;
}

inline nlohmann::json to_json(const MultiSeries& s)
{
    nlohmann::json j;
    j["kind"] = "multi";
    j["cut"] = s.height_cut();
    j["d"] = s.context().d();
    auto terms = nlohmann::json::array();
    for (const auto& [r, c] : s.terms())
        terms.push_back({{"deg", {r.i, r.k}}, {"c", detail::integer_to_json(c)}});
    j["terms"] = std::move(terms);
    return j;
}

} // namespace cotangent

#endif
