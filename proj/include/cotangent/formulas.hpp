#ifndef COTANGENT_FORMULAS_HPP
#define COTANGENT_FORMULAS_HPP

/**
 * Closed-form dimensions and Poincaré series.
 *
 * Notation used throughout:
 *   Z_m   fat point C + V with dim V = m and V^2 = 0,
 *   Y_d   cone over the rational normal curve of degree d (m = d - 1),
 *   c_n   dim Harr^n(Z_m / C, C), the degree -n part of the free graded Lie
 *         algebra on m generators of degree -1,
 *   c_R   its refinement by multidegree R (generators z_v in degree [v,1]).
 *
 * Series named q_* collect Harrison cohomology with C coefficients; p_*
 * collect cotangent cohomology T^n of the space itself.
 */

#include <string>
#include <vector>

#include "errors.hpp"
#include "lattice.hpp"
#include "numeric.hpp"
#include "series.hpp"

namespace cotangent {

struct PartitionCurveSpec
{
    long d;      // total multiplicity d_1 + ... + d_r
    long tau_H;  // dim T^1 of the curve, supplied by the caller
};

struct QuotientSpec
{
    long d;    // multiplicity
    long tau;  // dim T^1, supplied by the caller
};

namespace detail {

inline void require(bool ok, const std::string& msg)
{
    if (!ok)
        throw std::invalid_argument(msg);
}

inline UniSeries require_nonnegative(UniSeries s, const std::string& what)
{
    if (auto n = s.first_negative())
        throw invariant_violation("negative coefficient in " + what, "t^" + std::to_string(*n));
    return s;
}

inline MultiSeries require_nonnegative(MultiSeries s, const std::string& what)
{
    if (auto r = s.first_negative())
        throw invariant_violation("negative coefficient in " + what, r->str());
    return s;
}

/// Number of (v_1, ..., v_n) with lo <= v_j <= hi and sum s.
inline Integer composition_count(long n, long s, long lo, long hi)
{
    if (n < 0 || s < n * lo || s > n * hi)
        return 0;
    std::vector<Integer> ways(s + 1);
    ways[0] = 1;
    for (long part = 0; part < n; ++part) {
        std::vector<Integer> next(s + 1);
        for (long t = 0; t <= s; ++t) {
            if (ways[t] == 0)
                continue;
            for (long v = lo; v <= hi && t + v <= s; ++v)
                next[t + v] += ways[t];
        }
        ways = std::move(next);
    }
    return ways[s];
}

/// Coefficient of x^R in (-1)^n (x^[1,1] + ... + x^[d-1,1])^n, n = ht(R).
inline Integer power_sum_coefficient(const ConeContext& ctx, MultiDegree r)
{
    if (r.k < 1)
        return 0;
    Integer a = composition_count(r.k, r.i, 1, ctx.d() - 1);
    return r.k % 2 == 0 ? a : Integer(-a);
}

inline Integer moebius_inverted_c(const ConeContext& ctx, MultiDegree r)
{
    if (r.k < 1)
        return 0;
    Integer b = 0;
    for (const auto& [q, base] : divisors_of_degree(r))
        if (int mu = moebius(q); mu != 0)
            b += mu * power_sum_coefficient(ctx, base);
    if (r.k % 2 != 0)
        b = -b;
    if (b % r.k != 0)
        throw invariant_violation("non-integral multigraded Harrison dimension", r.str());
    return b / r.k;
}

inline MultiSeries ray_sum(const ConeContext& ctx, long from, long to, long step, long cut)
{
    MultiSeries s(ctx, cut);
    for (long v = from; v <= to; v += step)
        s.add_term({v, 1}, 1);
    return s;
}

} // namespace detail

/// c_n = (1/n) sum_{q | n} (-1)^{n + n/q} mu(q) m^{n/q}.
inline Integer fat_point_harrison_dim(long m, long n)
{
    detail::require(m >= 2, "fat point needs m >= 2, got " + std::to_string(m));
    detail::require(n >= 1, "Harrison degree must be >= 1, got " + std::to_string(n));
    Integer sum = 0;
    for (long q = 1; q <= n; ++q) {
        if (n % q != 0)
            continue;
        const int mu = moebius(q);
        if (mu == 0)
            continue;
        const long e = n / q;
        Integer term = mu * ipow(m, static_cast<unsigned>(e));
        if ((n + e) % 2 != 0)
            term = -term;
        sum += term;
    }
    if (sum % n != 0 || sum < 0)
        throw invariant_violation("fat point Harrison dimension not a nonnegative integer",
                                  "m=" + std::to_string(m) + ", n=" + std::to_string(n));
    return sum / n;
}

inline UniSeries q_fat_point(long m, long order)
{
    detail::require(m >= 2, "fat point needs m >= 2, got " + std::to_string(m));
    UniSeries s(order);
    for (long n = 1; n <= order; ++n)
        s.set(n, fat_point_harrison_dim(m, n));
    return s;
}

/**
 * c_R by two-dimensional Möbius inversion of
 *
 *     a_R = sum_{R' | R} (-1)^{ht R'} ht(R') c_{R'},
 *
 * a_R the coefficient of x^R in (-1)^n (x^[1,1] + ... + x^[d-1,1])^n. The
 * inversion is checked by reconstructing a_R from the computed values.
 */
inline Integer multigraded_harrison_dim(const ConeContext& ctx, MultiDegree r)
{
    if (r.is_zero())
        throw std::invalid_argument("multigraded Harrison dimension is undefined at R = 0");
    if (r.k < 1)
        return 0;
    Integer c = detail::moebius_inverted_c(ctx, r);
    if (c < 0)
        throw invariant_violation("negative multigraded Harrison dimension", r.str());

    Integer rebuilt = 0;
    for (const auto& [q, base] : divisors_of_degree(r)) {
        Integer term = base.k * (q == 1 ? c : detail::moebius_inverted_c(ctx, base));
        rebuilt += base.k % 2 == 0 ? term : Integer(-term);
    }
    if (rebuilt != detail::power_sum_coefficient(ctx, r))
        throw invariant_violation("Möbius inversion does not round-trip", r.str());
    return c;
}

/// Q~_{Z_{d-1}}(x) = sum_R c_R x^R.
inline MultiSeries q_tilde_fat_point(const ConeContext& ctx, long height_cut)
{
    MultiSeries s(ctx, height_cut);
    for (long k = 1; k <= height_cut; ++k)
        for (long i = k; i <= (ctx.d() - 1) * k; ++i)
            s.add_term({i, k}, multigraded_harrison_dim(ctx, {i, k}));
    return s;
}

/// Q~_{Y_d} = Q~_{Z_{d-1}} + x^[0,1] + x^[d,1].
inline MultiSeries q_tilde_cone(const ConeContext& ctx, long height_cut)
{
    MultiSeries s = q_tilde_fat_point(ctx, height_cut);
    s.add_term({0, 1}, 1);
    s.add_term({ctx.d(), 1}, 1);
    return s;
}

/// dim T^0(-R) of Y_d.
inline int t0_dim(const ConeContext& ctx, MultiDegree r)
{
    const long u = ctx.on_first_ray(r);
    const long w = ctx.on_second_ray(r);
    if (u <= 0 && w <= 0)
        return 2;
    if ((u <= 0 && w == 1) || (w <= 0 && u == 1))
        return 1;
    return 0;
}

/// dim T^1(-R) of Y_d; lives in height one, total 2d - 4.
inline int t1_dim(const ConeContext& ctx, MultiDegree r)
{
    if (r.k != 1)
        return 0;
    const long d = ctx.d();
    if (r.i == 1 || r.i == d - 1)
        return 1;
    if (r.i >= 2 && r.i <= d - 2)
        return 2;
    return 0;
}

/// dim T^2(-R) of Y_d; lives in height two, total (d-1)(d-3).
inline long t2_dim(const ConeContext& ctx, MultiDegree r)
{
    if (r.k != 2)
        return 0;
    const long d = ctx.d();
    const long i = r.i;
    if (i >= 2 && i <= d - 1)
        return i - 2;
    if (i == d)
        return d - 3;
    if (i >= d + 1 && i <= 2 * d - 2)
        return 2 * d - i - 2;
    return 0;
}

/// F(x) = x^[1,1] + ... + x^[d-1,1] - x^[d,2], built as
/// (x^[d,1] - x^[1,1]) / (x^[1,0] - 1) - x^[d,2].
inline MultiSeries cone_numerator(const ConeContext& ctx, long height_cut)
{
    MultiSeries diff = MultiSeries::monomial(ctx, {ctx.d(), 1}, height_cut) -
                       MultiSeries::monomial(ctx, {1, 1}, height_cut);
    return exact_divide_height_zero(diff, 1) - MultiSeries::monomial(ctx, {ctx.d(), 2}, height_cut);
}

/// sum over R in int Lambda of (-1)^{ht R - 1} x^R.
inline MultiSeries interior_alternating_series(const ConeContext& ctx, long height_cut)
{
    MultiSeries s(ctx, height_cut);
    for (long k = 1; k <= height_cut; ++k)
        for (long i = 1; i <= ctx.d() * k - 1; ++i)
            s.add_term({i, k}, k % 2 == 1 ? 1 : -1);
    return s;
}

/**
 * Multigraded Poincaré series of T^{>=1}(Y_d):
 *
 *   P~ = F (Q~_Y + 2) / ((1 + x^[0,1]) (1 + x^[d,1]))
 *        - x^[1,1] / (1 + x^[0,1]) - x^[d-1,1] / (1 + x^[d,1]).
 *
 * The coefficient of x^R is dim T^{ht R}(-R).
 */
inline MultiSeries p_tilde_cone(const ConeContext& ctx, long height_cut)
{
    const long d = ctx.d();
    const MultiSeries inv_low = expand_inverse_one_plus(ctx, {0, 1}, height_cut);
    const MultiSeries inv_high = expand_inverse_one_plus(ctx, {d, 1}, height_cut);
    const MultiSeries q_plus_two = q_tilde_cone(ctx, height_cut) + 2 * MultiSeries::one(ctx, height_cut);

    MultiSeries p = cone_numerator(ctx, height_cut) * q_plus_two * inv_low * inv_high;
    p = p - MultiSeries::monomial(ctx, {1, 1}, height_cut) * inv_low;
    p = p - MultiSeries::monomial(ctx, {d - 1, 1}, height_cut) * inv_high;
    return detail::require_nonnegative(std::move(p), "P~_Y");
}

/// P_Y(t) = (Q_Y + 2) ((d-1) t - t^2) / (t+1)^2 - 2t / (t+1), Q_Y = Q_Z + 2t.
inline UniSeries p_cone(long d, long order)
{
    const ConeContext ctx(d);
    const UniSeries q_y = q_fat_point(d - 1, order) + UniSeries::polynomial({2, 2}, order);
    const UniSeries one_plus_t = UniSeries::polynomial({1, 1}, 1);
    const UniSeries first =
        uni_rational_eval(q_y * UniSeries::polynomial({0, d - 1, -1}, order), {one_plus_t, one_plus_t}, order);
    const UniSeries second = uni_rational_eval(UniSeries::polynomial({0, 2}, order), {one_plus_t}, order);
    return detail::require_nonnegative(first - second, "P_Y");
}

/// Sum_{n>=0} dim T^n(Z_m) t^n = m^2 + sum_{n>=1} (m c_{n+1} - c_n) t^n.
inline UniSeries p_fat_point(long m, long order)
{
    detail::require(m >= 2, "fat point needs m >= 2, got " + std::to_string(m));
    UniSeries s(order);
    s.set(0, Integer(m) * m);
    for (long n = 1; n <= order; ++n)
        s.set(n, m * fat_point_harrison_dim(m, n + 1) - fat_point_harrison_dim(m, n));
    return detail::require_nonnegative(std::move(s), "P_Z");
}

/// The same series as ((m - t) / t) Q_Z(t).
inline UniSeries p_fat_point_rational(long m, long order)
{
    const UniSeries q = q_fat_point(m, order + 1);
    return divide_by_t_power(UniSeries::polynomial({m, -1}, order + 1) * q, 1);
}

/// P_H(t) = ((d - 1 - t) / (t + 1)) Q_{Z_{d-1}}(t) + tau_H t - (d-1)^2 t.
inline UniSeries p_partition_curve(const PartitionCurveSpec& spec, long order)
{
    const ConeContext ctx(spec.d);
    detail::require(spec.tau_H >= 0, "tau_H must be >= 0");
    detail::require(order >= 1, "partition curve series needs order >= 1");
    const long m = spec.d - 1;
    const UniSeries numerator = UniSeries::polynomial({m, -1}, order) * q_fat_point(m, order);
    UniSeries p = uni_rational_eval(numerator, {UniSeries::polynomial({1, 1}, 1)}, order);
    p.set(1, p.coeff(1) + spec.tau_H - m * m);
    return detail::require_nonnegative(std::move(p), "P_H");
}

/// P_Y with the linear coefficient moved from 2d - 4 to tau.
inline UniSeries p_quotient(const QuotientSpec& spec, long order)
{
    detail::require(spec.tau >= 0, "tau must be >= 0");
    detail::require(order >= 1, "quotient series needs order >= 1");
    UniSeries p = p_cone(spec.d, order);
    p.set(1, p.coeff(1) + (spec.tau - 2 * spec.d + 4));
    if (p.coeff(1) != spec.tau)
        throw invariant_violation("linear coefficient differs from tau", "t^1");
    return detail::require_nonnegative(std::move(p), "P_quotient");
}

/// e_{H,Y} = tau_H - (d-1)(d-3).
inline long smoothing_component_dim(long d, long tau_H) { return tau_H - (d - 1) * (d - 3); }

/**
 * P_H(t) = (1 + 1/t) P_Y(t) - tau_Y (t + 1) + e t.
 *
 * Valid when f T^n_Y = 0 for n >= 2; checking that is the caller's job. The
 * result is known one order lower than P_Y.
 */
inline UniSeries hyperplane_section_series(const UniSeries& p_y, long tau_y, long e)
{
    detail::require(p_y.order() >= 1, "total-space series needs order >= 1");
    detail::require(p_y.coeff(0) == 0, "total-space series must have zero constant term");
    detail::require(p_y.coeff(1) == tau_y, "t^1 coefficient of the total-space series must equal tau_Y");
    const long order = p_y.order() - 1;
    UniSeries h = divide_by_t_power(p_y, 1) + p_y.truncated(order);
    h = h - UniSeries::polynomial({tau_y, tau_y}, order);
    return h + UniSeries::monomial(1, e, order);
}

/**
 * Predicted T^{>=1} series of Z_{d-1} from its relation to the partition
 * curve, with the generator count tau_H_cg of T^1_H as a free parameter:
 *
 *   P_Z = (1 + 1/t) P_H^cg - tau_H^cg (t + 1) + (d-1)^2 t,
 *   P_H^cg = P_H - (tau_H - tau_H^cg) t.
 *
 * The constant term of the result is zero; coefficients n >= 1 must agree
 * with p_fat_point(d - 1).
 */
inline UniSeries fat_point_via_partition_curve(long d, long tau_H, long tau_H_cg, long order)
{
    UniSeries h_cg = p_partition_curve({d, tau_H}, order + 1);
    h_cg.set(1, h_cg.coeff(1) - (tau_H - tau_H_cg));
    return hyperplane_section_series(h_cg, tau_H_cg, (d - 1) * (d - 1));
}

/// Height-2 slice of Q~_{Z_{d-1}}: ((sum x^[v,1])^2 + sum x^[2v,2]) / 2.
inline MultiSeries q_tilde_height2_closed_form(const ConeContext& ctx)
{
    const MultiSeries s = detail::ray_sum(ctx, 1, ctx.d() - 1, 1, 2);
    MultiSeries twice = s * s;
    for (long v = 1; v <= ctx.d() - 1; ++v)
        twice.add_term({2 * v, 2}, 1);
    MultiSeries out(ctx, 2);
    for (const auto& [r, c] : twice.terms()) {
        if (c % 2 != 0)
            throw invariant_violation("odd coefficient in symmetric square", r.str());
        out.add_term(r, c / 2);
    }
    return out;
}

/// Height-3 slice of P~_Y as
/// (x^[d,1]-x^[1,1]) (x^[d-1,1]-x^[2,1]) (x^[d,1]-x^[2,1]) / ((x^[1,0]-1)^2 (x^[2,0]-1)).
inline MultiSeries cone_height3_closed_form(const ConeContext& ctx)
{
    const long d = ctx.d();
    auto binomial = [&](long hi, long lo) {
        return MultiSeries::monomial(ctx, {hi, 1}, 3) - MultiSeries::monomial(ctx, {lo, 1}, 3);
    };
    const MultiSeries numerator = binomial(d, 1) * binomial(d - 1, 2) * binomial(d, 2);
    const SlicePolynomial divisor = slice_multiply(x_minus_one_power(2), SlicePolynomial{-1, 0, 1});
    return exact_divide_height_zero(numerator, divisor);
}

/// Even d: (x^[1,1] + ... + x^[d-1,1]) (x^[2,1] + ... + x^[d-2,1]) (x^[2,1] + x^[4,1] + ... + x^[d-2,1]).
inline MultiSeries cone_height3_symmetric_form(const ConeContext& ctx)
{
    const long d = ctx.d();
    if (d % 2 != 0)
        throw std::invalid_argument("symmetric height-3 form needs even d, got " + std::to_string(d));
    return detail::ray_sum(ctx, 1, d - 1, 1, 3) * detail::ray_sum(ctx, 2, d - 2, 1, 3) *
           detail::ray_sum(ctx, 2, d - 2, 2, 3);
}

} // namespace cotangent

#endif
