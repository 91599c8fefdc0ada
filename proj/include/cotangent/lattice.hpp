#ifndef COTANGENT_LATTICE_HPP
#define COTANGENT_LATTICE_HPP

/**
 * Degree-lattice arithmetic for the plane cone
 *
 *     sigma = R_{>=0} (1,0) + R_{>=0} (-1,d),
 *
 * whose toric variety is the cone over the rational normal curve of degree d.
 * Multidegrees R = [i,k] live in the dual lattice; a degree is evaluated on
 * sigma through its two ray generators, which for R = [i,k] gives the values
 * i and d*k - i. The second coordinate k is the height ht(R).
 */

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cotangent {

struct MultiDegree
{
    long i = 0;
    long k = 0;

    constexpr long height() const noexcept { return k; }
    constexpr bool is_zero() const noexcept { return i == 0 && k == 0; }

    friend constexpr bool operator==(const MultiDegree&, const MultiDegree&) = default;

    // Height first, then first coordinate.
    friend constexpr std::strong_ordering operator<=>(const MultiDegree& a, const MultiDegree& b)
    {
        if (auto c = a.k <=> b.k; c != 0)
            return c;
        return a.i <=> b.i;
    }

    friend constexpr MultiDegree operator+(MultiDegree a, MultiDegree b) { return {a.i + b.i, a.k + b.k}; }
    friend constexpr MultiDegree operator-(MultiDegree a, MultiDegree b) { return {a.i - b.i, a.k - b.k}; }
    friend constexpr MultiDegree operator*(long s, MultiDegree a) { return {s * a.i, s * a.k}; }

    std::string str() const { return "[" + std::to_string(i) + "," + std::to_string(k) + "]"; }

    friend std::ostream& operator<<(std::ostream& os, const MultiDegree& r) { return os << r.str(); }
};

class ConeContext
{
public:
    explicit ConeContext(long d) : d_(d)
    {
        if (d < 3)
            throw std::invalid_argument("cone parameter d must be >= 3, got " + std::to_string(d));
    }

    long d() const noexcept { return d_; }

    /// Value of R on the ray generator (1,0).
    long on_first_ray(MultiDegree r) const noexcept { return r.i; }
    /// Value of R on the ray generator (-1,d).
    long on_second_ray(MultiDegree r) const noexcept { return d_ * r.k - r.i; }

    friend bool operator==(const ConeContext&, const ConeContext&) = default;

private:
    long d_;
};

/// R >= 0 on sigma.
inline bool in_lambda(const ConeContext& ctx, MultiDegree r)
{
    return ctx.on_first_ray(r) >= 0 && ctx.on_second_ray(r) >= 0;
}

inline bool in_lambda_plus(const ConeContext& ctx, MultiDegree r) { return !r.is_zero() && in_lambda(ctx, r); }

/// R > 0 on sigma minus the origin; strictness on both rays suffices by linearity.
inline bool in_interior_lambda(const ConeContext& ctx, MultiDegree r)
{
    return ctx.on_first_ray(r) > 0 && ctx.on_second_ray(r) > 0;
}

/// Lattice points of Lambda at height k, ordered by first coordinate.
inline std::vector<MultiDegree> lambda_slice(const ConeContext& ctx, long k)
{
    std::vector<MultiDegree> out;
    if (k < 0)
        return out;
    for (long i = 0; i <= ctx.d() * k; ++i)
        out.push_back({i, k});
    return out;
}

struct Divisor
{
    long multiple;     // k >= 1
    MultiDegree base;  // R / k

    friend bool operator==(const Divisor&, const Divisor&) = default;
};

/// All (k, R/k) with k a positive integer dividing both coordinates,
/// ordered by increasing k.
inline std::vector<Divisor> divisors_of_degree(MultiDegree r)
{
    if (r.is_zero())
        throw std::invalid_argument("the zero degree has infinitely many divisors");
    const long g = std::gcd(std::labs(r.i), std::labs(r.k));
    std::vector<Divisor> out;
    for (long q = 1; q <= g; ++q)
        if (g % q == 0)
            out.push_back({q, {r.i / q, r.k / q}});
    return out;
}

inline int moebius(long n)
{
    if (n <= 0)
        throw std::invalid_argument("moebius is defined for n >= 1, got " + std::to_string(n));
    int sign = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0)
            continue;
        n /= p;
        if (n % p == 0)
            return 0;
        sign = -sign;
    }
    if (n > 1)
        sign = -sign;
    return sign;
}

/**
 * The finite index set
 *
 *     K_R = { r != 0 : r >= 0 on sigma, R - r > 0 on sigma \ {0} }
 *
 * ordered by (height, first coordinate). Empty unless R lies in int Lambda.
 * Scan bounds: b in [0, ht(R)], a in [0, min(d*b, R_1 - 1)].
 */
inline std::vector<MultiDegree> enumerate_K(const ConeContext& ctx, MultiDegree big)
{
    std::vector<MultiDegree> out;
    if (!in_interior_lambda(ctx, big))
        return out;
    const long d = ctx.d();
    for (long b = 0; b <= big.k; ++b) {
        const long a_max = std::min(d * b, big.i - 1);
        for (long a = 0; a <= a_max; ++a) {
            if (a == 0 && b == 0)
                continue;
            const MultiDegree r{a, b};
            if (in_interior_lambda(ctx, big - r))
                out.push_back(r);
        }
    }
    return out;
}

} // namespace cotangent

#endif
