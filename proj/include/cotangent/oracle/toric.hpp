#ifndef COTANGENT_ORACLE_TORIC_HPP
#define COTANGENT_ORACLE_TORIC_HPP

/**
 * Direct computation of T^n(-R) for the cone over the rational normal curve.
 *
 * For R in int Lambda the relevant cochains are functions on
 *
 *     D_n = { (l_1, ..., l_n) in K_R^n : l_1 + ... + l_n in K_R },
 *
 * vanishing on shuffles, with the differential
 *
 *     (d phi)(l_0..l_n) = phi(l_1..l_n)
 *                        + sum_{v=1}^{n} (-1)^v phi(.., l_{v-1} + l_v, ..)
 *                        + (-1)^{n+1} phi(l_0..l_{n-1}).
 *
 * Write HA^n(K_R) for its cohomology. Then T^n(-R) = HA^{n-1}(K_R) for
 * n >= 3, T^2(-R) = HA^1(K_R) minus the rank of span(K_R), and T^n(-R) = 0
 * when R is not in int Lambda.
 *
 * Dropping the two end terms gives the homogeneous complex on
 * { (l_1..l_n) in Lambda_+^n : sum = r }, whose cohomology is the Harrison
 * cohomology of Y_d in degree -r.
 */

#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "../formulas.hpp"
#include "../lattice.hpp"
#include "../numeric.hpp"
#include "cochain.hpp"
#include "matrix.hpp"
#include "shuffle.hpp"

namespace cotangent::oracle {

using DegreeTuple = std::vector<MultiDegree>;

enum class DifferentialKind { inhomogeneous, homogeneous };

/// One slot of the complex: the basis D_n (lexicographic) and the shuffle
/// relations, one row per basis tuple.
struct ToricComplexSlice
{
    ToricComplexSlice(ConeContext c, MultiDegree r, int degree, DifferentialKind k)
        : ctx(c), target(r), n(degree), kind(k)
    {
    }

    ConeContext ctx;
    MultiDegree target;
    int n;
    DifferentialKind kind;
    std::vector<DegreeTuple> basis;
    RationalMatrix shuffle_relations;

    std::size_t index_of(const DegreeTuple& t) const
    {
        auto it = index_.find(t);
        if (it == index_.end())
            throw std::logic_error("tuple outside the cochain basis in degree " + std::to_string(n));
        return it->second;
    }

    bool contains(const DegreeTuple& t) const { return index_.contains(t); }

    void build_index()
    {
        index_.clear();
        for (std::size_t j = 0; j < basis.size(); ++j)
            index_.emplace(basis[j], j);
    }

private:
    std::map<DegreeTuple, std::size_t> index_;
};

namespace detail {

inline void fill_relations(ToricComplexSlice& slice)
{
    slice.build_index();
    slice.shuffle_relations = RationalMatrix(slice.n >= 2 ? slice.basis.size() : 0, slice.basis.size());
    if (slice.n < 2)
        return;
    for (std::size_t j = 0; j < slice.basis.size(); ++j)
        for (const auto& [u, c] : apply_shuffle_element(slice.basis[j]))
            slice.shuffle_relations.add(j, slice.index_of(u), c);
}

} // namespace detail

/// Slot n of the inhomogeneous complex on K_R. Every prefix sum of a tuple in
/// D_n lies in K_R as well, which prunes the enumeration.
inline ToricComplexSlice build_toric_complex(const ConeContext& ctx, MultiDegree big, int n)
{
    if (n < 1)
        throw std::invalid_argument("cochain degree must be >= 1");
    ToricComplexSlice slice(ctx, big, n, DifferentialKind::inhomogeneous);
    const std::vector<MultiDegree> k_r = enumerate_K(ctx, big);
    const std::set<MultiDegree> members(k_r.begin(), k_r.end());

    DegreeTuple t;
    auto rec = [&](auto& self, MultiDegree prefix) -> void {
        if (static_cast<int>(t.size()) == n) {
            slice.basis.push_back(t);
            return;
        }
        for (const MultiDegree& l : k_r) {
            if (!members.contains(prefix + l))
                continue;
            t.push_back(l);
            self(self, prefix + l);
            t.pop_back();
        }
    };
    rec(rec, MultiDegree{0, 0});
    detail::fill_relations(slice);
    return slice;
}

/// Slot n of the homogeneous complex in degree -r: tuples in Lambda_+^n with sum r.
inline ToricComplexSlice build_homogeneous_slice(const ConeContext& ctx, MultiDegree r, int n)
{
    if (n < 1)
        throw std::invalid_argument("cochain degree must be >= 1");
    if (!in_lambda_plus(ctx, r))
        throw std::invalid_argument("homogeneous complex needs r in Lambda_+, got " + r.str());
    ToricComplexSlice slice(ctx, r, n, DifferentialKind::homogeneous);

    std::vector<MultiDegree> candidates;
    for (long k = 0; k <= r.k; ++k)
        for (const MultiDegree& l : lambda_slice(ctx, k))
            if (!l.is_zero() && l.i <= r.i)
                candidates.push_back(l);

    DegreeTuple t;
    auto rec = [&](auto& self, MultiDegree rest) -> void {
        const int left = n - static_cast<int>(t.size());
        if (left == 0) {
            if (rest.is_zero())
                slice.basis.push_back(t);
            return;
        }
        for (const MultiDegree& l : candidates) {
            const MultiDegree after = rest - l;
            if (!in_lambda(ctx, after))
                continue;
            if (left > 1 && after.is_zero())
                continue;
            t.push_back(l);
            self(self, after);
            t.pop_back();
        }
    };
    rec(rec, r);
    detail::fill_relations(slice);
    return slice;
}

/// The differential from slot `from` to slot `to` (to.n = from.n + 1).
inline RationalMatrix toric_differential(const ToricComplexSlice& from, const ToricComplexSlice& to)
{
    if (to.n != from.n + 1 || to.kind != from.kind)
        throw std::invalid_argument("differential needs consecutive slots of the same complex");
    const int n = from.n;
    const bool ends = from.kind == DifferentialKind::inhomogeneous;
    RationalMatrix d(to.basis.size(), from.basis.size());
    for (std::size_t row = 0; row < to.basis.size(); ++row) {
        const DegreeTuple& t = to.basis[row];
        if (ends) {
            d.add(row, from.index_of(DegreeTuple(t.begin() + 1, t.end())), 1);
            d.add(row, from.index_of(DegreeTuple(t.begin(), t.end() - 1)), n % 2 == 0 ? -1 : 1);
        }
        for (int v = 1; v <= n; ++v) {
            DegreeTuple merged;
            merged.reserve(n);
            merged.insert(merged.end(), t.begin(), t.begin() + (v - 1));
            merged.push_back(t[v - 1] + t[v]);
            merged.insert(merged.end(), t.begin() + (v + 1), t.end());
            d.add(row, from.index_of(merged), v % 2 == 0 ? 1 : -1);
        }
    }
    return d;
}

inline ShuffleCochainComplex assemble(const std::vector<ToricComplexSlice>& slices)
{
    if (slices.empty())
        throw std::invalid_argument("cannot assemble an empty complex");
    std::vector<std::size_t> dims;
    std::vector<RationalMatrix> relations;
    std::vector<RationalMatrix> differentials;
    for (std::size_t j = 0; j < slices.size(); ++j) {
        dims.push_back(slices[j].basis.size());
        relations.push_back(slices[j].shuffle_relations);
        if (j + 1 < slices.size())
            differentials.push_back(toric_differential(slices[j], slices[j + 1]));
    }
    return ShuffleCochainComplex(slices.front().n, std::move(dims), std::move(relations), std::move(differentials));
}

/// Slots 1..top of the inhomogeneous complex on K_R.
inline ShuffleCochainComplex toric_cochain_complex(const ConeContext& ctx, MultiDegree big, int top)
{
    std::vector<ToricComplexSlice> slices;
    for (int n = 1; n <= top; ++n)
        slices.push_back(build_toric_complex(ctx, big, n));
    return assemble(slices);
}

/// Slots 1..top of the homogeneous complex in degree -r.
inline ShuffleCochainComplex homogeneous_cochain_complex(const ConeContext& ctx, MultiDegree r, int top)
{
    std::vector<ToricComplexSlice> slices;
    for (int n = 1; n <= top; ++n)
        slices.push_back(build_homogeneous_slice(ctx, r, n));
    return assemble(slices);
}

/// dim HA^n(K_R).
inline std::size_t toric_HA_dim(const ConeContext& ctx, MultiDegree big, int n)
{
    if (n < 1)
        throw std::invalid_argument("HA^n needs n >= 1");
    return toric_cochain_complex(ctx, big, n + 1).cohomology_dim(n);
}

/// Rank of the lattice span of K_R (0, 1 or 2).
inline std::size_t span_rank(const ConeContext& ctx, MultiDegree big)
{
    const std::vector<MultiDegree> k_r = enumerate_K(ctx, big);
    RationalMatrix m(k_r.size(), 2);
    for (std::size_t j = 0; j < k_r.size(); ++j) {
        m.add(j, 0, k_r[j].i);
        m.add(j, 1, k_r[j].k);
    }
    return rank(m);
}

/// T^n(-R) for n = 2..n_max read off an already built complex with slots
/// 1..n_max; entry j of the result is T^{j+2}.
inline std::vector<std::size_t> toric_T_dims(const ShuffleCochainComplex& complex, const ConeContext& ctx,
                                             MultiDegree big, int n_max)
{
    if (n_max < 2)
        throw std::invalid_argument("T^n from the toric complex needs n >= 2");
    std::vector<std::size_t> out(static_cast<std::size_t>(n_max - 1), 0);
    if (!in_interior_lambda(ctx, big))
        return out;
    const std::size_t ha1 = complex.cohomology_dim(1);
    const std::size_t span = span_rank(ctx, big);
    if (ha1 < span)
        throw invariant_violation("HA^1 smaller than the span rank", big.str());
    out[0] = ha1 - span;
    for (int n = 3; n <= n_max; ++n)
        out[n - 2] = complex.cohomology_dim(n - 1);
    return out;
}

inline std::vector<std::size_t> toric_T_dims(const ConeContext& ctx, MultiDegree big, int n_max)
{
    if (n_max < 2)
        throw std::invalid_argument("T^n from the toric complex needs n >= 2");
    if (!in_interior_lambda(ctx, big))
        return std::vector<std::size_t>(static_cast<std::size_t>(n_max - 1), 0);
    return toric_T_dims(toric_cochain_complex(ctx, big, n_max), ctx, big, n_max);
}

inline std::size_t toric_T_dim(const ConeContext& ctx, MultiDegree big, int n)
{
    if (n < 2)
        throw std::invalid_argument("T^n from the toric complex needs n >= 2");
    return toric_T_dims(ctx, big, n).back();
}

/// Harrison cohomology of Y_d in degree -r and cochain degree n.
inline std::size_t homogeneous_split_dim(const ConeContext& ctx, MultiDegree r, int n)
{
    if (n < 1)
        throw std::invalid_argument("cochain degree must be >= 1");
    return homogeneous_cochain_complex(ctx, r, n + 1).cohomology_dim(n);
}

/// Coefficient of x^r in Q~_Y.
inline Integer cone_harrison_coefficient(const ConeContext& ctx, MultiDegree r)
{
    Integer c = r.k >= 1 ? multigraded_harrison_dim(ctx, r) : Integer(0);
    if (r == MultiDegree{0, 1} || r == MultiDegree{ctx.d(), 1})
        c += 1;
    return c;
}

/**
 * Right-hand side of the Euler-characteristic identity for T(-R):
 *
 *     sum_{s in K_R} (-1)^{ht(R-s)-1} q~_Y(s) + (-1)^{ht R - 1} HA^1(K_R)
 *
 * It equals T^{ht R}(-R) for ht R >= 3 and vanishes at heights 1 and 2.
 */
inline Integer euler_identity_rhs(const ConeContext& ctx, MultiDegree big, std::size_t ha1)
{
    Integer total = 0;
    for (const MultiDegree& s : enumerate_K(ctx, big)) {
        const Integer q = cone_harrison_coefficient(ctx, s);
        total += (big.k - s.k) % 2 == 1 ? q : Integer(-q);
    }
    total += big.k % 2 == 1 ? Integer(ha1) : -Integer(ha1);
    return total;
}

inline nlohmann::json to_json(const ToricComplexSlice& slice)
{
    nlohmann::json j;
    j["d"] = slice.ctx.d();
    j["R"] = {slice.target.i, slice.target.k};
    j["n"] = slice.n;
    j["kind"] = slice.kind == DifferentialKind::inhomogeneous ? "inhomogeneous" : "homogeneous";
    auto basis = nlohmann::json::array();
    for (const auto& t : slice.basis) {
        auto tuple = nlohmann::json::array();
        for (const auto& l : t)
            tuple.push_back({l.i, l.k});
        basis.push_back(std::move(tuple));
    }
    j["basis"] = std::move(basis);
    j["shuffle_relations"] = to_json(slice.shuffle_relations);
    return j;
}

} // namespace cotangent::oracle

#endif
