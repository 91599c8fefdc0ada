#ifndef COTANGENT_ORACLE_FAT_POINT_HPP
#define COTANGENT_ORACLE_FAT_POINT_HPP

/**
 * Brute-force Harrison and Hochschild cohomology of the fat point
 * A = C + V, V^2 = 0, dim V = m.
 *
 * With C coefficients the reduced Harrison cochains in degree n are the
 * functionals on V^{(x)n} that vanish on the image of sh; the differential
 * is zero, so dim Harr^n = m^n - rank(sh). Permutations preserve the
 * multiset of letters, so sh is block diagonal over letter contents and
 * the rank is summed block by block.
 */

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "../formulas.hpp"
#include "../lattice.hpp"
#include "../numeric.hpp"
#include "cochain.hpp"
#include "matrix.hpp"
#include "shuffle.hpp"

namespace cotangent::oracle {

struct ShuffleRank
{
    std::size_t dimension = 0;  // dimension of the (weight) subspace of V^{(x)n}
    std::size_t rank = 0;       // rank of sh on it

    std::size_t harrison_dim() const noexcept { return dimension - rank; }
};

namespace detail {

using Word = std::vector<int>;

// Nondecreasing words of length n over [0, m); each is the sorted
// representative of one letter content.
inline void for_each_content(int m, int n, const auto& visit)
{
    Word w(n, 0);
    auto rec = [&](auto& self, int pos, int lo) -> void {
        if (pos == n) {
            visit(w);
            return;
        }
        for (int x = lo; x < m; ++x) {
            w[pos] = x;
            self(self, pos + 1, x);
        }
    };
    rec(rec, 0, 0);
}

inline ShuffleRank content_block_rank(const Word& sorted_word)
{
    std::vector<Word> basis;
    Word w = sorted_word;
    do
        basis.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));

    std::map<Word, std::size_t> index;
    for (std::size_t j = 0; j < basis.size(); ++j)
        index.emplace(basis[j], j);

    RationalMatrix sh(basis.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (const auto& [u, c] : apply_shuffle_element(basis[j]))
            sh.add(j, index.at(u), c);
    return {basis.size(), rank(sh)};
}

} // namespace detail

/// Rank of sh on all of V^{(x)n}, dim V = m.
inline ShuffleRank shuffle_operator_rank(int m, int n)
{
    if (m < 1 || n < 1)
        throw std::invalid_argument("shuffle_operator_rank needs m >= 1 and n >= 1");
    ShuffleRank total;
    detail::for_each_content(m, n, [&](const detail::Word& w) {
        const ShuffleRank block = detail::content_block_rank(w);
        total.dimension += block.dimension;
        total.rank += block.rank;
    });
    return total;
}

/// Rank of sh on the span of words z_{v_1} ... z_{v_n} with
/// weights[v_1] + ... + weights[v_n] = target.
inline ShuffleRank shuffle_operator_rank(const std::vector<MultiDegree>& weights, int n, MultiDegree target)
{
    if (weights.empty() || n < 1)
        throw std::invalid_argument("shuffle_operator_rank needs generators and n >= 1");
    ShuffleRank total;
    detail::for_each_content(static_cast<int>(weights.size()), n, [&](const detail::Word& w) {
        MultiDegree sum{0, 0};
        for (int x : w)
            sum = sum + weights[x];
        if (sum != target)
            return;
        const ShuffleRank block = detail::content_block_rank(w);
        total.dimension += block.dimension;
        total.rank += block.rank;
    });
    return total;
}

/// Degrees [1,1], ..., [d-1,1] of the generators z_1, ..., z_{d-1}.
inline std::vector<MultiDegree> fat_point_weights(const ConeContext& ctx)
{
    std::vector<MultiDegree> w;
    for (long v = 1; v <= ctx.d() - 1; ++v)
        w.push_back({v, 1});
    return w;
}

/// c_R from the weight-R slice of V^{(x) ht R}.
inline std::size_t multigraded_harrison_dim_oracle(const ConeContext& ctx, MultiDegree r)
{
    if (r.k < 1)
        return 0;
    return shuffle_operator_rank(fat_point_weights(ctx), static_cast<int>(r.k), r).harrison_dim();
}

namespace detail {

inline std::size_t word_index(const Word& w, int m)
{
    std::size_t x = 0;
    for (int a : w)
        x = x * m + a;
    return x;
}

inline Word word_at(std::size_t x, int m, int n)
{
    Word w(n);
    for (int j = n - 1; j >= 0; --j) {
        w[j] = static_cast<int>(x % m);
        x /= m;
    }
    return w;
}

inline std::size_t power(int m, int n)
{
    std::size_t p = 1;
    for (int j = 0; j < n; ++j)
        p *= m;
    return p;
}

} // namespace detail

/**
 * Reduced cochains V^{(x)n} -> A in degrees 1..top, with the differential
 *
 *   (delta f)(a_0, ..., a_n) = a_0 f(a_1, ..., a_n) + (-1)^{n+1} a_n f(a_0, ..., a_{n-1})
 *
 * (all inner products vanish since V^2 = 0). Unknown (w, c) sits at
 * index(w) * (m+1) + c, where c = 0 is the C component and c = 1 + v the
 * z_v component. With `harrison` the shuffle relations are imposed
 * componentwise; otherwise this is the Hochschild complex.
 */
inline ShuffleCochainComplex fat_point_module_complex(int m, int top, bool harrison)
{
    if (m < 2 || top < 1)
        throw std::invalid_argument("fat point module complex needs m >= 2 and top >= 1");
    const std::size_t width = static_cast<std::size_t>(m) + 1;
    std::vector<std::size_t> dims;
    std::vector<RationalMatrix> relations;
    std::vector<RationalMatrix> differentials;

    for (int n = 1; n <= top; ++n) {
        const std::size_t words = detail::power(m, n);
        dims.push_back(words * width);
        if (!harrison || n == 1) {
            relations.emplace_back(0, words * width);
            continue;
        }
        RationalMatrix s(words * width, words * width);
        for (std::size_t x = 0; x < words; ++x) {
            const auto image = apply_shuffle_element(detail::word_at(x, m, n));
            for (std::size_t c = 0; c < width; ++c)
                for (const auto& [u, sign] : image)
                    s.add(x * width + c, detail::word_index(u, m) * width + c, sign);
        }
        relations.push_back(std::move(s));
    }

    for (int n = 1; n < top; ++n) {
        const std::size_t rows = detail::power(m, n + 1) * width;
        const std::size_t cols = detail::power(m, n) * width;
        RationalMatrix delta(rows, cols);
        const int end_sign = (n + 1) % 2 == 0 ? 1 : -1;
        for (std::size_t x = 0; x < detail::power(m, n + 1); ++x) {
            const detail::Word w = detail::word_at(x, m, n + 1);
            const detail::Word tail(w.begin() + 1, w.end());
            const detail::Word head(w.begin(), w.end() - 1);
            delta.add(x * width + 1 + w.front(), detail::word_index(tail, m) * width, 1);
            delta.add(x * width + 1 + w.back(), detail::word_index(head, m) * width, end_sign);
        }
        differentials.push_back(std::move(delta));
    }
    return ShuffleCochainComplex(1, std::move(dims), std::move(relations), std::move(differentials));
}

struct ModuleHarrisonDim
{
    long n;
    Integer quotient_formula;  // m c_n - c_{n-1}, c_0 = 0
    std::size_t direct;        // cohomology of the explicit complex

    bool agrees() const { return quotient_formula == direct; }
};

/// dim Harr^n(A/C, A) for n = 1..n_max, two ways.
inline std::vector<ModuleHarrisonDim> fat_point_harrison_A_dims(long m, long n_max)
{
    const ShuffleCochainComplex complex = fat_point_module_complex(static_cast<int>(m), static_cast<int>(n_max) + 1, true);
    std::vector<ModuleHarrisonDim> out;
    for (long n = 1; n <= n_max; ++n) {
        Integer formula = m * fat_point_harrison_dim(m, n);
        if (n > 1)
            formula -= fat_point_harrison_dim(m, n - 1);
        out.push_back({n, formula, complex.cohomology_dim(static_cast<int>(n))});
    }
    return out;
}

/// dim HH^n(A/C, A) from the explicit complex.
inline std::size_t fat_point_hochschild_A_dim(long m, long n)
{
    const ShuffleCochainComplex complex = fat_point_module_complex(static_cast<int>(m), static_cast<int>(n) + 1, false);
    return complex.cohomology_dim(static_cast<int>(n));
}

} // namespace cotangent::oracle

#endif
