#ifndef COTANGENT_ORACLE_SHUFFLE_HPP
#define COTANGENT_ORACLE_SHUFFLE_HPP

#include <cstddef>
#include <map>
#include <vector>

namespace cotangent::oracle {

/// A (p,q)-shuffle: entry j of the input moves to position perm[j], so
/// perm[0..p) and perm[p..p+q) are increasing. `sign` is the sign of the
/// permutation.
struct Shuffle
{
    std::vector<int> perm;
    int sign;
};

/// All (p,q)-shuffles, ordered lexicographically by the first block.
inline std::vector<Shuffle> shuffles(int p, int q)
{
    const int n = p + q;
    std::vector<Shuffle> out;
    std::vector<int> first(p);
    for (int j = 0; j < p; ++j)
        first[j] = j;
    while (true) {
        Shuffle s;
        s.perm.reserve(n);
        std::vector<bool> used(n, false);
        for (int x : first) {
            s.perm.push_back(x);
            used[x] = true;
        }
        for (int x = 0; x < n; ++x)
            if (!used[x])
                s.perm.push_back(x);
        int inversions = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (s.perm[a] > s.perm[b])
                    ++inversions;
        s.sign = inversions % 2 == 0 ? 1 : -1;
        out.push_back(std::move(s));

        // next p-subset of {0..n-1} in lexicographic order
        int j = p - 1;
        while (j >= 0 && first[j] == n - p + j)
            --j;
        if (j < 0)
            break;
        ++first[j];
        for (int t = j + 1; t < p; ++t)
            first[t] = first[t - 1] + 1;
    }
    return out;
}

/// sh = sum_{p=1}^{n-1} sh_{p,n-p}, the shuffles of all proper splits of n.
inline const std::vector<Shuffle>& shuffle_element(int n)
{
    static thread_local std::map<int, std::vector<Shuffle>> cache;
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;
    std::vector<Shuffle> all;
    for (int p = 1; p < n; ++p)
        for (auto& s : shuffles(p, n - p))
            all.push_back(std::move(s));
    return cache.emplace(n, std::move(all)).first->second;
}

/**
 * sh applied to a tuple: the signed formal sum of the tuples u with
 * u[perm[j]] = t[j], that is the shuffle products of every proper split of
 * t. Equal tuples are merged and zero coefficients dropped.
 */
template <typename Tuple>
std::map<Tuple, int> apply_shuffle_element(const Tuple& t)
{
    std::map<Tuple, int> out;
    const int n = static_cast<int>(t.size());
    for (const auto& s : shuffle_element(n)) {
        Tuple u(t.size());
        for (int j = 0; j < n; ++j)
            u[s.perm[j]] = t[j];
        out[u] += s.sign;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

} // namespace cotangent::oracle

#endif
