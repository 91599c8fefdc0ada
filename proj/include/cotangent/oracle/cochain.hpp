#ifndef COTANGENT_ORACLE_COCHAIN_HPP
#define COTANGENT_ORACLE_COCHAIN_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace cotangent::oracle {

/**
 * A cochain complex of functions on finite sets D_n, cut down to the
 * subcomplex C^n = { phi : S_n phi = 0 } by linear relations S_n (the
 * shuffle relations). The differential d_n maps all functions on D_n to all
 * functions on D_{n+1}; it must preserve the subcomplex.
 *
 * Cohomology is computed from ranks of stacked matrices:
 *   dim ker(d_n on C^n)    = |D_n| - rank [S_n; d_n]
 *   rank(d_{n-1} on C^{n-1}) = rank [S_{n-1}; d_{n-1}] - rank S_{n-1}
 * Degrees outside [first, last] carry the zero space.
 */
class ShuffleCochainComplex
{
public:
    ShuffleCochainComplex(int first_degree, std::vector<std::size_t> dims, std::vector<RationalMatrix> relations,
                          std::vector<RationalMatrix> differentials)
        : first_(first_degree), dims_(std::move(dims)), relations_(std::move(relations)),
          differentials_(std::move(differentials))
    {
        if (relations_.size() != dims_.size() || differentials_.size() + 1 != dims_.size())
            throw std::invalid_argument("cochain complex: inconsistent slot counts");
        for (std::size_t j = 0; j < dims_.size(); ++j)
            if (relations_[j].cols() != dims_[j])
                throw std::invalid_argument("cochain complex: relation matrix width mismatch");
        for (std::size_t j = 0; j + 1 < dims_.size(); ++j)
            if (differentials_[j].cols() != dims_[j] || differentials_[j].rows() != dims_[j + 1])
                throw std::invalid_argument("cochain complex: differential shape mismatch");
    }

    int first_degree() const noexcept { return first_; }
    int last_degree() const noexcept { return first_ + static_cast<int>(dims_.size()) - 1; }

    /// |D_n|
    std::size_t ambient_dim(int n) const { return has(n) ? dims_[n - first_] : 0; }

    const RationalMatrix& relations(int n) const { return relations_.at(slot(n)); }
    const RationalMatrix& differential(int n) const { return differentials_.at(slot(n)); }

    /// dim C^n
    std::size_t subcomplex_dim(int n) const
    {
        if (!has(n))
            return 0;
        return dims_[slot(n)] - rank(relations_[slot(n)]);
    }

    std::size_t cocycle_dim(int n) const
    {
        if (!has(n))
            return 0;
        if (n == last_degree())
            throw std::out_of_range("cocycles in the top slot need the next differential");
        return dims_[slot(n)] - rank(vstack(relations_[slot(n)], differentials_[slot(n)]));
    }

    std::size_t coboundary_dim(int n) const
    {
        if (!has(n) || !has(n - 1))
            return 0;
        const std::size_t s = slot(n - 1);
        return rank(vstack(relations_[s], differentials_[s])) - rank(relations_[s]);
    }

    std::size_t cohomology_dim(int n) const { return cocycle_dim(n) - coboundary_dim(n); }

    /// d_{n+1} d_n = 0 on all functions.
    bool squares_to_zero(int n) const
    {
        if (!has(n) || !has(n + 2))
            return true;
        return (differentials_[slot(n) + 1] * differentials_[slot(n)]).is_zero();
    }

    /// d_n maps C^n into C^{n+1}: rows of S_{n+1} d_n lie in the row space of S_n.
    bool preserves_subcomplex(int n) const
    {
        if (!has(n) || !has(n + 1))
            return true;
        const RationalMatrix image = relations_[slot(n) + 1] * differentials_[slot(n)];
        if (image.is_zero())
            return true;
        return rank(vstack(relations_[slot(n)], image)) == rank(relations_[slot(n)]);
    }

private:
    bool has(int n) const { return n >= first_ && n <= last_degree(); }
    std::size_t slot(int n) const
    {
        if (!has(n))
            throw std::out_of_range("degree " + std::to_string(n) + " outside complex");
        return static_cast<std::size_t>(n - first_);
    }

    int first_;
    std::vector<std::size_t> dims_;
    std::vector<RationalMatrix> relations_;
    std::vector<RationalMatrix> differentials_;
};

} // namespace cotangent::oracle

#endif
