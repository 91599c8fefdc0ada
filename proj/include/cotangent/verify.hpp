#ifndef COTANGENT_VERIFY_HPP
#define COTANGENT_VERIFY_HPP

/**
 * Formula-versus-oracle suite for the cone Y_d over all degrees up to a
 * height cut. Each comparison yields one CheckLine; a run passes when every
 * line does.
 */

#include <algorithm>
#include <cstddef>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "formulas.hpp"
#include "lattice.hpp"
#include "oracle/fat_point.hpp"
#include "oracle/toric.hpp"
#include "series.hpp"

namespace cotangent {

struct CheckLine
{
    std::string check;  // one of the names listed in verify_cone
    std::string where;  // degree or parameter the check ran at
    bool pass;
    std::string detail;
};

struct VerifyReport
{
    long d = 0;
    long max_height = 0;
    std::vector<CheckLine> lines;

    bool all_pass() const
    {
        for (const auto& l : lines)
            if (!l.pass)
                return false;
        return true;
    }

    std::size_t count(const std::string& check) const
    {
        std::size_t n = 0;
        for (const auto& l : lines)
            n += l.check == check;
        return n;
    }

    bool all_pass(const std::string& check) const
    {
        for (const auto& l : lines)
            if (l.check == check && !l.pass)
                return false;
        return true;
    }
};

namespace detail {

template <typename A, typename B>
CheckLine compare(std::string check, std::string where, const A& expected, const B& got)
{
    std::ostringstream os;
    os << "expected " << expected << ", got " << got;
    return {std::move(check), std::move(where), Integer(expected) == Integer(got), os.str()};
}

inline std::string at(MultiDegree r, int n) { return "R=" + r.str() + " n=" + std::to_string(n); }

} // namespace detail

/**
 * Checks, by name:
 *   t-formula        coefficient of P~_Y vs the toric oracle, n = ht R >= 2
 *   t-table          heights 1 and 2 of P~_Y vs the T^1 and T^2 tables
 *   t-vanishing      toric oracle T^n(-R) = 0 for 2 <= n <= max(2, cut), n != ht R
 *   euler            Euler identity right-hand side vs T^{ht R}(-R) (0 at heights 1, 2)
 *   c-shuffle        c_R vs rank of sh on the weight-R slice
 *   homogeneous      homogeneous complex in degree -r vs q~_Y(r) at n = ht r, 0 elsewhere
 *   d-squared        d o d = 0 on each constructed slice pair
 *   shuffle-preserved the differential keeps shuffle-invariant cochains
 *   substitution     height substitution of the multigraded series
 *
 * `progress` (optional) is called with each finished line.
 */
inline VerifyReport verify_cone(const ConeContext& ctx, long max_height,
                                const std::function<void(const CheckLine&)>& progress = {})
{
    if (max_height < 1)
        throw std::invalid_argument("verify needs max height >= 1, got " + std::to_string(max_height));
    const long d = ctx.d();
    VerifyReport report{d, max_height, {}};
    auto emit = [&](CheckLine line) {
        if (progress)
            progress(line);
        report.lines.push_back(std::move(line));
    };

    const MultiSeries p_tilde = p_tilde_cone(ctx, max_height);
    const int top_n = static_cast<int>(std::max<long>(2, max_height));

    for (long k = 1; k <= max_height; ++k) {
        for (const MultiDegree& r : lambda_slice(ctx, k)) {
            const Integer formula = p_tilde.coeff(r);
            if (k == 1)
                emit(detail::compare("t-table", detail::at(r, 1), t1_dim(ctx, r), formula));
            if (k == 2)
                emit(detail::compare("t-table", detail::at(r, 2), t2_dim(ctx, r), formula));

            const oracle::ShuffleCochainComplex complex = oracle::toric_cochain_complex(ctx, r, top_n);
            const std::vector<std::size_t> t_dims = oracle::toric_T_dims(complex, ctx, r, top_n);
            for (int n = 2; n <= top_n; ++n) {
                const std::size_t got = t_dims[n - 2];
                if (n == k)
                    emit(detail::compare("t-formula", detail::at(r, n), formula, got));
                else
                    emit(detail::compare("t-vanishing", detail::at(r, n), 0, got));
            }

            const std::size_t ha1 = complex.cohomology_dim(1);
            const Integer rhs = oracle::euler_identity_rhs(ctx, r, ha1);
            const Integer lhs = k >= 3 ? Integer(t_dims[k - 2]) : Integer(0);
            emit(detail::compare("euler", detail::at(r, static_cast<int>(k)), lhs, rhs));

            for (int n = 1; n + 2 <= top_n; ++n)
                emit({"d-squared", detail::at(r, n), complex.squares_to_zero(n), "inhomogeneous"});
            for (int n = 1; n < top_n; ++n)
                emit({"shuffle-preserved", detail::at(r, n), complex.preserves_subcomplex(n), "inhomogeneous"});

            emit(detail::compare("c-shuffle", r.str(), multigraded_harrison_dim(ctx, r),
                                 oracle::multigraded_harrison_dim_oracle(ctx, r)));

            const int h_top = static_cast<int>(k) + 1;
            const oracle::ShuffleCochainComplex homogeneous = oracle::homogeneous_cochain_complex(ctx, r, h_top);
            const Integer q_r = oracle::cone_harrison_coefficient(ctx, r);
            for (int n = 1; n <= static_cast<int>(k); ++n)
                emit(detail::compare("homogeneous", detail::at(r, n), n == k ? q_r : Integer(0),
                                     homogeneous.cohomology_dim(n)));
            for (int n = 1; n + 2 <= h_top; ++n)
                emit({"d-squared", detail::at(r, n), homogeneous.squares_to_zero(n), "homogeneous"});
            for (int n = 1; n < h_top; ++n)
                emit({"shuffle-preserved", detail::at(r, n), homogeneous.preserves_subcomplex(n), "homogeneous"});
        }
    }

    const bool cone_ok = heightize(p_tilde) == p_cone(d, max_height);
    emit({"substitution", "P~_Y -> P_Y", cone_ok, cone_ok ? "equal" : "series differ"});
    const bool fat_ok = heightize(q_tilde_fat_point(ctx, max_height)) == q_fat_point(d - 1, max_height);
    emit({"substitution", "Q~_Z -> Q_Z", fat_ok, fat_ok ? "equal" : "series differ"});
    return report;
}

} // namespace cotangent

#endif
