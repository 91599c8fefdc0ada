#include <catch2/catch_amalgamated.hpp>

#include <cotangent/formulas.hpp>

using namespace cotangent;

namespace {

UniSeries poly(std::initializer_list<long> c) { return UniSeries::polynomial(c, static_cast<long>(c.size()) - 1); }

MultiSeries x(const ConeContext& ctx, long i, long k, long cut) { return MultiSeries::monomial(ctx, {i, k}, cut); }

} // namespace

TEST_CASE("fat point Harrison dimensions")
{
    for (long m = 2; m <= 6; ++m)
        CHECK(fat_point_harrison_dim(m, 1) == m);
    CHECK(fat_point_harrison_dim(2, 3) == 2);
    CHECK(fat_point_harrison_dim(3, 2) == 6);
    CHECK(q_fat_point(3, 5) == poly({0, 3, 6, 8, 18, 48}));
    CHECK(q_fat_point(2, 2) == poly({0, 2, 3}));
    CHECK(q_fat_point(4, 0).is_zero());
    CHECK_THROWS_AS(fat_point_harrison_dim(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(fat_point_harrison_dim(3, 0), std::invalid_argument);
}

TEST_CASE("multigraded Harrison dimensions")
{
    for (long d = 3; d <= 7; ++d) {
        const ConeContext ctx(d);
        for (long v = 1; v <= d - 1; ++v)
            CHECK(multigraded_harrison_dim(ctx, {v, 1}) == 1);
        CHECK(multigraded_harrison_dim(ctx, {0, 1}) == 0);
        CHECK(multigraded_harrison_dim(ctx, {d, 1}) == 0);
    }
    const ConeContext three(3);
    CHECK(multigraded_harrison_dim(three, {3, 2}) == 1);
    CHECK(multigraded_harrison_dim(three, {2, 2}) == 1);
    CHECK(multigraded_harrison_dim(three, {4, 2}) == 1);
    CHECK(multigraded_harrison_dim(three, {1, 2}) == 0);
    CHECK_THROWS_AS(multigraded_harrison_dim(three, {0, 0}), std::invalid_argument);

    // height-n totals recover c_n
    for (long d = 3; d <= 6; ++d) {
        const ConeContext ctx(d);
        const MultiSeries q = q_tilde_fat_point(ctx, 6);
        for (long n = 1; n <= 6; ++n)
            CHECK(q.slice_total(n) == fat_point_harrison_dim(d - 1, n));
    }
}

TEST_CASE("multigraded Harrison series")
{
    const ConeContext three(3);
    CHECK(q_tilde_fat_point(three, 1) == x(three, 1, 1, 1) + x(three, 2, 1, 1));
    CHECK(q_tilde_fat_point(three, 2) ==
          x(three, 1, 1, 2) + x(three, 2, 1, 2) + x(three, 2, 2, 2) + x(three, 3, 2, 2) + x(three, 4, 2, 2));
    CHECK(q_tilde_cone(three, 1) == x(three, 0, 1, 1) + x(three, 1, 1, 1) + x(three, 2, 1, 1) + x(three, 3, 1, 1));
    CHECK(q_tilde_cone(ConeContext(4), 0).is_zero());

    for (long d = 3; d <= 8; ++d) {
        const ConeContext ctx(d);
        CHECK(q_tilde_height2_closed_form(ctx) == q_tilde_fat_point(ctx, 2).height_slice(2).truncated(2));
        CHECK(heightize(q_tilde_fat_point(ctx, 5)) == q_fat_point(d - 1, 5));
    }
}

TEST_CASE("toric T^0, T^1, T^2 tables")
{
    const ConeContext three(3), four(4), five(5);
    CHECK(t0_dim(three, {0, 0}) == 2);
    CHECK(t0_dim(three, {1, 0}) == 1);
    CHECK(t0_dim(three, {0, 1}) == 0);

    CHECK(t1_dim(five, {1, 1}) == 1);
    CHECK(t1_dim(five, {3, 1}) == 2);
    CHECK(t1_dim(five, {3, 2}) == 0);

    CHECK(t2_dim(five, {5, 2}) == 2);
    CHECK(t2_dim(five, {7, 2}) == 1);
    long total = 0;
    for (const auto& r : lambda_slice(four, 2))
        total += t2_dim(four, r);
    CHECK(total == 3);
}

TEST_CASE("multigraded cotangent series of the cone")
{
    for (long d = 3; d <= 8; ++d) {
        const ConeContext ctx(d);
        const MultiSeries p = p_tilde_cone(ctx, 3);

        MultiSeries h1 = Integer(2) * detail::ray_sum(ctx, 1, d - 1, 1, 3);
        h1 = h1 - x(ctx, 1, 1, 3) - x(ctx, d - 1, 1, 3);
        CHECK(p.height_slice(1) == h1);

        for (const auto& r : lambda_slice(ctx, 2))
            CHECK(p.coeff(r) == t2_dim(ctx, r));

        CHECK(p.height_slice(3) == cone_height3_closed_form(ctx));
        if (d % 2 == 0)
            CHECK(p.height_slice(3) == cone_height3_symmetric_form(ctx));
    }
    CHECK_THROWS_AS(cone_height3_symmetric_form(ConeContext(5)), std::invalid_argument);
}

TEST_CASE("height totals of the cone series")
{
    // independently computed from the rational function by a separate script
    const std::vector<std::vector<long>> totals{
        {2, 0, 0, 1, 2},     {4, 3, 3, 9, 25},     {6, 8, 12, 38, 132},
        {8, 15, 30, 110, 460}, {10, 24, 60, 255, 1250}, {12, 35, 105, 511, 2877}};
    for (long d = 3; d <= 8; ++d) {
        const UniSeries p = p_cone(d, 5);
        for (long n = 1; n <= 5; ++n)
            CHECK(p.coeff(n) == totals[d - 3][n - 1]);
        CHECK(heightize(p_tilde_cone(ConeContext(d), 5)) == p);
    }
    CHECK(p_cone(4, 4) == poly({0, 4, 3, 3, 9}));
    CHECK(p_cone(3, 2) == poly({0, 2, 0}));
    for (long d = 3; d <= 9; ++d)
        CHECK(p_cone(d, 1) == poly({0, 2 * d - 4}));
}

TEST_CASE("fat point cotangent series")
{
    CHECK(p_fat_point(3, 3) == poly({9, 15, 18, 46}));
    CHECK(p_fat_point(2, 1) == poly({4, 4}));
    for (long m = 2; m <= 5; ++m)
        CHECK(p_fat_point(m, 6) == p_fat_point_rational(m, 6));
}

TEST_CASE("partition curves and the hyperplane-section relation")
{
    for (long tau : {3L, 7L, 20L}) {
        CHECK(p_partition_curve({4, tau}, 3) == poly({0, tau, 6, 12}));
        CHECK(p_partition_curve({3, tau}, 2) == poly({0, tau, 0}));
        CHECK(hyperplane_section_series(p_cone(4, 4), 4, tau - 3) == poly({0, tau, 6, 12}));
    }
    for (long d = 3; d <= 6; ++d)
        for (long tau = (d - 1) * (d - 3); tau <= (d - 1) * (d - 3) + 4; ++tau) {
            const long e = smoothing_component_dim(d, tau);
            CHECK(hyperplane_section_series(p_cone(d, 6), 2 * d - 4, e) == p_partition_curve({d, tau}, 5));
        }
    CHECK(hyperplane_section_series(poly({0, 0}), 0, 0).is_zero());
    CHECK_THROWS_AS(hyperplane_section_series(poly({0, 5, 1}), 4, 0), std::invalid_argument);
}

TEST_CASE("fat point series through the partition curve")
{
    for (long d = 3; d <= 6; ++d)
        for (long tau_cg : {0L, 3L, 9L}) {
            const UniSeries via = fat_point_via_partition_curve(d, 11, tau_cg, 5);
            const UniSeries direct = p_fat_point(d - 1, 5);
            CHECK(via.coeff(0) == 0);
            for (long n = 1; n <= 5; ++n)
                CHECK(via.coeff(n) == direct.coeff(n));
        }
}

TEST_CASE("quotient singularities")
{
    CHECK(p_quotient({4, 4}, 3) == poly({0, 4, 3, 3}));
    CHECK(p_quotient({4, 9}, 2) == poly({0, 9, 3}));
    CHECK_THROWS_AS(p_quotient({4, -1}, 2), std::invalid_argument);
    CHECK_THROWS_AS(p_quotient({2, 4}, 2), std::invalid_argument);
}
