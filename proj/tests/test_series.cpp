#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <cotangent/series.hpp>

using namespace cotangent;

namespace {

MultiSeries x(const ConeContext& ctx, long i, long k, long cut = 4) { return MultiSeries::monomial(ctx, {i, k}, cut); }

MultiSeries random_series(const ConeContext& ctx, long cut, std::mt19937& rng)
{
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::bernoulli_distribution keep(0.3);
    MultiSeries s(ctx, cut);
    for (long k = 0; k <= cut; ++k)
        for (const auto& r : lambda_slice(ctx, k))
            if (keep(rng))
                s.add_term(r, coeff(rng));
    return s;
}

} // namespace

TEST_CASE("multigraded addition and multiplication")
{
    const ConeContext ctx(3);
    CHECK(x(ctx, 1, 1) + x(ctx, 1, 1) == Integer(2) * x(ctx, 1, 1));
    CHECK(x(ctx, 1, 1) + MultiSeries(ctx, 4) == x(ctx, 1, 1));
    CHECK((x(ctx, 1, 1) - x(ctx, 2, 1)) + x(ctx, 2, 1) == x(ctx, 1, 1));

    CHECK(x(ctx, 1, 1) * x(ctx, 2, 1) == x(ctx, 3, 2));
    const MultiSeries s = x(ctx, 1, 1) + x(ctx, 2, 1);
    CHECK(s * s == x(ctx, 2, 2) + Integer(2) * x(ctx, 3, 2) + x(ctx, 4, 2));
    CHECK(s * MultiSeries::one(ctx, 4) == s);
}

TEST_CASE("terms outside Lambda are rejected and high terms truncated")
{
    const ConeContext ctx(3);
    MultiSeries s(ctx, 2);
    CHECK_THROWS_AS(s.add_term({4, 1}, 1), std::invalid_argument);
    s.add_term({0, 3}, 5);
    CHECK(s.is_zero());
    CHECK_THROWS_AS(MultiSeries(ctx, 1) + MultiSeries(ConeContext(4), 1), std::invalid_argument);
}

TEST_CASE("geometric inverse of 1 + x^R")
{
    const ConeContext ctx(3);
    CHECK(expand_inverse_one_plus(ctx, {0, 1}, 3) ==
          MultiSeries::one(ctx, 3) - x(ctx, 0, 1, 3) + x(ctx, 0, 2, 3) - x(ctx, 0, 3, 3));
    CHECK(expand_inverse_one_plus(ctx, {3, 1}, 2) == MultiSeries::one(ctx, 2) - x(ctx, 3, 1, 2) + x(ctx, 6, 2, 2));
    const MultiSeries one_plus = MultiSeries::one(ctx, 5) + x(ctx, 0, 1, 5);
    CHECK(one_plus * expand_inverse_one_plus(ctx, {0, 1}, 5) == MultiSeries::one(ctx, 5));
    CHECK_THROWS_AS(expand_inverse_one_plus(ctx, {1, 0}, 3), std::invalid_argument);
}

TEST_CASE("exact division by powers of x^[1,0] - 1")
{
    const ConeContext three(3), four(4);
    CHECK(exact_divide_height_zero(x(three, 3, 1) - x(three, 1, 1), 1) == x(three, 1, 1) + x(three, 2, 1));
    CHECK(exact_divide_height_zero(x(four, 4, 1) - x(four, 1, 1), 1) ==
          x(four, 1, 1) + x(four, 2, 1) + x(four, 3, 1));
    CHECK_THROWS_AS(exact_divide_height_zero(x(three, 2, 1) - x(three, 1, 1), 2), invariant_violation);
    CHECK_THROWS_AS(exact_divide_height_zero(x(three, 1, 1), 1), invariant_violation);
}

TEST_CASE("height substitution")
{
    const ConeContext ctx(3);
    CHECK(heightize(x(ctx, 1, 1) + x(ctx, 2, 1)) == UniSeries::polynomial({0, 2}, 4));
    CHECK(heightize(x(ctx, 3, 2)) == UniSeries::polynomial({0, 0, 1}, 4));
    CHECK(heightize(MultiSeries(ctx, 2)).is_zero());
}

TEST_CASE("univariate rational expansion")
{
    const UniSeries one_plus_t = UniSeries::polynomial({1, 1}, 1);
    CHECK(uni_rational_eval(UniSeries::polynomial({1}, 3), {one_plus_t}, 3) == UniSeries::polynomial({1, -1, 1, -1}, 3));
    CHECK(uni_rational_eval(UniSeries::polynomial({0, 3, -1}, 2), {one_plus_t, one_plus_t}, 2) ==
          UniSeries::polynomial({0, 3, -7}, 2));
    CHECK(uni_rational_eval(UniSeries::polynomial({0, 1}, 3), {UniSeries::polynomial({1, -1}, 1)}, 3) ==
          UniSeries::polynomial({0, 1, 1, 1}, 3));
    CHECK_THROWS_AS(uni_rational_eval(UniSeries::polynomial({1}, 2), {UniSeries::polynomial({2, 1}, 1)}, 2),
                    invariant_violation);
    CHECK_THROWS_AS(uni_rational_eval(UniSeries::polynomial({1}, 2), {UniSeries::polynomial({0, 1}, 1)}, 2),
                    std::invalid_argument);
}

TEST_CASE("division by t^j")
{
    CHECK(divide_by_t_power(UniSeries::polynomial({0, 0, 3, 4}, 3), 2) == UniSeries::polynomial({3, 4}, 1));
    CHECK_THROWS_AS(divide_by_t_power(UniSeries::polynomial({1, 2}, 3), 1), std::invalid_argument);
}

TEST_CASE("canonical JSON")
{
    const ConeContext ctx(3);
    const auto j = to_json(UniSeries::polynomial({0, 4, 0, 3}, 3), 4);
    CHECK(j.dump() == R"({"cut":3,"d":4,"kind":"uni","terms":[{"c":4,"deg":1},{"c":3,"deg":3}]})");
    const auto m = to_json(x(ctx, 2, 1, 2) + Integer(5) * x(ctx, 1, 1, 2) + x(ctx, 0, 2, 2));
    CHECK(m.dump() == R"({"cut":2,"d":3,"kind":"multi","terms":[{"c":5,"deg":[1,1]},{"c":1,"deg":[2,1]},{"c":1,"deg":[0,2]}]})");
    UniSeries big(1);
    big.set(1, ipow(10, 30));
    CHECK(to_json(big)["terms"][0]["c"] == "1000000000000000000000000000000");
}

TEST_CASE("ring axioms on random truncated series")
{
    std::mt19937 rng(20261016);
    for (long d = 3; d <= 5; ++d) {
        const ConeContext ctx(d);
        for (int trial = 0; trial < 20; ++trial) {
            const long cut = trial % 5;
            const MultiSeries a = random_series(ctx, cut, rng);
            const MultiSeries b = random_series(ctx, cut, rng);
            const MultiSeries c = random_series(ctx, cut, rng);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
            CHECK(a + b == b + a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(heightize(a * b) == heightize(a) * heightize(b));
            CHECK(heightize(a + b) == heightize(a) + heightize(b));
        }
    }
}

TEST_CASE("exact division undoes multiplication by (x^[1,0] - 1)^j")
{
    std::mt19937 rng(7);
    for (long d = 3; d <= 5; ++d) {
        const ConeContext ctx(d);
        for (int j = 1; j <= 3; ++j)
            for (int trial = 0; trial < 10; ++trial) {
                // keep p small enough in every slice that the product stays in Lambda
                MultiSeries p(ctx, 3);
                std::uniform_int_distribution<int> coeff(-9, 9);
                for (long k = 1; k <= 3; ++k)
                    for (long i = 0; i + j <= d * k; ++i)
                        p.add_term({i, k}, coeff(rng));
                MultiSeries product(ctx, 3);
                const SlicePolynomial f = x_minus_one_power(j);
                for (const auto& [r, c] : p.terms())
                    for (std::size_t e = 0; e < f.size(); ++e)
                        product.add_term({r.i + static_cast<long>(e), r.k}, c * f[e]);
                CHECK(exact_divide_height_zero(product, j) == p);
            }
    }
}
