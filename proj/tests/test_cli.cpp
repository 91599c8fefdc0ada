#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include <cotangent/cli.hpp>

namespace {

struct Result
{
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cotangent::cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("series subcommand")
{
    const Result r = run({"series", "cone", "--d", "4", "--order", "4", "--json"});
    CHECK(r.code == 0);
    CHECK(r.out == R"({"cut":4,"d":4,"kind":"uni","terms":[{"c":4,"deg":1},{"c":3,"deg":2},{"c":3,"deg":3},{"c":9,"deg":4}]})"
                   "\n");
    CHECK(run({"series", "cone", "--d", "4", "--order", "4", "--json"}).out == r.out);

    const Result table = run({"series", "fatpoint", "--m", "3"});
    CHECK(table.code == 0);
    CHECK(table.out == "n  dim\n0  0\n1  3\n2  6\n3  8\n4  18\n");

    CHECK(run({"series", "partition", "--d", "4", "--tau", "7", "--order", "3", "--json"}).out ==
          R"({"cut":3,"d":4,"kind":"uni","terms":[{"c":7,"deg":1},{"c":6,"deg":2},{"c":12,"deg":3}]})"
          "\n");
    CHECK(run({"series", "fatpoint-module", "--m", "2", "--order", "1", "--json"}).out ==
          R"({"cut":1,"kind":"uni","terms":[{"c":4,"deg":0},{"c":4,"deg":1}]})"
          "\n");
    const Result multi = run({"series", "cone-multigraded", "--d", "3", "--cut", "2", "--json"});
    CHECK(multi.out.find(R"("kind":"multi")") != std::string::npos);
}

TEST_CASE("dim subcommand")
{
    CHECK(run({"dim", "t", "--target", "cone-multigraded", "--d", "5", "--R", "5,2"}).out == "2\n");
    CHECK(run({"dim", "t", "--target", "cone-multigraded", "--d", "5", "--R", "5,2", "--oracle"}).out == "2\n");
    CHECK(run({"dim", "t", "--target", "cone-multigraded", "--d", "5", "--R", "5,2", "--n", "3"}).out == "0\n");
    CHECK(run({"dim", "harr", "--target", "cone-multigraded", "--d", "3", "--R", "3,2"}).out == "1\n");
    CHECK(run({"dim", "harr", "--target", "cone-multigraded", "--d", "3", "--R", "3,2", "--oracle"}).out == "1\n");
    CHECK(run({"dim", "harr", "--target", "fatpoint", "--m", "3", "--n", "5"}).out == "48\n");
    CHECK(run({"dim", "harr", "--target", "fatpoint", "--m", "2", "--n", "3", "--oracle"}).out == "2\n");
    CHECK(run({"dim", "t", "--target", "fatpoint-module", "--m", "3", "--n", "2"}).out == "18\n");
    CHECK(run({"dim", "t", "--target", "fatpoint-module", "--m", "2", "--n", "1", "--oracle"}).out == "4\n");
    CHECK(run({"dim", "t", "--target", "cone", "--d", "4", "--n", "4"}).out == "9\n");
}

TEST_CASE("verify subcommand")
{
    const Result r = run({"verify", "--d", "3", "--max-height", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("PASS  t-formula") != std::string::npos);
    CHECK(r.out.find("PASS  euler") != std::string::npos);
}

TEST_CASE("complex subcommand")
{
    const Result r = run({"complex", "--d", "3", "--R", "3,2", "--n", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find(R"("basis":[[[1,1]],[[2,1]]])") != std::string::npos);
    CHECK(r.out.find(R"("differential":{"cols":2,"entries":[],"rows":0})") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2")
{
    CHECK(run({"series", "cone", "--d", "2"}).code == 2);
    CHECK(run({"series", "fatpoint", "--m", "1"}).code == 2);
    CHECK(run({"series", "cone", "--d", "4", "--order", "-1"}).code == 2);
    CHECK(run({"series", "partition", "--d", "4"}).code == 2);
    CHECK(run({"series", "quotient", "--d", "4"}).code == 2);
    CHECK(run({"series", "nonsense", "--d", "4"}).code == 2);
    CHECK(run({"dim", "t", "--target", "cone-multigraded", "--d", "4", "--R", "4"}).code == 2);
    CHECK(run({"dim", "t", "--target", "cone-multigraded", "--d", "4", "--R", "9,1"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("degree parsing")
{
    using cotangent::cli::parse_degree;
    CHECK(parse_degree("5,2") == cotangent::MultiDegree{5, 2});
    CHECK(parse_degree("-1,3") == cotangent::MultiDegree{-1, 3});
    CHECK_THROWS_AS(parse_degree("5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_degree("5,x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_degree("5,2,1"), std::invalid_argument);
}
