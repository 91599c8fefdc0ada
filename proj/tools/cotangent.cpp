#include <iostream>
#include <string>
#include <vector>

#include <cotangent/cli.hpp>

int main(int argc, char** argv)
{
    return cotangent::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
