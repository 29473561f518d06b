#include <iostream>
#include <string>
#include <vector>

#include "raagmcg/cli.hpp"

int main(int argc, char** argv) {
    return raagmcg::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
