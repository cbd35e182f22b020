#include <iostream>

#include "cgc/cli.hpp"

int main(int argc, char** argv) {
    return cgc::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
