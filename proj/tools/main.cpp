#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return liaisonlab::run(argc, argv, std::cout, std::cerr); }
