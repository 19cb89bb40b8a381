#include <iostream>

#include "ringgb/session.hpp"

int main(int argc, char** argv) { return ringgb::main_entry(argc, argv, std::cout, std::cerr); }
