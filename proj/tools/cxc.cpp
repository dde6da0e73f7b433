#include "cxc/cli.hpp"

int main(int argc, char** argv) { return cxc::cli::run(argc, argv, std::cout, std::cerr); }
