#include "cli.hpp"

int main(int argc, char** argv) { return hva::cli::run_cli(argc, argv, std::cout, std::cerr); }
