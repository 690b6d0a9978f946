#include "trop/cli.hpp"

int main(int argc, char** argv) { return trop::cli::run(argc, argv); }
