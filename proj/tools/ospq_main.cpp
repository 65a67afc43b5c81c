#include "ospq/cli.hpp"

int main(int argc, char** argv) { return ospq::cli::main(argc, argv); }
