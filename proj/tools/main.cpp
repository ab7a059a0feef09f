#include "cli.hpp"

int main(int argc, char** argv) { return seqbench_cli::run_cli(argc, argv); }
