#include "trigdecomp/cli.hpp"

int main(int argc, char** argv) { return trigdecomp::cli::run(argc, argv); }
