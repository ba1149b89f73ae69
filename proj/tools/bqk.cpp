#include "bqk/cli.hpp"

int main(int argc, char** argv) { return bqk::cli::run(argc, argv); }
