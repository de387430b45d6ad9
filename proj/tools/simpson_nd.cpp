#include "simpson/cli.hpp"

int main(int argc, char** argv) { return simpson::cli::run(argc, argv); }
