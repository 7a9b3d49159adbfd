#include "fourfold/cli.hpp"

int main(int argc, char** argv) { return fourfold::cli_main(argc, argv); }
