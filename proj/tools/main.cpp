#include "bga/cli.hpp"

int main(int argc, char** argv) { return bga::cli_main(argc, argv); }
