#include "cli.hpp"

int main(int argc, char** argv) { return lorenz::cli::cli_main(argc, argv); }
