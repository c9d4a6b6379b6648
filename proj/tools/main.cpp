#include "elwave/cli.hpp"

int main(int argc, char** argv) { return elwave::cli_main(argc, argv); }
