#include "dzb/cli.hpp"

int main(int argc, char** argv) { return dzb::cli::main(argc, argv); }
