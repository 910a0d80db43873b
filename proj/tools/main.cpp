#include "cli.hpp"

int main(int argc, char** argv) { return goalxai::cli::main(argc, argv); }
