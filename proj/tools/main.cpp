#include "seabed/config.hpp"

int main(int argc, char** argv) { return seabed::cli::main(argc, argv); }
