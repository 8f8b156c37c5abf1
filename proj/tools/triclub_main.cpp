#include "triclub/cli.hpp"

int main(int argc, char** argv) { return triclub::cli::run(argc, argv); }
