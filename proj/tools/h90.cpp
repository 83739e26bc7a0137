#include "h90/cli.hpp"

int main(int argc, char** argv) { return h90::cli::run(argc, argv); }
