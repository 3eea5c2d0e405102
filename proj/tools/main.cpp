#include "wimax/cli.hpp"

int main(int argc, char** argv) { return wimax::cli::run(argc, argv); }
