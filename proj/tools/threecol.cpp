#include "threecol/cli.hpp"

int main(int argc, char** argv) { return threecol::cli::run(argc, argv); }
