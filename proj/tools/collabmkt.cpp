#include "collabmkt/cli.hpp"

int main(int argc, char** argv) { return collabmkt::cli::run(argc, argv); }
