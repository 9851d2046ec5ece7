#include "cli.hpp"

int main(int argc, char** argv) { return inclogic::cli::run(argc, argv); }
