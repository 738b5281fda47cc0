#include "shl/cli.hpp"

int main(int argc, char** argv) { return shl::run_cli(argc, argv); }
