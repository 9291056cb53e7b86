#include "iterroot/cli.hpp"

int main(int argc, char** argv) { return iterroot::run_cli(argc, argv); }
