#include "semigen/cli.hpp"

int main(int argc, char** argv) { return semigen::run_cli(argc, argv); }
