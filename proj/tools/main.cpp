#include "orthospec/cli.hpp"

int main(int argc, char** argv) { return orthospec::run_cli(argc, argv); }
