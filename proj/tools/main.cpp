#include "ddp/cli.hpp"

int main(int argc, char** argv) { return ddp::run_cli(argc, argv); }
