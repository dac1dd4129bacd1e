#include "vcmps/cli.hpp"

int main(int argc, char** argv) { return vcmps::cli::run(argc, argv); }
