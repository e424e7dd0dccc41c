#include "obvp/cli.hpp"

int main(int argc, char** argv) { return obvp::cli::run(argc, argv); }
