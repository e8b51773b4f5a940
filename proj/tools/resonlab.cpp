#include "resonlab/cli.hpp"

int main(int argc, char** argv) { return resonlab::cli::run(argc, argv); }
