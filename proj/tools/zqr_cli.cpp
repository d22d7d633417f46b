#include "cli.hpp"

int main(int argc, char** argv) { return zqr::cli::run(argc, argv); }
