#include "dgratio/cli.hpp"

int main(int argc, char** argv) { return dgratio::cli::run(argc, argv); }
