#include "cli.hpp"

int main(int argc, char** argv) { return navembed::cli::main_entry(argc, argv); }
