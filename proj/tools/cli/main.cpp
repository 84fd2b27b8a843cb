#include "cli/commands.hpp"

int main(int argc, char** argv) { return nm::cli::main_entry(argc, argv); }
