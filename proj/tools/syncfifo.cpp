#include <syncfifo/cli.hpp>

int main(int argc, char **argv) { return syncfifo::cli::main(argc, argv); }
