#include <cactus/cli.hpp>

int main(int argc, char** argv) { return cactus::cli::run(argc, argv); }
