#include "fredholm/cli.hpp"

int main(int argc, char** argv) { return fredholm::cli::run(argc, argv); }
