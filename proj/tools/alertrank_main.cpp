#include "alertrank/cli.hpp"

int main(int argc, char** argv) { return alertrank::cli::run(argc, argv); }
