#include "effindex/cli_app.hpp"

int main(int argc, char** argv) { return effindex::run_cli(argc, argv); }
