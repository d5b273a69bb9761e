#include <iostream>

#include "kanenobu/cli/app.hpp"

int main(int argc, char** argv) { return kanenobu::run_app(argc, argv, std::cout, std::cerr); }
