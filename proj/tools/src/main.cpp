#include <iostream>

#include "nijcheck_app/app.hpp"

int main(int argc, char** argv) { return nijcheck::app::run(argc, argv, std::cout, std::cerr); }
