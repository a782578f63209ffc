#include <iostream>

#include <weier/suite.hpp>

int main(int argc, char **argv)
{
    return weier::run_cli(argc, argv, std::cout, std::cerr);
}
