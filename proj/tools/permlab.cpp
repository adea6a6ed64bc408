#include "permlab/cli/dispatch.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    std::ios::sync_with_stdio(false);
    return permlab::cli::dispatch({argv + 1, argv + argc}, std::cout, std::cerr);
}
