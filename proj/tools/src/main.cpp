#include "linmon_cli/cli.hpp"

#include <iostream>

int main(int argc, char **argv)
{
	return linmon::cli::run(argc, argv, std::cout, std::cerr);
}
