#pragma once

namespace elwave {

// Entry point of the command-line tool. Exit codes: 0 success, 2 bad
// configuration or arguments, 3 numerical failure while stepping, 4 a
// verification or audit check failed.
int cli_main(int argc, char** argv);

}  // namespace elwave
