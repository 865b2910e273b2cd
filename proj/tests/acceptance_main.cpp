// Acceptance suite: runs every verification suite at full strength and prints
// one line per criterion. Exit code 0 only if all criteria pass.

#include "e8cat/suites.hpp"

#include <cstdio>

int main() {
    return e8cat::run_acceptance(stdout);
}
