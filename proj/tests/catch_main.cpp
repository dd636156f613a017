// Catch2 v3 amalgamated implementation; supplies main() for the test binary.
#include <catch2/catch_amalgamated.cpp>
