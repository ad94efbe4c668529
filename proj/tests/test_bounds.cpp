#include <catch2/catch_amalgamated.hpp>
TEST_CASE("stub test_bounds") { SUCCEED(); }
