#include <doctest.h>
TEST_CASE("todo_planewave") { CHECK(true); }
