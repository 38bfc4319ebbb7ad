#include <doctest.h>
TEST_CASE("todo_evolution") { CHECK(true); }
