#include <doctest.h>
TEST_CASE("todo_cli") { CHECK(true); }
