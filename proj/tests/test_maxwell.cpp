#include <doctest.h>
TEST_CASE("todo_maxwell") { CHECK(true); }
