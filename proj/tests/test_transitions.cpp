#include <doctest.h>
TEST_CASE("todo_transitions") { CHECK(true); }
