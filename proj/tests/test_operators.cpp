#include "doctest.h"

#include "sqz/operators.hpp"

TEST_SUITE("operators") {}
