#include "doctest.h"

#include "sqz/classes.hpp"

TEST_SUITE("classes") {}
