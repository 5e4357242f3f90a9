#include "doctest.h"

#include "sqz/weightfn.hpp"

TEST_SUITE("weightfn") {}
