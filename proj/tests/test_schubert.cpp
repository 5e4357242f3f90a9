#include "doctest.h"

#include "sqz/schubert.hpp"

TEST_SUITE("schubert") {}
