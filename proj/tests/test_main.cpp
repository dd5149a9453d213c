#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "vendor_doctest.hpp"
