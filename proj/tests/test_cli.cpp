#include "vendor_doctest.hpp"
