#pragma once
#include <doctest.h>
