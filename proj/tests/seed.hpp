#pragma once

#include <cstdint>

/// fallback, or fallback mixed with the value of --seed when one was given.
std::uint64_t test_seed(std::uint64_t fallback);
