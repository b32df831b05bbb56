#ifndef IWCONTRACT_IWCONTRACT_HPP
#define IWCONTRACT_IWCONTRACT_HPP

// Umbrella header.

#include "contraction.hpp"
#include "errors.hpp"
#include "invariants.hpp"
#include "json_io.hpp"
#include "liecore.hpp"
#include "matrix.hpp"
#include "polyring.hpp"
#include "prng.hpp"
#include "rational.hpp"
#include "verify.hpp"

#endif
