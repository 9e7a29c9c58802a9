#pragma once

// Exact classification and solution generation for the rational systems
//   x + y + z = a + b + c,  xyz = abc
//   x + y + z = a + b + c,  x^3 + y^3 + z^3 = a^3 + b^3 + c^3
// via the Weierstrass curve attached to the elementary invariants (s, p).

#include "sumprod/classify.hpp"
#include "sumprod/correspondence.hpp"
#include "sumprod/cubes.hpp"
#include "sumprod/curve.hpp"
#include "sumprod/enumerate.hpp"
#include "sumprod/errors.hpp"
#include "sumprod/families.hpp"
#include "sumprod/oracle.hpp"
#include "sumprod/rational.hpp"
#include "sumprod/stream.hpp"
#include "sumprod/triple.hpp"
