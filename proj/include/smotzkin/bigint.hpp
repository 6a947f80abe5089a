#pragma once

#include <gmpxx.h>

namespace smotzkin {

using BigInt = mpz_class;
using Rational = mpq_class;

}  // namespace smotzkin
