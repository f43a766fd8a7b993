#pragma once

#include <gmpxx.h>

#include <string>

namespace subtrees {

/// Exact nonnegative counts. Subtree numbers grow like 2^n, so nothing here
/// is ever stored in a fixed-width integer.
using Count = mpz_class;

inline std::string to_decimal(const Count& c) { return c.get_str(10); }

inline Count pow_count(unsigned long base, unsigned long exponent) {
  Count result;
  mpz_ui_pow_ui(result.get_mpz_t(), base, exponent);
  return result;
}

inline Count binomial(unsigned long n, unsigned long k) {
  Count result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

}  // namespace subtrees
