#pragma once

#include <gmpxx.h>

#include <vector>

namespace jg {

using BigInt = mpz_class;
using BigRat = mpq_class;

// C(n, k) with the association-scheme convention: k < 0 or k > n yields 0.
// Negative n has no meaning in any formula we evaluate and throws.
BigInt binom(long n, long k);

// The row C(n, 0..n). Rows are memoized; the returned reference stays valid
// for the lifetime of the program. Safe to call from multiple threads.
const std::vector<BigInt>& binom_row(long n);

// num/den reduced to lowest terms, denominator > 0.
BigRat make_rat(const BigInt& num, const BigInt& den);

}  // namespace jg
