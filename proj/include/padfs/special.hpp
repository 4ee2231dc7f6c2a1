#pragma once

// Special functions used throughout the library: log-factorials,
// (generalized) binomial coefficients and associated Laguerre
// polynomials L_n^a(x) with possibly negative integer superscript.

#include <stdexcept>

namespace padfs {

// ln(n!), exact to double rounding for small n, Stirling-free (tabulated
// via lgamma beyond the cache).
double log_factorial(int n);

// n! as a double; overflows to inf for n > 170.
double factorial(int n);

// Ordinary binomial C(n, k) for n >= 0; returns 0 for k < 0 or k > n.
double binom(int n, int k);

// Generalized binomial C(t, k) = t(t-1)...(t-k+1)/k! for integer t of
// any sign and k >= 0.  Exact products, no gamma poles.
double binom_general(int t, int k);

// L_n^a(x) by the finite series sum_{i=0}^{n} (-1)^i C(n+a, n-i) x^i / i!.
// Valid for any integer a (including negative); reference evaluation,
// accurate only for moderate n.
double laguerre_series(int n, int a, double x);

// L_n^a(x), numerically stable path: three-term recurrence for a >= 0,
// the negative-superscript identity
//   L_n^{-j}(x) = (-x)^j (n-j)!/n! L_{n-j}^{j}(x),  0 < j <= n,
// and the direct series otherwise.
double laguerre_general(int n, int a, double x);

// Fills lag[d] = L_d^a(x) for d = 0..count-1 by forward recurrence.
void laguerre_row(int a, double x, double* lag, int count);

// x^p with the 0^0 := 1 convention, integer p >= 0.
double pow_int(double x, int p);

} // namespace padfs
