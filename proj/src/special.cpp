#include "padfs/special.hpp"

#include <cmath>
#include <vector>

namespace padfs {

double log_factorial(int n) {
  if (n < 0) throw std::invalid_argument("log_factorial: n must be >= 0");
  static const std::vector<double> cache = [] {
    std::vector<double> c(256);
    c[0] = 0.0;
    // exact integer products up to 20, lgamma-free
    double f = 1.0;
    for (int i = 1; i <= 20; ++i) {
      f *= i;
      c[i] = std::log(f);
    }
    for (int i = 21; i < 256; ++i) c[i] = std::lgamma(i + 1.0);
    return c;
  }();
  if (n < static_cast<int>(cache.size())) return cache[n];
  return std::lgamma(n + 1.0);
}

double factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: n must be >= 0");
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  if (n < 0) throw std::invalid_argument("binom: n must be >= 0");
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

double binom_general(int t, int k) {
  if (k < 0) return 0.0;
  double r = 1.0;
  for (int i = 0; i < k; ++i) r = r * (t - i) / (i + 1);
  return r;
}

double laguerre_series(int n, int a, double x) {
  if (n < 0) throw std::invalid_argument("laguerre_series: n must be >= 0");
  long double sum = 0.0L;
  for (int i = 0; i <= n; ++i) {
    long double term = 1.0L;
    for (int r = 0; r < n - i; ++r) term = term * (n + a - r) / (r + 1);
    for (int r = 0; r < i; ++r) term = term * x / (r + 1);
    sum += (i % 2 == 0) ? term : -term;
  }
  return static_cast<double>(sum);
}

namespace {

// forward recurrence (n+1) L_{n+1}^a = (2n+1+a-x) L_n^a - (n+a) L_{n-1}^a
double laguerre_recurrence(int n, int a, double x) {
  long double p0 = 1.0L;
  if (n == 0) return static_cast<double>(p0);
  long double xl = x;
  long double p1 = 1.0L + a - xl;
  for (int c = 1; c < n; ++c) {
    long double p2 = ((2 * c + 1 + a - xl) * p1 - (c + a) * p0) / (c + 1);
    p0 = p1;
    p1 = p2;
  }
  return static_cast<double>(p1);
}

} // namespace

double laguerre_general(int n, int a, double x) {
  if (n < 0) throw std::invalid_argument("laguerre_general: n must be >= 0");
  if (n == 0) return 1.0;
  if (a >= 0) return laguerre_recurrence(n, a, x);
  int j = -a;
  if (j <= n) {
    // (n-j)!/n! as an exact product of reciprocals
    long double ratio = 1.0L;
    for (int r = n - j + 1; r <= n; ++r) ratio /= r;
    return static_cast<double>(pow_int(-x, j) * ratio *
                               laguerre_recurrence(n - j, j, x));
  }
  // a < -n: leading series coefficients vanish is not the case here, but the
  // finite series stays well conditioned because C(n+a, n-i) has fixed sign.
  return laguerre_series(n, a, x);
}

void laguerre_row(int a, double x, double* lag, int count) {
  if (count <= 0) return;
  lag[0] = 1.0;
  if (count == 1) return;
  lag[1] = 1.0 + a - x;
  for (int c = 1; c + 1 < count; ++c)
    lag[c + 1] = ((2 * c + 1 + a - x) * lag[c] - (c + a) * lag[c - 1]) / (c + 1);
}

double pow_int(double x, int p) {
  double r = 1.0;
  for (int i = 0; i < p; ++i) r *= x;
  return r;
}

} // namespace padfs
