#include "treedyn/forcing.hpp"

#include <cmath>

namespace treedyn {

namespace {

// n = 2^val2 * odd
void splitTwoAdic(long n, int& val2, long& odd) {
  val2 = 0;
  odd = n;
  while (odd % 2 == 0) {
    odd /= 2;
    ++val2;
  }
}

long smallestPrimeFactor(long n) {
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return d;
  return n;
}

bool isPrime(long n) {
  return n >= 2 && smallestPrimeFactor(n) == n;
}

}  // namespace

SharkovskiiKey SharkovskiiKey::finite(long k) {
  if (k < 1) throw ForcingError("Sharkovskii key must be positive");
  return {Kind::Finite, k};
}

bool sharkovskiiLess(long a, long b) {
  if (a < 1 || b < 1) throw ForcingError("periods must be positive");
  if (a == b) return false;
  int va, vb;
  long ua, ub;
  splitTwoAdic(a, va, ua);
  splitTwoAdic(b, vb, ub);
  bool pow2a = (ua == 1), pow2b = (ub == 1);
  if (pow2a != pow2b) return pow2b;        // non-powers precede powers of two
  if (pow2a) return a > b;                 // 8 < 4 < 2 < 1
  if (va != vb) return va < vb;            // odd part block, then 2*odd, ...
  return ua < ub;                          // within a block, by odd part
}

bool inSharkovskiiTail(SharkovskiiKey key, long m) {
  if (m < 1) throw ForcingError("periods must be positive");
  switch (key.kind) {
    case SharkovskiiKey::Kind::Empty:
      return false;
    case SharkovskiiKey::Kind::TwoInf:
      return (m & (m - 1)) == 0;
    case SharkovskiiKey::Kind::Finite:
      return key.value == m || sharkovskiiLess(key.value, m);
  }
  return false;
}

bool isApNumber(long n, int end_count) {
  if (n < 1 || end_count < 2) throw ForcingError("need n >= 1, End >= 2");
  if (n == 1) return false;
  // a prime divisor <= End(X) exists iff some divisor in [2, End(X)] does
  for (long d = 2; d <= end_count; ++d)
    if (n % d == 0) return false;
  return true;
}

long forcedPeriodThreshold(long n, int end_count) {
  if (!isApNumber(n, end_count))
    throw ForcingError("n is not an ap-number for this endpoint count");
  return 2L * end_count * (n - 1);
}

double entropyLowerBound(long n, int end_count) {
  if (!isApNumber(n, end_count))
    throw ForcingError("n is not an ap-number for this endpoint count");
  return std::log(2.0) / (static_cast<double>(n) * end_count - 1.0);
}

std::optional<double> bestEntropyBound(long n, int end_count) {
  if (n < 1 || end_count < 2) throw ForcingError("need n >= 1, End >= 2");
  std::optional<double> best;
  for (long p = 1; p * p <= n; ++p) {
    if (n % p != 0) continue;
    for (long q : {p, n / p}) {
      long k = n / q;
      if (!(q > 1) || !isApNumber(q, end_count)) continue;
      double h = std::log(2.0) /
                 (static_cast<double>(k) * (static_cast<double>(q) * end_count - 1.0));
      if (!best || h > *best) best = h;
    }
  }
  return best;
}

long misiurewiczThreshold(int end_count) {
  if (end_count < 2) throw ForcingError("need End >= 2");
  long p = end_count + 1;
  while (!isPrime(p)) ++p;
  return 2L * end_count * (p - 1);
}

bool zeroEntropyAdmissible(long n, int end_count, int edge_count) {
  if (n < 1) throw ForcingError("periods must be positive");
  int l;
  long m;
  splitTwoAdic(n, l, m);
  if (m > edge_count) return false;
  // strip prime factors below End(X) + 1; anything left is too large
  long rest = m;
  for (long d = 3; d <= end_count && d <= rest; d += 2)
    while (rest % d == 0) rest /= d;
  return rest == 1;
}

}  // namespace treedyn
