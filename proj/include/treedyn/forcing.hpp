#pragma once

#include <optional>
#include <set>
#include <stdexcept>

namespace treedyn {

class ForcingError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A Sharkovskii type: a positive integer, the symbol 2^inf, or the empty set.
struct SharkovskiiKey {
  enum class Kind { Finite, TwoInf, Empty };
  Kind kind = Kind::Finite;
  long value = 1;

  static SharkovskiiKey finite(long k);
  static SharkovskiiKey twoInf() { return {Kind::TwoInf, 0}; }
  static SharkovskiiKey empty() { return {Kind::Empty, 0}; }
};

/// Finite or cofinite set of verified cycle periods.
struct PeriodSet {
  std::set<long> finite;
  std::optional<long> all_from;  // when set, every integer >= all_from belongs

  bool contains(long p) const {
    if (p < 1) return false;
    if (all_from && p >= *all_from) return true;
    return finite.count(p) > 0;
  }
};

/// Strict Sharkovskii precedence: 3 < 5 < 7 < ... < 2*3 < 2*5 < ... < 8 < 4 <
/// 2 < 1, compared by (2-adic valuation, odd part).
bool sharkovskiiLess(long a, long b);

/// Membership in the closed tail S(key): key itself and everything after it.
/// S(2^inf) is the powers of two; S(empty) is empty.
bool inSharkovskiiTail(SharkovskiiKey key, long m);

/// n > 1 with no prime divisor below end_count + 1.
bool isApNumber(long n, int end_count);

/// 2 * End(X) * (n - 1): a period-n cycle (n an ap-number) forces every
/// period above this value.
long forcedPeriodThreshold(long n, int end_count);

/// ln 2 / (n * End(X) - 1).
double entropyLowerBound(long n, int end_count);

/// Best bound over factorizations n = p*k with p an ap-number:
/// max of ln 2 / (k * (p * End(X) - 1)); nullopt when no factor qualifies.
std::optional<double> bestEntropyBound(long n, int end_count);

/// L(X) = 2 * End(X) * (p - 1) with p the least prime above End(X); periods
/// 1..L(X) together force all periods.
long misiurewiczThreshold(int end_count);

/// n = 2^l * m (m odd) is realizable at zero entropy iff m <= Edg(X) and all
/// prime divisors of m are below End(X) + 1.
bool zeroEntropyAdmissible(long n, int end_count, int edge_count);

}  // namespace treedyn
