#include "pavg/prime_table.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "pavg/errors.hpp"

namespace pavg {

namespace {

constexpr u64 kMaxLimit = 0xFFFFFFFFull;  // primes must fit 32 bits

u64 isqrt_u64(u64 v) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

}  // namespace

PrimeTable build_table(u64 limit, std::size_t segment_odds) {
  if (limit < 2) throw DomainError("sieve limit must be >= 2");
  if (limit > kMaxLimit)
    throw CapacityError(limit, "sieve limit " + std::to_string(limit) + " exceeds the 32-bit table format");
  if (segment_odds < 8) segment_odds = 8;

  PrimeTable t;
  t.limit_ = limit;

  // Upper estimate of pi(limit) for reservation only.
  const double dl = static_cast<double>(limit);
  const std::size_t reserve =
      limit < 17 ? 8 : static_cast<std::size_t>(dl / (std::log(dl) - 1.2)) + 32;
  try {
    t.primes_.reserve(reserve);
    t.sums_.reserve(reserve);
  } catch (const std::bad_alloc&) {
    throw ResourceError("cannot allocate prime table for limit " + std::to_string(limit));
  }

  u64 running = 0;
  auto push_prime = [&](u64 p) {
    if (__builtin_add_overflow(running, p, &running))
      throw CapacityError(limit, "prefix sum overflow");  // unreachable for limit < 2^32
    t.primes_.push_back(static_cast<std::uint32_t>(p));
    t.sums_.push_back(running);
  };

  push_prime(2);
  if (limit == 2) return t;

  // Base sieve over odd numbers up to sqrt(limit).
  const u64 root = isqrt_u64(limit);
  std::vector<std::uint8_t> base((root >> 1) + 1, 1);  // base[i] <-> 2i+1
  std::vector<u64> base_primes;
  for (u64 i = 1; 2 * i + 1 <= root; ++i) {
    if (!base[i]) continue;
    const u64 p = 2 * i + 1;
    base_primes.push_back(p);
    for (u64 j = p * p; j <= root; j += 2 * p) base[(j - 1) >> 1] = 0;
  }

  std::vector<std::uint8_t> seg(segment_odds);
  for (u64 low = 3; low <= limit; low += 2 * segment_odds) {
    const u64 high = std::min(low + 2 * (segment_odds - 1), limit | 1);
    const std::size_t n_odds = static_cast<std::size_t>((high - low) / 2) + 1;
    std::memset(seg.data(), 1, n_odds);

    for (u64 p : base_primes) {
      if (p * p > high) break;
      u64 start = ((low + p - 1) / p) * p;  // first multiple of p at or above low
      if ((start & 1) == 0) start += p;     // odd multiples only
      if (start < p * p) start = p * p;
      for (u64 m = start; m <= high; m += 2 * p) seg[(m - low) >> 1] = 0;
    }

    for (std::size_t i = 0; i < n_odds; ++i) {
      if (!seg[i]) continue;
      const u64 p = low + 2 * i;
      if (p > limit) break;
      push_prime(p);
    }
  }
  return t;
}

i64 PrimeTable::nth_prime(i64 n) const {
  if (n < 1 || n > count())
    throw RangeError("prime index " + std::to_string(n) + " outside table of " +
                     std::to_string(count()) + " primes");
  return primes_[static_cast<std::size_t>(n - 1)];
}

u64 PrimeTable::prefix_sum(i64 n) const {
  if (n < 0 || n > count())
    throw RangeError("prefix sum index " + std::to_string(n) + " outside table");
  return n == 0 ? 0 : sums_[static_cast<std::size_t>(n - 1)];
}

i64 PrimeTable::prime_gap(i64 n) const {
  if (n < 1 || n + 1 > count())
    throw RangeError("gap index " + std::to_string(n) + " needs primes " + std::to_string(n) +
                     " and " + std::to_string(n + 1) + ", table has " + std::to_string(count()));
  return static_cast<i64>(primes_[static_cast<std::size_t>(n)]) -
         static_cast<i64>(primes_[static_cast<std::size_t>(n - 1)]);
}

i64 PrimeTable::prime_count_u64(u64 x) const {
  if (x > limit_)
    throw RangeError("pi(" + std::to_string(x) + ") beyond table limit " + std::to_string(limit_));
  auto it = std::upper_bound(primes_.begin(), primes_.end(), x);
  return static_cast<i64>(it - primes_.begin());
}

i64 PrimeTable::prime_count(double x) const {
  if (!(x >= 0)) throw DomainError("pi(x) requires x >= 0");
  if (x > static_cast<double>(limit_))
    throw RangeError("pi(" + double_string(x) + ") beyond table limit " + std::to_string(limit_));
  // Primes are integers, so pi(x) = pi(floor(x)); floor is exact here.
  return prime_count_u64(static_cast<u64>(std::floor(x)));
}

i64 PrimeTable::prime_count(const Rational& x) const {
  if (sgn(x) < 0) throw DomainError("pi(x) requires x >= 0");
  if (mpq_cmp_ui(x.get_mpq_t(), static_cast<unsigned long>(limit_), 1ul) > 0)
    throw RangeError("pi(" + fraction_string(x) + ") beyond table limit " + std::to_string(limit_));
  mpz_class fl = x.get_num() / x.get_den();  // truncation == floor for x >= 0
  return prime_count_u64(fl.get_ui());
}

void ThetaSummer::add(u64 prime) {
  const double term = std::log(static_cast<double>(prime));
  // Kahan compensated addition; all terms are positive.
  const double y = term - comp_;
  const double s = sum_ + y;
  comp_ = (s - sum_) - y;
  sum_ = s;
  ++terms_;
}

IntervalValue ThetaSummer::value() const {
  if (terms_ == 0) return IntervalValue::exact(0.0);
  const double err = kPerTermEps * sum_ + 1e-300;
  return {sum_ - err, sum_ + err};
}

IntervalValue PrimeTable::theta(double x) const {
  if (x > static_cast<double>(limit_))
    throw RangeError("theta(" + double_string(x) + ") beyond table limit " + std::to_string(limit_));
  ThetaSummer acc;
  for (std::uint32_t p : primes_) {
    if (static_cast<double>(p) > x) break;
    acc.add(p);
  }
  return acc.value();
}

MpfrInterval PrimeTable::theta_prefix_mpfr(i64 n, mpfr_prec_t prec) const {
  if (n < 0 || n > count()) throw RangeError("theta prefix index outside table");
  MpfrInterval sum(prec);
  mpfr_t t;
  mpfr_init2(t, prec);
  for (i64 i = 0; i < n; ++i) {
    const unsigned long p = primes_[static_cast<std::size_t>(i)];
    mpfr_set_ui(t, p, MPFR_RNDD);
    mpfr_log(t, t, MPFR_RNDD);
    mpfr_add(sum.lo(), sum.lo(), t, MPFR_RNDD);
    mpfr_set_ui(t, p, MPFR_RNDU);
    mpfr_log(t, t, MPFR_RNDU);
    mpfr_add(sum.hi(), sum.hi(), t, MPFR_RNDU);
  }
  mpfr_clear(t);
  return sum;
}

}  // namespace pavg
