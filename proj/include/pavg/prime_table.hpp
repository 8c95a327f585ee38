#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pavg/interval.hpp"
#include "pavg/rational.hpp"

namespace pavg {

// Immutable sieve output: the primes up to `limit`, their exact prefix
// sums, and read-only queries over them. Construction is single-writer;
// afterwards the table is safe for concurrent readers.
//
// Memory model: primes are stored as 32-bit values and prefix sums as
// 64-bit values (~12 bytes per prime), so `limit` must stay below 2^32.
// Within that range the sum of all primes is below 2^59, so the 64-bit
// prefix sums cannot overflow; an explicit guard enforces this anyway.
class PrimeTable {
 public:
  u64 limit() const { return limit_; }
  i64 count() const { return static_cast<i64>(primes_.size()); }

  // p_n, 1-based. n must lie in [1, count].
  i64 nth_prime(i64 n) const;

  // S_n = p_1 + ... + p_n; S_0 = 0. n must lie in [0, count].
  u64 prefix_sum(i64 n) const;

  // g_n = p_{n+1} - p_n. n must lie in [1, count-1].
  i64 prime_gap(i64 n) const;

  // pi(x) with the <= convention (x exactly prime counts it). x must be
  // nonnegative and at most `limit`.
  i64 prime_count(double x) const;
  i64 prime_count(const Rational& x) const;
  i64 prime_count_u64(u64 x) const;

  // Enclosure of theta(x) = sum of ln p over primes p <= x. Width is
  // bounded by count * (per-term rounding bound); see ThetaSummer.
  IntervalValue theta(double x) const;

  // theta(p_1..p_n) recomputed at the given MPFR precision; used when a
  // double-precision decision is inconclusive.
  MpfrInterval theta_prefix_mpfr(i64 n, mpfr_prec_t prec) const;

  std::span<const std::uint32_t> primes() const { return primes_; }
  std::span<const u64> prefix_sums() const { return sums_; }

 private:
  friend PrimeTable build_table(u64 limit, std::size_t segment_odds);
  friend PrimeTable load_table(const std::string& path);
  u64 limit_ = 0;
  std::vector<std::uint32_t> primes_;
  std::vector<u64> sums_;  // sums_[i] = p_1 + ... + p_{i+1}
};

// Segmented sieve of Eratosthenes with odd-only segments. The default
// segment covers 2^19 odd numbers (512 KiB of scratch).
PrimeTable build_table(u64 limit, std::size_t segment_odds = (1u << 19));

// Incremental enclosure of sum(ln p). The running value is a compensated
// (Kahan) double sum; the enclosure widens it by a rigorous bound on the
// accumulated rounding error, at most kPerTermBound per term.
class ThetaSummer {
 public:
  void add(u64 prime);
  i64 terms() const { return terms_; }
  IntervalValue value() const;

  // Per-term error budget as a multiple of machine epsilon times the
  // running sum: 2 eps for the libm log, 2 eps for compensated addition,
  // doubled for headroom.
  static constexpr double kPerTermEps = 8.0 * 2.220446049250313e-16;

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
  i64 terms_ = 0;
};

}  // namespace pavg
