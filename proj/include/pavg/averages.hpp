#pragma once

#include <cstdint>
#include <utility>

#include "pavg/prime_table.hpp"
#include "pavg/rational.hpp"

namespace pavg {

// Exact-rational running average of the primes and its derived
// quantities. All results are in lowest terms; nothing here touches
// floating point except the escalation ladder inside the real-argument
// counting overload.

// pbar_n = S_n / n.
Rational avg_prime(const PrimeTable& t, i64 n);

// gbar_n = pbar_{n+1} - pbar_n = (p_{n+1} - pbar_n) / (n+1); always > 0.
Rational avg_gap(const PrimeTable& t, i64 n);

// n*pbar_n - (n-1)*pbar_{n-1}. For genuine inputs this is exactly p_n;
// a non-integer result signals corrupted inputs (IntegrityError).
i64 invert(const Rational& pbar_prev, const Rational& pbar_cur, i64 n);

// Average of the first n prime gaps: (p_{n+1} - 2) / n.
Rational gaps_average(const PrimeTable& t, i64 n);

// (g_n, [gbar_n + gbar_{n-1}] + n [gbar_n - gbar_{n-1}]); the two sides
// are equal for every valid n.
std::pair<i64, Rational> gap_identity(const PrimeTable& t, i64 n);

struct CountStats {
  i64 escalations = 0;  // probes that needed more than double precision
  i64 exact_probes = 0; // probes settled by exact rational comparison
};

// pibar(x) = #{ i : pbar_i <= x }, ties counted. Requires
// x <= pbar_count (RangeError otherwise: the answer would be censored
// by the table size). Rational arguments are decided exactly.
i64 avg_prime_count(const PrimeTable& t, const Rational& x, CountStats* stats = nullptr);

// Real-argument overload: each binary-search probe starts on double
// enclosures and escalates (128, 256, ... bits), finishing with an exact
// comparison against the rational value of x, so it always decides.
i64 avg_prime_count(const PrimeTable& t, double x, CountStats* stats = nullptr);

}  // namespace pavg
