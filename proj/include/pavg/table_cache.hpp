#pragma once

#include <string>

#include "pavg/prime_table.hpp"

namespace pavg {

// Prime-table cache file.
//
// Layout (all integers little-endian):
//   bytes 0-3   magic "PAVG"
//   byte  4     format version, 0x01
//   bytes 5-12  limit  (u64)
//   bytes 13-20 count  (u64)
//   ...         primes as unsigned LEB128 deltas from the previous prime,
//               the first delta taken from 0 (so it encodes 2)
//   last 8      checksum: sum of all primes mod 2^64
//
// Prefix sums are recomputed on load and cross-checked against the
// checksum; any mismatch raises IntegrityError.

void save_table(const PrimeTable& t, const std::string& path);
PrimeTable load_table(const std::string& path);

}  // namespace pavg
