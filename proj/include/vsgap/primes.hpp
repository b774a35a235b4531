#pragma once

#include <cstddef>
#include <vector>

namespace vsgap {

bool is_prime(long n);

// The prime sequence pbar_1 < pbar_2 < ... with the residue characteristic
// removed (characteristic 0 removes nothing).
struct PrimeSeq {
    long characteristic = 0;
    std::vector<long> primes;

    // pbar_i, 1-based.
    long p(std::size_t i) const;
};

// First `count` primes excluding `characteristic`; characteristic must be
// 0 or prime.
PrimeSeq build_primes(long characteristic, std::size_t count);

}  // namespace vsgap
