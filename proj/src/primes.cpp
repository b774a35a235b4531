#include "vsgap/primes.hpp"

#include <string>

#include "vsgap/error.hpp"

namespace vsgap {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long PrimeSeq::p(std::size_t i) const {
    if (i == 0 || i > primes.size())
        throw invalid_input("prime index " + std::to_string(i) + " out of range (have " +
                            std::to_string(primes.size()) + ")");
    return primes[i - 1];
}

PrimeSeq build_primes(long characteristic, std::size_t count) {
    if (characteristic != 0 && !is_prime(characteristic))
        throw invalid_input("characteristic must be 0 or prime, got " + std::to_string(characteristic));
    if (count == 0) throw invalid_input("prime count must be >= 1");
    PrimeSeq seq;
    seq.characteristic = characteristic;
    for (long n = 2; seq.primes.size() < count; ++n)
        if (is_prime(n) && n != characteristic) seq.primes.push_back(n);
    return seq;
}

}  // namespace vsgap
