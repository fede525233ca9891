// prime_table.hpp
// Exact primality and prime-counting oracle over [0, limit].
//
// Storage is one bit per odd number:
//   odd n  ->  bit index n / 2   (n = 1 is bit 0 and is never set)
// The prime 2 is handled separately in every query.
//
// A cumulative count of odd primes is kept at block granularity so that
// pi(x) is one table lookup plus a popcount over at most one block.
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace sce {

struct PrimeTableOptions {
    // Integers per cumulative-count block. Must be a positive multiple of 128
    // so blocks start on 64-bit word boundaries.
    std::int64_t block_size = 4096;
    // Integers covered by one sieve pass.
    std::int64_t segment_size = std::int64_t{1} << 18;
    // Upper bound on bitmap + index memory, in bytes.
    std::size_t memory_budget = std::size_t{1} << 31;
};

class PrimeTable {
public:
    // Segmented sieve of Eratosthenes over [0, limit].
    // Throws std::invalid_argument for limit < 2 or bad options,
    // ResourceError when the table would exceed options.memory_budget.
    static PrimeTable build(std::int64_t limit, const PrimeTableOptions& options = {});

    std::int64_t limit() const noexcept { return limit_; }
    std::int64_t block_size() const noexcept { return block_size_; }
    std::size_t memory_bytes() const noexcept;

    // Throw OutOfCoverage for n > limit; negative n is invalid_argument.
    bool is_prime(std::int64_t n) const;
    std::int64_t pi(std::int64_t x) const;
    // Primes p with lo <= p <= hi and p odd.
    std::int64_t odd_prime_count(std::int64_t lo, std::int64_t hi) const;

    // Hot-path lookup for the decomposition loops. n must be odd and <= limit;
    // checked only in debug builds.
    bool odd_is_prime(std::int64_t n) const noexcept
    {
        const auto bit = static_cast<std::uint64_t>(n) >> 1;
        return (bits_[bit >> 6] >> (bit & 63)) & 1U;
    }

private:
    PrimeTable() = default;

    void check_coverage(std::int64_t n, const char* what) const;
    // Odd primes <= x, for 0 <= x <= limit.
    std::int64_t odd_pi(std::int64_t x) const noexcept;

    std::int64_t limit_ = 0;
    std::int64_t block_size_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<std::int64_t> block_counts_;  // odd primes < k * block_size
};

} // namespace sce
