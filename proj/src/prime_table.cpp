#include "sce/prime_table.hpp"

#include "sce/errors.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <string>

namespace sce {

namespace {

std::int64_t isqrt(std::int64_t n)
{
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Odd primes up to n by a plain sieve; only used for the base primes.
std::vector<std::int64_t> small_odd_primes(std::int64_t n)
{
    std::vector<char> composite(static_cast<std::size_t>(n + 1), 0);
    std::vector<std::int64_t> primes;
    for (std::int64_t i = 3; i <= n; i += 2) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::int64_t j = i * i; j <= n; j += 2 * i) composite[j] = 1;
    }
    return primes;
}

} // namespace

PrimeTable PrimeTable::build(std::int64_t limit, const PrimeTableOptions& options)
{
    if (limit < 2)
        throw std::invalid_argument("prime table limit must be >= 2, got " + std::to_string(limit));
    if (options.block_size <= 0 || options.block_size % 128 != 0)
        throw std::invalid_argument("block_size must be a positive multiple of 128");
    if (options.segment_size <= 0 || options.segment_size % 128 != 0)
        throw std::invalid_argument("segment_size must be a positive multiple of 128");

    const std::int64_t odd_count = (limit + 1) / 2;  // odd numbers in [1, limit]
    const std::int64_t words = (odd_count + 63) / 64;
    const std::int64_t blocks = limit / options.block_size + 1;
    const auto needed = static_cast<std::size_t>(words + blocks) * 8;
    if (needed > options.memory_budget)
        throw ResourceError("prime table up to " + std::to_string(limit) + " needs " +
                            std::to_string(needed) + " bytes, budget is " +
                            std::to_string(options.memory_budget));

    PrimeTable table;
    table.limit_ = limit;
    table.block_size_ = options.block_size;
    table.bits_.assign(static_cast<std::size_t>(words), ~std::uint64_t{0});
    table.bits_[0] &= ~std::uint64_t{1};  // 1 is not prime
    if (const auto tail = odd_count % 64; tail != 0)
        table.bits_.back() &= (std::uint64_t{1} << tail) - 1;

    const auto base = small_odd_primes(isqrt(limit));
    auto clear = [&](std::int64_t n) {
        const auto bit = static_cast<std::uint64_t>(n) >> 1;
        table.bits_[bit >> 6] &= ~(std::uint64_t{1} << (bit & 63));
    };

    for (std::int64_t seg_lo = 0; seg_lo <= limit; seg_lo += options.segment_size) {
        const std::int64_t seg_hi = std::min(limit, seg_lo + options.segment_size - 1);
        for (const std::int64_t p : base) {
            if (p * p > seg_hi) break;
            // first odd multiple of p that is >= max(p*p, seg_lo)
            std::int64_t m = std::max(p * p, (seg_lo + p - 1) / p * p);
            if (m % 2 == 0) m += p;
            for (; m <= seg_hi; m += 2 * p) clear(m);
        }
    }

    table.block_counts_.resize(static_cast<std::size_t>(blocks));
    const std::int64_t words_per_block = options.block_size / 128;
    std::int64_t running = 0;
    for (std::int64_t k = 0; k < blocks; ++k) {
        table.block_counts_[k] = running;
        const std::int64_t w0 = k * words_per_block;
        const std::int64_t w1 = std::min(words, w0 + words_per_block);
        for (std::int64_t w = w0; w < w1; ++w) running += std::popcount(table.bits_[w]);
    }
    return table;
}

std::size_t PrimeTable::memory_bytes() const noexcept
{
    return bits_.size() * sizeof(std::uint64_t) + block_counts_.size() * sizeof(std::int64_t);
}

void PrimeTable::check_coverage(std::int64_t n, const char* what) const
{
    if (n < 0)
        throw std::invalid_argument(std::string(what) + ": negative argument " + std::to_string(n));
    if (n > limit_)
        throw OutOfCoverage(std::string(what) + ": " + std::to_string(n) +
                            " exceeds prime table limit " + std::to_string(limit_));
}

bool PrimeTable::is_prime(std::int64_t n) const
{
    check_coverage(n, "is_prime");
    if (n % 2 == 0) return n == 2;
    return odd_is_prime(n);
}

std::int64_t PrimeTable::odd_pi(std::int64_t x) const noexcept
{
    assert(x >= 0 && x <= limit_);
    if (x < 1) return 0;
    const std::int64_t k = x / block_size_;
    const std::int64_t last_bit = (x - 1) / 2;  // largest odd <= x is 2*last_bit + 1
    std::int64_t count = block_counts_[k];
    std::int64_t w = k * (block_size_ / 128);
    if (last_bit < w * 64) return count;  // x is the even first number of its block
    const std::int64_t last_word = last_bit >> 6;
    for (; w < last_word; ++w) count += std::popcount(bits_[w]);
    const auto shift = static_cast<unsigned>(last_bit & 63);
    const std::uint64_t mask = shift == 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << (shift + 1)) - 1;
    count += std::popcount(bits_[last_word] & mask);
    return count;
}

std::int64_t PrimeTable::pi(std::int64_t x) const
{
    check_coverage(x, "pi");
    return odd_pi(x) + (x >= 2 ? 1 : 0);
}

std::int64_t PrimeTable::odd_prime_count(std::int64_t lo, std::int64_t hi) const
{
    check_coverage(lo, "odd_prime_count");
    check_coverage(hi, "odd_prime_count");
    if (lo > hi)
        throw std::invalid_argument("odd_prime_count: lo > hi");
    return odd_pi(hi) - (lo > 0 ? odd_pi(lo - 1) : 0);
}

} // namespace sce
