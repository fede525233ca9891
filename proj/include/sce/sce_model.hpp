// sce_model.hpp
// Quadruple decomposition of an even number E by its additive interactions.
//
// An additive interaction of E is a pair of odd positives x <= y with
// x + y = E. Each interaction falls in one of four classes by the primality
// of (x, y); the self pair x = y = E/2 (present iff E = 2 mod 4) counts one half.
//
//   a = #(nonprime, nonprime)   b = #(nonprime, prime)
//   c = #(prime, nonprime)      d = #(prime, prime)
//
// with E/4 = a + b + c + d. The wings are L1 = a+b, L2 = c+d, R1 = a+c,
// R2 = b+d. The number 1 counts as an odd nonprime.
//
// All arithmetic is exact: a, d and the wings are HalfValue.
#pragma once

#include "sce/half_value.hpp"
#include "sce/prime_table.hpp"
#include "sce/verdict.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace sce {

enum class SelfKind { none, prime_self, nonprime_self };

std::string_view to_string(SelfKind kind) noexcept;

struct Interaction {
    std::int64_t x = 0;
    std::int64_t y = 0;
    friend bool operator==(const Interaction&, const Interaction&) = default;
};

struct InteractionTallies {
    std::int64_t E = 0;
    std::int64_t nn = 0;  // x < y, both nonprime
    std::int64_t np = 0;  // x nonprime, y prime
    std::int64_t pn = 0;  // x prime, y nonprime
    std::int64_t pp = 0;  // x < y, both prime
    SelfKind self_kind = SelfKind::none;

    friend bool operator==(const InteractionTallies&, const InteractionTallies&) = default;
};

struct Decomposition {
    std::int64_t E = 0;
    InteractionTallies tallies;
    HalfValue a;
    std::int64_t b = 0;
    std::int64_t c = 0;
    HalfValue d;
    HalfValue L1, L2, R1, R2;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// Throws std::invalid_argument unless E >= 2 and even.
void require_even(std::int64_t E);

// floor((E + 2) / 4)
std::int64_t interaction_count(std::int64_t E);

// All interactions of E in increasing x.
std::vector<Interaction> interactions(std::int64_t E);

// Classifies every interaction of E; O(E) primality lookups, O(1) memory.
InteractionTallies tally_interactions(std::int64_t E, const PrimeTable& table);

// d_E alone, without classifying the nonprime classes.
HalfValue prime_pair_weight(std::int64_t E, const PrimeTable& table);

Decomposition from_tallies(const InteractionTallies& tallies);
Decomposition decompose(std::int64_t E, const PrimeTable& table);

// Exact identity checks of one decomposition. Every flag is the literal truth
// value of its identity; no tolerance.
struct IdentityReport {
    std::int64_t E = 0;
    bool eq2_1_ok = false;        // a + b + c + d = E/4
    bool eq22_ok = false;         // b + c + 2d = pi(E) - 1
    bool eq22_5_ok = false;       // b + c + 2a = E/2 - pi(E) + 1
    bool eq8_6_ok = false;        // L1 + L2 = R1 + R2 = E/4
    // E = 0 mod 4:  L1(E/2) + R1(E/2) = L1(E),  L2(E/2) + R2(E/2) = L2(E)
    // E = 2 mod 4:  L1(E/2-1) + R1(E/2-1) + 1/2 = L1(E),
    //               L2(E/2-1) + R2(E/2-1) = L2(E)
    // not_applicable when the half-size number would be < 2.
    Verdict halving = Verdict::not_applicable;
    // ceil(L1), ceil(L2), ceil(R1), ceil(R2) equal the odd nonprime / odd
    // prime counts of the closed intervals [0, E/2] and [E/2, E].
    bool wing_count_ok = false;

    bool all_ok() const noexcept
    {
        return eq2_1_ok && eq22_ok && eq22_5_ok && eq8_6_ok && wing_count_ok &&
               halving != Verdict::fails;
    }
};

// Odd numbers n with lo <= n <= hi.
std::int64_t odd_count(std::int64_t lo, std::int64_t hi) noexcept;

IdentityReport check_identities(const Decomposition& dec, const PrimeTable& table);

} // namespace sce
