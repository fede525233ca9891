#include "sce/sce_model.hpp"

#include "sce/errors.hpp"

#include <string>

namespace sce {

std::string_view to_string(SelfKind kind) noexcept
{
    switch (kind) {
    case SelfKind::none: return "none";
    case SelfKind::prime_self: return "prime_self";
    case SelfKind::nonprime_self: return "nonprime_self";
    }
    return "?";
}

void require_even(std::int64_t E)
{
    if (E < 2 || E % 2 != 0)
        throw std::invalid_argument("expected an even number >= 2, got " + std::to_string(E));
}

std::int64_t interaction_count(std::int64_t E)
{
    require_even(E);
    return (E + 2) / 4;
}

std::vector<Interaction> interactions(std::int64_t E)
{
    std::vector<Interaction> pairs;
    pairs.reserve(static_cast<std::size_t>(interaction_count(E)));
    for (std::int64_t x = 1; 2 * x <= E; x += 2) pairs.push_back({x, E - x});
    return pairs;
}

namespace {

void require_covered(std::int64_t E, const PrimeTable& table)
{
    require_even(E);
    if (E > table.limit())
        throw OutOfCoverage("E = " + std::to_string(E) + " exceeds prime table limit " +
                            std::to_string(table.limit()));
}

} // namespace

InteractionTallies tally_interactions(std::int64_t E, const PrimeTable& table)
{
    require_covered(E, table);
    InteractionTallies t;
    t.E = E;
    // Count prime x and prime y over x < y; the four classes then follow from
    // pp without a per-pair branch.
    std::int64_t prime_x = 0, prime_y = 0, pp = 0;
    std::int64_t x = 1;
    for (; 2 * x < E; x += 2) {
        const bool px = table.odd_is_prime(x);
        const bool py = table.odd_is_prime(E - x);
        prime_x += px;
        prime_y += py;
        pp += px & py;
    }
    const std::int64_t pairs = (E + 2) / 4 - (E % 4 == 2 ? 1 : 0);
    t.pp = pp;
    t.pn = prime_x - pp;
    t.np = prime_y - pp;
    t.nn = pairs - t.pp - t.pn - t.np;
    if (2 * x == E)
        t.self_kind = table.odd_is_prime(x) ? SelfKind::prime_self : SelfKind::nonprime_self;
    return t;
}

HalfValue prime_pair_weight(std::int64_t E, const PrimeTable& table)
{
    require_covered(E, table);
    std::int64_t doubled = 0;
    std::int64_t x = 3;
    for (; 2 * x < E; x += 2)
        if (table.odd_is_prime(x) && table.odd_is_prime(E - x)) doubled += 2;
    if (2 * x == E && table.odd_is_prime(x)) doubled += 1;
    return HalfValue::from_doubled(doubled);
}

Decomposition from_tallies(const InteractionTallies& t)
{
    Decomposition dec;
    dec.E = t.E;
    dec.tallies = t;
    dec.a = HalfValue::from_doubled(2 * t.nn + (t.self_kind == SelfKind::nonprime_self ? 1 : 0));
    dec.b = t.np;
    dec.c = t.pn;
    dec.d = HalfValue::from_doubled(2 * t.pp + (t.self_kind == SelfKind::prime_self ? 1 : 0));
    const auto b = HalfValue::from_integer(dec.b);
    const auto c = HalfValue::from_integer(dec.c);
    dec.L1 = dec.a + b;
    dec.L2 = c + dec.d;
    dec.R1 = dec.a + c;
    dec.R2 = b + dec.d;
    return dec;
}

Decomposition decompose(std::int64_t E, const PrimeTable& table)
{
    return from_tallies(tally_interactions(E, table));
}

std::int64_t odd_count(std::int64_t lo, std::int64_t hi) noexcept
{
    if (hi < lo) return 0;
    auto odds_upto = [](std::int64_t n) { return n < 0 ? 0 : (n + 1) / 2; };
    return odds_upto(hi) - odds_upto(lo - 1);
}

IdentityReport check_identities(const Decomposition& dec, const PrimeTable& table)
{
    require_covered(dec.E, table);
    const std::int64_t E = dec.E;
    const std::int64_t pi_E = table.pi(E);
    const std::int64_t a2 = dec.a.doubled();
    const std::int64_t d2 = dec.d.doubled();

    IdentityReport r;
    r.E = E;
    // doubled forms: 2a + 2b + 2c + 2d = E/2 etc.
    r.eq2_1_ok = a2 + 2 * dec.b + 2 * dec.c + d2 == E / 2;
    r.eq22_ok = 2 * dec.b + 2 * dec.c + 2 * d2 == 2 * (pi_E - 1);
    r.eq22_5_ok = 2 * dec.b + 2 * dec.c + 2 * a2 == E - 2 * pi_E + 2;
    r.eq8_6_ok = (dec.L1 + dec.L2).doubled() == E / 2 && (dec.R1 + dec.R2).doubled() == E / 2;

    const std::int64_t half = E / 2;
    if (half % 2 == 0 && half >= 2) {
        const auto h = decompose(half, table);
        r.halving = (h.L1 + h.R1 == dec.L1 && h.L2 + h.R2 == dec.L2) ? Verdict::holds : Verdict::fails;
    } else if (half % 2 == 1 && half - 1 >= 2) {
        const auto h = decompose(half - 1, table);
        const bool left = h.L1 + h.R1 + HalfValue::from_doubled(1) == dec.L1;
        const bool right = h.L2 + h.R2 == dec.L2;
        r.halving = (left && right) ? Verdict::holds : Verdict::fails;
    }

    const std::int64_t left_primes = table.odd_prime_count(0, half);
    const std::int64_t right_primes = table.odd_prime_count(half, E);
    const std::int64_t left_nonprimes = odd_count(0, half) - left_primes;
    const std::int64_t right_nonprimes = odd_count(half, E) - right_primes;
    r.wing_count_ok = dec.L1.ceil() == left_nonprimes && dec.L2.ceil() == left_primes &&
                      dec.R1.ceil() == right_nonprimes && dec.R2.ceil() == right_primes;
    return r;
}

} // namespace sce
