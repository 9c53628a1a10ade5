#pragma once

// Random catalog entries for round-trip checks.

#include <random>
#include <string>

#include "chowcalc/catalog.hpp"
#include "oracles.hpp"

namespace gen {

inline std::string random_label(std::mt19937_64 &rng)
{
    static const std::string alphabet = "abcxyzO()[]+-^,/0123456789 \"\\\t_";
    std::string s;
    const auto len = oracle::random_int(rng, 0, 12);
    for (std::int64_t i = 0; i < len; ++i)
        s += alphabet[oracle::random_int(rng, 0, static_cast<std::int64_t>(alphabet.size()) - 1)];
    if (chowcalc::Rational::parse(s))
        s = "x" + s;
    return s;
}

inline chowcalc::Field random_field(std::mt19937_64 &rng)
{
    switch (oracle::random_int(rng, 0, 4)) {
    case 0:
        return oracle::random_int(rng, -1000000, 1000000);
    case 1:
        return oracle::random_int(rng, 0, 1) ? std::numeric_limits<std::int64_t>::max()
                                             : std::numeric_limits<std::int64_t>::min();
    case 2: {
        auto r = oracle::random_rational(rng, 1000, 97);
        if (oracle::random_int(rng, 0, 3) == 0)
            r = r * chowcalc::pow(chowcalc::Rational(10), 30);
        return r;
    }
    case 3:
        return oracle::random_int(rng, 0, 1) == 1;
    default:
        return random_label(rng);
    }
}

inline chowcalc::CatalogEntry random_entry(std::mt19937_64 &rng)
{
    static const char *keys[] = {"c1", "c2", "c3", "ch2", "ch3", "rank", "s", "l", "partition_type", "q", "v", "w"};
    chowcalc::CatalogEntry e;
    e.kind = static_cast<chowcalc::EntryKind>(oracle::random_int(rng, 0, 3));
    for (auto *map : {&e.inputs, &e.outputs}) {
        const auto n = oracle::random_int(rng, 0, 6);
        for (std::int64_t i = 0; i < n; ++i)
            (*map)[keys[oracle::random_int(rng, 0, 11)]] = random_field(rng);
    }
    return e;
}

} // namespace gen
