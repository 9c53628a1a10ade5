#include "chowcalc/splitting.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "chowcalc/error.hpp"

namespace chowcalc {

SplittingType::SplittingType(std::vector<std::int64_t> entries) : entries_(std::move(entries))
{
    if (entries_.empty())
        throw Error(ErrorCode::invalid_argument, "a splitting type needs at least one entry");
    if (!std::is_sorted(entries_.begin(), entries_.end(), std::greater<>{}))
        throw Error(ErrorCode::invalid_argument, "splitting type " + to_string() + " is not non-increasing");
}

SplittingType SplittingType::canonical(std::vector<std::int64_t> entries)
{
    std::sort(entries.begin(), entries.end(), std::greater<>{});
    return SplittingType(std::move(entries));
}

std::int64_t SplittingType::c1() const { return std::accumulate(entries_.begin(), entries_.end(), std::int64_t{0}); }

Integer SplittingType::sum_of_squares() const
{
    Integer total = 0;
    for (auto b : entries_)
        total += Integer(b) * b;
    return total;
}

SplittingType SplittingType::shifted(std::int64_t k) const
{
    auto out = entries_;
    for (auto &b : out)
        b += k;
    return SplittingType(std::move(out));
}

SplittingType SplittingType::dual() const
{
    std::vector<std::int64_t> out(entries_.rbegin(), entries_.rend());
    for (auto &b : out)
        b = -b;
    return SplittingType(std::move(out));
}

std::string SplittingType::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < entries_.size(); ++i)
        os << (i ? "," : "") << entries_[i];
    os << ')';
    return os.str();
}

bool validate(std::span<const std::int64_t> b, std::int64_t r, std::int64_t c1)
{
    if (r < 0 || b.size() != static_cast<std::size_t>(r))
        return false;
    if (!std::is_sorted(b.begin(), b.end(), std::greater<>{}))
        return false;
    return std::accumulate(b.begin(), b.end(), std::int64_t{0}) == c1;
}

bool gap_ok(const SplittingType &b)
{
    auto e = b.entries();
    for (std::size_t i = 0; i + 1 < e.size(); ++i)
        if (e[i] - e[i + 1] > 2)
            return false;
    return true;
}

Rational splitting_radius(std::int64_t r, std::int64_t c1)
{
    if (r <= 0)
        throw Error(ErrorCode::invalid_argument, "rank must be positive");
    return abs(Rational::from_integers(c1, r)) + Rational(r);
}

bool magnitude_ok(const SplittingType &b, std::int64_t r, std::int64_t c1)
{
    if (!validate(b, r, c1))
        throw Error(ErrorCode::precondition,
                    "splitting type " + b.to_string() + " does not have rank " + std::to_string(r) + " and c1 "
                        + std::to_string(c1));
    const Rational radius = splitting_radius(r, c1);
    return std::all_of(b.entries().begin(), b.entries().end(),
                       [&](std::int64_t x) { return abs(Rational(x)) <= radius; });
}

std::vector<SplittingType> enumerate_splitting_types(std::int64_t r, std::int64_t c1, bool reflexive_gap)
{
    if (r <= 0)
        throw Error(ErrorCode::invalid_argument, "rank must be positive, got " + std::to_string(r));
    const auto bound = splitting_radius(r, c1).floor().convert_to<std::int64_t>();

    std::vector<SplittingType> out;
    std::vector<std::int64_t> prefix;
    prefix.reserve(r);

    // Entries are chosen from the top down, so the output comes out in
    // lexicographically descending order without a final sort.
    std::function<void(std::int64_t, std::int64_t)> extend = [&](std::int64_t ceiling, std::int64_t remaining) {
        const auto slots = r - static_cast<std::int64_t>(prefix.size());
        if (slots == 0) {
            if (remaining == 0)
                out.emplace_back(prefix);
            return;
        }
        std::int64_t floor_value = -bound;
        if (reflexive_gap && !prefix.empty())
            floor_value = std::max(floor_value, prefix.back() - 2);
        for (std::int64_t b = ceiling; b >= floor_value; --b) {
            const auto rest = remaining - b;
            const auto rest_slots = slots - 1;
            // The remaining entries lie in [-bound, b].
            if (rest < -rest_slots * bound)
                continue;
            if (rest > rest_slots * b)
                break;
            prefix.push_back(b);
            extend(b, rest);
            prefix.pop_back();
        }
    };
    extend(bound, c1);
    return out;
}

} // namespace chowcalc
