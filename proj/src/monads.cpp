#include "chowcalc/monads.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "chowcalc/error.hpp"
#include "chowcalc/resolutions.hpp"

namespace chowcalc {

MonadShape::MonadShape(std::int64_t left, std::int64_t middle, std::int64_t right) : v_(left), w_(middle), u_(right)
{
    if (v_ < 0 || w_ < 0 || u_ < 0)
        throw Error(ErrorCode::not_realizable, "negative monad exponent in (" + std::to_string(v_) + ", " + std::to_string(w_) + ", " + std::to_string(u_) + ")");
}

ChernCharacter MonadShape::cohomology_character() const
{
    return sub(sub(middle().chern_character(2), left().chern_character(2)), right().chern_character(2));
}

std::string MonadShape::to_string() const
{
    return left().to_string() + " -> " + middle().to_string() + " -> " + right().to_string();
}

bool is_normalized(std::int64_t r, std::int64_t d)
{
    if (r <= 0)
        throw Error(ErrorCode::invalid_argument, "rank must be positive, got " + std::to_string(r));
    return -r + 1 <= d && d <= 0;
}

Rational charge(std::int64_t r, std::int64_t d, const Rational &ch2)
{
    return -euler_characteristic(twist(ChernCharacter(2, {Rational(r), Rational(d), ch2}), -1));
}

MonadShape monad_shape(std::int64_t r, std::int64_t d, const Rational &ch2)
{
    if (!is_normalized(r, d))
        throw Error(ErrorCode::precondition,
                    "(r, d) = (" + std::to_string(r) + ", " + std::to_string(d) + ") is not normalized");
    const Rational c = charge(r, d, ch2);
    const auto ci = c.to_int64();
    if (!ci)
        throw Error(ErrorCode::not_realizable, "charge " + c.to_string() + " is not an integer");
    if (*ci < 0)
        throw Error(ErrorCode::not_realizable, "charge " + c.to_string() + " is negative");
    if (d + *ci < 0)
        throw Error(ErrorCode::not_realizable, "d + c = " + std::to_string(d + *ci) + " is negative");

    MonadShape shape(d + *ci, r + d + 2 * *ci, *ci);
    if (shape.cohomology_character() != ChernCharacter(2, {Rational(r), Rational(d), ch2}))
        throw Error(ErrorCode::not_realizable, "monad " + shape.to_string() + " does not reproduce the character");
    return shape;
}

MonadShape dual_complex_shape(const MonadShape &m) { return {m.u(), m.w(), m.v()}; }

KernelPresentation kernel_presentation(std::int64_t r, std::int64_t c)
{
    if (r < 1)
        throw Error(ErrorCode::invalid_argument, "rank must be positive, got " + std::to_string(r));
    if (c < 0)
        throw Error(ErrorCode::invalid_argument, "charge must be nonnegative, got " + std::to_string(c));
    KernelPresentation out{
        ShapeDescriptor::power(0, r + c),
        ShapeDescriptor::power(1, c),
        ShapeDescriptor::power(-1, c),
        ShapeDescriptor::power(0, r + c),
        0,
    };
    out.hom_dim = hom_dim(out.resolution_left, out.resolution_right, 2);
    return out;
}

PartitionType::PartitionType(std::vector<Partition> parts) : parts_(std::move(parts))
{
    for (auto &p : parts_) {
        if (p.empty())
            throw Error(ErrorCode::invalid_argument, "empty partition in a partition type");
        if (std::any_of(p.begin(), p.end(), [](std::int64_t x) { return x < 1; }))
            throw Error(ErrorCode::invalid_argument, "partition parts must be positive");
        std::sort(p.begin(), p.end(), std::greater<>{});
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>{});
}

std::int64_t PartitionType::total() const
{
    std::int64_t t = 0;
    for (const auto &p : parts_)
        t += std::accumulate(p.begin(), p.end(), std::int64_t{0});
    return t;
}

std::string PartitionType::to_string() const
{
    std::string out = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        out += i ? ",(" : "(";
        for (std::size_t j = 0; j < parts_[i].size(); ++j)
            out += (j ? "," : "") + std::to_string(parts_[i][j]);
        out += ")";
    }
    return out + "]";
}

std::optional<PartitionType> PartitionType::parse(const std::string &text)
{
    std::size_t pos = 0;
    auto peek = [&] { return pos < text.size() ? text[pos] : '\0'; };
    auto expect = [&](char c) {
        if (peek() != c)
            return false;
        ++pos;
        return true;
    };
    auto number = [&]() -> std::optional<std::int64_t> {
        std::size_t start = pos;
        while (peek() >= '0' && peek() <= '9')
            ++pos;
        if (start == pos || pos - start > 15)
            return std::nullopt;
        return std::stoll(text.substr(start, pos - start));
    };

    if (!expect('['))
        return std::nullopt;
    std::vector<Partition> parts;
    if (!expect(']')) {
        do {
            if (!expect('('))
                return std::nullopt;
            Partition p;
            do {
                auto n = number();
                if (!n || *n < 1)
                    return std::nullopt;
                p.push_back(*n);
            } while (expect(','));
            if (!expect(')'))
                return std::nullopt;
            parts.push_back(std::move(p));
        } while (expect(','));
        if (!expect(']'))
            return std::nullopt;
    }
    if (pos != text.size())
        return std::nullopt;
    return PartitionType(std::move(parts));
}

namespace {

// Partitions of n with every part <= cap, largest parts first.
void partitions_of(std::int64_t n, std::int64_t cap, Partition &prefix, std::vector<Partition> &out)
{
    if (n == 0) {
        out.push_back(prefix);
        return;
    }
    for (std::int64_t part = std::min(n, cap); part >= 1; --part) {
        prefix.push_back(part);
        partitions_of(n - part, part, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<PartitionType> partition_types(std::int64_t l)
{
    if (l < 0)
        throw Error(ErrorCode::invalid_argument, "length must be nonnegative, got " + std::to_string(l));

    // Every partition that can sit at a single point, i.e. of size 1..l.
    std::vector<Partition> pieces;
    for (std::int64_t n = 1; n <= l; ++n) {
        Partition prefix;
        partitions_of(n, n, prefix, pieces);
    }
    std::sort(pieces.begin(), pieces.end(), std::greater<>{});

    std::vector<PartitionType> out;
    std::vector<Partition> chosen;
    // Multisets are built with non-decreasing piece indices.
    std::function<void(std::size_t, std::int64_t)> extend = [&](std::size_t first, std::int64_t remaining) {
        if (remaining == 0) {
            out.emplace_back(chosen);
            return;
        }
        for (std::size_t i = first; i < pieces.size(); ++i) {
            const auto size = std::accumulate(pieces[i].begin(), pieces[i].end(), std::int64_t{0});
            if (size > remaining)
                continue;
            chosen.push_back(pieces[i]);
            extend(i, remaining - size);
            chosen.pop_back();
        }
    };
    extend(0, l);
    std::sort(out.begin(), out.end(), std::greater<>{});
    return out;
}

StratumDims stratum_dims(std::int64_t r, std::int64_t c, const PartitionType &lambda)
{
    StratumDims dims;
    dims.length = lambda.total();
    const Integer middle_rank = Integer(r) + c;
    dims.hom_dim = Integer(dims.length) * middle_rank;
    if (dims.length >= 1)
        dims.projective_dim = dims.hom_dim - 1;
    dims.aut_left = Integer(c) * c;
    dims.aut_middle = middle_rank * middle_rank;

    Integer aut = 0;
    bool reduced = true;
    for (const auto &p : lambda.parts()) {
        if (p.front() != 1) {
            reduced = false;
            break;
        }
        aut += Integer(p.size()) * p.size();
    }
    if (reduced)
        dims.aut_lambda = aut;
    return dims;
}

} // namespace chowcalc
