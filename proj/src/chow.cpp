#include "chowcalc/chow.hpp"

#include <string>
#include <utility>

#include "chowcalc/error.hpp"

namespace chowcalc {

void require_supported_dimension(int n)
{
    if (n != 2 && n != 3)
        throw Error(ErrorCode::unsupported_dimension,
                    "only P^2 and P^3 are supported, got n = " + std::to_string(n));
}

ChernCharacter::ChernCharacter(int ambient_dim, std::vector<Rational> components)
    : dim_(ambient_dim), comps_(std::move(components))
{
    require_supported_dimension(dim_);
    if (comps_.size() != static_cast<std::size_t>(dim_) + 1)
        throw Error(ErrorCode::invalid_argument,
                    "a Chern character on P^" + std::to_string(dim_) + " needs " + std::to_string(dim_ + 1)
                        + " components, got " + std::to_string(comps_.size()));
    if (!comps_[0].is_integer())
        throw Error(ErrorCode::invalid_argument, "ch_0 must be an integer, got " + comps_[0].to_string());
}

namespace {

void require_same_dimension(const ChernCharacter &a, const ChernCharacter &b)
{
    if (a.ambient_dim() != b.ambient_dim())
        throw Error(ErrorCode::dimension_mismatch,
                    "cannot combine classes on P^" + std::to_string(a.ambient_dim()) + " and P^"
                        + std::to_string(b.ambient_dim()));
}

} // namespace

ToddClass todd(int n)
{
    require_supported_dimension(n);
    if (n == 2)
        return {2, {Rational(1), Rational::from_integers(3, 2), Rational(1)}};
    return {3, {Rational(1), Rational(2), Rational::from_integers(11, 6), Rational(1)}};
}

ChernCharacter ch_line_bundle(int n, std::int64_t k)
{
    require_supported_dimension(n);
    std::vector<Rational> comps;
    comps.reserve(n + 1);
    Rational term(1);
    for (int i = 0; i <= n; ++i) {
        comps.push_back(term);
        term = term * Rational(k) / Rational(i + 1);
    }
    return {n, std::move(comps)};
}

ChernCharacter mul(const ChernCharacter &a, const ChernCharacter &b)
{
    require_same_dimension(a, b);
    const int n = a.ambient_dim();
    std::vector<Rational> out(n + 1);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j)
            out[i + j] += a[i] * b[j];
    return {n, std::move(out)};
}

ChernCharacter add(const ChernCharacter &a, const ChernCharacter &b)
{
    require_same_dimension(a, b);
    std::vector<Rational> out(a.components().begin(), a.components().end());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] += b[i];
    return {a.ambient_dim(), std::move(out)};
}

ChernCharacter sub(const ChernCharacter &a, const ChernCharacter &b) { return add(a, scale(b, Rational(-1))); }

ChernCharacter scale(const ChernCharacter &a, const Rational &factor)
{
    std::vector<Rational> out(a.components().begin(), a.components().end());
    for (auto &c : out)
        c *= factor;
    return {a.ambient_dim(), std::move(out)};
}

ChernCharacter twist(const ChernCharacter &x, std::int64_t k) { return mul(x, ch_line_bundle(x.ambient_dim(), k)); }

ChernCharacter dual(const ChernCharacter &x)
{
    std::vector<Rational> out(x.components().begin(), x.components().end());
    for (std::size_t i = 1; i < out.size(); i += 2)
        out[i] = -out[i];
    return {x.ambient_dim(), std::move(out)};
}

Rational euler_characteristic(const ChernCharacter &x)
{
    const int n = x.ambient_dim();
    return mul(x, todd(n).as_character())[n];
}

ChernCharacter restrict_to_hyperplane(const ChernCharacter &x)
{
    if (x.ambient_dim() != 3)
        throw Error(ErrorCode::dimension_mismatch, "hyperplane restriction is defined from P^3 to P^2 only");
    return {2, {x[0], x[1], x[2]}};
}

ChernCharacter pushforward_from_hyperplane(const ChernCharacter &x)
{
    if (x.ambient_dim() != 3)
        throw Error(ErrorCode::dimension_mismatch, "hyperplane pushforward is defined on P^3 only");
    const Rational half = Rational::from_integers(1, 2);
    const Rational sixth = Rational::from_integers(1, 6);
    return {3, {Rational(0), x[0], x[1] - half * x[0], x[2] - half * x[1] + sixth * x[0]}};
}

ChernCharacter chern_to_character(const ChernClasses &c, int n)
{
    require_supported_dimension(n);
    const Rational r(c.rank), c1(c.c1), c2(c.c2), c3(c.c3);
    std::vector<Rational> comps{r, c1, (c1 * c1 - Rational(2) * c2) / Rational(2)};
    if (n == 3)
        comps.push_back((c1 * c1 * c1 - Rational(3) * c1 * c2 + Rational(3) * c3) / Rational(6));
    return {n, std::move(comps)};
}

ChernClasses character_to_chern(const ChernCharacter &x)
{
    auto integral = [](const Rational &v, const char *name) {
        if (!v.is_integer())
            throw Error(ErrorCode::integrality, std::string(name) + " = " + v.to_string() + " is not an integer");
        return v.numerator();
    };
    const Rational &c1 = x[1];
    const Rational c2 = c1 * c1 / Rational(2) - x[2];
    ChernClasses out;
    out.rank = integral(x[0], "rank");
    out.c1 = integral(c1, "c1");
    out.c2 = integral(c2, "c2");
    out.c3 = 0;
    if (x.ambient_dim() == 3) {
        const Rational c3 = Rational(2) * x[3] - c1 * c1 * c1 / Rational(3) + c1 * c2;
        out.c3 = integral(c3, "c3");
    }
    return out;
}

} // namespace chowcalc
