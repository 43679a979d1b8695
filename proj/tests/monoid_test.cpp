#include "oracles.hpp"

#include <checks.hpp>
#include <doctest.h>
#include <gpring/error.hpp>
#include <gpring/monomial.hpp>

#include <algorithm>
#include <set>

using namespace gpring;

namespace {

const Letter Y1 = y_letter(1);
const Letter Y2 = y_letter(2);
const Letter X1 = x_letter(1);
const Letter X2 = x_letter(2);

template <typename... Letters>
Monomial w(Letters... letters)
{
    return Monomial(std::vector<Letter>{letters...});
}

using Pairs = std::set<std::pair<Monomial, Monomial>>;

Pairs divisor_set(const Monomial &m)
{
    const auto d = divisors(m);
    return Pairs(d.begin(), d.end());
}

} // namespace

TEST_CASE("normal form and multiplication")
{
    CHECK(w(Y2) * w(Y1) == w(Y1, Y2));
    CHECK((w(X1) * w(Y1)).word() == std::vector<Letter>({X1, Y1}));
    CHECK(w(X1, Y2) * w(Y1, X1) == w(X1, Y1, Y2, X1));
    CHECK(w(Y2, Y1, X1, Y2, Y1).word() == std::vector<Letter>({Y1, Y2, X1, Y1, Y2}));
    CHECK(Monomial() * w(X2) == w(X2));
    CHECK(pow(w(X1, Y1), 2) == w(X1, Y1, X1, Y1));
    CHECK(pow(w(X1), 0).is_identity());
}

TEST_CASE("order examples")
{
    CHECK(Monomial() < w(Y1));
    CHECK(w(X1, X2) < w(X2, X1));
    CHECK(w(Y1, X1) < w(X1, Y1));
    CHECK(w(X2) < w(Y1, Y1));
    CHECK(w(Y1) < w(X1));
}

TEST_CASE("order stays monotone where plain shortlex does not")
{
    // Shortlex puts y1x1 below y2y2, yet squaring the left side must keep it below.
    const Monomial a{Y1, X1};
    const Monomial b{Y2, Y2};
    REQUIRE(a != b);
    const bool less = a < b;
    CHECK((a * a < b * a) == less);
    CHECK((a * a < a * b) == less);
    CHECK((a * b < b * b) == less);
    CHECK((b * a < b * b) == less);
    CHECK(pow(a, 2) != pow(b, 2));
}

TEST_CASE("order laws on random triples")
{
    checks::Rng rng(31);
    const Monomial one;
    for (int i = 0; i < 20000; ++i) {
        const Monomial a = checks::random_monomial(rng, 5, 3);
        const Monomial b = checks::random_monomial(rng, 5, 3);
        const Monomial c = checks::random_monomial(rng, 5, 3);
        CAPTURE(to_string(a));
        CAPTURE(to_string(b));
        CAPTURE(to_string(c));
        REQUIRE(((a < b) + (a == b) + (b < a)) == 1);
        if (a < b && b < c) {
            REQUIRE(a < c);
        }
        if (a < b && c != one) {
            REQUIRE(a * c < b * c);
            REQUIRE(c * a < c * b);
        }
        REQUIRE((a * b) * c == a * (b * c));
        if (a != one) {
            REQUIRE(one < a);
        }
    }
}

TEST_CASE("sampled sets have a unique least element")
{
    checks::Rng rng(32);
    for (int i = 0; i < 200; ++i) {
        std::vector<Monomial> sample;
        for (int k = 0; k < 12; ++k) {
            sample.push_back(checks::random_monomial(rng, 4, 2));
        }
        const Monomial least = *std::min_element(sample.begin(), sample.end());
        for (const Monomial &m : sample) {
            CHECK((m == least || least < m));
        }
    }
}

TEST_CASE("divisor examples")
{
    CHECK((divisor_set(w(X1)) == Pairs{{Monomial(), w(X1)}, {w(X1), Monomial()}}));
    CHECK((divisor_set(w(Y1, Y2)) == Pairs{{Monomial(), w(Y1, Y2)},
                                                 {w(Y1), w(Y2)},
                                                 {w(Y2), w(Y1)},
                                                 {w(Y1, Y2), Monomial()}}));
    CHECK((divisor_set(w(X1, X2)) ==
          Pairs{{Monomial(), w(X1, X2)}, {w(X1), w(X2)}, {w(X1, X2), Monomial()}}));
    CHECK(divisors(Monomial()).size() == 1);
}

TEST_CASE("divisors match brute force")
{
    checks::Rng rng(33);
    for (int i = 0; i < 300; ++i) {
        const Monomial m = checks::random_monomial(rng, 6, 3);
        CAPTURE(to_string(m));
        const auto d = divisors(m);
        CHECK(Pairs(d.begin(), d.end()).size() == d.size());
        CHECK(Pairs(d.begin(), d.end()) == oracle::monomial_divisors(m));
    }
}

TEST_CASE("quotients")
{
    const Monomial m{X1, Y1, Y2, X1};
    CHECK(left_quotient(m, w(X1, Y2)) == w(Y1, X1));
    CHECK(right_quotient(m, w(Y1, X1)) == w(X1, Y2));
    CHECK_FALSE(left_quotient(m, w(Y1)).has_value());
    CHECK_FALSE(right_quotient(m, w(X2)).has_value());
}

TEST_CASE("monomial roots")
{
    CHECK(nth_root(w(X1, Y1, X1, Y1), 2) == w(X1, Y1));
    CHECK(nth_root(w(Y1, Y1), 2) == w(Y1));
    CHECK_FALSE(nth_root(w(X1, X2), 2).has_value());
    CHECK_FALSE(nth_root(w(X1, X1, X1), 2).has_value());
    CHECK(nth_root(Monomial(), 3) == Monomial());
    checks::Rng rng(34);
    for (int i = 0; i < 300; ++i) {
        const Monomial u = checks::random_monomial(rng, 4, 3);
        const unsigned n = 1 + static_cast<unsigned>(rng() % 3);
        CHECK(nth_root(pow(u, n), n) == u);
    }
}

TEST_CASE("monomial text roundtrip")
{
    const Monomial m{Y1, Y1, Y2, X1, X1, Y2};
    CHECK(to_string(m) == "y1^2y2x1^2y2");
    CHECK(parse_monomial(to_string(m)) == m);
    CHECK(to_string(Monomial()) == "1");
    CHECK(parse_monomial("1").is_identity());
    checks::Rng rng(35);
    for (int i = 0; i < 300; ++i) {
        const Monomial r = checks::random_monomial(rng, 6, 12);
        CHECK(parse_monomial(to_string(r)) == r);
    }
    CHECK_THROWS_AS(parse_monomial("z1"), Error);
    CHECK_THROWS_AS(parse_monomial("y0"), Error);
}
