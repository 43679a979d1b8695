#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gpring {

// Y letters commute with each other; X letters commute with nothing.
enum class LetterKind : std::uint8_t { Y = 0, X = 1 };

// A generator of the coproduct monoid [Y]*<X>. The letter well-order is
// (kind, rank): every Y letter precedes every X letter.
struct Letter {
    LetterKind kind = LetterKind::Y;
    std::uint32_t rank = 0;

    friend auto operator<=>(const Letter &, const Letter &) = default;
};

inline Letter y_letter(std::uint32_t rank) { return {LetterKind::Y, rank}; }
inline Letter x_letter(std::uint32_t rank) { return {LetterKind::X, rank}; }

// Element of [Y]*<X> in normal form: each maximal run of Y letters is sorted.
// The empty word is the identity. Ordered degree-first, then by the X letters,
// then by the placement of each Y letter in rank order (see operator<=>).
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<Letter> word);
    Monomial(std::initializer_list<Letter> word) : Monomial(std::vector<Letter>(word)) {}

    const std::vector<Letter> &word() const noexcept { return m_word; }
    std::size_t degree() const noexcept { return m_word.size(); }
    bool is_identity() const noexcept { return m_word.empty(); }

    friend bool operator==(const Monomial &, const Monomial &) = default;
    friend std::strong_ordering operator<=>(const Monomial &a, const Monomial &b);

private:
    std::vector<Letter> m_word;
};

// Which operand a quotient or divisor stands on.
enum class Side { Left, Right };

Monomial operator*(const Monomial &a, const Monomial &b);
Monomial pow(const Monomial &m, unsigned n);
std::strong_ordering compare(const Monomial &a, const Monomial &b);

// Every ordered pair (u, v) with u * v == m.
std::vector<std::pair<Monomial, Monomial>> divisors(const Monomial &m);
// v with u * v == m, if any.
std::optional<Monomial> left_quotient(const Monomial &m, const Monomial &u);
// u with u * v == m, if any.
std::optional<Monomial> right_quotient(const Monomial &m, const Monomial &v);
// The unique u with u^n == m, if any.
std::optional<Monomial> nth_root(const Monomial &m, unsigned n);

// "1", or letters y<rank> / x<rank> with ^k for runs of an equal letter.
std::string to_string(const Monomial &m);
Monomial parse_monomial(std::string_view text);

} // namespace gpring
