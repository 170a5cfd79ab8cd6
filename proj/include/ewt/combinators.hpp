#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "ewt/term.hpp"

namespace ewt {

// Fixed combinators. Every construction in the library uses these.
const Term& comb_I();      // S K K
const Term& comb_true();   // K
const Term& comb_false();  // [x][y] y
const Term& comb_pair();   // [a][b][f] f a b
const Term& comb_p1();     // [p] p K
const Term& comb_p2();     // [p] p FALSE
const Term& comb_case();   // [b][x][y] b x y

/// Looks up PAIR, P1, P2, TRUE, FALSE, CASE or I (case-insensitive).
std::optional<Term> combinator(std::string_view name);

/// The weak normal form of PAIR a b: S (S I (K a)) (K b).
Term pair_of(Term a, Term b);
std::optional<std::pair<Term, Term>> match_pair(const Term& t);

Term numeral(std::uint64_t n);
std::optional<std::uint64_t> decode_numeral(const Term& t);

TermSet set_otimes(const TermSet& x, const TermSet& y);
TermSet set_oplus(const TermSet& x, const TermSet& y);

}  // namespace ewt
