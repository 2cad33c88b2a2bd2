#pragma once

// Text and JSON forms of the library's values. Formatting is canonical, so
// format(parse(format(x))) == format(x) byte for byte. Parsing ignores
// whitespace between tokens and throws ParseError on malformed input;
// well-formed text describing an invalid value (say, a window with repeated
// residues) surfaces the library's Error instead.
//
//   affine k=2 w=[0,3]          fin chi=1 lo=-1 v=[1,-1,0,-2]
//   id@0   iota3@2   s1@3       (shorthands, emitted whenever they apply)
//   word k=2 [0,_,1]            split k=3 e=[-2,0,0]
//   chain k=2 [d=1:T 1, d=1:G]

#include <string>
#include <string_view>

#include <json.hpp>

#include "tperm/bntheory.hpp"
#include "tperm/curves.hpp"
#include "tperm/perm.hpp"
#include "tperm/words.hpp"

namespace tperm {

std::string format_perm(const Perm& p);
Perm parse_perm(std::string_view text);

nlohmann::json perm_to_json(const Perm& p);
Perm perm_from_json(const nlohmann::json& j);
/// Text or JSON, chosen by the first non-blank character.
Perm parse_perm_any(std::string_view text);

/// A word containing `_` parses as a Hecke word, any other as reduced.
std::string format_word(const Word& w);
Word parse_word(std::string_view text);

std::string format_splitting(const SplittingType& e);
SplittingType parse_splitting(std::string_view text);

std::string format_chain(const ChainSpec& c);
ChainSpec parse_chain(std::string_view text);

}  // namespace tperm
