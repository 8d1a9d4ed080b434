#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "braidlink/braid.hpp"
#include "braidlink/halftwist.hpp"
#include "braidlink/links.hpp"
#include "braidlink/monodromy.hpp"

namespace braidlink {

struct parse_error : std::runtime_error {
    size_t position;
    parse_error(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

// Whitespace-separated tokens `s<k>` and `s<k>^-1`, optionally preceded by a
// `n=<strands>` header.  When both the header and the argument give a strand
// count they must agree; passing strands = 0 uses the header alone.
BraidWord parse_braid_word(const std::string& text, int strands);

// Expression grammar (product by juxtaposition, left to right):
//   atom     := Z[...] | Zb[...] | s<k> | s<k>^-1 | ( expr )
//   Z[...]   := endpoints separated by commas; an endpoint is an index, a
//               doubled pair written `i i'`, or a range `a..b` standing for
//               the consecutive indices a, a+1, ..., b
//   powers   := atom ^ <int>            (applies to the twist)
//   conjugate:= atom ^ { expr expr … }  (b^-1 a b, braces give the conjugator)
// Primes mark regenerated labels: if any prime or pair appears, every index
// in the expression is a component label (i -> strand 2i-1, i' -> 2i);
// otherwise indices are strand labels.
HalfTwistExpr parse_expr(const std::string& text);

// parse_expr + compile.
BraidWord eval_text(const std::string& text, int strands);

std::string word_str(const BraidWord& w);              // "s1 s2^-1 ..." ("e" if empty)
std::string permutation_str(const Permutation& p);     // cycle notation, 1-based
std::string normal_form_str(const NormalForm& nf);     // "D^k [f1] [f2] ..."

Configuration configuration_from_json(const nlohmann::json& j);
DegenerationDiagram diagram_from_json(const nlohmann::json& j);
nlohmann::ordered_json summary_to_json(const LinkSummary& s);
nlohmann::ordered_json jones_to_json(const LaurentPoly& p);  // keys "num/2"

}  // namespace braidlink
