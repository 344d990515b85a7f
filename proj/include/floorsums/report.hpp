#pragma once

#include "floorsums/congruences.hpp"

#include <string>
#include <vector>

namespace floorsums {

/// CSV with header theorem,p,r,modulus,lhs_residue,rhs_residue,pass,note.
/// r is empty when inapplicable; modulus 0 marks exact identities; residues
/// are empty when the congruence was undefined. Rows are newline-terminated.
std::string to_csv(const SweepReport& report);

/// Inverse of to_csv (verdict rows only; metadata is not in the CSV).
std::vector<Verdict> parse_csv(const std::string& csv);

/// JSON object with a metadata header and a "verdicts" array whose fields
/// mirror the CSV columns. Integer-valued fields are decimal strings.
std::string to_json(const SweepReport& report);

/// One human-readable line per verdict, e.g.
/// "theorem1 p=5 r=2 m=5 lhs=4 rhs=4 PASS".
std::string verdict_line(const Verdict& v);

}  // namespace floorsums
