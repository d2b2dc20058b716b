#pragma once

#include <iosfwd>
#include <string>

#include "crlab/space.hpp"

namespace crlab {

/// Canonical document for an affine matrix space:
///
///   {"field": {"p": ..., "k": ..., "modulus": [...]},
///    "rows": ..., "cols": ...,
///    "base": [[...], ...],
///    "basis": [[[...], ...], ...]}
///
/// with entries as element encodings in [0, q), the modulus little-endian of
/// length k+1 ([0,1] for prime fields).  Emission is canonical: fixed key
/// order, reduced translation basis, base point reduced modulo the
/// translation space.  parse(space_to_json(s)) followed by another emission
/// is byte-identical.
std::string space_to_json(const AffineSpace& s);
void write_space(std::ostream& out, const AffineSpace& s);

/// Parse errors name the offending path; a dependent basis is reduced with a
/// warning on `warnings` (when given).
AffineSpace parse_space(const std::string& text, std::ostream* warnings = nullptr);
AffineSpace read_space(std::istream& in, std::ostream* warnings = nullptr);

std::string witness_to_json(const Witness& w);
Witness parse_witness(const std::string& text);

} // namespace crlab
