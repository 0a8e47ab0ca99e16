#pragma once

#include <iosfwd>
#include <json.hpp>

#include "ncplane/hilbert.hpp"

namespace ncplane {

/// "wfn-json/1": {"format", "n", "l", "theta", "hbar", "re", "im"} with the
/// amplitudes flattened row-major, index i * n + j for psi(q1_i, q2_j).
nlohmann::json wavefunction_to_json(const Wavefunction& psi);

/// Throws FormatError on a wrong tag, missing field or array length != n^2;
/// grid invariants are checked as in GridSpec::validate (InvalidGrid).
Wavefunction wavefunction_from_json(const nlohmann::json& doc);

void write_wfn_json(std::ostream& out, const Wavefunction& psi);
Wavefunction read_wfn_json(std::istream& in);

}  // namespace ncplane
