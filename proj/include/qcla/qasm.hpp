#pragma once

#include <string>
#include <string_view>

#include "qcla/circuit.hpp"

namespace qcla {

// OpenQASM 2.0 subset. One line per block; a trailing "// @ key=value"
// comment carries round, section and decomposition metadata. Toffoli blocks
// become the comment pseudo-op "// tof <VARIANT> q,q,q round=... ...", so a
// primitive circuit stays loadable by a standard reader.
std::string to_qasm(const Circuit& c);

// Inverse of to_qasm. Lines without metadata are read as plain QASM:
// measure -> MeasureZ, measure followed by reset -> MeasureXUncompute.
// Throws std::invalid_argument with the line number on malformed input.
Circuit parse_qasm(std::string_view text);

}  // namespace qcla
