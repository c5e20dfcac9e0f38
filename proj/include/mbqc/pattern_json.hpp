#pragma once

#include <string>

#include "mbqc/pattern.hpp"

namespace mbqc {

/// A pattern file bundles the pattern with the logical input it runs on.
struct PatternFile {
    MeasurementPattern pattern;
    StateVector input;  // layout.rows qubits
};

/// Parses the pattern JSON format. Unknown fields are rejected; diagnostics
/// carry the offending field or the line of a syntax error.
PatternFile parse_pattern_json(const std::string& text);

/// Reads and parses a pattern file; missing/unreadable files and malformed
/// content throw ValidationError with a diagnostic.
PatternFile load_pattern_file(const std::string& path);

/// Serializes a pattern (with its input) back to the file format.
std::string pattern_file_json(const MeasurementPattern& pattern, const StateVector& input);

}  // namespace mbqc
