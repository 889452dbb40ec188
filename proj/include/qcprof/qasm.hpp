#pragma once

#include <stdexcept>
#include <string>

#include "qcprof/circuit.hpp"

namespace qcprof {

/// Syntax or semantic error while parsing QASM input.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", col " +
                           std::to_string(col) + ": " + msg),
        line(line),
        col(col) {}

  int line;
  int col;
};

struct ParseOptions {
  /// Decompose gates of arity >= 3 using the fixed rule table (ccx -> 15
  /// gates). When false, any such gate is a parse error.
  bool decompose_multi_qubit = true;
};

/// What the parser dropped or rewrote. Measurements, barriers and resets
/// contribute no interaction or dependency edges and are stripped from the
/// gate list; only their counts are kept.
struct ParseMetadata {
  int measurements_stripped = 0;
  int barriers_stripped = 0;
  int resets_stripped = 0;
  std::vector<std::string> decompositions;
};

struct ParseResult {
  Circuit circuit;
  ParseMetadata metadata;
};

/// Parse an OpenQASM-2.0-style subset: qreg/creg declarations, named gate
/// applications with optional angle parameters, measure, barrier. Classical
/// registers and include lines are ignored. Throws ParseError.
ParseResult parse_qasm(const std::string& text, const ParseOptions& opts = {});

/// Re-serialize a circuit to the supported dialect. Registers are merged
/// into a single qreg, so parse(serialize(parse(x))) is gate-list-identical
/// to parse(x).
std::string serialize_qasm(const Circuit& c);

}  // namespace qcprof
