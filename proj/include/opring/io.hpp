#pragma once

#include "opring/diffop.hpp"
#include "opring/session.hpp"

#include <string>

namespace opring {

// Line-oriented session document -> config.  Structural problems raise
// ParseError with a line number; semantic ones raise ValidationError.
SessionConfig parse_session(const std::string& text);

// Canonical document; parse_session(write_session(c)) == c.
std::string write_session(const SessionConfig& cfg);

// Scalar token syntax shared by documents: "p/q" or "{a, b, d}".
FieldScalar parse_scalar_token(const std::string& token);
std::string scalar_token(const FieldScalar& s);

enum class EmitFormat { Json, Latex, Text };
EmitFormat parse_format(const std::string& name);

std::string emit_operator(const MatrixDiffOp& d, EmitFormat format);

// JSON codec used by emit_operator(Json); round-trips exactly.
std::string operator_to_json(const MatrixDiffOp& d);
MatrixDiffOp operator_from_json(const std::string& text);

// Human-readable renderings of the smaller pieces, shared by the CLI.
std::string coeff_to_latex(const CoeffElem& c);
std::string diffop_to_latex(const DiffOp& d);

}  // namespace opring
