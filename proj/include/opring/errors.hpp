#pragma once

#include <stdexcept>
#include <string>

namespace opring {

// Base for every failure this library raises on purpose.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Arithmetic layer.
struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& what = "division by zero")
      : Error(what) {}
};
struct UnsupportedExtension : Error {
  explicit UnsupportedExtension(const std::string& what)
      : Error(what) {}
};

// Geometry of the glued surface.
struct InvalidProjectivePoint : Error {
  explicit InvalidProjectivePoint(const std::string& what) : Error(what) {}
};
struct ZeroForm : Error {
  explicit ZeroForm(const std::string& what = "form is identically zero")
      : Error(what) {}
};
struct DegenerateGluing : Error {
  explicit DegenerateGluing(const std::string& what) : Error(what) {}
};
struct DegeneratePencil : Error {
  explicit DegeneratePencil(const std::string& what) : Error(what) {}
};
struct NonGenericData : Error {
  explicit NonGenericData(const std::string& what) : Error(what) {}
};
struct WitnessUndefined : Error {
  explicit WitnessUndefined(const std::string& what) : Error(what) {}
};

// Module of shared eigenfunctions.
struct MembershipViolation : Error {
  explicit MembershipViolation(const std::string& what) : Error(what) {}
};
struct DegenerateModule : Error {
  explicit DegenerateModule(const std::string& what) : Error(what) {}
};
struct InvalidLift : Error {
  explicit InvalidLift(const std::string& what) : Error(what) {}
};

// Operator construction.
struct NotAFunctionOnGamma : Error {
  explicit NotAFunctionOnGamma(const std::string& what) : Error(what) {}
};
struct SpectralParameterOnly : Error {
  explicit SpectralParameterOnly(const std::string& what) : Error(what) {}
};
struct BasisNotGenerating : Error {
  explicit BasisNotGenerating(const std::string& what) : Error(what) {}
};
struct BasisNotFree : Error {
  explicit BasisNotFree(const std::string& what) : Error(what) {}
};

// Input handling.
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};
struct ValidationError : Error {
  explicit ValidationError(const std::string& what) : Error(what) {}
};

}  // namespace opring
