#pragma once

#include "opring/surface.hpp"

#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace opring {

// Monomial-coefficient description of a meromorphic function g/f^m, as read
// from a session document.
struct LambdaSpec {
  std::string name;
  int pole_order = 0;
  std::vector<std::tuple<int, int, FieldScalar>> cells;  // (k, l, coefficient)
};

// Raw, serializable session description.  Coefficient order for (1,1) forms
// follows the display convention (z1z2, z1w2, w1z2, w1w2).
struct SessionConfig {
  std::array<FieldScalar, 2> p1{FieldScalar(1), FieldScalar(0)};
  std::array<FieldScalar, 2> p2{FieldScalar(0), FieldScalar(1)};
  FieldScalar factor{1};
  std::array<FieldScalar, 4> section{};
  std::vector<std::array<FieldScalar, 4>> flow_preferences;
  std::optional<Int> extension_d;
  std::vector<LambdaSpec> lambdas;

  bool operator==(const SessionConfig& o) const;
};

// Fully validated working data: gluing, section, chosen flow pair, and the
// exponent lattice denominator q0 = lcm(den(c1), den(c2)).
struct Session {
  GluingData gluing;
  SectionForm f;
  FlowForm f1;
  FlowForm f2;
  Int q0;
  std::vector<LambdaSpec> lambdas;

  Rat c1() const { return f1.c.as_rational(); }
  Rat c2() const { return f2.c.as_rational(); }
};

BiForm display_form(const std::array<FieldScalar, 4>& coeffs);

// Runs the geometric pipeline: gluing validation, section identity, flow
// space, flow-pair choice, exponent-lattice setup.
Session build_session(const SessionConfig& cfg);

}  // namespace opring
