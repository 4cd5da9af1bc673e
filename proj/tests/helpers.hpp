#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "opring/io.hpp"
#include "opring/solver.hpp"

namespace opring::test {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Session reference_session() {
  static const SessionConfig cfg = parse_session(
      read_file(std::string(OPRING_SOURCE_DIR) + "/data/reference.session"));
  return build_session(cfg);
}

// u^r v^s as a coefficient, i.e. e^(rx + sy)
inline CoeffElem uv(const Rat& r, const Rat& s,
                    const FieldScalar& c = FieldScalar(1)) {
  return CoeffElem::monomial(r, s, c);
}

// small random values on a fixed-seed generator for exact property tests
class Rng {
 public:
  explicit Rng(unsigned seed) : gen_(seed) {}

  Rat rat() {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    return Rat(num(gen_), den(gen_));
  }
  FieldScalar scalar(bool allow_radical = true) {
    std::uniform_int_distribution<int> kind(0, 2);
    if (allow_radical && kind(gen_) == 0)
      return FieldScalar::quadratic(rat(), rat(), 2);
    return FieldScalar(rat());
  }
  ExpSum expsum(int max_terms = 3, bool allow_radical = true) {
    std::uniform_int_distribution<int> nt(0, max_terms), e(-2, 2);
    ExpSum out;
    int n = nt(gen_);
    for (int i = 0; i < n; ++i)
      out.add_term({Rat(e(gen_)), Rat(e(gen_))}, scalar(allow_radical));
    return out;
  }
  ExpSum nonzero_expsum(int max_terms = 3, bool allow_radical = true) {
    while (true) {
      ExpSum e = expsum(max_terms, allow_radical);
      if (!e.is_zero()) return e;
    }
  }
  CoeffElem coeff(int max_terms = 3, bool allow_radical = true) {
    return CoeffElem(expsum(max_terms, allow_radical),
                     nonzero_expsum(2, allow_radical));
  }
  int uniform(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(gen_);
  }

 private:
  std::mt19937 gen_;
};

}  // namespace opring::test
