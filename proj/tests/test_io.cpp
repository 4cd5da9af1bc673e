#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "opring/errors.hpp"
#include "opring/io.hpp"

#include <string>

using namespace opring;
using test::uv;

namespace {

std::string reference_text() {
  return test::read_file(std::string(OPRING_SOURCE_DIR) +
                         "/data/reference.session");
}

bool message_has(const std::exception& e, const std::string& needle) {
  return std::string(e.what()).find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("scalar tokens") {
  CHECK(parse_scalar_token("3/4") == FieldScalar(Rat(3, 4)));
  CHECK(parse_scalar_token("-2") == FieldScalar(-2));
  CHECK(parse_scalar_token("{1, -1, 2}") == FieldScalar::quadratic(1, -1, 2));
  CHECK(parse_scalar_token("{ 0 , 1/2 , 2 }") ==
        FieldScalar::quadratic(0, Rat(1, 2), 2));
  // a quadratic with b = 0 collapses to its rational part
  CHECK(parse_scalar_token("{5, 0, 2}") == FieldScalar(5));

  CHECK_THROWS_AS(parse_scalar_token(""), ParseError);
  CHECK_THROWS_AS(parse_scalar_token("abc"), ParseError);
  CHECK_THROWS_AS(parse_scalar_token("1/0"), ParseError);
  CHECK_THROWS_AS(parse_scalar_token("{1, 2}"), ParseError);
  CHECK_THROWS_AS(parse_scalar_token("{1, 1, 2"), ParseError);
  CHECK_THROWS_AS(parse_scalar_token("{1, 1, 1/2}"), ParseError);
  // non-squarefree radicand is rejected by the field layer
  CHECK_THROWS_AS(parse_scalar_token("{1, 1, 8}"), ParseError);

  for (const FieldScalar& s :
       {FieldScalar(Rat(-7, 3)), FieldScalar::quadratic(Rat(1, 2), -3, 2)})
    CHECK(parse_scalar_token(scalar_token(s)) == s);
}

TEST_CASE("session documents round-trip") {
  SessionConfig cfg = parse_session(reference_text());
  CHECK(cfg.p1 == std::array<FieldScalar, 2>{FieldScalar(1), FieldScalar(0)});
  CHECK(cfg.p2 == std::array<FieldScalar, 2>{FieldScalar(0), FieldScalar(1)});
  CHECK(cfg.factor == FieldScalar(1));
  CHECK(cfg.section == std::array<FieldScalar, 4>{FieldScalar(1), FieldScalar(1),
                                                  FieldScalar(0), FieldScalar(1)});
  CHECK(cfg.flow_preferences.size() == 2);
  REQUIRE(cfg.lambdas.size() == 4);
  CHECK(cfg.lambdas[0].name == "lam1");
  CHECK(cfg.lambdas[0].pole_order == 1);
  CHECK(cfg.lambdas[3].cells.size() == 2);

  CHECK(parse_session(write_session(cfg)) == cfg);

  // quadratic scalars and the extension key survive the round trip
  SessionConfig quad = cfg;
  quad.section[2] = FieldScalar::quadratic(0, 1, 2);
  quad.extension_d = Int(2);
  CHECK(parse_session(write_session(quad)) == quad);
}

TEST_CASE("session parse errors carry line numbers") {
  const std::string head = "p1 = 1 0\np2 = 0 1\n";

  auto fails_on_line = [&](const std::string& text, const std::string& line) {
    try {
      parse_session(text);
      FAIL_CHECK("expected ParseError for: " << text);
    } catch (const ParseError& e) {
      CHECK_MESSAGE(message_has(e, "line " + line), e.what());
    }
  };

  fails_on_line(head + "a 1\n", "3");
  fails_on_line(head + "a = 1\nsection = 1 1 0\n", "4");
  fails_on_line(head + "p1 = 1 0\n", "3");          // duplicate
  fails_on_line(head + "orbit = 1\n", "3");         // unknown key
  fails_on_line(head + "a = 1\nflow = 1 2 3\n", "4");
  fails_on_line(head + "a = 1\nsection = 1 1 0 1\nlambda = l 1 1:1\n", "5");
  fails_on_line(head + "a = 1\nsection = 1 1 0 1\nlambda = l x 0,0:1\n", "5");
  fails_on_line(head + "a = 1\nsection = 1 1 0 1\nextension = 1/2\n", "5");

  CHECK_THROWS_AS(parse_session("p1 = 1 0\n"), ParseError);  // missing keys

  // comments and blank lines do not shift the numbering
  try {
    parse_session("# intro\n\np1 = 1 0\nbad line\n");
    FAIL_CHECK("expected ParseError");
  } catch (const ParseError& e) {
    CHECK_MESSAGE(message_has(e, "line 4"), e.what());
  }
}

TEST_CASE("session semantic validation") {
  const std::string head = "p1 = 1 0\np2 = 0 1\na = 1\n";
  CHECK_THROWS_AS(parse_session("p1 = 1 0\np2 = 2 0\na = 1\nsection = 1 1 0 1\n"),
                  ValidationError);
  CHECK_THROWS_AS(parse_session("p1 = 0 0\np2 = 0 1\na = 1\nsection = 1 1 0 1\n"),
                  ValidationError);
  CHECK_THROWS_AS(parse_session(head + "section = 0 0 0 0\n"), ValidationError);
  CHECK_THROWS_AS(parse_session(head + "section = 1 1 0 1\nlambda = l 1 2,0:1\n"),
                  ValidationError);
}

TEST_CASE("operator json round-trips exactly") {
  MatrixDiffOp d;
  d.e[0][0].add_term(1, 0, CoeffElem(FieldScalar(Rat(1, 4))));
  d.e[0][1].add_term(2, 1, CoeffElem(ExpSum::monomial(1, 1),
                                     ExpSum::monomial(0, 0, FieldScalar(1)) -
                                         ExpSum::monomial(0, 1)));
  d.e[1][0].add_term(0, 0, uv(Rat(1, 2), -1, FieldScalar::quadratic(0, 1, 2)));
  d.e[1][1].add_term(0, 2, CoeffElem(FieldScalar(-3)));

  std::string text = operator_to_json(d);
  CHECK(operator_from_json(text) == d);

  // schema pinning and structural errors
  std::string bumped = text;
  bumped.replace(bumped.find("\"schema\": 1"), 11, "\"schema\": 2");
  CHECK_THROWS_AS(operator_from_json(bumped), ParseError);
  CHECK_THROWS_AS(operator_from_json("not json"), ParseError);
  CHECK_THROWS_AS(operator_from_json("{\"schema\": 1, \"entries\": []}"),
                  ParseError);
}

TEST_CASE("rendering formats") {
  CHECK(parse_format("json") == EmitFormat::Json);
  CHECK(parse_format("latex") == EmitFormat::Latex);
  CHECK(parse_format("text") == EmitFormat::Text);
  CHECK_THROWS_AS(parse_format("yaml"), ParseError);

  DiffOp q;
  q.add_term(1, 0, CoeffElem(FieldScalar(Rat(1, 4))));
  q.add_term(0, 1, CoeffElem(FieldScalar(Rat(1, 4))));
  CHECK(diffop_to_latex(q) == "\\frac{1}{4}\\partial_x+\\frac{1}{4}\\partial_y");

  CoeffElem frac(ExpSum(1), ExpSum::monomial(1, 0) - ExpSum::monomial(0, 1));
  CHECK(coeff_to_latex(frac) == "\\frac{1}{e^{x}-e^{y}}");

  DiffOp rad;
  rad.add_term(2, 0, CoeffElem(FieldScalar::quadratic(0, 1, 2)));
  CHECK(diffop_to_latex(rad) == "\\sqrt{2}\\partial_x^{2}");

  MatrixDiffOp m = MatrixDiffOp::diagonal(q);
  std::string text = emit_operator(m, EmitFormat::Text);
  CHECK(text.find("[1][1] = 1/4*Dx + 1/4*Dy") != std::string::npos);
  CHECK(text.find("[1][2] = 0") != std::string::npos);
  std::string latex = emit_operator(m, EmitFormat::Latex);
  CHECK(latex.find("\\begin{pmatrix}") != std::string::npos);
  CHECK(latex.find("\\frac{1}{4}\\partial_x") != std::string::npos);
}
