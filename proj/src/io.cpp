#include "opring/io.hpp"

#include "opring/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>

namespace opring {

using nlohmann::json;

FieldScalar parse_scalar_token(const std::string& token) {
  std::string t;
  for (char ch : token)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) throw ParseError("empty scalar");
  if (t.front() == '{') {
    if (t.back() != '}')
      throw ParseError("unterminated quadratic scalar '" + token + "'");
    std::string body = t.substr(1, t.size() - 2);
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
      std::size_t comma = body.find(',', start);
      parts.push_back(body.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (parts.size() != 3)
      throw ParseError("quadratic scalar needs {a, b, d}, got '" + token + "'");
    Rat a = parse_rat(parts[0]);
    Rat b = parse_rat(parts[1]);
    Rat d = parse_rat(parts[2]);
    if (rat_den(d) != 1)
      throw ParseError("radicand must be an integer in '" + token + "'");
    try {
      return FieldScalar::quadratic(a, b, rat_num(d));
    } catch (const UnsupportedExtension& e) {
      throw ParseError(e.what());
    }
  }
  return FieldScalar(parse_rat(t));
}

std::string scalar_token(const FieldScalar& s) {
  if (s.is_rational()) return rat_to_string(s.rational_part());
  return "{" + rat_to_string(s.rational_part()) + ", " +
         rat_to_string(s.radical_part()) + ", " + s.radicand().str() + "}";
}

namespace {

std::vector<std::string> tokenize_value(const std::string& value, int line) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < value.size()) {
    if (std::isspace(static_cast<unsigned char>(value[i]))) {
      ++i;
      continue;
    }
    if (value[i] == '{') {
      std::size_t close = value.find('}', i);
      if (close == std::string::npos)
        throw ParseError("line " + std::to_string(line) +
                         ": unterminated '{'");
      tokens.push_back(value.substr(i, close - i + 1));
      i = close + 1;
      continue;
    }
    std::size_t end = i;
    while (end < value.size() &&
           !std::isspace(static_cast<unsigned char>(value[end])))
      ++end;
    tokens.push_back(value.substr(i, end - i));
    i = end;
  }
  return tokens;
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg);
}

FieldScalar scalar_at(const std::vector<std::string>& tokens, std::size_t i,
                      int line) {
  try {
    return parse_scalar_token(tokens.at(i));
  } catch (const ParseError& e) {
    fail(line, e.what());
  }
}

}  // namespace

SessionConfig parse_session(const std::string& text) {
  SessionConfig cfg;
  bool saw_p1 = false, saw_p2 = false, saw_a = false, saw_section = false;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string l = raw;
    if (auto hash = l.find('#'); hash != std::string::npos) l.resize(hash);
    auto first = l.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto eq = l.find('=');
    if (eq == std::string::npos) fail(line, "expected 'key = value'");
    std::string key = l.substr(0, eq);
    key.erase(0, key.find_first_not_of(" \t"));
    key.erase(key.find_last_not_of(" \t") + 1);
    std::string value = l.substr(eq + 1);
    auto tokens = tokenize_value(value, line);

    auto want = [&](std::size_t n, const char* what) {
      if (tokens.size() != n)
        fail(line, std::string(what) + " needs " + std::to_string(n) +
                       " values, got " + std::to_string(tokens.size()));
    };
    auto once = [&](bool& seen, const char* what) {
      if (seen) fail(line, std::string("duplicate ") + what);
      seen = true;
    };

    if (key == "p1" || key == "p2") {
      once(key == "p1" ? saw_p1 : saw_p2, key.c_str());
      want(2, key.c_str());
      auto& dst = key == "p1" ? cfg.p1 : cfg.p2;
      dst = {scalar_at(tokens, 0, line), scalar_at(tokens, 1, line)};
    } else if (key == "a") {
      once(saw_a, "a");
      want(1, "a");
      cfg.factor = scalar_at(tokens, 0, line);
    } else if (key == "section") {
      once(saw_section, "section");
      want(4, "section");
      for (std::size_t i = 0; i < 4; ++i)
        cfg.section[i] = scalar_at(tokens, i, line);
    } else if (key == "flow") {
      want(4, "flow");
      std::array<FieldScalar, 4> pref;
      for (std::size_t i = 0; i < 4; ++i) pref[i] = scalar_at(tokens, i, line);
      cfg.flow_preferences.push_back(pref);
    } else if (key == "extension") {
      want(1, "extension");
      Rat d = parse_rat(tokens[0]);
      if (rat_den(d) != 1) fail(line, "extension must be an integer");
      cfg.extension_d = rat_num(d);
    } else if (key == "lambda") {
      if (tokens.size() < 3)
        fail(line, "lambda needs a name, a pole order and at least one cell");
      LambdaSpec spec;
      spec.name = tokens[0];
      try {
        spec.pole_order = std::stoi(tokens[1]);
      } catch (const std::exception&) {
        fail(line, "bad pole order '" + tokens[1] + "'");
      }
      for (std::size_t i = 2; i < tokens.size(); ++i) {
        const std::string& cell = tokens[i];
        auto comma = cell.find(',');
        auto colon = cell.find(':');
        if (comma == std::string::npos || colon == std::string::npos ||
            colon < comma)
          fail(line, "cell must look like k,l:coef, got '" + cell + "'");
        int k, l2;
        try {
          k = std::stoi(cell.substr(0, comma));
          l2 = std::stoi(cell.substr(comma + 1, colon - comma - 1));
        } catch (const std::exception&) {
          fail(line, "bad cell indices in '" + cell + "'");
        }
        FieldScalar c;
        try {
          c = parse_scalar_token(cell.substr(colon + 1));
        } catch (const ParseError& e) {
          fail(line, e.what());
        }
        spec.cells.emplace_back(k, l2, c);
      }
      cfg.lambdas.push_back(std::move(spec));
    } else {
      fail(line, "unknown key '" + key + "'");
    }
  }
  if (!saw_p1 || !saw_p2 || !saw_a || !saw_section)
    throw ParseError("missing required key(s): a session needs p1, p2, a, section");

  // cheap semantic checks that do not need the full pipeline
  FieldScalar cross = cfg.p1[0] * cfg.p2[1] - cfg.p2[0] * cfg.p1[1];
  bool p1_zero = cfg.p1[0].is_zero() && cfg.p1[1].is_zero();
  bool p2_zero = cfg.p2[0].is_zero() && cfg.p2[1].is_zero();
  if (p1_zero || p2_zero) throw ValidationError("projective point (0 : 0)");
  if (cross.is_zero()) throw ValidationError("p1 equals p2");
  bool section_zero = true;
  for (const auto& c : cfg.section) section_zero = section_zero && c.is_zero();
  if (section_zero) throw ValidationError("section form is zero");
  for (const auto& lam : cfg.lambdas)
    for (const auto& [k, l2, c] : lam.cells)
      if (k < 0 || l2 < 0 || k > lam.pole_order || l2 > lam.pole_order)
        throw ValidationError("lambda '" + lam.name + "' cell (" +
                              std::to_string(k) + "," + std::to_string(l2) +
                              ") outside its bidegree");
  return cfg;
}

std::string write_session(const SessionConfig& cfg) {
  std::string out;
  auto put4 = [&](const std::array<FieldScalar, 4>& v) {
    for (std::size_t i = 0; i < 4; ++i)
      out += (i ? " " : "") + scalar_token(v[i]);
  };
  out += "p1 = " + scalar_token(cfg.p1[0]) + " " + scalar_token(cfg.p1[1]) + "\n";
  out += "p2 = " + scalar_token(cfg.p2[0]) + " " + scalar_token(cfg.p2[1]) + "\n";
  out += "a = " + scalar_token(cfg.factor) + "\n";
  out += "section = ";
  put4(cfg.section);
  out += "\n";
  if (cfg.extension_d) out += "extension = " + cfg.extension_d->str() + "\n";
  for (const auto& pref : cfg.flow_preferences) {
    out += "flow = ";
    put4(pref);
    out += "\n";
  }
  for (const auto& lam : cfg.lambdas) {
    out += "lambda = " + lam.name + " " + std::to_string(lam.pole_order);
    for (const auto& [k, l, c] : lam.cells)
      out += " " + std::to_string(k) + "," + std::to_string(l) + ":" +
             scalar_token(c);
    out += "\n";
  }
  return out;
}

EmitFormat parse_format(const std::string& name) {
  if (name == "json") return EmitFormat::Json;
  if (name == "latex") return EmitFormat::Latex;
  if (name == "text") return EmitFormat::Text;
  throw ParseError("unknown format '" + name + "' (expected json, latex or text)");
}

namespace {

json scalar_to_json(const FieldScalar& s) {
  if (s.is_rational()) return rat_to_string(s.rational_part());
  return json{{"a", rat_to_string(s.rational_part())},
              {"b", rat_to_string(s.radical_part())},
              {"d", s.radicand().convert_to<long long>()}};
}

FieldScalar scalar_from_json(const json& j) {
  if (j.is_string()) return FieldScalar(parse_rat(j.get<std::string>()));
  if (!j.is_object() || !j.contains("a") || !j.contains("b") || !j.contains("d"))
    throw ParseError("scalar must be \"p/q\" or {a, b, d}");
  return FieldScalar::quadratic(parse_rat(j.at("a").get<std::string>()),
                                parse_rat(j.at("b").get<std::string>()),
                                Int(j.at("d").get<long long>()));
}

json expsum_to_json(const ExpSum& e) {
  json terms = json::array();
  for (const auto& [k, c] : e.terms())
    terms.push_back(json{{"u", rat_to_string(k.r)},
                         {"v", rat_to_string(k.s)},
                         {"c", scalar_to_json(c)}});
  return terms;
}

ExpSum expsum_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("monomial list must be an array");
  ExpSum e;
  for (const auto& t : j)
    e.add_term({parse_rat(t.at("u").get<std::string>()),
                parse_rat(t.at("v").get<std::string>())},
               scalar_from_json(t.at("c")));
  return e;
}

// display order: total ∂-degree descending, then ∂x-degree descending
std::vector<std::pair<DiffOp::Key, CoeffElem>> display_terms(const DiffOp& d) {
  std::vector<std::pair<DiffOp::Key, CoeffElem>> terms(d.terms().begin(),
                                                       d.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    int tx = x.first.first + x.first.second;
    int ty = y.first.first + y.first.second;
    if (tx != ty) return tx > ty;
    return x.first.first > y.first.first;
  });
  return terms;
}

}  // namespace

std::string operator_to_json(const MatrixDiffOp& d) {
  json entries = json::array();
  for (int i = 0; i < 2; ++i) {
    json row = json::array();
    for (int j = 0; j < 2; ++j) {
      json terms = json::array();
      for (const auto& [key, c] : display_terms(d.e[i][j]))
        terms.push_back(json{{"a", key.first},
                             {"b", key.second},
                             {"coefficient",
                              json{{"num", expsum_to_json(c.num())},
                                   {"den", expsum_to_json(c.den())}}}});
      row.push_back(std::move(terms));
    }
    entries.push_back(std::move(row));
  }
  json doc{{"schema", 1}, {"entries", std::move(entries)}};
  return doc.dump(2) + "\n";
}

MatrixDiffOp operator_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("bad json: ") + e.what());
  }
  try {
    if (!doc.contains("schema") || doc.at("schema").get<int>() != 1)
      throw ParseError("unsupported schema (need \"schema\": 1)");
    const json& entries = doc.at("entries");
    if (!entries.is_array() || entries.size() != 2)
      throw ParseError("entries must be a 2x2 grid");
    MatrixDiffOp d;
    for (int i = 0; i < 2; ++i) {
      const json& row = entries.at(static_cast<std::size_t>(i));
      if (!row.is_array() || row.size() != 2)
        throw ParseError("entries must be a 2x2 grid");
      for (int j = 0; j < 2; ++j)
        for (const auto& t : row.at(static_cast<std::size_t>(j))) {
          ExpSum num = expsum_from_json(t.at("coefficient").at("num"));
          ExpSum den = expsum_from_json(t.at("coefficient").at("den"));
          d.e[i][j].add_term(t.at("a").get<int>(), t.at("b").get<int>(),
                             CoeffElem(std::move(num), std::move(den)));
        }
    }
    return d;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad operator document: ") + e.what());
  }
}

namespace {

std::string rat_latex(const Rat& r, bool allow_frac = true) {
  if (rat_den(r) == 1 || !allow_frac) return rat_to_string(r);
  std::string num = rat_num(r).str();
  bool neg = !num.empty() && num[0] == '-';
  if (neg) num = num.substr(1);
  return (neg ? std::string("-") : std::string("")) + "\\frac{" + num + "}{" +
         rat_den(r).str() + "}";
}

std::string scalar_latex(const FieldScalar& s) {
  if (s.is_rational()) return rat_latex(s.rational_part());
  std::string root = "\\sqrt{" + s.radicand().str() + "}";
  std::string rad;
  const Rat& b = s.radical_part();
  if (b == 1) rad = root;
  else if (b == -1) rad = "-" + root;
  else rad = rat_latex(b) + root;
  if (s.rational_part() == 0) return rad;
  std::string a = rat_latex(s.rational_part());
  return rad[0] == '-' ? a + rad : a + "+" + rad;
}

std::string exponent_latex(const Rat& r, const Rat& s) {
  auto part = [](const Rat& e, const char* var) -> std::string {
    if (e == 0) return "";
    if (e == 1) return var;
    if (e == -1) return std::string("-") + var;
    return rat_to_string(e) + var;
  };
  std::string px = part(r, "x"), py = part(s, "y");
  if (px.empty()) return py;
  if (py.empty()) return px;
  return px + (py[0] == '-' ? py : "+" + py);
}

std::string expsum_latex(const ExpSum& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
    const auto& [k, c] = *it;
    std::string cs = scalar_latex(c);
    bool neg = cs.size() > 1 && cs[0] == '-' &&
               cs.find_first_of("+-", 1) == std::string::npos;
    if (neg) cs = cs.substr(1);
    bool composite = cs.find_first_of("+-", 1) != std::string::npos;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? "-" : "+";
    std::string expo = exponent_latex(k.r, k.s);
    if (expo.empty()) {
      out += composite ? "\\left(" + cs + "\\right)" : cs;
    } else {
      std::string base = "e^{" + expo + "}";
      if (cs == "1") out += base;
      else if (composite) out += "\\left(" + cs + "\\right)" + base;
      else out += cs + base;
    }
  }
  return out;
}

}  // namespace

std::string coeff_to_latex(const CoeffElem& c) {
  if (c.den() == ExpSum(1)) return expsum_latex(c.num());
  return "\\frac{" + expsum_latex(c.num()) + "}{" + expsum_latex(c.den()) + "}";
}

std::string diffop_to_latex(const DiffOp& d) {
  if (d.is_zero()) return "0";
  std::string out;
  for (const auto& [key, c] : display_terms(d)) {
    std::string cs = coeff_to_latex(c);
    bool neg = cs.size() > 1 && cs[0] == '-' &&
               cs.find_first_of("+-", 1) == std::string::npos;
    if (neg) cs = cs.substr(1);
    bool composite =
        cs.find_first_of("+-", cs.empty() ? 0 : 1) != std::string::npos;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? "-" : "+";
    bool has_partial = key.first || key.second;
    if (!(cs == "1" && has_partial))
      out += composite && has_partial ? "\\left(" + cs + "\\right)" : cs;
    for (auto [sym, deg] :
         {std::pair{"\\partial_x", key.first}, {"\\partial_y", key.second}}) {
      if (deg == 0) continue;
      out += sym;
      if (deg > 1) out += "^{" + std::to_string(deg) + "}";
    }
  }
  return out;
}

std::string emit_operator(const MatrixDiffOp& d, EmitFormat format) {
  switch (format) {
    case EmitFormat::Json:
      return operator_to_json(d);
    case EmitFormat::Latex: {
      std::string out = "\\begin{pmatrix}\n";
      for (int i = 0; i < 2; ++i) {
        out += "  " + diffop_to_latex(d.e[i][0]) + " & " +
               diffop_to_latex(d.e[i][1]);
        out += i == 0 ? " \\\\\n" : "\n";
      }
      out += "\\end{pmatrix}\n";
      return out;
    }
    case EmitFormat::Text: {
      std::string out;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          std::string body;
          for (const auto& [key, c] : display_terms(d.e[i][j])) {
            if (!body.empty()) body += " + ";
            std::string cs = c.to_string();
            bool wrap = cs.find_first_of("+-", 1) != std::string::npos ||
                        c.den() != ExpSum(1);
            bool has_partial = key.first || key.second;
            if (!(cs == "1" && has_partial)) {
              body += wrap && has_partial ? "(" + cs + ")" : cs;
              if (has_partial) body += "*";
            }
            for (auto [sym, deg] :
                 {std::pair{"Dx", key.first}, {"Dy", key.second}}) {
              if (deg == 0) continue;
              body += sym;
              if (deg > 1) body += "^" + std::to_string(deg);
            }
          }
          if (body.empty()) body = "0";
          out += "[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) +
                 "] = " + body + "\n";
        }
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace opring
