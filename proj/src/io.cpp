#include "binomeso/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <regex>
#include <sstream>

namespace binomeso {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

/// Recursive descent over one polynomial expression.
class ExprParser {
public:
  ExprParser(const RingPtr& ring, const std::string& text, int line, int col0)
      : ring_(ring), s_(text), line_(line), col0_(col0) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const {
    std::ostringstream os;
    if (line_ > 0) os << "line " << line_ << ", ";
    os << "column " << col0_ + static_cast<int>(pos_) + 1 << ": " << msg;
    throw InputError(os.str());
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Polynomial constant(const mpq_class& q) const {
    return Polynomial::constant(ring_, ring_->field().from_rational(q));
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    bool negate = false;
    if (eat('-')) negate = true;
    else eat('+');
    Polynomial t = term();
    acc = negate ? -t : t;
    while (true) {
      if (eat('+')) acc = acc + term();
      else if (eat('-')) acc = acc - term();
      else break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = signed_factor();
    while (true) {
      if (eat('*')) {
        acc = acc * signed_factor();
      } else if (eat('/')) {
        skip();
        mpz_class d = integer();
        if (d == 0) fail("division by zero");
        acc = acc.scale(ring_->field().from_rational(mpq_class(1) / mpq_class(d)));
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial signed_factor() {
    if (eat('-')) return -signed_factor();
    return factor();
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (eat('^')) {
      skip();
      mpz_class e = integer();
      if (e > 1000000) fail("exponent too large");
      long k = e.get_si();
      Polynomial r = constant(1);
      for (long i = 0; i < k; ++i) r = r * base;
      return r;
    }
    return base;
  }

  mpz_class integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(s_.substr(start, pos_ - start));
  }

  Polynomial primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return constant(mpq_class(integer()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      if (auto idx = ring_->index_of(name)) return Polynomial::variable(ring_, *idx);
      if (name == "zeta") {
        if (ring_->field().spec().kind != FieldKind::cyclotomic)
          fail("zeta is only available over QQ(zeta_N)");
        return Polynomial::constant(ring_, ring_->field().generator());
      }
      pos_ = start;
      fail("undeclared variable '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const RingPtr& ring_;
  const std::string& s_;
  int line_, col0_;
  std::size_t pos_ = 0;
};

std::vector<std::string> split_top_level(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<Polynomial> parse_list(const RingPtr& ring, const std::string& text, int line,
                                   int col0) {
  std::vector<Polynomial> out;
  if (trim(text).empty()) return out;
  int col = col0;
  for (const auto& piece : split_top_level(text, ',')) {
    if (trim(piece).empty()) {
      std::ostringstream os;
      if (line > 0) os << "line " << line << ", ";
      os << "column " << col + 1 << ": empty generator";
      throw InputError(os.str());
    }
    out.push_back(ExprParser(ring, piece, line, col).parse());
    col += static_cast<int>(piece.size()) + 1;
  }
  return out;
}

} // namespace

FieldSpec parse_field(const std::string& text) {
  std::string t = trim(text);
  std::smatch m;
  if (t == "QQ") return FieldSpec::rationals();
  if (std::regex_match(t, m, std::regex(R"(GF\(\s*(\d+)\s*\))"))) return FieldSpec::prime(std::stol(m[1]));
  if (std::regex_match(t, m, std::regex(R"(QQ\(\s*zeta_?(\d+)\s*\))")))
    return FieldSpec::cyclotomic(std::stol(m[1]));
  throw InputError("unknown field '" + t + "' (expected QQ, GF(p) or QQ(zeta_N))");
}

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
  return ExprParser(ring, text, 0, 0).parse();
}

std::vector<Polynomial> parse_polynomial_list(const RingPtr& ring, const std::string& text) {
  return parse_list(ring, text, 0, 0);
}

Monomial parse_monomial(const RingPtr& ring, const std::string& text) {
  Polynomial p = parse_polynomial(ring, text);
  if (!p.is_monomial() || !ring->field().is_one(p.leading().coeff))
    throw InputError("'" + text + "' is not a monomial");
  return p.leading().mono;
}

IntMatrix parse_matrix(const std::string& text) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    throw InputError("grading must look like [[a,b,...],[c,d,...]]");
  IntMatrix rows;
  std::regex row_re(R"(\[([^\[\]]*)\])");
  std::string inner = t.substr(1, t.size() - 2);
  for (auto it = std::sregex_iterator(inner.begin(), inner.end(), row_re); it != std::sregex_iterator(); ++it) {
    std::vector<long> row;
    for (const auto& cell : split_top_level((*it)[1].str(), ',')) {
      std::string c = trim(cell);
      if (!std::regex_match(c, std::regex(R"([+-]?\d+)"))) throw InputError("bad grading entry '" + c + "'");
      row.push_back(std::stol(c));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw InputError("empty grading matrix");
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) throw InputError("grading rows differ in length");
  return rows;
}

ProblemFile parse_problem(const std::string& text) {
  ProblemFile out;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool in_ideal = false;
  bool in_component = false;
  int ideal_line = 0;
  std::string ideal_text;
  bool have_ideal = false;
  auto flush = [&] {
    if (in_ideal) out.generators = parse_list(out.ring, ideal_text, ideal_line, 0);
    if (in_component) out.components.push_back(parse_list(out.ring, ideal_text, ideal_line, 0));
    in_ideal = in_component = false;
  };
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    std::string t = trim(line);
    if (t.empty()) continue;
    std::smatch m;
    if (std::regex_match(t, m, std::regex(R"(ring\s+(.*?)\s+over\s+(.*))"))) {
      flush();
      if (out.ring) throw InputError("line " + std::to_string(lineno) + ": ring declared twice");
      std::vector<std::string> names;
      std::string vars = m[1];
      std::replace(vars.begin(), vars.end(), ',', ' ');
      std::istringstream vs(vars);
      for (std::string v; vs >> v;) {
        if (!std::regex_match(v, std::regex(R"([A-Za-z_][A-Za-z0-9_]*)")))
          throw InputError("line " + std::to_string(lineno) + ": bad variable name '" + v + "'");
        names.push_back(v);
      }
      out.ring = make_ring(names, parse_field(m[2]));
    } else if (t.rfind("grading:", 0) == 0) {
      flush();
      out.grading = parse_matrix(t.substr(8));
    } else if (t.rfind("ideal:", 0) == 0) {
      flush();
      if (!out.ring) throw InputError("line " + std::to_string(lineno) + ": ideal before ring declaration");
      if (have_ideal) throw InputError("line " + std::to_string(lineno) + ": ideal declared twice");
      have_ideal = in_ideal = true;
      ideal_line = lineno;
      ideal_text = line.substr(line.find("ideal:") + 6);
    } else if (t.rfind("component:", 0) == 0) {
      flush();
      if (!out.ring) throw InputError("line " + std::to_string(lineno) + ": component before ring declaration");
      in_component = true;
      ideal_line = lineno;
      ideal_text = line.substr(line.find("component:") + 10);
    } else if (in_ideal || in_component) {
      ideal_text += " " + line;
    } else {
      throw InputError("line " + std::to_string(lineno) + ": unrecognized line '" + t + "'");
    }
  }
  flush();
  if (!out.ring) throw InputError("missing ring declaration");
  if (out.grading && out.grading->front().size() != out.ring->nvars())
    throw InputError("grading has " + std::to_string(out.grading->front().size()) +
                     " columns but the ring has " + std::to_string(out.ring->nvars()) + " variables");
  return out;
}

ProblemFile read_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

std::string print_problem(const ProblemFile& problem) {
  std::ostringstream os;
  os << "ring";
  for (const auto& n : problem.ring->names()) os << " " << n;
  os << " over " << problem.ring->field().spec().to_string() << "\n";
  if (problem.grading) {
    os << "grading: [";
    for (std::size_t i = 0; i < problem.grading->size(); ++i) {
      os << (i ? ", [" : "[");
      const auto& row = (*problem.grading)[i];
      for (std::size_t j = 0; j < row.size(); ++j) os << (j ? ", " : "") << row[j];
      os << "]";
    }
    os << "]\n";
  }
  os << "ideal: ";
  for (std::size_t i = 0; i < problem.generators.size(); ++i)
    os << (i ? ", " : "") << problem.generators[i].to_string();
  os << "\n";
  for (const auto& c : problem.components) {
    os << "component: ";
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? ", " : "") << c[i].to_string();
    os << "\n";
  }
  return os.str();
}

Ideal make_ideal(const RingPtr& ring, const std::string& gens) {
  return Ideal(ring, parse_polynomial_list(ring, gens));
}

} // namespace binomeso
