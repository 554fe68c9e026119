#include "folia/textio.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "folia/errors.hpp"

namespace folia {

namespace {

constexpr unsigned kMaxExponent = 1000;

class PolyParser {
 public:
  PolyParser(std::string_view text, int arity, int line, int column)
      : text_(text), arity_(arity), line0_(line), column0_(column) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }

  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
    int line = line0_, column = column0_;
    for (std::size_t k = 0; k < at && k < text_.size(); ++k) {
      if (text_[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(what, line, column);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly term() {
    MultiPoly acc = unary();
    while (accept('*')) acc *= unary();
    return acc;
  }

  MultiPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  MultiPoly power() {
    MultiPoly base = primary();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("exponent must be a nonnegative integer literal");
      }
      mpz_class e = integer();
      if (e > kMaxExponent) fail_at("exponent too large", start);
      return pow(base, static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  mpz_class integer() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  MultiPoly primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpq_class value(integer());
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_space();
        std::size_t start = pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          fail("denominator must be an integer literal");
        }
        mpz_class den = integer();
        if (den == 0) fail_at("zero denominator", start);
        value /= mpq_class(den);
        value.canonicalize();
      }
      return MultiPoly::constant(arity_, value);
    }
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string_view word = text_.substr(start, pos_ - start);
      if (word == "i") return MultiPoly::constant(arity_, GaussianRational::imaginary_unit());
      static constexpr std::string_view affine[] = {"x", "y"};
      static constexpr std::string_view projective[] = {"X", "Y", "Z"};
      for (int k = 0; k < arity_; ++k) {
        if (word == (arity_ == 2 ? affine[k] : projective[k])) return MultiPoly::variable(arity_, k);
      }
      bool other_set = word == "x" || word == "y" || word == "X" || word == "Y" || word == "Z";
      if (other_set) {
        fail_at("variable '" + std::string(word) + "' is not allowed here (expected " +
                    (arity_ == 2 ? "x, y" : "X, Y, Z") + ")",
                start);
      }
      fail_at("unknown identifier '" + std::string(word) + "'", start);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  int arity_;
  int line0_, column0_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const Exponent& e, int arity) {
  static constexpr const char* affine[] = {"x", "y"};
  static constexpr const char* projective[] = {"X", "Y", "Z"};
  std::string out;
  for (int k = 0; k < arity; ++k) {
    if (e[k] == 0) continue;
    if (!out.empty()) out += "*";
    out += arity == 2 ? affine[k] : projective[k];
    if (e[k] > 1) out += "^" + std::to_string(e[k]);
  }
  return out;
}

// Magnitude text of a coefficient and whether it is written with a minus sign.
std::pair<std::string, bool> coefficient_text(const GaussianRational& c) {
  if (c.is_real()) return {mpq_class(abs(c.re())).get_str(), sgn(c.re()) < 0};
  if (c.is_imaginary()) {
    mpq_class m = abs(c.im());
    return {m == 1 ? std::string("i") : m.get_str() + "*i", sgn(c.im()) < 0};
  }
  std::string s = "(" + c.re().get_str() + (sgn(c.im()) < 0 ? " - " : " + ");
  mpq_class m = abs(c.im());
  s += m == 1 ? std::string("i") : m.get_str() + "*i";
  return {s + ")", false};
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

template <typename Entry>
const Entry* find_named(const std::vector<Entry>& v, std::string_view name) {
  auto it = std::find_if(v.begin(), v.end(), [&](const Entry& e) { return e.name == name; });
  return it == v.end() ? nullptr : &*it;
}

}  // namespace

MultiPoly parse_poly(std::string_view text, int arity, int line, int column) {
  if (arity != 2 && arity != 3) throw ArityError("polynomial arity must be 2 or 3");
  return PolyParser(text, arity, line, column).parse();
}

GaussianRational parse_number(std::string_view text, int line, int column) {
  MultiPoly p = parse_poly(text, 2, line, column);
  if (!p.is_constant()) throw ParseError("expected a constant", line, column);
  return p.is_zero() ? GaussianRational(0) : p.leading_term().second;
}

std::string print_number(const GaussianRational& z) {
  auto [text, negative] = coefficient_text(z);
  return negative ? "-" + text : text;
}

std::string print_poly(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    auto [coef, negative] = coefficient_text(c);
    std::string mono = monomial_text(e, p.arity());
    std::string body;
    if (mono.empty()) {
      body = coef;
    } else if (coef == "1") {
      body = mono;
    } else {
      body = coef + "*" + mono;
    }
    if (first) {
      out = negative ? "-" + body : body;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

std::string print_form(const ProjectiveOneForm& w) {
  return "(" + print_poly(w.P()) + ") dX + (" + print_poly(w.Q()) + ") dY + (" + print_poly(w.R()) + ") dZ";
}

std::string print_point(const ProjectivePoint& p) {
  return "(" + print_number(p[0]) + " : " + print_number(p[1]) + " : " + print_number(p[2]) + ")";
}

const FieldEntry* SystemDocument::find_field(std::string_view name) const { return find_named(fields, name); }
const FormEntry* SystemDocument::find_form(std::string_view name) const { return find_named(forms, name); }
const CurveEntry* SystemDocument::find_curve(std::string_view name) const { return find_named(curves, name); }
const ParamEntry* SystemDocument::find_param(std::string_view name) const { return find_named(params, name); }

namespace {

struct RawValue {
  std::string text;
  int line;
  int column;
};

struct RawSection {
  std::string kind, name;
  int line;
  std::vector<std::pair<std::string, RawValue>> keys;

  const RawValue* get(const std::string& key) const {
    for (const auto& [k, v] : keys) {
      if (k == key) return &v;
    }
    return nullptr;
  }

  const RawValue& require(const std::string& key) const {
    const RawValue* v = get(key);
    if (!v) throw DocumentError("section [" + kind + " " + name + "] is missing key '" + key + "'");
    return *v;
  }
};

void check_keys(const RawSection& s, std::initializer_list<const char*> allowed) {
  for (const auto& [k, v] : s.keys) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; })) {
      throw DocumentError("section [" + s.kind + " " + s.name + "] has unknown key '" + k + "' at line " +
                          std::to_string(v.line));
    }
  }
}

MultiPoly parse_value(const RawValue& v, int arity) { return parse_poly(v.text, arity, v.line, v.column); }

}  // namespace

SystemDocument parse_system(std::string_view text) {
  std::vector<RawSection> sections;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t hash = line.find('#');
    std::string content = hash == std::string::npos ? line : line.substr(0, hash);
    std::string t = trim(content);
    if (t.empty()) continue;
    if (t.front() == '[') {
      if (t.back() != ']') throw ParseError("unterminated section header", lineno, 1);
      std::istringstream hs(t.substr(1, t.size() - 2));
      RawSection s;
      s.line = lineno;
      std::string extra;
      if (!(hs >> s.kind >> s.name) || (hs >> extra)) {
        throw ParseError("section header must be [kind name]", lineno, 1);
      }
      if (s.kind != "field" && s.kind != "form" && s.kind != "curve" && s.kind != "param") {
        throw ParseError("unknown section kind '" + s.kind + "'", lineno, 2);
      }
      sections.push_back(std::move(s));
      continue;
    }
    std::size_t eq = content.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'key = value'", lineno, 1);
    if (sections.empty()) throw ParseError("key outside of any section", lineno, 1);
    std::string key = trim(content.substr(0, eq));
    std::string_view rest = std::string_view(content).substr(eq + 1);
    int column = static_cast<int>(eq) + 2;
    RawSection& s = sections.back();
    if (s.get(key)) throw DocumentError("duplicate key '" + key + "' in section [" + s.kind + " " + s.name + "]");
    s.keys.push_back({key, {std::string(rest), lineno, column}});
  }

  SystemDocument doc;
  std::set<std::string> names;
  for (const auto& s : sections) {
    if (!names.insert(s.name).second) throw DocumentError("duplicate name '" + s.name + "'");
    if (s.kind == "field") {
      check_keys(s, {"p", "q", "r"});
      MultiPoly p = parse_value(s.require("p"), 2);
      MultiPoly q = parse_value(s.require("q"), 2);
      MultiPoly r = s.get("r") ? parse_value(*s.get("r"), 2) : MultiPoly(2);
      try {
        doc.fields.push_back({s.name, AffineVectorField(p, q, r)});
      } catch (const DomainError& e) {
        throw DocumentError("field '" + s.name + "': " + e.what());
      }
    } else if (s.kind == "form") {
      check_keys(s, {"P", "Q", "R"});
      MultiPoly P = parse_value(s.require("P"), 3);
      MultiPoly Q = parse_value(s.require("Q"), 3);
      MultiPoly R = parse_value(s.require("R"), 3);
      try {
        doc.forms.push_back({s.name, ProjectiveOneForm(P, Q, R)});
      } catch (const DomainError& e) {
        throw DocumentError("form '" + s.name + "': " + e.what());
      }
    } else if (s.kind == "curve") {
      check_keys(s, {"f", "components"});
      CurveEntry c{s.name, parse_value(s.require("f"), 2), {}};
      if (c.f.is_zero()) throw DocumentError("curve '" + s.name + "' is the zero polynomial");
      if (const RawValue* comps = s.get("components")) {
        std::stringstream ss(comps->text);
        std::string item;
        while (std::getline(ss, item, ',')) {
          std::string n = trim(item);
          if (n.empty()) throw DocumentError("empty component name in curve '" + s.name + "'");
          c.components.push_back(n);
        }
      }
      doc.curves.push_back(std::move(c));
    } else {
      check_keys(s, {"value"});
      const RawValue& v = s.require("value");
      doc.params.push_back({s.name, parse_number(v.text, v.line, v.column)});
    }
  }
  for (const auto& c : doc.curves) {
    for (const auto& n : c.components) {
      if (!doc.find_curve(n)) throw DocumentError("curve '" + c.name + "' names unknown component '" + n + "'");
    }
  }
  return doc;
}

std::string print_system(const SystemDocument& doc) {
  std::ostringstream os;
  bool first = true;
  auto header = [&](const char* kind, const std::string& name) {
    if (!first) os << "\n";
    first = false;
    os << "[" << kind << " " << name << "]\n";
  };
  for (const auto& p : doc.params) {
    header("param", p.name);
    os << "value = " << print_number(p.value) << "\n";
  }
  for (const auto& f : doc.fields) {
    header("field", f.name);
    os << "p = " << print_poly(f.field.p()) << "\n";
    os << "q = " << print_poly(f.field.q()) << "\n";
    if (!f.field.r().is_zero()) os << "r = " << print_poly(f.field.r()) << "\n";
  }
  for (const auto& f : doc.forms) {
    header("form", f.name);
    os << "P = " << print_poly(f.form.P()) << "\n";
    os << "Q = " << print_poly(f.form.Q()) << "\n";
    os << "R = " << print_poly(f.form.R()) << "\n";
  }
  for (const auto& c : doc.curves) {
    header("curve", c.name);
    os << "f = " << print_poly(c.f) << "\n";
    if (!c.components.empty()) {
      os << "components = ";
      for (std::size_t k = 0; k < c.components.size(); ++k) os << (k ? ", " : "") << c.components[k];
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace folia
