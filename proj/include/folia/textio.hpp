#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "folia/field_ops.hpp"
#include "folia/multipoly.hpp"

namespace folia {

/// Parse a polynomial in x, y (arity 2) or X, Y, Z (arity 3). Grammar:
///   expr := term (('+' | '-') term)*      term := unary ('*' unary)*
///   unary := ('-' | '+') unary | power    power := primary ('^' integer)?
///   primary := integer ('/' integer)? | 'i' | variable | '(' expr ')'
/// Line and column of the first character are used in error positions.
MultiPoly parse_poly(std::string_view text, int arity, int line = 1, int column = 1);

/// Parse a constant expression such as "1/2 - 3*i".
GaussianRational parse_number(std::string_view text, int line = 1, int column = 1);

/// Canonical text: graded-lex term order, e.g. "x^2 + y^2 - 1"; zero is "0".
std::string print_poly(const MultiPoly& p);
std::string print_number(const GaussianRational& z);
std::string print_form(const ProjectiveOneForm& w);
std::string print_point(const ProjectivePoint& p);

struct FieldEntry {
  std::string name;
  AffineVectorField field;
};

struct FormEntry {
  std::string name;
  ProjectiveOneForm form;
};

struct CurveEntry {
  std::string name;
  MultiPoly f;
  std::vector<std::string> components;  // names of other curves, may be empty
};

struct ParamEntry {
  std::string name;
  GaussianRational value;
};

/// Contents of a .fol document, in file order.
struct SystemDocument {
  std::vector<FieldEntry> fields;
  std::vector<FormEntry> forms;
  std::vector<CurveEntry> curves;
  std::vector<ParamEntry> params;

  const FieldEntry* find_field(std::string_view name) const;
  const FormEntry* find_form(std::string_view name) const;
  const CurveEntry* find_curve(std::string_view name) const;
  const ParamEntry* find_param(std::string_view name) const;
  bool empty() const { return fields.empty() && forms.empty() && curves.empty() && params.empty(); }
};

/// Sections [field name] (p, q, optional r), [form name] (P, Q, R),
/// [curve name] (f, optional components), [param name] (value).
SystemDocument parse_system(std::string_view text);
std::string print_system(const SystemDocument& doc);

}  // namespace folia
