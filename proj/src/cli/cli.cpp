#include "folia/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "folia/bounds.hpp"
#include "folia/branches.hpp"
#include "folia/construct.hpp"
#include "folia/cycles.hpp"
#include "folia/errors.hpp"
#include "folia/realtopo.hpp"
#include "folia/singularities.hpp"
#include "folia/textio.hpp"
#include "report.hpp"

namespace folia::cli {

namespace {

struct Common {
  std::string input;
  std::string format = "text";
  std::string field, form, curve;
};

SystemDocument load_document(const std::string& input) {
  const std::string prefix = "gallery:";
  if (input.rfind(prefix, 0) == 0) return gallery(input.substr(prefix.size()));
  std::ifstream in(input, std::ios::binary);
  if (!in) throw DocumentError("cannot open '" + input + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_system(ss.str());
}

AffineVectorField select_field(const SystemDocument& doc, const Common& c) {
  if (!c.field.empty()) {
    auto* f = doc.find_field(c.field);
    if (!f) throw DocumentError("no field named '" + c.field + "'");
    return f->field;
  }
  if (!c.form.empty()) {
    auto* w = doc.find_form(c.form);
    if (!w) throw DocumentError("no form named '" + c.form + "'");
    return affinize(w->form);
  }
  if (!doc.fields.empty()) return doc.fields.front().field;
  if (!doc.forms.empty()) return affinize(doc.forms.front().form);
  throw DocumentError("document has no field or form");
}

ProjectiveOneForm select_form(const SystemDocument& doc, const Common& c) {
  if (!c.form.empty()) {
    auto* w = doc.find_form(c.form);
    if (!w) throw DocumentError("no form named '" + c.form + "'");
    return w->form;
  }
  if (c.field.empty() && !doc.forms.empty()) return doc.forms.front().form;
  return saturate(projectivize(select_field(doc, c)));
}

const CurveEntry& select_curve(const SystemDocument& doc, const std::string& name) {
  if (!name.empty()) {
    auto* e = doc.find_curve(name);
    if (!e) throw DocumentError("no curve named '" + name + "'");
    return *e;
  }
  if (doc.curves.empty()) throw DocumentError("document has no curve");
  return doc.curves.front();
}

std::vector<MultiPoly> components_of(const SystemDocument& doc, const CurveEntry& e) {
  std::vector<MultiPoly> out;
  for (const auto& n : e.components) out.push_back(doc.find_curve(n)->f);
  return out;
}

ProjectivePoint parse_point(const std::string& text) {
  std::string s = text;
  auto l = s.find('('), r = s.rfind(')');
  if (l != std::string::npos && r != std::string::npos && r > l) s = s.substr(l + 1, r - l - 1);
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  if (parts.size() == 2) return ProjectivePoint::affine(parse_number(parts[0]), parse_number(parts[1]));
  if (parts.size() != 3) throw ParseError("point must be (X : Y : Z) or (x : y)", 1, 1);
  return {parse_number(parts[0]), parse_number(parts[1]), parse_number(parts[2])};
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw ParseError("expected a comma separated integer list", 1, 1);
    }
  }
  return out;
}

Box parse_box(const std::string& s) {
  std::vector<GaussianRational> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_number(item));
  if (v.size() != 4) throw ParseError("box must be x0,x1,y0,y1", 1, 1);
  for (const auto& z : v)
    if (!z.is_real()) throw DomainError("box coordinates must be real");
  return {v[0].re(), v[1].re(), v[2].re(), v[3].re()};
}

Json point_list(const PointSet& ps) {
  Json arr = Json::array();
  for (const auto& p : ps.points) arr.push_back(print_point(p));
  return arr;
}

Json cert_json(const CofactorCertificate& c) {
  Json j = Json::object();
  j["curve"] = print_poly(c.curve);
  j["cofactor"] = print_poly(c.cofactor);
  j["residual_check"] = c.residual_check;
  j["cofactor_degree"] = c.cofactor.is_zero() ? Json(nullptr) : Json(c.cofactor_degree);
  j["degree_bound"] = c.degree_bound;
  j["within_degree_bound"] = c.within_degree_bound;
  return j;
}

Json euler_json(const EulerReport& r) {
  Json j = Json::object();
  j["n"] = r.n;
  j["m"] = r.m;
  Json table = Json::array();
  for (const auto& e : r.table) {
    Json row = Json::object();
    row["point"] = print_point(e.point);
    row["chart"] = chart_name(e.chart);
    row["branch"] = e.branch;
    row["mu"] = e.mu;
    row["certified"] = e.certified;
    table.push_back(row);
  }
  j["multiplicities"] = table;
  j["sum_mu"] = r.sum_mu;
  j["chi"] = r.chi_claimed;
  j["rhs"] = r.rhs;
  j["checkable"] = r.checkable;
  if (!r.checkable) j["reason"] = r.reason;
  j["identity_holds"] = r.identity_holds;
  return j;
}

Json bound_json(const BoundReport& b) {
  Json j = Json::object();
  j["theorem"] = b.theorem;
  if (b.m >= 0) j["m"] = b.m;
  if (b.n >= 0) j["n"] = b.n;
  if (b.theorem == "t2") j["r_zero"] = b.r_zero;
  if (!b.orders.empty()) j["orders"] = b.orders;
  if (!b.partition.empty()) j["partition"] = b.partition;
  j["value"] = b.value;
  if (b.clamped) {
    j["raw"] = b.raw;
    j["clamped"] = true;
  }
  if (!b.note.empty()) j["note"] = b.note;
  return j;
}

Json oval_set_json(const OvalSet& s) {
  Json j = Json::object();
  j["box"] = {print_number(s.box.x0), print_number(s.box.x1), print_number(s.box.y0), print_number(s.box.y1)};
  j["resolution"] = s.resolution;
  j["ovals"] = static_cast<int>(s.ovals.size());
  j["certified"] = s.certified_count();
  j["complete"] = s.complete;
  j["open_chains"] = s.open_chains;
  j["grid_shifts"] = s.shifts;
  Json per = Json::array();
  for (std::size_t k = 0; k < s.ovals.size(); ++k) {
    Json o = Json::object();
    o["id"] = static_cast<int>(k);
    o["vertices"] = static_cast<int>(s.ovals[k].vertices.size());
    o["certified"] = s.ovals[k].certified;
    per.push_back(o);
  }
  j["oval_list"] = per;
  j["warnings"] = s.warnings;
  return j;
}

// ---------------------------------------------------------------------------

struct Outcome {
  Json report = Json::object();
  int code = kPass;
  std::string text;  // replaces the generic rendering when set
};

Outcome cmd_check_invariant(const Common& c, bool cofactor_only) {
  SystemDocument doc = load_document(c.input);
  AffineVectorField X = select_field(doc, c);
  const CurveEntry& e = select_curve(doc, c.curve);
  Outcome o;
  o.report["curve"] = e.name;
  auto cert = invariance_check(X, e.f);
  o.report["invariant"] = cert.has_value();
  if (cert) {
    o.report["certificate"] = cert_json(*cert);
  } else {
    o.code = kFail;
  }
  if (cofactor_only && cert) o.text = print_poly(cert->cofactor) + "\n";
  return o;
}

Outcome cmd_projectivize(const Common& c) {
  SystemDocument doc = load_document(c.input);
  Outcome o;
  if (!c.form.empty() || (c.field.empty() && doc.fields.empty() && !doc.forms.empty())) {
    ProjectiveOneForm w = select_form(doc, c);
    AffineVectorField X = affinize(w);
    o.report["form"] = print_form(saturate(w));
    o.report["degree"] = saturate(w).degree();
    o.report["p"] = print_poly(X.p());
    o.report["q"] = print_poly(X.q());
    o.report["r"] = print_poly(X.r());
    o.report["infinity_invariant"] = infinity_invariant(X);
  } else {
    AffineVectorField X = select_field(doc, c);
    ProjectiveOneForm raw = projectivize(X);
    ProjectiveOneForm w = saturate(raw);
    o.report["form"] = print_form(w);
    o.report["degree"] = w.degree();
    o.report["saturated"] = raw == w;
    o.report["infinity_invariant"] = infinity_invariant(X);
  }
  return o;
}

Outcome cmd_singularities(const Common& c) {
  SystemDocument doc = load_document(c.input);
  AffineVectorField X = select_field(doc, c);
  ProjectiveOneForm w = saturate(projectivize(X));
  PointSet fin = affine_singularities(X);
  PointSet inf = infinite_singularities(w);
  Outcome o;
  o.report["affine"] = point_list(fin);
  o.report["infinite"] = point_list(inf);
  o.report["unresolved"] = fin.residual + inf.residual;
  if (fin.residual + inf.residual > 0) o.code = kUnknown;
  return o;
}

Outcome cmd_classify(const Common& c, const std::string& point) {
  SystemDocument doc = load_document(c.input);
  AffineVectorField X = select_field(doc, c);
  std::vector<ProjectivePoint> pts;
  int residual = 0;
  if (!point.empty()) {
    pts.push_back(parse_point(point));
  } else {
    PointSet a = affine_singularities(X), b = infinite_singularities(saturate(projectivize(X)));
    pts = a.points;
    pts.insert(pts.end(), b.points.begin(), b.points.end());
    residual = a.residual + b.residual;
  }
  Outcome o;
  Json arr = Json::array();
  for (const auto& p : pts) {
    SingularityRecord r = classify_dicritical(X, p);
    Json j = Json::object();
    j["point"] = print_point(r.point);
    j["chart"] = chart_name(r.chart);
    j["verdict"] = verdict_name(r.verdict);
    j["reason"] = reason_name(r.reason);
    arr.push_back(j);
    if (r.verdict == Verdict::Unknown) o.code = kUnknown;
  }
  o.report["singularities"] = arr;
  o.report["unresolved"] = residual;
  if (residual > 0) o.code = kUnknown;
  return o;
}

Outcome cmd_nodal(const Common& c, bool with_infinity) {
  SystemDocument doc = load_document(c.input);
  const CurveEntry& e = select_curve(doc, c.curve);
  Tristate t = is_nodal(e.f, with_infinity);
  Outcome o;
  o.report["curve"] = e.name;
  o.report["include_infinity"] = with_infinity;
  o.report["nodal"] = tristate_name(t);
  Json sing = Json::array();
  auto add = [&](const CurveSingularities& cs) {
    for (const auto& s : cs.points) {
      Json j = Json::object();
      j["point"] = print_point(s.point);
      j["order"] = s.order;
      j["node"] = s.is_node;
      sing.push_back(j);
    }
  };
  add(curve_singularities(e.f));
  if (with_infinity) add(infinite_curve_singularities(e.f));
  o.report["singular_points"] = sing;
  o.code = t == Tristate::True ? kPass : (t == Tristate::False ? kFail : kUnknown);
  return o;
}

Outcome cmd_multiplicity(const Common& c, const std::string& point, int truncation) {
  SystemDocument doc = load_document(c.input);
  ProjectiveOneForm w = select_form(doc, c);
  const CurveEntry& e = select_curve(doc, c.curve);
  ProjectivePoint p = parse_point(point);
  Chart ch = chart_for(p);
  MultiPoly F = homogenize(e.f, e.f.degree());
  int N = truncation > 0 ? truncation : default_truncation(w.degree(), e.f.degree());
  auto mus = multiplicities_at(chart_field(w, ch), chart_polynomial(F, ch), ch, p, N);
  Outcome o;
  o.report["point"] = print_point(p);
  o.report["chart"] = chart_name(ch);
  if (!mus) {
    o.report["supported"] = false;
    o.code = kUnknown;
    return o;
  }
  Json arr = Json::array();
  for (const auto& m : *mus) {
    Json j = Json::object();
    j["mu"] = m.mu;
    j["certified"] = m.certified;
    j["truncation"] = m.truncation;
    arr.push_back(j);
    if (!m.certified) o.code = kUnknown;
  }
  o.report["branches"] = arr;
  return o;
}

int chi_for(const SystemDocument& doc, const CurveEntry& e, std::optional<int> chi) {
  if (chi) return *chi;
  if (auto* p = doc.find_param("chi")) {
    if (!p->value.is_real() || p->value.re().get_den() != 1) throw DocumentError("param chi must be an integer");
    return static_cast<int>(p->value.re().get_num().get_si());
  }
  auto comps = components_of(doc, e);
  if (comps.empty()) comps.push_back(e.f);
  return genus_and_chi(e.f, comps).chi;
}

Outcome cmd_euler(const Common& c, std::optional<int> chi, int truncation) {
  SystemDocument doc = load_document(c.input);
  ProjectiveOneForm w = select_form(doc, c);
  const CurveEntry& e = select_curve(doc, c.curve);
  int x = chi_for(doc, e, chi);
  EulerReport r = euler_identity_check(w, e.f, x, truncation > 0 ? std::optional<int>(truncation) : std::nullopt);
  Outcome o;
  o.report["curve"] = e.name;
  o.report["euler"] = euler_json(r);
  o.code = !r.checkable ? kUnknown : (r.identity_holds ? kPass : kFail);
  return o;
}

Outcome cmd_corollary2(const Common& c) {
  SystemDocument doc = load_document(c.input);
  const CurveEntry& e = select_curve(doc, c.curve);
  Corollary2Report r = corollary2_check(e.f);
  Outcome o;
  o.report["curve"] = e.name;
  o.report["n"] = r.n;
  o.report["chi_formula"] = r.chi_formula;
  o.report["euler"] = euler_json(r.euler);
  Json inf = Json::array();
  for (const auto& d : r.at_infinity) {
    Json j = Json::object();
    j["point"] = print_point(d.point);
    j["l"] = d.l;
    j["mu"] = d.mu;
    j["mu_branch"] = d.mu_branch;
    j["mu_projective"] = d.mu_projective;
    j["consistent"] = d.consistent;
    inf.push_back(j);
  }
  o.report["infinity"] = inf;
  o.report["all_mu_one"] = r.all_mu_one;
  o.report["holds"] = r.holds;
  o.code = !r.euler.checkable ? kUnknown : (r.holds ? kPass : kFail);
  return o;
}

BoundReport one_bound(const std::string& theorem, int m, bool r_zero, int n, const std::vector<int>& orders,
                      const std::vector<int>& partition) {
  if (theorem == "t1") return thm1_bound(m);
  if (theorem == "t2") return thm2_bound(m, r_zero);
  if (theorem == "t4") return thm4_bound(m);
  if (theorem == "harnack") return harnack_bound(n, orders);
  if (theorem == "degree-nodal") return nodal_degree_bound(m);
  if (theorem == "degree-nondicritical") return nondicritical_degree_bound(m);
  if (theorem == "mk") {
    BoundReport b;
    MkValue v = partition.empty() ? mk_argmax(m) : mk_value(m, partition);
    b.theorem = "mk";
    b.m = m;
    b.partition = v.partition;
    b.value = v.value;
    b.note = "k = " + std::to_string(v.k) + ", envelope M(k) = " + std::to_string(v.envelope);
    return b;
  }
  throw DomainError("unknown theorem '" + theorem + "'");
}

Outcome cmd_bounds(const std::string& theorem, int m, bool r_nonzero, int n, const std::string& orders,
                   const std::string& partition, const std::string& range) {
  Outcome o;
  std::vector<int> ord = parse_int_list(orders), part = parse_int_list(partition);
  if (!range.empty()) {
    auto colon = range.find(':');
    if (colon == std::string::npos) throw ParseError("range must be A:B", 1, 1);
    int a = std::stoi(range.substr(0, colon)), b = std::stoi(range.substr(colon + 1));
    if (a > b) throw DomainError("empty range");
    Json rows = Json::array();
    std::string text;
    for (int k = a; k <= b; ++k) {
      BoundReport r = theorem == "harnack" ? one_bound(theorem, m, !r_nonzero, k, ord, part)
                                           : one_bound(theorem, k, !r_nonzero, n, ord, part);
      rows.push_back(bound_json(r));
      text += std::to_string(k) + " " + std::to_string(r.value) + "\n";
    }
    o.report["theorem"] = theorem;
    o.report["table"] = rows;
    o.text = text;
    return o;
  }
  BoundReport r = one_bound(theorem, m, !r_nonzero, n, ord, part);
  o.report = bound_json(r);
  o.text = std::to_string(r.value) + "\n" + (r.note.empty() ? "" : r.note + "\n");
  return o;
}

Outcome emit_document(const SystemDocument& doc, Json summary, const std::string& output) {
  Outcome o;
  std::string text = print_system(doc);
  o.report = std::move(summary);
  if (!output.empty()) {
    std::ofstream f(output, std::ios::binary);
    if (!f) throw DocumentError("cannot write '" + output + "'");
    f << text;
    o.report["written"] = output;
  } else {
    o.report["document"] = text;
    o.text = text;
  }
  return o;
}

Outcome cmd_construct_log(const std::vector<std::string>& curves, const std::vector<std::string>& weights,
                          const std::string& output) {
  LogarithmicSpec spec;
  for (const auto& s : curves) spec.curves.push_back(parse_poly(s, 3));
  for (const auto& s : weights) spec.weights.push_back(parse_number(s));
  LogarithmicForm lf = logarithmic_form(spec);
  SystemDocument doc;
  doc.forms.push_back({"omega", lf.form});
  for (std::size_t k = 0; k < lf.affine_curves.size(); ++k)
    doc.curves.push_back({"f" + std::to_string(k + 1), lf.affine_curves[k], {}});
  Json s = Json::object();
  s["form"] = print_form(lf.form);
  s["degree"] = lf.degree;
  s["infinity_invariant"] = infinity_invariant(lf.field);
  Json certs = Json::array();
  for (const auto& c : lf.certificates) certs.push_back(cert_json(c));
  s["certificates"] = certs;
  s["darboux"] = lf.darboux;
  s["iif_product"] = lf.iif;
  Json ratios = Json::array();
  for (const auto& r : ratio_condition_report(spec.weights)) {
    Json j = Json::object();
    j["pair"] = {r.i + 1, r.j + 1};
    j["ratio"] = print_number(r.ratio);
    j["status"] = ratio_status_name(r.status);
    ratios.push_back(j);
  }
  s["ratio_condition"] = ratios;
  return emit_document(doc, s, output);
}

Outcome cmd_construct_eee(const std::string& g, const std::string& h, const std::string& a, const std::string& b,
                          const std::string& output) {
  MultiPoly gp = parse_poly(g, 2), hp = parse_poly(h, 2);
  EeeSystem e = eee_system(gp, hp, parse_number(a), parse_number(b));
  SystemDocument doc;
  doc.fields.push_back({"X", e.field});
  doc.curves.push_back({"S", gp, {}});
  doc.curves.push_back({"h", hp, {}});
  Json s = Json::object();
  s["certificate"] = cert_json(e.certificate);
  // h = 0 must stay away from the ovals for the construction to apply.
  if (gp.is_real() && hp.is_real() && compactness_check(gp)) {
    OvalSet ov = count_ovals(gp, std::nullopt, 128);
    bool meets = false;
    for (const auto& oval : ov.ovals) {
      int sign = 0;
      for (const auto& v : oval.vertices) {
        std::array<GaussianRational, 2> pt{mpq_class(v[0]), mpq_class(v[1])};
        int sv = sgn(hp.evaluate(pt).re());
        if (sign != 0 && sv != 0 && sv != sign) meets = true;
        if (sv != 0) sign = sv;
      }
    }
    s["h_meets_ovals"] = meets;
    if (meets) s["warning"] = "the line h = 0 crosses an oval of g";
  }
  return emit_document(doc, s, output);
}

Outcome cmd_construct_thm2b(int m, const std::string& output) {
  Thm2bPreset p = construct_thm2b(m);
  SystemDocument doc;
  doc.forms.push_back({"omega", p.result.form});
  for (std::size_t k = 0; k < p.result.affine_curves.size(); ++k)
    doc.curves.push_back({"f" + std::to_string(k + 1), p.result.affine_curves[k], {}});
  for (std::size_t k = 0; k < p.spec.weights.size(); ++k)
    doc.params.push_back({"lambda" + std::to_string(k + 1), p.spec.weights[k]});
  Json s = Json::object();
  s["m"] = m;
  s["degree"] = p.result.degree;
  int total = 0;
  for (const auto& F : p.spec.curves) total += F.degree();
  s["total_curve_degree"] = total;
  s["infinity_invariant"] = infinity_invariant(p.result.field);
  s["darboux"] = p.result.darboux;
  s["iif_product"] = p.result.iif;
  s["ratio_condition"] = ratio_condition_holds(p.spec.weights);
  return emit_document(doc, s, output);
}

Outcome cmd_ovals(const Common& c, const std::string& box, int res, const std::string& emit) {
  SystemDocument doc = load_document(c.input);
  const CurveEntry& e = select_curve(doc, c.curve);
  std::optional<Box> b;
  if (!box.empty()) b = parse_box(box);
  OvalSet s = count_ovals(e.f, b, res);
  Outcome o;
  o.report["curve"] = e.name;
  o.report["compact"] = compactness_check(e.f);
  o.report["result"] = oval_set_json(s);
  if (!emit.empty()) {
    std::vector<Polyline> lines;
    for (const auto& ov : s.ovals) lines.push_back(ov.vertices);
    std::ofstream f(emit, std::ios::binary);
    if (!f) throw DocumentError("cannot write '" + emit + "'");
    f << format_polylines(lines);
  }
  if (!s.complete || s.certified_count() != static_cast<int>(s.ovals.size())) o.code = kUnknown;
  return o;
}

Outcome cmd_certify(const Common& c, bool all, int res, double step, const std::string& V) {
  SystemDocument doc = load_document(c.input);
  AffineVectorField X = select_field(doc, c);
  const CurveEntry& e = select_curve(doc, c.curve);
  Outcome o;
  o.report["curve"] = e.name;
  auto cert = invariance_check(X, e.f);
  o.report["invariant"] = cert.has_value();
  if (!cert) {
    o.code = kFail;
    return o;
  }
  OvalSet s = count_ovals(e.f, std::nullopt, res);
  o.report["ovals"] = static_cast<int>(s.ovals.size());
  o.report["ovals_certified"] = s.certified_count();
  Json arr = Json::array();
  std::vector<Polyline> traced;
  for (std::size_t k = 0; k < s.ovals.size(); ++k) {
    if (!all && k > 0) break;
    Polyline p = trace_oval(e.f, s.ovals[k].vertices.front(), {step});
    CycleCertificate cc = certify_cycle(X, p, static_cast<int>(k));
    traced.push_back(p);
    Json j = Json::object();
    j["oval"] = cc.oval_id;
    // No separate period error; the tracing tolerance bounds it.
    j["period"] = number(cc.T, 1e-6 * cc.T);
    j["divergence_integral"] = number(cc.D, cc.error);
    j["stability"] = stability_name(cc.stability);
    j["hyperbolic"] = cc.hyperbolic;
    if (!cc.hyperbolic) o.code = kUnknown;
    arr.push_back(j);
  }
  if (!V.empty()) {
    auto loc = location_check(X, parse_poly(V, 2), traced);
    for (std::size_t k = 0; k < loc.size(); ++k) {
      arr[k]["v_residual"] = number(loc[k].residual, 1e-12);
      arr[k]["location_pass"] = loc[k].pass;
      if (!loc[k].pass) o.code = kFail;
    }
  }
  o.report["certificates"] = arr;
  if (s.ovals.empty()) o.code = kUnknown;
  return o;
}

Outcome cmd_iif(const Common& c, const std::string& V) {
  SystemDocument doc = load_document(c.input);
  AffineVectorField X = select_field(doc, c);
  MultiPoly v = V.empty() ? select_curve(doc, c.curve).f : parse_poly(V, 2);
  Outcome o;
  bool ok = iif_check(X, v);
  o.report["V"] = print_poly(v);
  o.report["divergence"] = print_poly(divergence(X));
  o.report["iif"] = ok;
  o.code = ok ? kPass : kFail;
  return o;
}

Outcome cmd_darboux(const Common& c, const std::vector<std::string>& curves, const std::vector<std::string>& weights) {
  SystemDocument doc = load_document(c.input);
  AffineVectorField X = select_field(doc, c);
  std::vector<std::string> names = curves;
  if (names.empty()) {
    const CurveEntry& e = select_curve(doc, c.curve);
    names = e.components.empty() ? std::vector<std::string>{e.name} : e.components;
  }
  std::vector<GaussianRational> lambda;
  if (!weights.empty()) {
    for (const auto& w : weights) lambda.push_back(parse_number(w));
  } else {
    for (std::size_t k = 0; k < names.size(); ++k) {
      auto* p = doc.find_param("lambda" + std::to_string(k + 1));
      if (!p) throw DocumentError("weights missing: pass --weight or define lambda1..lambdak");
      lambda.push_back(p->value);
    }
  }
  if (lambda.size() != names.size()) throw DomainError("one weight per curve is required");
  Outcome o;
  std::vector<CofactorCertificate> certs;
  Json arr = Json::array();
  for (const auto& n : names) {
    auto* e = doc.find_curve(n);
    if (!e) throw DocumentError("no curve named '" + n + "'");
    auto cert = invariance_check(X, e->f);
    if (!cert) {
      o.report["not_invariant"] = n;
      o.code = kFail;
      return o;
    }
    certs.push_back(*cert);
    arr.push_back(cert_json(*cert));
  }
  bool ok = darboux_check(certs, lambda);
  o.report["certificates"] = arr;
  o.report["sum_lambda_K_zero"] = ok;
  o.code = ok ? kPass : kFail;
  return o;
}

}  // namespace

// Defined in fixture_suite.cpp.
Json fixture_suite(bool& all_pass);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariant algebraic curves of polynomial foliations: exact certificates and bounds", "folia"};
  app.require_subcommand(1);
  Common c;
  auto add_common = [&](CLI::App* s, bool needs_input = true) {
    if (needs_input) s->add_option("input", c.input, "document file or gallery:NAME")->required();
    s->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    s->add_option("--field", c.field, "field entry to use");
    s->add_option("--form", c.form, "form entry to use");
    s->add_option("--curve", c.curve, "curve entry to use");
  };

  std::function<Outcome()> action;
  auto bind = [&](CLI::App* s, std::function<Outcome()> f) { s->callback([&action, f] { action = f; }); };

  auto* inv = app.add_subcommand("check-invariant", "verify X f = K f and report the cofactor");
  add_common(inv);
  bind(inv, [&] { return cmd_check_invariant(c, false); });
  auto* cof = app.add_subcommand("cofactor", "print the cofactor of an invariant curve");
  add_common(cof);
  bind(cof, [&] { return cmd_check_invariant(c, true); });
  auto* proj = app.add_subcommand("projectivize", "projective one-form of a field, or affinization of a form");
  add_common(proj);
  bind(proj, [&] { return cmd_projectivize(c); });
  auto* sing = app.add_subcommand("singularities", "finite and infinite singular points");
  add_common(sing);
  bind(sing, [&] { return cmd_singularities(c); });

  std::string point;
  auto* cls = app.add_subcommand("classify", "dicritical classification of singular points");
  add_common(cls);
  cls->add_option("--point", point, "point (X : Y : Z); default all singular points");
  bind(cls, [&] { return cmd_classify(c, point); });

  bool with_infinity = false;
  auto* nod = app.add_subcommand("nodal", "is the curve nodal");
  add_common(nod);
  nod->add_flag("--with-infinity", with_infinity, "also require transversal or nodal contact with Z = 0");
  bind(nod, [&] { return cmd_nodal(c, with_infinity); });

  int truncation = 0;
  auto* mul = app.add_subcommand("multiplicity", "branch multiplicities at a point");
  add_common(mul);
  mul->add_option("--point", point, "point (X : Y : Z)")->required();
  mul->add_option("--truncation", truncation, "series truncation order");
  bind(mul, [&] { return cmd_multiplicity(c, point, truncation); });

  std::optional<int> chi;
  auto* eul = app.add_subcommand("euler-check", "check chi = sum mu - n (m - 1)");
  add_common(eul);
  eul->add_option("--chi", chi, "Euler characteristic; default from the document or the genus formula");
  eul->add_option("--truncation", truncation, "series truncation order");
  bind(eul, [&] { return cmd_euler(c, chi, truncation); });

  auto* cor = app.add_subcommand("corollary2", "chi = -n (n - 3) through the Hamiltonian foliation");
  add_common(cor);
  bind(cor, [&] { return cmd_corollary2(c); });

  std::string theorem, orders, partition, range;
  int m = 1, n = 1;
  bool r_nonzero = false;
  auto* bnd = app.add_subcommand("bounds", "closed-form bounds");
  bnd->add_option("--theorem", theorem, "t1 t2 t4 harnack degree-nodal degree-nondicritical mk")
      ->required()
      ->check(CLI::IsMember({"t1", "t2", "t4", "harnack", "degree-nodal", "degree-nondicritical", "mk"}));
  bnd->add_option("--m", m, "foliation degree");
  bnd->add_option("--n", n, "curve degree (harnack)");
  bnd->add_flag("--r-nonzero", r_nonzero, "t2 with r not identically zero");
  bnd->add_option("--orders", orders, "singular orders, comma separated (harnack)");
  bnd->add_option("--partition", partition, "degree partition, comma separated (mk)");
  bnd->add_option("--range", range, "A:B table over m (or n for harnack)");
  bnd->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));
  bind(bnd, [&] { return cmd_bounds(theorem, m, r_nonzero, n, orders, partition, range); });

  auto* con = app.add_subcommand("construct", "build extremal objects as .fol documents");
  con->require_subcommand(1);
  std::string output;
  std::vector<std::string> curves, weights;
  auto* clog = con->add_subcommand("log", "logarithmic form from homogeneous curves and weights");
  clog->add_option("--curve", curves, "homogeneous curve in X, Y, Z (repeat)")->required();
  clog->add_option("--weight", weights, "weight lambda_i (repeat)")->required();
  clog->add_option("--output", output);
  clog->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));
  bind(clog, [&] { return cmd_construct_log(curves, weights, output); });
  std::string g, h, a = "1", b = "1";
  auto* ceee = con->add_subcommand("eee", "x' = a g - h g_y, y' = b g + h g_x");
  ceee->set_help_flag("--help", "print this help");
  ceee->add_option("--g", g)->required();
  ceee->add_option("--h", h)->required();
  ceee->add_option("--a", a);
  ceee->add_option("--b", b);
  ceee->add_option("--output", output);
  ceee->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));
  bind(ceee, [&] { return cmd_construct_eee(g, h, a, b, output); });
  auto* ct2 = con->add_subcommand("thm2b", "degree m foliation with invariant curves of total degree m + 2");
  ct2->add_option("--m", m)->required();
  ct2->add_option("--output", output);
  ct2->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));
  bind(ct2, [&] { return cmd_construct_thm2b(m, output); });
  std::string gname;
  auto* cgal = con->add_subcommand("gallery", "named fixture");
  cgal->add_option("name", gname)->required()->check(CLI::IsMember(gallery_names()));
  cgal->add_option("--output", output);
  cgal->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));
  bind(cgal, [&] {
    Json s = Json::object();
    s["name"] = gname;
    return emit_document(gallery(gname), s, output);
  });

  std::string box, emit;
  int res = 256;
  auto* ov = app.add_subcommand("ovals", "count and trace real ovals");
  add_common(ov);
  ov->add_option("--box", box, "x0,x1,y0,y1");
  ov->add_option("--res", res, "grid resolution");
  ov->add_option("--emit-polylines", emit, "write vertices, one oval per block");
  bind(ov, [&] { return cmd_ovals(c, box, res, emit); });

  bool all_ovals = false;
  double step = 0.01;
  std::string V;
  auto* cer = app.add_subcommand("certify", "hyperbolicity certificates for ovals of an invariant curve");
  add_common(cer);
  cer->add_flag("--all-ovals", all_ovals);
  cer->add_option("--res", res, "grid resolution for finding ovals");
  cer->add_option("--step", step, "tracing step");
  cer->add_option("--V", V, "inverse integrating factor for the location check");
  bind(cer, [&] { return cmd_certify(c, all_ovals, res, step, V); });

  auto* iif = app.add_subcommand("iif-check", "X V = div(X) V");
  add_common(iif);
  iif->add_option("--V", V, "polynomial; default the selected curve");
  bind(iif, [&] { return cmd_iif(c, V); });

  auto* dar = app.add_subcommand("darboux-check", "sum lambda_i K_i = 0");
  add_common(dar);
  dar->add_option("--curves", curves, "curve names (repeat)");
  dar->add_option("--weight", weights, "weights (repeat)");
  bind(dar, [&] { return cmd_darboux(c, curves, weights); });

  auto* ps = app.add_subcommand("paper-suite", "run the built-in reference fixtures");
  ps->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));
  bind(ps, [&] {
    Outcome o;
    bool pass = true;
    o.report = fixture_suite(pass);
    o.code = pass ? kPass : kFail;
    o.text = render_suite_text(o.report);
    return o;
  });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  Outcome o;
  try {
    o = action();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const DocumentError& e) {
    err << "document error: " << e.what() << "\n";
    return kUsage;
  } catch (const NonIsolatedError& e) {
    o.report = Json::object();
    o.report["error"] = e.what();
    o.code = kUnknown;
  } catch (const NumericError& e) {
    o.report = Json::object();
    o.report["error"] = e.what();
    o.code = kUnknown;
  } catch (const PreconditionError& e) {
    o.report = Json::object();
    o.report["error"] = e.what();
    o.code = kFail;
  } catch (const ArityError& e) {
    err << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    o.report = Json::object();
    o.report["error"] = e.what();
    o.code = kFail;
  }
  o.report["status"] = o.code == kPass ? "pass" : (o.code == kFail ? "fail" : "unknown");
  if (c.format == "json") {
    out << o.report.dump(2) << "\n";
  } else if (!o.text.empty() && !o.report.contains("error")) {
    out << o.text;
  } else {
    out << render_text(o.report);
  }
  return o.code;
}

}  // namespace folia::cli
