#include "schur/cli.hpp"

#include "schur/characters.hpp"
#include "schur/idealgen.hpp"
#include "schur/matrixoracle.hpp"
#include "schur/rootdata.hpp"
#include "schur/spinb.hpp"
#include "schur/weylgroup.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace schur::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string type;
  int n = 0;
  std::string datum_file;
  int r = -1;
  std::string module = "natural";
  std::string pi;
  std::string weight;
  std::string weights;
  bool q = false;
  bool classical = false;
  bool reduced = false;
  bool full = false;
  std::string basis;
  std::string family;
  bool json = false;
  int rmax = 4;
  long radius = 0;
  std::vector<std::string> skip;
};

// ---- parsing

Weight parse_weight(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != '(' && c != ')' && c != '[' && c != ']' && c != ' ') s += c;
  if (s.empty()) throw UsageError("empty weight");
  IntVector coords;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw UsageError("bad weight coordinate '" + item + "'");
    }
    if (used != item.size()) throw UsageError("bad weight coordinate '" + item + "'");
    coords.push_back(v);
  }
  return Weight(coords);
}

std::vector<Weight> parse_weight_list(const std::string& text) {
  std::vector<Weight> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';'))
    if (item.find_first_not_of(' ') != std::string::npos) out.push_back(parse_weight(item));
  if (out.empty()) throw UsageError("empty weight list");
  return out;
}

RootDatum load_datum(const Config& c) {
  if (!c.datum_file.empty()) {
    std::ifstream in(c.datum_file);
    if (!in) throw UsageError("cannot read " + c.datum_file);
    std::stringstream buf;
    buf << in.rdbuf();
    return load_root_datum_json(buf.str());
  }
  if (c.type.empty()) throw UsageError("give --type and --n, or --datum");
  if (c.type.rfind("sc:", 0) != 0 && c.n <= 0) throw UsageError("--n must be positive");
  return make_root_datum(c.type, c.n);
}

void check_length(const RootDatum& d, const Weight& w) {
  if (w.size() != d.rank())
    throw UsageError("weight " + to_string(w) + " needs " + std::to_string(d.rank()) + " coordinates");
}

Weight module_weight(const RootDatum& d, const Config& c) {
  if (!c.weight.empty()) {
    Weight w = parse_weight(c.weight);
    check_length(d, w);
    return w;
  }
  return module_highest_weight(d, c.module);
}

WeightSet resolve_pi(const RootDatum& d, const Config& c) {
  if (!c.pi.empty()) {
    WeightSet seeds;
    for (const Weight& w : parse_weight_list(c.pi)) {
      check_length(d, w);
      if (!is_dominant(d, w)) throw UsageError("pi seed " + to_string(w) + " is not dominant");
      seeds.insert(w);
    }
    return saturated_closure(d, seeds);
  }
  if (c.r < 0) throw UsageError("give --r (tensor power of --module) or --pi");
  return tensor_power_pi(d, module_weight(d, c), c.r);
}

bool quantized(const Config& c) {
  if (c.q && c.classical) throw UsageError("--q and --classical are exclusive");
  return !c.classical;
}

bool reduced(const Config& c) {
  if (c.reduced && c.full) throw UsageError("--reduced and --full are exclusive");
  return !c.full;
}

BasisChoice basis_of(const RootDatum& d, const Config& c, bool q) {
  if (c.basis.empty()) return default_basis(d, q);
  auto b = parse_basis_choice(c.basis);
  if (!b) throw UsageError("unknown basis '" + c.basis + "'");
  return *b;
}

std::vector<IntVector> family_of(const RootDatum& d, const Config& c, BasisChoice b, std::size_t n) {
  if (c.family.empty())
    return c.pi.empty() && c.weight.empty() ? preset_family(d, b, c.module) : default_family(n);
  std::vector<IntVector> fam;
  for (const Weight& w : parse_weight_list(c.family)) {
    if (w.size() != n) throw UsageError("family element " + to_string(w) + " needs " + std::to_string(n) + " entries");
    fam.push_back(w.coords);
  }
  return fam;
}

struct Setup {
  RootDatum d;
  WeightSet pi;
  WeightSet wpi;
  PointSet P;
  std::vector<IntVector> family;
};

Setup setup(const Config& c) {
  RootDatum d = load_datum(c);
  const bool q = quantized(c);
  WeightSet pi = resolve_pi(d, c);
  WeightSet wpi = w_orbit_union(d, pi);
  const BasisChoice b = basis_of(d, c, q);
  PointSet P = point_set(d, wpi, make_h_basis(d, b), q);
  auto fam = family_of(d, c, b, P.nvars());
  return Setup{std::move(d), std::move(pi), std::move(wpi), std::move(P), std::move(fam)};
}

// ---- output

Json weight_json(const Weight& w) { return Json(w.coords); }

Json weights_json(const WeightSet& s) {
  Json a = Json::array();
  for (const Weight& w : s) a.push_back(weight_json(w));
  return a;
}

Json rationals_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const Rational& q : v) {
    if (q.get_den() == 1)
      a.push_back(q.get_num().get_si());
    else
      a.push_back(rational_to_string(q));
  }
  return a;
}

Json kpoly_json(const KPolynomial& p) {
  Json a = Json::array();
  for (const auto& [e, c] : p.terms()) a.push_back({{"exps", e}, {"coeff", c.to_string()}});
  return a;
}

Json hpoly_json(const HPolynomial& p) {
  Json a = Json::array();
  for (const auto& [e, c] : p.terms()) a.push_back({{"exps", e}, {"coeff", rational_to_string(c)}});
  return a;
}

Json multiset_json(const RootDatum& d, const DominantMultiset& m) {
  Json a = Json::array();
  for (const auto& [w, k] : m)
    a.push_back({{"weight", weight_json(w)}, {"multiplicity", k.get_str()}, {"dim", weyl_dim(d, w).get_str()}});
  return a;
}

std::string weights_text(const WeightSet& s) {
  std::string out;
  for (const Weight& w : s) out += (out.empty() ? "" : " ") + to_string(w);
  return out;
}

Json report_json(const CheckReport& r) {
  Json failures = Json::array();
  for (std::size_t k = 0; k < r.failures.size() && k < 20; ++k) failures.push_back(r.failures[k]);
  return {{"name", r.name}, {"checks", r.checks}, {"passed", r.passed()}, {"failures", failures}};
}

void report_text(std::ostream& out, const CheckReport& r) {
  out << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks";
  if (!r.passed()) out << ", " << r.failures.size() << " failed, first: " << r.failures.front();
  out << ")\n";
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

// ---- subcommands

int cmd_orbit(const Config& c, std::ostream& out) {
  const RootDatum d = load_datum(c);
  if (c.weight.empty()) throw UsageError("orbit needs --weight");
  const Weight w = parse_weight(c.weight);
  check_length(d, w);
  const WeightSet o = orbit(d, w);
  if (c.json)
    emit(out, weights_json(o));
  else
    out << "orbit of " << to_string(w) << " (" << o.size() << "): " << weights_text(o) << "\n";
  return 0;
}

int cmd_saturate(const Config& c, std::ostream& out) {
  const RootDatum d = load_datum(c);
  const std::string& src = c.weights.empty() ? c.pi : c.weights;
  if (src.empty()) throw UsageError("saturate needs --weights");
  WeightSet seeds;
  for (const Weight& w : parse_weight_list(src)) {
    check_length(d, w);
    if (!is_dominant(d, w)) throw UsageError("seed " + to_string(w) + " is not dominant");
    seeds.insert(w);
  }
  const WeightSet s = saturated_closure(d, seeds);
  if (c.json)
    emit(out, weights_json(s));
  else
    out << "saturated closure (" << s.size() << "): " << weights_text(s) << "\n";
  return 0;
}

int cmd_wpi(const Config& c, std::ostream& out) {
  const RootDatum d = load_datum(c);
  const WeightSet pi = resolve_pi(d, c);
  const WeightSet w = w_orbit_union(d, pi);
  if (c.json) {
    emit(out, weights_json(w));
  } else {
    out << "pi (" << pi.size() << "): " << weights_text(pi) << "\n";
    out << "W pi (" << w.size() << "): " << weights_text(w) << "\n";
  }
  return 0;
}

int cmd_points(const Config& c, std::ostream& out) {
  const Setup s = setup(c);
  if (c.json) {
    Json pts = Json::array();
    for (std::size_t k = 0; k < s.P.size(); ++k)
      pts.push_back({{"weight", weight_json(s.P.weights[k])}, {"point", rationals_json(s.P.coords[k])}});
    emit(out, {{"datum", s.d.name()},
               {"quantized", s.P.quantized},
               {"basis", to_string(s.P.basis.choice)},
               {"points", pts}});
    return 0;
  }
  out << s.d.name() << ", " << (s.P.quantized ? "quantized" : "classical") << ", basis "
      << to_string(s.P.basis.choice) << ", " << s.P.size() << " points\n";
  for (std::size_t k = 0; k < s.P.size(); ++k) {
    out << to_string(s.P.weights[k]) << " -> (";
    for (std::size_t a = 0; a < s.P.coords[k].size(); ++a)
      out << (a ? "," : "") << rational_to_string(s.P.coords[k][a]);
    out << ")\n";
  }
  return 0;
}

Json generator_json(const IdealGenerator& g, bool q) {
  Json j = {{"h", g.h}, {"factored", g.factored}};
  if (q) {
    j["polynomial"] = kpoly_json(g.k_poly);
    j["polynomial_form"] = g.factored_polynomial;
    j["polynomial_form_terms"] = kpoly_json(g.g_poly);
  } else {
    j["polynomial"] = hpoly_json(g.h_poly);
  }
  return j;
}

int cmd_gens(const Config& c, std::ostream& out) {
  const Setup s = setup(c);
  const bool red = reduced(c);
  const PresentationReport rep = presentation(s.d, s.P, s.family, red);
  if (c.json) {
    Json gens = Json::array();
    for (const IdealGenerator& g : rep.ideal) gens.push_back(generator_json(g, rep.quantized));
    emit(out, {{"datum", rep.datum},
               {"quantized", rep.quantized},
               {"basis", to_string(rep.basis)},
               {"reduced", red},
               {"generators", gens}});
    return 0;
  }
  for (const IdealGenerator& g : rep.ideal) out << g.factored << "\n";
  return 0;
}

int cmd_idempotents(const Config& c, std::ostream& out) {
  const Setup s = setup(c);
  const std::string var = s.P.quantized ? "K" : "H";
  auto factors = [&](const auto& roots, auto render) {
    std::string f;
    for (std::size_t a = 0; a < roots.size(); ++a)
      for (const auto& r : roots[a]) f += (f.empty() ? "" : "*") + std::string("(") + var + std::to_string(a + 1) + " - " + render(r) + ")";
    return f.empty() ? std::string("1") : f;
  };
  Json arr = Json::array();
  for (const Weight& lam : s.P.weights) {
    std::string text;
    Json j = {{"weight", weight_json(lam)}};
    if (s.P.quantized) {
      const Idempotent e = idempotent(s.P, lam);
      const std::string num = factors(e.roots, [](std::int64_t r) { return VLaurent::monomial(static_cast<int>(r)).to_string(); });
      text = num + " / (" + e.denominator.to_string() + ")";
      Json roots = Json::array();
      for (const auto& r : e.roots) roots.push_back(r);
      j["roots"] = roots;
      j["denominator"] = e.denominator.to_string();
    } else {
      const ClassicalIdempotent e = classical_idempotent(s.P, lam);
      const std::string num = factors(e.roots, [](const Rational& r) { return rational_to_string(r); });
      text = num + " / " + rational_to_string(e.denominator);
      Json roots = Json::array();
      for (const auto& r : e.roots) roots.push_back(rationals_json(r));
      j["roots"] = roots;
      j["denominator"] = rational_to_string(e.denominator);
    }
    j["factored"] = text;
    arr.push_back(j);
    if (!c.json) out << "1_" << to_string(lam) << " = " << text << "\n";
  }
  if (c.json)
    emit(out, {{"datum", s.d.name()},
               {"quantized", s.P.quantized},
               {"basis", to_string(s.P.basis.choice)},
               {"idempotents", arr}});
  return 0;
}

int cmd_present(const Config& c, std::ostream& out) {
  const Setup s = setup(c);
  const bool red = reduced(c);
  const PresentationReport rep = presentation(s.d, s.P, s.family, red);
  if (c.json) {
    Json gens = Json::array();
    for (const IdealGenerator& g : rep.ideal) gens.push_back(generator_json(g, rep.quantized));
    emit(out, {{"datum", rep.datum},
               {"quantized", rep.quantized},
               {"basis", to_string(rep.basis)},
               {"reduced", red},
               {"pi", weights_json(s.pi)},
               {"generators", rep.generators},
               {"relations", rep.relations},
               {"ideal", gens}});
    return 0;
  }
  out << rep.datum << ", " << (rep.quantized ? "quantized" : "classical") << ", basis " << to_string(rep.basis)
      << "\npi: " << weights_text(s.pi) << "\ngenerators:";
  for (const auto& g : rep.generators) out << " " << g;
  out << "\nrelations:\n";
  for (const auto& r : rep.relations) out << "  " << r << "\n";
  out << "ideal generators:\n";
  for (const IdealGenerator& g : rep.ideal) out << "  " << g.factored << "\n";
  return 0;
}

int cmd_dim(const Config& c, std::ostream& out) {
  const RootDatum d = load_datum(c);
  const WeightSet pi = resolve_pi(d, c);
  const Integer total = dim_schur(d, pi);
  if (c.json) {
    Json per = Json::array();
    for (const Weight& w : pi) per.push_back({{"weight", weight_json(w)}, {"dim", weyl_dim(d, w).get_str()}});
    emit(out, {{"datum", d.name()}, {"pi", per}, {"dim", total.get_str()}});
  } else {
    out << total << "\n";
  }
  return 0;
}

int cmd_piplus(const Config& c, std::ostream& out) {
  const RootDatum d = load_datum(c);
  if (c.r < 0) throw UsageError("piplus needs --r");
  const Weight v = module_weight(d, c);
  const DominantMultiset factors = tensor_power_factors(d, v, c.r);
  DominantMultiset mult;
  for (const auto& [lam, k] : factors)
    for (const auto& [mu, m] : freudenthal(d, lam))
      if (is_dominant(d, mu)) mult[mu] += k * m;
  if (c.json) {
    Json a = Json::array();
    for (const auto& [w, m] : mult) a.push_back({{"weight", weight_json(w)}, {"multiplicity", m.get_str()}});
    emit(out, a);
  } else {
    for (const auto& [w, m] : mult) out << to_string(w) << " " << m << "\n";
  }
  return 0;
}

Json saturation_json(const SaturationCheck& s) {
  return {{"r", s.r},
          {"saturated", s.saturated},
          {"factor_highest_weights", weights_json(s.factor_highest_weights)},
          {"dominant_weights", weights_json(s.dominant_weights)},
          {"missing", weights_json(s.missing)}};
}

int cmd_saturated_module(const Config& c, std::ostream& out) {
  const RootDatum d = load_datum(c);
  if (c.r < 0) throw UsageError("saturated-module needs --r");
  const Weight v = module_weight(d, c);
  const SaturationCheck s = check_saturated_module(d, v, c.r);
  if (c.json) {
    Json j = saturation_json(s);
    j["factors"] = multiset_json(d, tensor_power_factors(d, v, c.r));
    emit(out, j);
  } else {
    out << "L" << to_string(v) << "^(x)" << c.r << (s.saturated ? " is saturated" : " is not saturated") << "\n";
    out << "factor highest weights: " << weights_text(s.factor_highest_weights) << "\n";
    out << "dominant weights: " << weights_text(s.dominant_weights) << "\n";
    if (!s.missing.empty()) out << "missing: " << weights_text(s.missing) << "\n";
  }
  return 0;
}

int cmd_conjecture(const Config& c, std::ostream& out) {
  const RootDatum d = load_datum(c);
  const Weight v = module_weight(d, c);
  const ConjectureReport rep = conjecture_scan(d, v, c.rmax);
  if (c.json) {
    Json per = Json::array();
    for (const SaturationCheck& s : rep.per_r)
      per.push_back({{"r", s.r}, {"saturated", s.saturated}, {"missing", weights_json(s.missing)}});
    Json j = {{"datum", d.name()},
              {"highest_weight", weight_json(rep.v)},
              {"dimension", rep.dimension.get_str()},
              {"orbit_size", rep.orbit_size},
              {"minuscule", rep.minuscule},
              {"per_r", per}};
    j["witness"] = rep.witness ? Json(*rep.witness) : Json(nullptr);
    emit(out, j);
  } else {
    out << d.name() << " L" << to_string(rep.v) << ": dim " << rep.dimension << ", orbit " << rep.orbit_size
        << (rep.minuscule ? ", minuscule" : ", not minuscule") << "\n";
    for (const SaturationCheck& s : rep.per_r)
      out << "  r=" << s.r << (s.saturated ? " saturated" : " not saturated, missing " + weights_text(s.missing))
          << "\n";
    if (rep.witness) out << "  first non-saturated power: r=" << *rep.witness << "\n";
  }
  return 0;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

int cmd_verify(const Config& c, std::ostream& out) {
  const Setup s = setup(c);
  const std::vector<IntVector> fam = verification_family(s.P.nvars(), s.family);
  std::vector<CheckReport> reports;
  reports.push_back(verify_vanishing(s.P, fam));
  if (s.P.quantized) {
    reports.push_back(verify_G_identity(s.P, fam));
    for (auto& r : verify_zero_part_identities(s.d, s.P, s.family)) reports.push_back(std::move(r));
    for (std::size_t j = 0; j < s.d.num_simple(); ++j) reports.push_back(verify_shift_lemma(s.d, s.P, j));
    reports.push_back(verify_classical_specialization(s.d, s.P, s.family));
  } else {
    reports.push_back(verify_classical_idempotents(s.P));
  }
  (void)presentation(s.d, s.P, s.family, reduced(c));

  Json extra = Json::object();
  if (!contains(c.skip, "zero-set")) {
    const ZeroSetReport z = verify_zero_set(s.d, s.P, c.radius);
    CheckReport r{"zero set of the generators equals W pi (radius " + std::to_string(z.radius) + ")", z.box_points, {}};
    if (!z.match()) {
      WeightSet extra_pts, lost;
      for (const Weight& w : z.zero_set)
        if (!z.expected.count(w)) extra_pts.insert(w);
      for (const Weight& w : z.expected)
        if (!z.zero_set.count(w)) lost.insert(w);
      r.failures.push_back("extra: " + weights_text(extra_pts) + "; missing: " + weights_text(lost));
    }
    reports.push_back(r);
    Json generic = Json::array();
    for (const auto& h : z.generic) generic.push_back(h);
    extra["zero_set"] = {{"radius", z.radius}, {"box_points", z.box_points}, {"generic", generic}};
  }
  if (s.P.quantized && !contains(c.skip, "jacobian")) {
    CheckReport r{"Jacobian spot check", 0, {}};
    for (const Weight& lam : s.P.weights) {
      const JacobianReport j = jacobian_spot_check(s.P, lam);
      ++r.checks;
      if (!j.ok()) r.failures.push_back("at " + to_string(lam));
    }
    reports.push_back(r);
  }

  const bool ok = all_passed(reports);
  if (c.json) {
    Json rs = Json::array();
    for (const auto& r : reports) rs.push_back(report_json(r));
    Json j = {{"datum", s.d.name()},
              {"quantized", s.P.quantized},
              {"basis", to_string(s.P.basis.choice)},
              {"points", s.P.size()},
              {"reports", rs},
              {"passed", ok}};
    for (auto& [k, v] : extra.items()) j[k] = v;
    emit(out, j);
  } else {
    out << s.d.name() << ", " << (s.P.quantized ? "quantized" : "classical") << ", basis "
        << to_string(s.P.basis.choice) << ", |W pi| = " << s.P.size() << "\n";
    for (const auto& r : reports) report_text(out, r);
    out << (ok ? "all checks passed" : "some checks failed") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_oracle(const Config& c, std::ostream& out) {
  const RootDatum d = load_datum(c);
  if (d.kind() != "gl") throw UsageError("the matrix oracle needs --type gl");
  const WeightSet pi = resolve_pi(d, c);
  const RepBlock model = model_for(d, pi);
  std::vector<CheckReport> reports;
  reports.push_back(check_presentation(d, model, pi));
  const PointSet P = point_set(d, w_orbit_union(d, pi), make_h_basis(d, BasisChoice::epsilon), false);
  std::vector<HPolynomial> gens;
  for (const IntVector& h : verification_family(P.nvars(), preset_family(d, BasisChoice::epsilon, "natural")))
    gens.push_back(classical_generator(P, h, true));
  reports.push_back(check_ideal_vanishing(model, gens));
  const Integer expected = dim_schur(d, pi);
  CheckReport closure{"closure dimension equals sum of squared dimensions", 1, {}};
  std::string closure_text;
  try {
    const std::size_t got = closure_dimension(model);
    closure_text = std::to_string(got);
    if (Integer(static_cast<unsigned long>(got)) != expected)
      closure.failures.push_back("closure " + closure_text + " vs " + expected.get_str());
  } catch (const std::length_error& e) {
    closure_text = "capped";
    closure.failures.push_back(e.what());
  }
  reports.push_back(closure);
  const bool ok = all_passed(reports);
  if (c.json) {
    Json rs = Json::array();
    for (const auto& r : reports) rs.push_back(report_json(r));
    emit(out, {{"datum", d.name()},
               {"pi", weights_json(pi)},
               {"model_dim", model.dim()},
               {"closure_dimension", closure_text},
               {"dim_schur", expected.get_str()},
               {"reports", rs},
               {"passed", ok}});
  } else {
    out << d.name() << ", pi: " << weights_text(pi) << ", model dim " << model.dim() << "\n";
    for (const auto& r : reports) report_text(out, r);
    out << "closure dimension " << closure_text << ", sum of squares " << expected << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_spin(const Config& c, std::ostream& out) {
  if (c.n < 2) throw UsageError("spin needs --n >= 2");
  const RootDatum d = preset::so_odd(c.n);
  const SpinSquareReport sq = check_spin_square(d);
  const SpinSaturationReport sat = check_spin_saturation(d, c.rmax);
  const bool ok = sq.ok() && sat.ok();
  if (c.json) {
    Json dims = Json::array();
    for (const auto& [have, want] : sq.dims) dims.push_back({have.get_str(), want.get_str()});
    Json per = Json::array();
    for (const auto& e : sat.per_r)
      per.push_back({{"r", e.r},
                     {"highest_weights", weights_json(e.highest_weights)},
                     {"expected", weights_json(e.expected)},
                     {"matches", e.matches()},
                     {"saturated", e.saturated()},
                     {"expected_is_saturated", e.expected_is_saturated}});
    emit(out, {{"datum", d.name()},
               {"n", c.n},
               {"square", {{"factors", multiset_json(d, sq.factors)},
                           {"dims", dims},
                           {"total", sq.total.get_str()},
                           {"ok", sq.ok()}}},
               {"per_r", per},
               {"passed", ok}});
  } else {
    out << d.name() << ": S (x) S = ";
    bool first = true;
    for (const auto& [w, k] : sq.factors) {
      out << (first ? "" : " + ") << "L" << to_string(w);
      first = false;
    }
    out << ", dim " << sq.total << (sq.ok() ? " (ok)" : " (MISMATCH)") << "\n";
    for (const auto& e : sat.per_r)
      out << "  r=" << e.r << " highest weights " << weights_text(e.highest_weights)
          << (e.matches() ? "" : " (expected " + weights_text(e.expected) + ")")
          << (e.saturated() ? ", saturated" : ", not saturated") << "\n";
    out << (ok ? "all checks passed" : "some checks failed") << "\n";
  }
  return ok ? 0 : 1;
}

// ---- option wiring

void datum_opts(CLI::App* s, Config& c) {
  s->add_option("--type", c.type, "gl, A, B, C, D, or sc:X_n");
  s->add_option("--n", c.n, "rank parameter");
  s->add_option("--datum", c.datum_file, "root datum JSON file");
}

void pi_opts(CLI::App* s, Config& c) {
  s->add_option("--r", c.r, "tensor power of the module");
  s->add_option("--module", c.module, "natural, spin, or adjoint")->check(CLI::IsMember({"natural", "spin", "adjoint"}));
  s->add_option("--weight", c.weight, "highest weight of the module, overriding --module");
  s->add_option("--pi", c.pi, "dominant seeds, e.g. \"(2,0);(1,1)\"");
}

void path_opts(CLI::App* s, Config& c) {
  s->add_flag("--q", c.q, "quantized path (default)");
  s->add_flag("--classical", c.classical, "classical path");
  s->add_flag("--reduced", c.reduced, "distinct-value generators (default)");
  s->add_flag("--full", c.full, "one factor per point");
  s->add_option("--basis", c.basis, "datum, coroot, or epsilon");
  s->add_option("--family", c.family, "h vectors in H-coordinates, e.g. \"(1,1);(1,0)\"");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"schur: generalized (q-)Schur algebra presentations"};
  app.require_subcommand(1);
  Config c;
  std::vector<std::pair<CLI::App*, std::function<int(const Config&, std::ostream&)>>> cmds;
  auto add = [&](const std::string& name, const std::string& help, auto fn) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_flag("--json", c.json, "JSON output");
    datum_opts(s, c);
    cmds.emplace_back(s, fn);
    return s;
  };

  auto* orbit_cmd = add("orbit", "W-orbit of a weight", cmd_orbit);
  orbit_cmd->add_option("--weight", c.weight, "weight in X-coordinates")->required();
  auto* sat = add("saturate", "saturated closure of dominant seeds", cmd_saturate);
  sat->add_option("--weights", c.weights, "seeds, e.g. \"(2,0);(1,1)\"")->required();
  pi_opts(add("wpi", "W pi", cmd_wpi), c);
  for (auto [name, help, fn] : std::vector<std::tuple<std::string, std::string, int (*)(const Config&, std::ostream&)>>{
           {"points", "the point set P_{W pi}", cmd_points},
           {"gens", "extra ideal generators", cmd_gens},
           {"idempotents", "interpolation idempotents", cmd_idempotents},
           {"present", "presentation of the (q-)Schur algebra", cmd_present}}) {
    auto* s = add(name, help, fn);
    pi_opts(s, c);
    path_opts(s, c);
  }
  pi_opts(add("dim", "sum over pi of (dim L(lambda))^2", cmd_dim), c);
  pi_opts(add("piplus", "dominant weights of V^(x)r with multiplicities", cmd_piplus), c);
  pi_opts(add("saturated-module", "saturation test for V^(x)r", cmd_saturated_module), c);
  auto* conj = add("conjecture", "minuscule and saturation scan", cmd_conjecture);
  pi_opts(conj, c);
  conj->add_option("--rmax", c.rmax, "largest tensor power");
  auto* ver = add("verify", "run the verification suite", cmd_verify);
  pi_opts(ver, c);
  path_opts(ver, c);
  ver->add_option("--radius", c.radius, "zero-set box radius (0: automatic)");
  ver->add_option("--skip", c.skip, "zero-set and/or jacobian");
  pi_opts(add("oracle", "matrix-model check for gl_n", cmd_oracle), c);
  add("spin", "spin module checks in type B", cmd_spin)->add_option("--rmax", c.rmax, "largest tensor power");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  try {
    for (auto& [s, fn] : cmds)
      if (s->parsed()) return fn(c, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace schur::cli
