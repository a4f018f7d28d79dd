#include "cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>

#include "cli/payload.hpp"
#include "junction/correspondence.hpp"
#include "junction/deficiency.hpp"
#include "junction/scattering.hpp"

namespace junction::cli {

namespace {

using nlohmann::json;

constexpr double kSymmetryTol = 1e-12;
constexpr double kInf = std::numeric_limits<double>::infinity();

/// Raw flag text shared by the subcommands; parsed after CLI11 is done.
struct Flags {
  std::string direction;
  std::string matrix;
  std::string gamma;
  std::string diag;
  std::string alpha;
  std::string bd;
  std::string rho;
  std::string face = "left";
  std::string format = "csv";
  std::string demo_format = "text";
  std::string out_path;
  std::vector<std::string> phases;
  double mass = 0.0;
  double tol = kDefaultTol;
  double e_min = 0.0;
  double e_max = 0.0;
  int steps = 2;
  std::size_t fuzz = 0;
  std::size_t samples = 100;
  std::uint64_t seed = kDefaultSeed;
};

/// JSON has no inf/nan; those go out as strings.
json number(double v) { return std::isfinite(v) ? json(v) : json(format_double(v)); }

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

int count_set(std::initializer_list<const std::string*> payloads) {
  return static_cast<int>(std::count_if(payloads.begin(), payloads.end(), [](const auto* s) { return !s->empty(); }));
}

AlphaBC parse_alpha(const std::string& text) {
  const auto v = parse_complex_list(text, 4);
  return {v[0], v[1], v[2], v[3]};
}

/// "rho_plus,rho_minus"; either entry may be inf.
RhoBC parse_rho(const std::string& text) {
  const auto s = std::string_view(text);
  if (!s.empty() && s.front() == '[') {
    const json j = json::parse(s, nullptr, false);
    if (!j.is_array() || j.size() != 2) throw ParseError("expected [rho_plus, rho_minus]: '" + text + "'");
    auto entry = [](const json& e) {
      return e.is_string() ? parse_extended(e.get<std::string>()) : parse_extended(e.dump());
    };
    return {entry(j[0]), entry(j[1])};
  }
  const auto comma = s.find(',');
  if (comma == std::string_view::npos || s.find(',', comma + 1) != std::string_view::npos) {
    throw ParseError("expected rho_plus,rho_minus: '" + text + "'");
  }
  return {parse_extended(s.substr(0, comma)), parse_extended(s.substr(comma + 1))};
}

QuaternionForm parse_gamma(const std::string& text) {
  const auto v = parse_complex_list(text, 3);
  return {v[0], v[1], v[2]};
}

BDForm parse_bd(const std::string& text) {
  const auto s = std::string_view(text);
  if (!s.empty() && s.front() == '[') {
    const auto v = parse_real_list(s, 5);
    return {v[0], v[1], v[2], v[3], v[4]};
  }
  const auto comma = s.find(',');
  if (comma == std::string_view::npos) throw ParseError("expected theta,b1,b2,b3,b4: '" + text + "'");
  const auto b = parse_real_list(s.substr(comma + 1), 4);
  return {parse_angle(s.substr(0, comma)), b[0], b[1], b[2], b[3]};
}

Face parse_face(const std::string& text) {
  if (text == "left") return Face::Left;
  if (text == "right") return Face::Right;
  throw ParseError("face must be left or right: '" + text + "'");
}

json rho_json(const RhoBC& r) {
  return {{"type", "separating"}, {"rho_plus", to_json(r.rho_plus)}, {"rho_minus", to_json(r.rho_minus)}};
}

json class_json(const ExtensionClass& bc) {
  if (const auto* r = std::get_if<RhoBC>(&bc)) return rho_json(*r);
  return {{"type", "transmitting"}, {"alpha", to_json(std::get<AlphaBC>(bc))}};
}

// ---------------------------------------------------------------- decompose

int cmd_decompose(const Flags& f, std::ostream& out) {
  const U2Decomposition d = decompose_u2_detailed(parse_matrix(f.matrix), f.tol);
  json j = to_json(d.form);
  j["branch"] = d.branch == DecomposeBranch::OffDiagonal ? "off_diagonal" : "diagonal";
  emit(out, j);
  return kSuccess;
}

// ------------------------------------------------------------------ convert

json rho_to_u2_json(const RhoBC& r, Mass m) {
  const DiagonalPair g = rho_to_diagonal_u2(r, m);
  return {{"gamma_L", to_json(g.gL)},
          {"gamma_R", to_json(g.gR)},
          {"matrix", to_json(C2Matrix::diagonal(g.gL, g.gR))}};
}

int cmd_convert(const Flags& f, std::ostream& out) {
  const Mass m(f.mass);
  const std::string& dir = f.direction;

  if (dir == "u2-to-bc") {
    if (count_set({&f.matrix, &f.gamma, &f.diag}) != 1) {
      throw ParseError("u2-to-bc needs exactly one of --matrix, --gamma, --diag");
    }
    if (!f.gamma.empty()) {
      const QuaternionForm q = parse_gamma(f.gamma);
      const C2Matrix u = compose(q, f.tol);
      // The closed form works on the triple directly; only diagonal U goes through classify.
      const ExtensionClass bc =
          std::abs(q.g2) > f.tol ? ExtensionClass{u2_to_alpha(q, m, f.tol)} : classify(u, m, f.tol);
      emit(out, class_json(bc));
      return kSuccess;
    }
    C2Matrix u;
    if (!f.diag.empty()) {
      const auto d = parse_complex_list(f.diag, 2);
      u = C2Matrix::diagonal(d[0], d[1]);
    } else {
      u = parse_matrix(f.matrix);
    }
    emit(out, class_json(classify(u, m, f.tol)));
    return kSuccess;
  }

  if (dir == "bc-to-u2") {
    if (count_set({&f.alpha, &f.rho}) != 1) throw ParseError("bc-to-u2 needs exactly one of --alpha, --rho");
    if (!f.rho.empty()) {
      emit(out, rho_to_u2_json(parse_rho(f.rho), m));
      return kSuccess;
    }
    const AlphaBC a = parse_alpha(f.alpha);
    const QuaternionForm q = alpha_to_u2(a, m, f.tol);
    const InverseComparison c = compare_printed_inverse(a, m);
    json j = to_json(q);
    j["matrix"] = to_json(compose(q));
    json printed = to_json(c.printed);
    printed["agreement"] = to_string(c.agreement);
    printed["agrees_exactly"] = c.agreement == PrintedAgreement::Exact;
    printed["agrees_up_to_sign_pair"] = c.agreement == PrintedAgreement::SignPair;
    printed["disagrees"] = c.agreement == PrintedAgreement::Mismatch;
    printed["deviation"] = c.deviation;
    j["printed_formula"] = printed;
    emit(out, j);
    return kSuccess;
  }

  if (dir == "alpha-to-bd") {
    if (f.alpha.empty()) throw ParseError("alpha-to-bd needs --alpha");
    const BDForm bd = alpha_to_bd(parse_alpha(f.alpha), f.tol);
    emit(out, {{"theta", bd.theta}, {"a", json::array({bd.b1, bd.b2, bd.b3, bd.b4})}});
    return kSuccess;
  }

  if (dir == "bd-to-alpha") {
    if (f.bd.empty()) throw ParseError("bd-to-alpha needs --bd theta,b1,b2,b3,b4");
    emit(out, {{"alpha", to_json(bd_to_alpha(parse_bd(f.bd), f.tol))}});
    return kSuccess;
  }

  // rho-to-u2
  if (f.rho.empty()) throw ParseError("rho-to-u2 needs --rho");
  emit(out, rho_to_u2_json(parse_rho(f.rho), m));
  return kSuccess;
}

// ------------------------------------------------------------------- verify

struct Check {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  /// true: value must exceed threshold; false: value must not exceed it.
  bool lower_bound = false;
  std::size_t count = 0;

  bool passed() const noexcept { return lower_bound ? value > threshold : value <= threshold; }
};

/// Running worst case of every named check.
class Checker {
 public:
  void upper(const std::string& name, double value, double threshold) { record(name, value, threshold, false); }
  void lower(const std::string& name, double value, double threshold) { record(name, value, threshold, true); }
  void note(const std::string& key, json value) { notes_[key] = std::move(value); }

  bool passed() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed(); });
  }
  const Check* first_failure() const {
    const auto it = std::find_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.passed(); });
    return it == checks_.end() ? nullptr : &*it;
  }

  json to_json() const {
    json list = json::array();
    for (const Check& c : checks_) {
      list.push_back({{"name", c.name},
                      {c.lower_bound ? "min_value" : "max_residual", number(c.value)},
                      {"threshold", c.threshold},
                      {"instances", c.count},
                      {"passed", c.passed()}});
    }
    json j = {{"checks", list}, {"result", passed() ? "PASS" : "FAIL"}};
    if (!notes_.empty()) j["notes"] = notes_;
    return j;
  }

 private:
  void record(const std::string& name, double value, double threshold, bool lower_bound) {
    auto it = std::find_if(checks_.begin(), checks_.end(), [&](const Check& c) { return c.name == name; });
    if (it == checks_.end()) {
      checks_.push_back({name, value, threshold, lower_bound, 0});
      it = std::prev(checks_.end());
    }
    const bool worse = std::isnan(value) || (lower_bound ? value < it->value : value > it->value);
    if (worse) it->value = value;
    ++it->count;
  }

  std::vector<Check> checks_;
  json notes_ = json::object();
};

double extended_gap(const ExtendedReal& a, const ExtendedReal& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite() ? 0.0 : kInf;
  return std::abs(a.value() - b.value()) / std::max(1.0, std::abs(a.value()));
}

double rho_gap(const RhoBC& a, const RhoBC& b) {
  return std::max(extended_gap(a.rho_plus, b.rho_plus), extended_gap(a.rho_minus, b.rho_minus));
}

/// ‖B†σxB − σx‖_max: the current-conservation identity.
double current_form_residual(const AlphaBC& a) {
  const C2Matrix b = a.matrix();
  const C2Matrix sx{0.0, 1.0, 1.0, 0.0};
  return max_norm(b.adjoint() * sx * b - sx);
}

void record_selfadjoint(Checker& c, const std::string& prefix, const ExtensionClass& bc, std::size_t samples,
                        std::uint64_t seed) {
  const SelfAdjointReport r = verify_selfadjoint_domain(bc, samples, seed);
  c.upper(prefix + "boundary_form_symmetry", r.max_symmetry_residual, kSymmetryTol);
  c.lower(prefix + "boundary_form_maximality", r.min_witness_form, 1e-6);
}

void check_alpha(Checker& c, const std::string& prefix, const AlphaBC& a, Mass m, const Flags& f,
                 std::uint64_t seed) {
  const ClassReport report = validate_class(a, f.tol);
  c.upper(prefix + "class", report.max_scaled_residual(), f.tol);
  if (!report.valid) {
    const std::size_t w = report.worst();
    c.note("worst_class_residual", {{"name", ClassReport::kNames[w]}, {"value", report.residuals[w]}});
    return;
  }
  c.upper(prefix + "current_form", current_form_residual(a) / report.scale, f.tol);
  record_selfadjoint(c, prefix, a, f.samples, seed);
  const QuaternionForm q = alpha_to_u2(a, m, f.tol);
  c.upper(prefix + "round_trip", max_abs_diff(u2_to_alpha(q, m), a) / report.scale, f.tol);
  const C2Matrix u = compose(q);
  double oracle = 0.0;
  for (double lambda : {0.0, 0.5, 2.0}) {
    oracle = std::max(oracle, max_abs_diff(oracle_alpha_from_u2(u, m, lambda), a.matrix()) / report.scale);
  }
  c.upper(prefix + "oracle_agreement", oracle, f.tol);
}

void check_rho(Checker& c, const std::string& prefix, const RhoBC& r, Mass m, const Flags& f, std::uint64_t seed) {
  const DiagonalPair g = rho_to_diagonal_u2(r, m);
  c.upper(prefix + "round_trip", rho_gap(diagonal_u2_to_rho(g.gL, g.gR, m), r), f.tol);
  c.upper(prefix + "oracle_agreement", rho_gap(oracle_rho_from_diagonal(g.gL, g.gR, m), r), f.tol);
  record_selfadjoint(c, prefix, r, f.samples, seed);
  double leak = 0.0;
  for (Face face : {Face::Left, Face::Right}) {
    const ScatteringResult s = scatter_rho(r, m.value() + 1.0, m, face);
    leak = std::max({leak, s.T, std::abs(std::abs(s.r) - 1.0)});
  }
  c.upper(prefix + "no_transmission", leak, kSymmetryTol);
}

void check_unitary(Checker& c, const std::string& prefix, const C2Matrix& u, Mass m, const Flags& f,
                   std::uint64_t seed) {
  const double defect = unitarity_residual(u);
  c.upper(prefix + "unitary", defect, f.tol);
  if (!(defect <= f.tol)) return;
  const QuaternionForm q = decompose_u2(u, f.tol);
  c.upper(prefix + "decompose_round_trip", max_abs_diff(compose(q), u), f.tol);
  const ExtensionClass bc = classify(u, m, f.tol);
  if (const auto* r = std::get_if<RhoBC>(&bc)) {
    c.upper(prefix + "oracle_agreement", rho_gap(oracle_rho_from_diagonal(u.u11, u.u22, m), *r), f.tol);
    record_selfadjoint(c, prefix, bc, f.samples, seed);
    return;
  }
  const AlphaBC& a = std::get<AlphaBC>(bc);
  const ClassReport report = validate_class(a, f.tol);
  c.upper(prefix + "class", report.max_scaled_residual(), f.tol);
  double oracle = 0.0;
  for (double lambda : {0.0, 0.5, 2.0}) {
    oracle = std::max(oracle, max_abs_diff(oracle_alpha_from_u2(u, m, lambda), a.matrix()) / report.scale);
  }
  c.upper(prefix + "oracle_agreement", oracle, f.tol);
  c.upper(prefix + "round_trip", max_abs_diff(compose(alpha_to_u2(a, m, f.tol)), u), f.tol);
  record_selfadjoint(c, prefix, bc, f.samples, seed);
}

int cmd_verify(const Flags& f, std::ostream& out, std::ostream& err) {
  const Mass m(f.mass);
  const int payloads = count_set({&f.alpha, &f.rho, &f.matrix, &f.gamma});
  if (payloads > 1 || (payloads == 1 && f.fuzz > 0)) {
    throw ParseError("verify takes one of --alpha, --rho, --matrix, --gamma, --fuzz");
  }
  if (payloads == 0 && f.fuzz == 0) throw ParseError("verify needs a payload or --fuzz N");

  Checker c;
  if (!f.alpha.empty()) {
    check_alpha(c, "", parse_alpha(f.alpha), m, f, f.seed);
  } else if (!f.rho.empty()) {
    check_rho(c, "", parse_rho(f.rho), m, f, f.seed);
  } else if (!f.matrix.empty()) {
    check_unitary(c, "", parse_matrix(f.matrix), m, f, f.seed);
  } else if (!f.gamma.empty()) {
    const QuaternionForm q = parse_gamma(f.gamma);
    c.upper("form", form_residual(q), f.tol);
    if (form_residual(q) <= f.tol) check_unitary(c, "", compose(q, f.tol), m, f, f.seed);
  } else {
    Sampler rng(f.seed);
    for (std::size_t k = 0; k < f.fuzz; ++k) {
      const std::uint64_t seed = f.seed + k;
      check_alpha(c, "alpha.", rng.alpha(), m, f, seed);
      check_unitary(c, "unitary.", rng.unitary(), m, f, seed);
      check_rho(c, "rho.", rng.rho(), m, f, seed);
    }
    c.note("fuzz", f.fuzz);
    c.note("seed", f.seed);
  }

  json j = c.to_json();
  j["mass"] = f.mass;
  emit(out, j);
  if (const Check* bad = c.first_failure()) {
    err << "FAIL: " << bad->name << " = " << format_double(bad->value) << " (threshold " << bad->threshold << ")\n";
    return kVerificationFailure;
  }
  return kSuccess;
}

// ------------------------------------------------------------------ scatter

const char* const kCsvHeader = "E,k,lambda,re_r,im_r,re_t,im_t,R,T,phase_t,flag";

void write_csv(std::ostream& os, const std::vector<SweepRow>& rows, Mass m) {
  os << kCsvHeader << '\n';
  for (const SweepRow& row : rows) {
    if (row.result) {
      const ScatteringResult& s = *row.result;
      for (double v : {s.E, s.k, s.lambda, s.r.real(), s.r.imag(), s.t.real(), s.t.imag(), s.R, s.T,
                       s.transmission_phase}) {
        os << format_double(v) << ',';
      }
      os << "OK\n";
    } else {
      const PlaneWaveBasis b = plane_spinors(row.E, m);
      os << format_double(b.E) << ',' << format_double(b.k) << ',' << format_double(b.lambda)
         << ",nan,nan,nan,nan,nan,nan,nan,RESONANCE\n";
    }
  }
}

json sweep_json(const std::vector<SweepRow>& rows, Mass m) {
  json list = json::array();
  for (const SweepRow& row : rows) {
    const PlaneWaveBasis b = plane_spinors(row.E, m);
    json r = {{"E", b.E}, {"k", b.k}, {"lambda", b.lambda}};
    if (row.result) {
      const ScatteringResult& s = *row.result;
      r.update({{"re_r", s.r.real()},
                {"im_r", s.r.imag()},
                {"re_t", s.t.real()},
                {"im_t", s.t.imag()},
                {"R", s.R},
                {"T", s.T},
                {"phase_t", s.transmission_phase},
                {"flag", "OK"}});
    } else {
      for (const char* key : {"re_r", "im_r", "re_t", "im_t", "R", "T", "phase_t"}) r[key] = nullptr;
      r["flag"] = "RESONANCE";
    }
    list.push_back(r);
  }
  return list;
}

int cmd_scatter(const Flags& f, std::ostream& out) {
  const Mass m(f.mass);
  if (count_set({&f.alpha, &f.rho}) != 1) throw ParseError("scatter needs exactly one of --alpha, --rho");
  const ExtensionClass bc = f.alpha.empty() ? ExtensionClass{parse_rho(f.rho)} : ExtensionClass{parse_alpha(f.alpha)};
  const std::vector<SweepRow> rows = sweep(bc, {f.e_min, f.e_max, f.steps}, m, parse_face(f.face));

  std::ofstream file;
  if (!f.out_path.empty()) {
    file.open(f.out_path, std::ios::binary);
    if (!file) throw ParseError("cannot open output file '" + f.out_path + "'");
  }
  std::ostream& os = f.out_path.empty() ? out : file;
  if (f.format == "json") {
    emit(os, sweep_json(rows, m));
  } else {
    write_csv(os, rows, m);
  }
  return kSuccess;
}

// -------------------------------------------------------------- demo-switch

json unit_json(const SwitchUnit& u) {
  return {{"name", u.name},
          {"alpha", to_json(u.bc)},
          {"input", to_json(u.input)},
          {"output", to_json(u.output)},
          {"T", u.scattering.T},
          {"t", to_json(u.scattering.t)},
          {"preserves_spin", u.preserves_spin},
          {"swaps_spin", u.swaps_spin}};
}

void describe(std::ostream& os, const SwitchUnit& u) {
  os << u.name << ": alpha = (" << format_complex(u.bc.a1) << ", " << format_complex(u.bc.a2) << ", "
     << format_complex(u.bc.a3) << ", " << format_complex(u.bc.a4) << ")\n"
     << "  spin (" << format_complex(u.input.up) << ", " << format_complex(u.input.down) << ") -> ("
     << format_complex(u.output.up) << ", " << format_complex(u.output.down) << ")\n"
     << "  T = " << format_double(u.scattering.T) << ", preserves spin: " << (u.preserves_spin ? "yes" : "no")
     << ", swaps spin: " << (u.swaps_spin ? "yes" : "no") << '\n';
}

int cmd_demo_switch(const Flags& f, std::ostream& out) {
  std::vector<double> thetas;
  for (const std::string& p : f.phases) thetas.push_back(parse_angle(p));
  if (thetas.empty()) thetas = {kPi / 4.0, kPi / 2.0};
  const SwitchDemoReport r = switch_demo(thetas);

  if (f.demo_format == "json") {
    json phases = json::array();
    for (const PhaseVariant& v : r.phases) {
      phases.push_back({{"theta", v.theta},
                        {"alpha", to_json(v.bc)},
                        {"t", to_json(v.scattering.t)},
                        {"T", v.scattering.T},
                        {"transmission_phase", v.scattering.transmission_phase},
                        {"verified", v.verified}});
    }
    emit(out, {{"unit0", unit_json(r.unit0)},
               {"unit1", unit_json(r.unit1)},
               {"phases", phases},
               {"verified", r.verified}});
  } else {
    out << "Spin switch at m = 0, E = 1\n";
    describe(out, r.unit0);
    describe(out, r.unit1);
    for (const PhaseVariant& v : r.phases) {
      out << "Phase shift theta = " << format_double(v.theta) << ": t = " << format_complex(v.scattering.t)
          << ", transmission phase = " << format_double(v.scattering.transmission_phase)
          << ", T = " << format_double(v.scattering.T) << (v.verified ? "" : "  [unexpected]") << '\n';
    }
    out << (r.verified ? "VERIFIED" : "NOT VERIFIED") << '\n';
  }
  return r.verified ? kSuccess : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Self-adjoint boundary conditions of a Dirac operator with a junction", "junction"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "junction 0.1.0");

  Flags f;
  auto add_mass = [&f](CLI::App* sub) {
    sub->add_option("--mass", f.mass, "Electron mass m >= 0")->capture_default_str();
  };
  auto add_tol = [&f](CLI::App* sub) {
    sub->add_option("--tol", f.tol, "Membership tolerance")->capture_default_str();
  };

  auto* decompose = app.add_subcommand("decompose", "Factor a unitary as gamma3 * [[g1, -g2*], [g2, g1*]]");
  decompose->add_option("--matrix", f.matrix, "JSON [[z11, z12], [z21, z22]], z = [re, im]")->required();
  add_tol(decompose);

  auto* convert = app.add_subcommand("convert", "Convert between U(2) parameters and boundary conditions");
  convert->add_option("direction", f.direction, "Conversion")
      ->required()
      ->check(CLI::IsMember({"u2-to-bc", "bc-to-u2", "alpha-to-bd", "bd-to-alpha", "rho-to-u2"}));
  convert->add_option("--matrix", f.matrix, "Unitary as a JSON matrix");
  convert->add_option("--gamma", f.gamma, "Quaternion form g1,g2,g3");
  convert->add_option("--diag", f.diag, "Diagonal unitary gL,gR");
  convert->add_option("--alpha", f.alpha, "Boundary matrix entries a1,a2,a3,a4");
  convert->add_option("--bd", f.bd, "Phase form theta,b1,b2,b3,b4");
  convert->add_option("--rho", f.rho, "Separating parameters rho_plus,rho_minus (inf allowed)");
  add_mass(convert);
  add_tol(convert);

  auto* verify = app.add_subcommand("verify", "Check class membership, self-adjointness and round trips");
  verify->add_option("--alpha", f.alpha, "Boundary matrix entries a1,a2,a3,a4");
  verify->add_option("--rho", f.rho, "Separating parameters rho_plus,rho_minus");
  verify->add_option("--matrix", f.matrix, "Unitary as a JSON matrix");
  verify->add_option("--gamma", f.gamma, "Quaternion form g1,g2,g3");
  verify->add_option("--fuzz", f.fuzz, "Number of random instances per family");
  verify->add_option("--samples", f.samples, "Boundary-value pairs per self-adjointness check")->capture_default_str();
  verify->add_option("--seed", f.seed, "Random seed")->capture_default_str();
  add_mass(verify);
  add_tol(verify);

  auto* scatter = app.add_subcommand("scatter", "Plane-wave scattering sweep");
  scatter->add_option("--alpha", f.alpha, "Transmitting condition a1,a2,a3,a4");
  scatter->add_option("--rho", f.rho, "Separating condition rho_plus,rho_minus");
  scatter->add_option("--face", f.face, "Incidence face for separating conditions")
      ->check(CLI::IsMember({"left", "right"}))
      ->capture_default_str();
  scatter->add_option("--emin", f.e_min, "Lowest energy")->required();
  scatter->add_option("--emax", f.e_max, "Highest energy")->required();
  scatter->add_option("--steps", f.steps, "Number of grid points (>= 2)")->capture_default_str();
  scatter->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  scatter->add_option("--out", f.out_path, "Output file (default stdout)");
  add_mass(scatter);

  auto* demo = app.add_subcommand("demo-switch", "Spin switch built from spin-flip and phase-shift junctions");
  demo->add_option("--phase", f.phases, "Phase-shift angle(s), e.g. pi/2");
  demo->add_option("--format", f.demo_format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::vector<const char*> argv{"junction"};
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (decompose->parsed()) return cmd_decompose(f, out);
    if (convert->parsed()) return cmd_convert(f, out);
    if (verify->parsed()) return cmd_verify(f, out, err);
    if (scatter->parsed()) return cmd_scatter(f, out);
    return cmd_demo_switch(f, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (e.residual() != 0.0) err << "residual: " << format_double(e.residual()) << '\n';
    return e.code() == ErrorCode::InternalInconsistency ? kInternalError : kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace junction::cli
