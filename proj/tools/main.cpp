// Command line front end: parse -> normalize -> geometry -> conditions ->
// profile -> optional numerics, emitting machine-readable reports.
//
// Exit codes: 0 success, 1 curvature condition failed (report still emitted),
// 2 parse failure, 3 unsupported input or configuration.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nsmooth/conditions.hpp"
#include "nsmooth/knapp.hpp"
#include "nsmooth/lattice.hpp"
#include "nsmooth/newton_data.hpp"
#include "nsmooth/oscillatory.hpp"
#include "nsmooth/parser.hpp"
#include "nsmooth/profile.hpp"
#include "nsmooth/report.hpp"

namespace {

using nsmooth::Json;
using nsmooth::Normal;
using nsmooth::Polynomial;
using nsmooth::Rat;

constexpr int kExitOk = 0;
constexpr int kExitConditionFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitUnsupported = 3;

struct CommonOpts {
  std::string text;
  std::string file;
  std::string format = "json";
  std::string convention = "literal";
  std::string strict = "on";
  std::uint64_t seed = 0;
  int quad_order = 4096;
  std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("polynomial", o.text, "polynomial in t1, t2");
  cmd->add_option("--file", o.file, "read the polynomial from a file");
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "tsv"}));
  cmd->add_option("--r-convention", o.convention,
                  "membership convention for the boundary set")
      ->check(CLI::IsMember({"literal", "exclude-axis"}));
  cmd->add_option("--strict-exponents", o.strict,
                  "reject exponent 1 on either variable")
      ->check(CLI::IsMember({"on", "off"}));
  cmd->add_option("--seed", o.seed, "RNG seed for sampling stages");
  cmd->add_option("--quad-order", o.quad_order,
                  "Gauss-Legendre order cap for oscillatory quadrature");
  cmd->add_option("--out", o.out, "write the report to a file");
}

struct UnsupportedFormat : std::runtime_error {
  explicit UnsupportedFormat(const std::string& sub, const std::string& fmt)
      : std::runtime_error("unsupported format '" + fmt + "' for subcommand '" +
                           sub + "'") {}
};

Polynomial load_polynomial(const CommonOpts& o) {
  std::string text = o.text;
  if (!o.file.empty()) {
    std::ifstream in(o.file);
    if (!in) throw std::runtime_error("cannot open input file: " + o.file);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  if (text.empty()) throw nsmooth::ParseError(0, "empty input");
  nsmooth::ParseOptions popt;
  popt.strict_exponents = o.strict == "on";
  return nsmooth::parse_polynomial(text, popt);
}

nsmooth::RConvention convention(const CommonOpts& o) {
  return o.convention == "literal" ? nsmooth::RConvention::literal
                                   : nsmooth::RConvention::exclude_axis;
}

Json config_echo(const std::string& sub, const CommonOpts& o) {
  Json c;
  c["subcommand"] = sub;
  c["format"] = o.format;
  c["r_convention"] = o.convention;
  c["strict_exponents"] = o.strict;
  c["seed"] = o.seed;
  c["quad_order"] = o.quad_order;
  return c;
}

void emit(const CommonOpts& o, const std::string& payload) {
  if (o.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(o.out, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + o.out);
  out << payload;
}

nsmooth::NewtonData analyze_geometry(const Polynomial& P) {
  auto [Q, swapped] = nsmooth::swap_normalize(P);
  return nsmooth::build_r_enumeration(Q, swapped);
}

bool profiles_diverge(const nsmooth::Profile& a, const nsmooth::Profile& b) {
  if (a.pieces.size() != b.pieces.size()) return true;
  for (std::size_t k = 0; k < a.pieces.size(); ++k) {
    const auto& x = a.pieces[k];
    const auto& y = b.pieces[k];
    if (x.x_lo != y.x_lo || x.x_hi != y.x_hi || x.slope != y.slope ||
        x.intercept != y.intercept)
      return true;
  }
  return false;
}

Normal parse_direction(const std::string& text) {
  std::istringstream is(text);
  long a = 0, b = 0;
  char comma = 0;
  if (!(is >> a >> comma >> b) || comma != ',' || a < 0 || b < 0 ||
      (a == 0 && b == 0))
    throw std::runtime_error("unsupported direction '" + text +
                             "' (expected a,b with nonnegative integers)");
  return Normal{a, b};
}

int run_analyze(const CommonOpts& o) {
  if (o.format != "json") throw UnsupportedFormat("analyze", o.format);
  Polynomial P = load_polynomial(o);
  nsmooth::NewtonData data = analyze_geometry(P);
  nsmooth::ConditionReport cond = nsmooth::check_conditions(data.P, data);
  nsmooth::Profile lit =
      nsmooth::smoothing_profile(data, nsmooth::RConvention::literal);
  nsmooth::Profile excl =
      nsmooth::smoothing_profile(data, nsmooth::RConvention::exclude_axis);
  nsmooth::NecessaryRegion region = nsmooth::necessary_region(data);

  Json j = nsmooth::report_envelope(P.to_string(), config_echo("analyze", o));
  j["newton"] = nsmooth::newton_data_json(data);
  j["conditions"] = nsmooth::conditions_json(cond);
  Json profiles;
  profiles["literal"] = nsmooth::profile_json(lit);
  profiles["exclude-axis"] = nsmooth::profile_json(excl);
  profiles["diverge"] = profiles_diverge(lit, excl);
  j["profiles"] = profiles;
  j["necessary_region"] = nsmooth::region_json(region);
  emit(o, nsmooth::dump_json(j));
  return cond.all_pass ? kExitOk : kExitConditionFail;
}

int run_check(const CommonOpts& o) {
  if (o.format != "json") throw UnsupportedFormat("check", o.format);
  Polynomial P = load_polynomial(o);
  nsmooth::NewtonData data = analyze_geometry(P);
  nsmooth::ConditionReport cond = nsmooth::check_conditions(data.P, data);
  Json j = nsmooth::report_envelope(P.to_string(), config_echo("check", o));
  j["newton"] = nsmooth::newton_data_json(data);
  j["conditions"] = nsmooth::conditions_json(cond);
  emit(o, nsmooth::dump_json(j));
  return cond.all_pass ? kExitOk : kExitConditionFail;
}

std::string tsv_to_csv(const std::string& tsv) {
  std::string out = tsv;
  for (char& c : out)
    if (c == '\t') c = ',';
  return out;
}

int run_profile(const CommonOpts& o) {
  Polynomial P = load_polynomial(o);
  nsmooth::NewtonData data = analyze_geometry(P);
  nsmooth::Profile lit =
      nsmooth::smoothing_profile(data, nsmooth::RConvention::literal);
  nsmooth::Profile excl =
      nsmooth::smoothing_profile(data, nsmooth::RConvention::exclude_axis);
  const nsmooth::Profile& chosen =
      convention(o) == nsmooth::RConvention::literal ? lit : excl;

  if (o.format == "tsv" || o.format == "csv") {
    std::string body = nsmooth::profile_tsv(chosen);
    emit(o, o.format == "tsv" ? body : tsv_to_csv(body));
    return kExitOk;
  }
  Json j = nsmooth::report_envelope(P.to_string(), config_echo("profile", o));
  j["delta"] = nsmooth::rat_json(data.delta);
  j["profile"] = nsmooth::profile_json(chosen);
  j["diverge"] = profiles_diverge(lit, excl);
  emit(o, nsmooth::dump_json(j));
  return kExitOk;
}

int run_decay(const CommonOpts& o, const std::string& v_text,
              const std::vector<long>& index_set, double xi3_lo,
              double xi3_hi) {
  Polynomial P = load_polynomial(o);
  Normal v = parse_direction(v_text);
  nsmooth::DecayFitReport rep =
      nsmooth::decay_fit(P, v, index_set, xi3_lo, xi3_hi, o.quad_order);
  if (o.format == "csv") {
    emit(o, nsmooth::decay_csv(rep));
    return kExitOk;
  }
  if (o.format != "json") throw UnsupportedFormat("decay", o.format);
  Json j = nsmooth::report_envelope(P.to_string(), config_echo("decay", o));
  j["decay"] = nsmooth::decay_json(rep);
  emit(o, nsmooth::dump_json(j));
  return kExitOk;
}

int run_knapp(const CommonOpts& o, const std::string& preset,
              const std::vector<double>& eps_arg, int samples) {
  Polynomial P = load_polynomial(o);
  nsmooth::NewtonData data = analyze_geometry(P);

  if (preset == "region") {
    if (o.format != "json") throw UnsupportedFormat("knapp", o.format);
    Json j = nsmooth::report_envelope(P.to_string(), config_echo("knapp", o));
    j["preset"] = preset;
    j["necessary_region"] = nsmooth::region_json(nsmooth::necessary_region(data));
    emit(o, nsmooth::dump_json(j));
    return kExitOk;
  }

  std::vector<double> eps = eps_arg;
  if (eps.empty())
    for (int k = 4; k <= 12; ++k) eps.push_back(std::ldexp(1.0, -k));

  std::string why;
  auto box = nsmooth::knapp_box_family(data, preset, &why);
  if (!box) {
    if (o.format != "json") throw UnsupportedFormat("knapp", o.format);
    Json j = nsmooth::report_envelope(P.to_string(), config_echo("knapp", o));
    j["preset"] = preset;
    j["skipped"] = why;
    emit(o, nsmooth::dump_json(j));
    return kExitOk;
  }

  nsmooth::NecessaryLine line = nsmooth::necessary_line(*box);
  nsmooth::PhaseBoundReport phase =
      nsmooth::verify_phase_bound(data.P, *box, eps, o.seed, samples);
  nsmooth::ScalingFitReport fit =
      nsmooth::scaling_fit(data.P, *box, eps, o.seed);

  if (o.format == "csv") {
    emit(o, nsmooth::knapp_csv(phase, fit));
    return kExitOk;
  }
  if (o.format != "json") throw UnsupportedFormat("knapp", o.format);
  Json j = nsmooth::report_envelope(P.to_string(), config_echo("knapp", o));
  j["preset"] = preset;
  j["box"] = nsmooth::box_json(*box);
  j["line"] = nsmooth::line_json(line);
  j["dual"] = nsmooth::line_json(nsmooth::dual(line));
  j["phase_bound"] = nsmooth::phase_json(phase);
  j["scaling_fit"] = nsmooth::scaling_json(fit);
  emit(o, nsmooth::dump_json(j));
  return kExitOk;
}

int run_decompose(const CommonOpts& o, const std::string& point_text) {
  if (o.format != "json") throw UnsupportedFormat("decompose", o.format);
  Polynomial P = load_polynomial(o);
  nsmooth::NewtonData data = analyze_geometry(P);
  nsmooth::LatticeCover cover =
      nsmooth::build_cover(nsmooth::normal_fan(data));
  Json j = nsmooth::report_envelope(P.to_string(), config_echo("decompose", o));
  j["cover"] = nsmooth::cover_json(cover);
  if (!point_text.empty()) {
    Normal p = parse_direction(point_text);
    nsmooth::PointClass c = nsmooth::classify(cover, p);
    Json e;
    e["point"] = Json::array({p[0], p[1]});
    e["kind"] = c.kind == nsmooth::PointClass::Kind::ray ? "ray" : "cone";
    e["index"] = c.index;
    e["i"] = c.i;
    if (c.kind == nsmooth::PointClass::Kind::cone) {
      e["l"] = c.l;
      e["shift"] = Json::array({c.shift[0], c.shift[1]});
    }
    j["classified"] = e;
  }
  emit(o, nsmooth::dump_json(j));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Newton polyhedron smoothing analyzer"};
  app.require_subcommand(1);

  CommonOpts a_opt, c_opt, p_opt, d_opt, k_opt, x_opt;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "full geometry, condition, profile, and box report");
  add_common(analyze, a_opt);
  CLI::App* check =
      app.add_subcommand("check", "curvature condition report only");
  add_common(check, c_opt);
  CLI::App* profile =
      app.add_subcommand("profile", "piecewise-linear exponent profile");
  add_common(profile, p_opt);

  CLI::App* decay = app.add_subcommand(
      "decay", "dyadic oscillatory decay sweep along a direction");
  add_common(decay, d_opt);
  std::string v_text = "1,1";
  std::vector<long> index_set{3};
  double xi3_lo = 4096.0, xi3_hi = 262144.0;
  decay->add_option("--v", v_text, "direction a,b");
  decay->add_option("--i", index_set, "dyadic indices to sweep");
  decay->add_option("--xi3-lo", xi3_lo, "lowest frequency");
  decay->add_option("--xi3-hi", xi3_hi, "highest frequency");

  CLI::App* knapp =
      app.add_subcommand("knapp", "box family and necessary-line harness");
  add_common(knapp, k_opt);
  std::string preset = "full-box";
  std::vector<double> eps_arg;
  int samples = 10000;
  knapp->add_option("--preset", preset,
                    "full-box | l1 | l2 | lk:K | region");
  knapp->add_option("--eps", eps_arg, "epsilon sweep values (decreasing)");
  knapp->add_option("--samples", samples, "phase-bound samples per epsilon");

  CLI::App* decompose = app.add_subcommand(
      "decompose", "lattice cone decomposition of the normal fan");
  add_common(decompose, x_opt);
  std::string point_text;
  decompose->add_option("--point", point_text, "classify one lattice point m,n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUnsupported;
  }

  try {
    if (analyze->parsed()) return run_analyze(a_opt);
    if (check->parsed()) return run_check(c_opt);
    if (profile->parsed()) return run_profile(p_opt);
    if (decay->parsed())
      return run_decay(d_opt, v_text, index_set, xi3_lo, xi3_hi);
    if (knapp->parsed()) return run_knapp(k_opt, preset, eps_arg, samples);
    if (decompose->parsed()) return run_decompose(x_opt, point_text);
  } catch (const nsmooth::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnsupported;
  }
  return kExitUnsupported;
}
