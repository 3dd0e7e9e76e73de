#include "nsmooth/report.hpp"

#include "nsmooth/version.hpp"

namespace nsmooth {

Json rat_json(const Rat& r) { return Json(to_string(r)); }

Json point_json(ExpPoint p) { return Json::array({p.m, p.n}); }

Json candidate_json(const Candidate& c) {
  if (c.n_inf) return Json::array({c.m, "inf"});
  return Json::array({c.m, c.n});
}

Json chain_point_json(const ChainPoint& c) {
  Json a = Json::array();
  if (c.m_inf)
    a.push_back("inf");
  else
    a.push_back(c.m);
  if (c.n_inf)
    a.push_back("inf");
  else
    a.push_back(c.n);
  return a;
}

namespace {

Json normal_json(Normal v) { return Json::array({v[0], v[1]}); }

Json opt_long_json(const std::optional<long>& v) {
  if (!v) return Json("inf");
  return Json(*v);
}

const char* edge_kind_name(Edge::Kind k) {
  switch (k) {
    case Edge::Kind::vertical_ray:
      return "vertical-ray";
    case Edge::Kind::horizontal_ray:
      return "horizontal-ray";
    default:
      return "bounded";
  }
}

Json candidate_entry(const Candidate& c) {
  Json j;
  j["point"] = candidate_json(c);
  j["ray_distance"] = c.ray_distance ? rat_json(*c.ray_distance) : Json();
  j["note"] = c.note;
  return j;
}

}  // namespace

Json polynomial_json(const Polynomial& P) {
  Json j;
  j["text"] = P.to_string();
  Json terms = Json::array();
  for (const auto& [e, c] : P.terms()) {
    Json t;
    t["m"] = e.m;
    t["n"] = e.n;
    t["c"] = rat_json(c);
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

Json polyhedron_json(const NewtonPolyhedron& N) {
  Json j;
  Json verts = Json::array();
  for (ExpPoint p : N.vertices) verts.push_back(point_json(p));
  j["vertices"] = verts;
  Json edges = Json::array();
  for (const Edge& E : N.edges) {
    Json e;
    e["kind"] = edge_kind_name(E.kind);
    e["a"] = point_json(E.a);
    e["b"] = point_json(E.b);
    e["normal"] = normal_json(E.normal);
    e["offset"] = E.offset;
    Json sup = Json::array();
    for (ExpPoint p : E.support) sup.push_back(point_json(p));
    e["support"] = sup;
    edges.push_back(e);
  }
  j["edges"] = edges;
  return j;
}

Json newton_data_json(const NewtonData& d) {
  Json j;
  j["polynomial"] = polynomial_json(d.P);
  j["swapped"] = d.swapped;
  j["delta"] = rat_json(d.delta);
  j["ms"] = opt_long_json(d.ms);
  j["ns"] = opt_long_json(d.ns);
  j["M"] = opt_long_json(d.M);
  j["hull"] = polyhedron_json(d.hull);
  j["hull1"] = d.hull1 ? polyhedron_json(*d.hull1) : Json();
  Json cands = Json::array();
  for (const Candidate& c : d.candidates) cands.push_back(candidate_entry(c));
  j["candidates"] = cands;
  j["start"] = d.start ? candidate_json(*d.start) : Json();
  Json rl = Json::array();
  for (const Candidate& c : d.R_literal) rl.push_back(candidate_json(c));
  j["r_literal"] = rl;
  Json rx = Json::array();
  for (const Candidate& c : d.R_exclude_axis) rx.push_back(candidate_json(c));
  j["r_exclude_axis"] = rx;
  Json chain = Json::array();
  for (const ChainPoint& c : d.chain) chain.push_back(chain_point_json(c));
  j["chain"] = chain;
  Json normals = Json::array();
  for (Normal v : d.chain_normals) normals.push_back(normal_json(v));
  j["chain_normals"] = normals;
  return j;
}

Json conditions_json(const ConditionReport& r) {
  Json j;
  j["c21"] = r.hessian_pass;
  j["c22"] = r.mixed_pass;
  j["all_pass"] = r.all_pass;
  Json checks = Json::array();
  Json witnesses = Json::array();
  for (const ConditionCheck& c : r.checks) {
    Json e;
    e["kind"] = c.kind;
    e["edge"] = c.edge;
    e["tested"] = c.tested;
    e["pass"] = c.pass;
    checks.push_back(e);
    if (!c.pass) {
      Json w;
      w["kind"] = c.kind;
      w["edge"] = c.edge;
      w["slice"] = c.witness_slice;
      w["interval"] = c.witness_interval
                          ? Json::array({rat_json(c.witness_interval->first),
                                         rat_json(c.witness_interval->second)})
                          : Json();
      witnesses.push_back(w);
    }
  }
  j["checks"] = checks;
  j["witnesses"] = witnesses;
  Json notes = Json::array();
  for (const std::string& n : r.notes) notes.push_back(n);
  j["notes"] = notes;
  return j;
}

Json profile_json(const Profile& p) {
  Json j;
  j["convention"] = to_string(p.convention);
  j["delta"] = rat_json(p.delta);
  j["r_nonempty"] = p.r_nonempty;
  j["bound"] = "strict";
  Json pieces = Json::array();
  for (const LinePiece& piece : p.pieces) {
    Json e;
    e["xLo"] = rat_json(piece.x_lo);
    e["xHi"] = rat_json(piece.x_hi);
    e["slope"] = rat_json(piece.slope);
    e["intercept"] = rat_json(piece.intercept);
    e["label"] = piece.label;
    e["degenerate"] = piece.degenerate;
    pieces.push_back(e);
  }
  j["pieces"] = pieces;
  j["value_at_half"] = rat_json(p.evaluate(Rat(1, 2)));
  return j;
}

Json line_json(const NecessaryLine& l) {
  Json j;
  j["label"] = l.label;
  j["A"] = rat_json(l.A);
  j["B"] = rat_json(l.B);
  j["C"] = rat_json(l.C);
  return j;
}

Json box_json(const BoxSpec& b) {
  Json j;
  j["label"] = b.label;
  j["e1"] = rat_json(b.e1);
  j["e2"] = rat_json(b.e2);
  j["d1"] = rat_json(b.d1);
  j["d2"] = rat_json(b.d2);
  j["ep1"] = rat_json(b.ep1);
  j["ep2"] = rat_json(b.ep2);
  return j;
}

Json region_json(const NecessaryRegion& r) {
  Json j;
  Json lines = Json::array();
  for (const NecessaryLine& l : r.lines) lines.push_back(line_json(l));
  j["lines"] = lines;
  Json skipped = Json::array();
  for (const std::string& s : r.skipped) skipped.push_back(s);
  j["skipped"] = skipped;
  return j;
}

Json cover_json(const LatticeCover& c) {
  Json j;
  Json normals = Json::array();
  for (Normal v : c.normals) normals.push_back(normal_json(v));
  j["normals"] = normals;
  Json cones = Json::array();
  for (const Cone& cone : c.cones) {
    Json e;
    e["a"] = normal_json(cone.a);
    e["b"] = normal_json(cone.b);
    e["det"] = cone.det;
    Json shifts = Json::array();
    for (Normal s : cone.shifts) shifts.push_back(normal_json(s));
    e["shifts"] = shifts;
    cones.push_back(e);
  }
  j["cones"] = cones;
  return j;
}

Json decay_json(const DecayFitReport& r) {
  Json j;
  j["v"] = normal_json(r.v);
  j["w"] = r.w ? normal_json(*r.w) : Json();
  j["regime"] = r.regime;
  j["predicted_slope"] = r.predicted_slope;
  j["fitted_slope"] = r.fitted_slope;
  j["fit_residual"] = r.fit_residual;
  j["hessian_ratio_ok"] = r.hessian_ratio_ok;
  j["verdict"] = r.verdict;
  Json samples = Json::array();
  for (const DecaySample& s : r.samples) {
    Json e;
    e["i"] = s.i;
    e["l"] = s.l;
    e["xi3"] = s.xi3;
    e["abs_m"] = s.abs_m;
    e["predicted_bound"] = s.predicted_bound;
    e["ratio"] = s.ratio;
    samples.push_back(e);
  }
  j["samples"] = samples;
  return j;
}

Json phase_json(const PhaseBoundReport& r) {
  Json j;
  j["eps"] = r.eps;
  j["max_ratio"] = r.max_ratio;
  j["fitted_slope"] = r.fitted_slope;
  j["pass"] = r.pass;
  return j;
}

Json scaling_json(const ScalingFitReport& r) {
  Json j;
  j["line"] = line_json(r.line);
  j["analytic_exponent"] = r.analytic_exponent;
  j["fitted_exponent"] = r.fitted_exponent;
  j["fit_residual"] = r.fit_residual;
  j["pass"] = r.pass;
  j["eps"] = r.eps;
  j["lhs"] = r.lhs;
  return j;
}

Json report_envelope(const std::string& input_text, const Json& config) {
  Json j;
  Json tool;
  tool["name"] = "newton-smoothing";
  tool["version"] = kVersion;
  j["tool"] = tool;
  j["input"] = input_text;
  j["config"] = config;
  return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace nsmooth
