#include "nsmooth/profile.hpp"

#include <algorithm>
#include <sstream>

namespace nsmooth {

namespace {

const Rat kHalf(1, 2);

LinePiece make_piece(Rat lo, Rat hi, Rat slope, Rat intercept,
                     std::string label) {
  // Visible window is [0, 1/2]; out-of-window parts collapse to the boundary.
  lo = min(lo, kHalf);
  hi = min(hi, kHalf);
  if (lo > hi) throw ProfileError("display intervals out of order");
  LinePiece p;
  p.x_lo = lo;
  p.x_hi = hi;
  p.slope = slope;
  p.intercept = intercept;
  p.label = std::move(label);
  p.degenerate = lo == hi;
  return p;
}

LinePiece const_piece(Rat lo, Rat value, std::string label) {
  return make_piece(lo, kHalf, Rat(0), value, std::move(label));
}

// l(x) = (1 - d1/d2) x + 1/d2; passes through (1/(d1+d2), 2/(d1+d2)) and,
// when d1 > 0, through (1/d1, 1/d1).
LinePiece line_piece(Rat lo, Rat hi, const Rat& d1, const Rat& d2,
                     std::string label) {
  return make_piece(lo, hi, 1 - d1 / d2, 1 / d2, std::move(label));
}

}  // namespace

Rat Profile::evaluate(const Rat& x) const {
  for (const LinePiece& p : pieces)
    if (!p.degenerate && p.x_lo <= x && x <= p.x_hi) return p.value_at(x);
  for (const LinePiece& p : pieces)
    if (p.x_lo <= x && x <= p.x_hi) return p.value_at(x);
  throw ProfileError("evaluation point outside [0, 1/2]");
}

std::string Profile::validate() const {
  if (pieces.empty()) return "no pieces";
  if (pieces.front().x_lo != 0) return "cover does not start at 0";
  if (pieces.back().x_hi != kHalf) return "cover does not end at 1/2";
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    const LinePiece& p = pieces[k];
    if (p.x_lo > p.x_hi) return "piece interval out of order";
    if (p.degenerate != (p.x_lo == p.x_hi)) return "degenerate flag wrong";
    if (k + 1 < pieces.size() && p.x_hi != pieces[k + 1].x_lo)
      return "pieces do not abut";
    if (k + 1 < pieces.size() && p.slope < pieces[k + 1].slope)
      return "slopes increase left to right";
  }
  // Continuity between consecutive nondegenerate pieces; zero-length pieces
  // in between are display artifacts and carry no junction claim.
  const LinePiece* prev = nullptr;
  for (const LinePiece& p : pieces) {
    if (p.degenerate) continue;
    if (prev && prev->value_at(prev->x_hi) != p.value_at(p.x_lo))
      return "junction values disagree";
    prev = &p;
  }
  return "";
}

namespace {

Rat chain_delta(const ChainPoint& c, long ms) {
  return c.n_inf ? Rat(ms) : delta_ray(ms, {c.m, c.n});
}

// Weighted distance of member k for direction v; the formal start pairs
// with v = (1, 0), where the infinite coordinate carries weight zero.
Rat member_distance(const ChainPoint& c, Normal v) {
  if (c.n_inf) {
    if (v != Normal{1, 0})
      throw ProfileError("formal start pairs only with direction (1,0)");
    return Rat(c.m);
  }
  return delta_v(v, ExpPoint{c.m, c.n});
}

}  // namespace

Profile smoothing_profile(const NewtonData& data, RConvention convention) {
  Profile prof;
  prof.delta = data.delta;
  prof.convention = convention;
  prof.r_nonempty = data.r_nonempty(convention);
  if (data.delta <= 0) throw ProfileError("distance must be positive");

  if (!prof.r_nonempty) {
    Rat B = min(1 / (2 * data.delta), kHalf);
    prof.pieces.push_back(make_piece(Rat(0), B, Rat(2), Rat(0), "2/p"));
    prof.pieces.push_back(const_piece(B, 1 / data.delta, "1/delta"));
    return prof;
  }

  long ms = *data.ms;
  std::size_t n = data.chain_normals.size();
  if (data.chain.size() != n + 1 || n == 0)
    throw ProfileError("chain not built");

  std::vector<Rat> deltas(n);  // ray distances of the members
  for (std::size_t k = 0; k < n; ++k) {
    deltas[k] = chain_delta(data.chain[k], ms);
    if (k > 0 && !(deltas[k - 1] < deltas[k]))
      throw ProfileError("chain ray distances fail to increase",
                         static_cast<int>(k));
  }

  std::vector<Rat> J(n);  // J_k = 1/delta_k - 1/N_k, formal N = infinity
  for (std::size_t k = 0; k < n; ++k) {
    J[k] = 1 / deltas[k];
    if (!data.chain[k].n_inf) J[k] -= Rat(1, data.chain[k].n);
  }
  for (std::size_t k = 0; k + 1 < n; ++k)
    if (J[k] < J[k + 1])
      throw ProfileError("junctions out of order", static_cast<int>(k + 1));

  Normal vn = data.chain_normals[n - 1];
  Rat d1_last = delta_v(vn, ExpPoint{ms, 0});
  Rat d2_last = member_distance(data.chain[n - 1], vn);
  Rat B = 1 / (d1_last + d2_last);
  if (B > J[n - 1]) throw ProfileError("lowest junction below 2/p crossover",
                                       static_cast<int>(n));

  prof.pieces.push_back(make_piece(Rat(0), B, Rat(2), Rat(0), "2/p"));
  for (std::size_t k = n; k-- > 0;) {
    Rat lo = k + 1 < n ? J[k + 1] : B;
    Normal v = data.chain_normals[k];
    Rat d1 = delta_v(v, ExpPoint{ms, 0});
    Rat d2 = member_distance(data.chain[k], v);
    std::ostringstream label;
    label << "l^{v" << (k + 1) << "}";
    prof.pieces.push_back(line_piece(lo, J[k], d1, d2, label.str()));
  }
  prof.pieces.push_back(const_piece(min(J[0], kHalf), 1 / data.delta,
                                    "1/delta"));
  return prof;
}

namespace {

struct StripSupport {
  long m;   // pure monomial exponent
  long M, N;
};

StripSupport strip_support(const Polynomial& P) {
  auto pts = P.support();
  if (pts.size() != 2)
    throw ProfileError("support must be a pure monomial and one mixed point");
  ExpPoint a = pts[0], b = pts[1];
  if (a.n != 0) std::swap(a, b);
  if (a.n != 0 || a.m < 1 || b.n < 1)
    throw ProfileError("support must be {(m,0),(M,N)} with m >= 1, N >= 1");
  return {a.m, b.m, b.n};
}

void require_positive(Normal v) {
  if (v[0] < 1 || v[1] < 1)
    throw ProfileError("direction must have positive components");
}

Profile strip_base(const Polynomial& P) {
  Profile prof;
  prof.delta = newton_distance(build_polyhedron(P.support()));
  prof.r_nonempty = false;
  prof.convention = RConvention::literal;
  return prof;
}

void emit_two_piece(Profile& prof, const Rat& d2) {
  Rat B = min(1 / (2 * d2), kHalf);
  prof.pieces.push_back(make_piece(Rat(0), B, Rat(2), Rat(0), "2/p"));
  prof.pieces.push_back(const_piece(B, 1 / d2, "const"));
}

void emit_three_piece(Profile& prof, const Rat& d1, const Rat& d2,
                      const std::string& line_label) {
  Rat B = 1 / (d1 + d2);
  Rat T = min(1 / d1, kHalf);
  prof.pieces.push_back(make_piece(Rat(0), min(B, T), Rat(2), Rat(0), "2/p"));
  prof.pieces.push_back(line_piece(min(B, T), T, d1, d2, line_label));
  prof.pieces.push_back(const_piece(T, 1 / d1, "const"));
}

}  // namespace

Profile strip_profile(const Polynomial& P, Normal v, bool equal_case) {
  require_positive(v);
  StripSupport s = strip_support(P);
  Rat d1 = delta_v(v, ExpPoint{s.m, 0});
  Rat d2 = delta_v(v, ExpPoint{s.M, s.N});
  Profile prof = strip_base(P);

  if (equal_case) {
    if (d1 != d2)
      throw ProfileError("equal-case flag requires equal weighted distances");
    emit_two_piece(prof, d2);
    return prof;
  }
  if (d1 == d2)
    throw ProfileError("equal weighted distances need the equal-case flag");
  if (d1 < d2)
    emit_three_piece(prof, d1, d2, "l^{v}");
  else
    emit_two_piece(prof, d2);
  return prof;
}

Profile strip_profile(const Polynomial& P, Normal v, Normal w) {
  require_positive(v);
  require_positive(w);
  if (!(v[0] * w[1] - v[1] * w[0] > 0))
    throw ProfileError("second direction must have the larger slope");
  StripSupport s = strip_support(P);
  Rat dv1 = delta_v(v, ExpPoint{s.m, 0});
  Rat dv2 = delta_v(v, ExpPoint{s.M, s.N});
  Rat dw1 = delta_v(w, ExpPoint{s.m, 0});
  Rat dw2 = delta_v(w, ExpPoint{s.M, s.N});
  Profile prof = strip_base(P);

  bool v_less = dv1 < dv2 || dv1 == dv2;  // (=,<) folds into (<,<)
  bool w_less = dw1 < dw2;
  bool v_greater = dv1 > dv2;
  bool w_greater = dw1 > dw2 || dw1 == dw2;  // (>,=) folds into (>,>)

  if (v_less && w_less) {
    // Membership of (M,N): 1/(dw1+dw2) <= (dw2-dv2)/(dv1*dw2-dv2*dw1);
    // the right side is where the two lines cross.
    Rat den = dv1 * dw2 - dv2 * dw1;
    if (!(den > 0))
      throw ProfileError("line crossing denominator not positive");
    Rat J = (dw2 - dv2) / den;
    Rat Bw = 1 / (dw1 + dw2);
    if (Bw <= J) {
      Rat T = min(1 / dv1, kHalf);
      if (J > T) throw ProfileError("crossing beyond the constant threshold");
      prof.r_nonempty = true;
      prof.pieces.push_back(
          make_piece(Rat(0), min(Bw, kHalf), Rat(2), Rat(0), "2/p"));
      prof.pieces.push_back(line_piece(min(Bw, kHalf), min(J, kHalf), dw1,
                                       dw2, "l^{w}"));
      prof.pieces.push_back(line_piece(min(J, kHalf), T, dv1, dv2, "l^{v}"));
      prof.pieces.push_back(const_piece(T, 1 / dv1, "const"));
    } else {
      emit_three_piece(prof, dv1, dv2, "l^{v}");
    }
    return prof;
  }
  if (v_greater && w_greater) {
    emit_two_piece(prof, max(dv2, dw2));
    return prof;
  }
  throw ProfileError("hypothesis pattern violated");
}

std::string profile_tsv(const Profile& p) {
  std::vector<Rat> xs;
  for (const LinePiece& piece : p.pieces) {
    xs.push_back(piece.x_lo);
    xs.push_back(piece.x_hi);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::ostringstream os;
  os << "inv_p\talpha\n";
  os.precision(17);
  for (const Rat& x : xs)
    os << to_double(x) << "\t" << to_double(p.evaluate(x)) << "\n";
  return os.str();
}

}  // namespace nsmooth
