#pragma once

// Hypothesis checking, the constructive opposite-builder, complete
// reducibility certification, and the centre constructions for the
// classical A_n and C_2 geometries.

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bldg/convexity.hpp"
#include "bldg/geometry.hpp"

namespace bldg {

// ---------------------------------------------------------------------------
// Opposite search inside Ω

inline std::optional<Simplex> opposite_in_omega(const ConvexChamberSubcomplex& omega,
                                                const Simplex& a) {
  if (!omega.contains(a)) fail(ErrorCode::NotInOmega, "simplex is not in the subcomplex");
  const Building& b = omega.building();
  TypeSet target = b.weyl().opposition(a.type());
  for (const Simplex& cand : omega.simplices_of_type(target))
    if (is_opposite_simplices(a, cand)) return cand;
  return std::nullopt;
}

inline bool hypothesis_holds(const ConvexChamberSubcomplex& omega, int k) {
  const Building& b = omega.building();
  if (k < 1 || k > b.rank()) fail(ErrorCode::BadType, "type " + std::to_string(k));
  for (const Simplex& v : omega.simplices_of_type(type_bit(k)))
    if (!opposite_in_omega(omega, v)) return false;
  return true;
}

inline bool all_opposable(const ConvexChamberSubcomplex& omega, TypeSet J) {
  for (const Simplex& s : omega.simplices_of_type(J))
    if (!opposite_in_omega(omega, s)) return false;
  return true;
}

// Greedy maximal J (ascending type labels) with every type-J simplex of Ω
// opposed in Ω; empty when no single type works.
inline TypeSet maximal_opposable_type(const ConvexChamberSubcomplex& omega) {
  const Building& b = omega.building();
  TypeSet J = 0;
  for (int k = 1; k <= b.rank(); ++k)
    if (hypothesis_holds(omega, k)) {
      J = type_bit(k);
      break;
    }
  if (J == 0) return 0;
  for (int t = 1; t <= b.rank(); ++t) {
    if (has_type(J, t)) continue;
    if (all_opposable(omega, J | type_bit(t))) J |= type_bit(t);
  }
  return J;
}

// ---------------------------------------------------------------------------
// The constructive opposite-builder

struct BuildStep {
  std::string name;
  TypeSet type;
  Chamber representative;
};

struct BuildTrace {
  std::vector<BuildStep> steps;
  void record(const std::string& name, const Simplex& s) {
    steps.push_back({name, s.type(), s.representative()});
  }
};

namespace detail {

inline void trace_assert(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::TraceAssertionFailed, what);
}

inline void assert_in_omega(const ConvexChamberSubcomplex& omega, const Simplex& s,
                            const std::string& name) {
  trace_assert(omega.contains(s), name + " left the subcomplex");
}

inline Simplex required_opposite(const ConvexChamberSubcomplex& omega, const Simplex& s,
                                 const std::string& name) {
  auto opp = opposite_in_omega(omega, s);
  if (!opp)
    fail(ErrorCode::HypothesisViolated,
         "no opposite in the subcomplex for " + name + " of type " + type_string(s.type()));
  return *opp;
}

}  // namespace detail

// Constructs an opposite in Ω for a simplex z of type J ∪ {i}, given that
// every type-J simplex of Ω already has an opposite in Ω and that i is a
// diagram neighbour of j ∈ J.  Every intermediate object is recorded in the
// audit trace and checked against the property the construction relies on.
inline Simplex build_opposite(const ConvexChamberSubcomplex& omega, const Simplex& z,
                              TypeSet J, int i, int j, BuildTrace* trace = nullptr) {
  const Building& b = omega.building();
  const WeylGroup& w = b.weyl();
  BuildTrace local;
  BuildTrace& tr = trace ? *trace : local;

  if (!b.weyl().diagram().irreducible())
    fail(ErrorCode::NotIrreducible, "the building's diagram is not connected");
  if (has_type(J, i) || !has_type(J, j) || !w.diagram().neighbours(i, j))
    fail(ErrorCode::BadType, "need i in I\\J a diagram neighbour of j in J");
  if (z.type() != (J | type_bit(i)))
    fail(ErrorCode::BadType, "z must have type J ∪ {i}");
  if (!omega.contains(z)) fail(ErrorCode::NotInOmega, "z is not in the subcomplex");

  Simplex x0 = z.face(J);
  Simplex ell = z.face(type_bit(i));
  tr.record("x0", x0);
  tr.record("ell", ell);

  // smallest chamber of Ω containing z
  Chamber c0_id = UINT32_MAX;
  for (Chamber c : z.star())
    if (omega.contains_chamber(c)) {
      c0_id = c;
      break;
    }
  detail::trace_assert(c0_id != UINT32_MAX, "no chamber of the subcomplex contains z");
  Simplex C0(b, c0_id, full_types(b.rank()));
  tr.record("C0", C0);

  Simplex p = C0.face(full_types(b.rank()) & ~type_bit(j));
  tr.record("p", p);
  detail::trace_assert(p.has_face(ell), "ell is not a vertex of p");

  Simplex x0o = detail::required_opposite(omega, x0, "x0");
  tr.record("x0o", x0o);

  Simplex C0p = proj_simplex(x0o, C0);
  tr.record("C0p", C0p);
  detail::assert_in_omega(omega, C0p, "C0'");

  Simplex C1 = proj_simplex(p, C0p);
  tr.record("C1", C1);
  detail::assert_in_omega(omega, C1, "C1");
  detail::trace_assert(proj_simplex(p, x0) == C0, "proj_p(x0) is not C0");
  detail::trace_assert(C1 != C0, "C1 equals C0");

  Simplex x1 = C1.face(J);
  tr.record("x1", x1);
  detail::trace_assert(x1 != x0, "x1 equals x0");

  Simplex y0 = proj_simplex(x1, x0);
  tr.record("y0", y0);
  detail::assert_in_omega(omega, y0, "y0");
  detail::trace_assert(y0.has_face(x1), "y0 does not contain x1");
  detail::trace_assert(has_type(y0.type(), i) && y0.face(type_bit(i)) == ell,
                       "y0 does not have ell as a vertex");

  Simplex y1 = proj_simplex(x1, x0o);
  tr.record("y1", y1);
  detail::assert_in_omega(omega, y1, "y1");
  detail::trace_assert(opposite_in_star(x1, y0, y1), "y1 not opposite y0 in St x1");

  Simplex x1o = detail::required_opposite(omega, x1, "x1");
  tr.record("x1o", x1o);

  Simplex y2 = opposite_transfer(x1, x1o, y1);
  tr.record("y2", y2);
  detail::assert_in_omega(omega, y2, "y2");
  detail::trace_assert(is_opposite_simplices(y2, y0), "y2 not opposite y0");

  detail::trace_assert(proj_simplex(ell, x0) == z, "proj_ell(x0) is not z");
  Simplex z1 = proj_simplex(ell, x0o);
  tr.record("z1", z1);
  detail::assert_in_omega(omega, z1, "z1");
  detail::trace_assert(opposite_in_star(ell, z, z1), "z1 not opposite z in St ell");

  // the opposite of ell among the type-σ(i) vertices of St y2
  int sigma_i = w.opposition(i);
  std::optional<Simplex> ell_opp;
  for (Chamber c : y2.star()) {
    Simplex v(b, c, type_bit(sigma_i));
    if (is_opposite_simplices(ell, v) && (!ell_opp || v < *ell_opp)) ell_opp = v;
  }
  detail::trace_assert(ell_opp.has_value(), "no opposite of ell in St y2");
  tr.record("ell_opp", *ell_opp);
  detail::trace_assert(y2.has_face(*ell_opp), "ell_opp is not a vertex of y2");
  detail::assert_in_omega(omega, *ell_opp, "ell_opp");

  Simplex result = proj_simplex(*ell_opp, z1);
  tr.record("result", result);
  detail::assert_in_omega(omega, result, "result");
  detail::trace_assert(result.type() == w.opposition(z.type()),
                       "result has the wrong type");
  detail::trace_assert(is_opposite_simplices(z, result), "result not opposite z");
  return result;
}

// ---------------------------------------------------------------------------
// Verdicts

struct WitnessPair {
  Simplex simplex;
  Simplex opposite;
};

struct CentreInfo {
  Simplex simplex;
  Subspace subspace;
  bool in_omega = true;
};

struct Verdict {
  enum class Kind { CR, Centre, Inconclusive };
  Kind kind = Kind::Inconclusive;
  std::vector<WitnessPair> witness;           // CR
  std::optional<CentreInfo> centre;           // Centre
  std::vector<BuildTrace> traces;             // build_opposite audit
  std::vector<std::string> evidence;          // automorphism invariance notes
  std::vector<std::string> findings;          // anything noteworthy (open questions)
  std::string reason;                         // Inconclusive only
};

struct CrFailure {
  std::vector<Simplex> unopposed_vertices;  // per-type witnesses
};

// Certification engine: pick k with the hypothesis, then grow J by diagram
// neighbours, constructing an opposite for every type-(J ∪ {i}) simplex via
// build_opposite, and finally derive the witness map from chamber opposites
// by taking faces.  Every witness pair is re-verified.
inline std::variant<Verdict, CrFailure> certify_cr(const ConvexChamberSubcomplex& omega) {
  const Building& b = omega.building();
  const WeylGroup& w = b.weyl();
  if (!w.diagram().irreducible())
    fail(ErrorCode::NotIrreducible, "the building's diagram is not connected");

  int k0 = 0;
  for (int k = 1; k <= b.rank(); ++k)
    if (hypothesis_holds(omega, k)) {
      k0 = k;
      break;
    }
  if (k0 == 0) {
    CrFailure f;
    for (int k = 1; k <= b.rank(); ++k)
      for (const Simplex& v : omega.simplices_of_type(type_bit(k)))
        if (!opposite_in_omega(omega, v)) {
          f.unopposed_vertices.push_back(v);
          break;  // one witness per type
        }
    return f;
  }

  Verdict verdict;
  TypeSet J = type_bit(k0);
  while (J != full_types(b.rank())) {
    int i = 0, j = 0;
    for (int cand = 1; cand <= b.rank() && i == 0; ++cand) {
      if (has_type(J, cand)) continue;
      for (int jj : type_list(J))
        if (w.diagram().neighbours(cand, jj)) {
          i = cand;
          j = jj;
          break;
        }
    }
    if (i == 0) fail(ErrorCode::NotIrreducible, "no neighbour type left to add");
    for (const Simplex& z : omega.simplices_of_type(J | type_bit(i))) {
      BuildTrace tr;
      build_opposite(omega, z, J, i, j, &tr);
      verdict.traces.push_back(std::move(tr));
    }
    J |= type_bit(i);
  }

  // chamber opposites exist now; faces inherit
  std::map<Chamber, Simplex> chamber_opp;
  for (const Simplex& c : omega.simplices_of_type(full_types(b.rank()))) {
    auto opp = opposite_in_omega(omega, c);
    if (!opp)
      fail(ErrorCode::TraceAssertionFailed, "chamber lost its opposite after extension");
    chamber_opp.emplace(c.representative(), *opp);
  }
  verdict.kind = Verdict::Kind::CR;
  for (const Simplex& s : omega.all_simplices()) {
    Chamber host = UINT32_MAX;
    for (Chamber c : s.star())
      if (omega.contains_chamber(c)) {
        host = c;
        break;
      }
    const Simplex& copp = chamber_opp.at(host);
    Simplex image = copp.face(w.opposition(s.type()));
    if (!omega.contains(image) || !is_opposite_simplices(s, image))
      fail(ErrorCode::TraceAssertionFailed, "witness pair failed verification");
    verdict.witness.push_back({s, image});
  }
  return verdict;
}

// ---------------------------------------------------------------------------
// Centre constructions

// Type A: the intersection of all hyperplane (type-n) vertices of Ω.
inline CentreInfo find_centre_A(const Geometry& geom, const ConvexChamberSubcomplex& omega) {
  if (geom.kind() != GeomKind::FlagA)
    fail(ErrorCode::UnsupportedGeometry, "find_centre_A needs an A_n flag geometry");
  const Building& b = omega.building();
  int n = geom.n();

  bool unopposed = false;
  std::vector<Simplex> bad_points;
  for (const Simplex& v : omega.simplices_of_type(type_bit(1)))
    if (!opposite_in_omega(omega, v)) {
      unopposed = true;
      bad_points.push_back(v);
    }
  if (!unopposed)
    fail(ErrorCode::HypothesisNotMet, "every type-1 vertex has an opposite in the subcomplex");

  std::optional<Subspace> meet_all;
  for (const Simplex& h : omega.simplices_of_type(type_bit(n))) {
    const Subspace& hs = geom.vertex_subspace(h);
    meet_all = meet_all ? meet(*meet_all, hs) : hs;
  }
  if (!meet_all) fail(ErrorCode::NotChamberComplex, "no hyperplane vertex in the subcomplex");
  if (meet_all->dim() <= 0 || meet_all->dim() >= n + 1)
    fail(ErrorCode::TraceAssertionFailed, "hyperplane intersection is trivial");
  for (const Simplex& v : bad_points)
    if (!meet_all->contains_subspace(geom.vertex_subspace(v)))
      fail(ErrorCode::TraceAssertionFailed,
           "an unopposed point is outside the hyperplane intersection");

  auto vertex = geom.vertex_of_subspace(*meet_all);
  if (!vertex) fail(ErrorCode::TraceAssertionFailed, "centre subspace is not a vertex of the building");
  CentreInfo info{*vertex, *meet_all, omega.contains(*vertex)};
  (void)b;
  return info;
}

// C_2: the span of the unopposed type-1 vertices, which must be totally
// isotropic.
inline CentreInfo find_centre_polar(const Geometry& geom,
                                    const ConvexChamberSubcomplex& omega) {
  if (geom.kind() != GeomKind::SymplecticC2)
    fail(ErrorCode::UnsupportedGeometry, "find_centre_polar needs the C_2 geometry");

  std::vector<Simplex> unopposed;
  for (const Simplex& v : omega.simplices_of_type(type_bit(1)))
    if (!opposite_in_omega(omega, v)) unopposed.push_back(v);
  if (unopposed.empty())
    fail(ErrorCode::HypothesisNotMet, "every type-1 vertex has an opposite in the subcomplex");

  std::optional<Subspace> span;
  for (const Simplex& v : unopposed) {
    const Subspace& s = geom.vertex_subspace(v);
    span = span ? span_join(*span, s) : s;
  }
  // verify total isotropy under the symplectic form
  for (const auto& x : span->basis())
    for (const auto& y : span->basis())
      if (symplectic_form(geom.p(), x, y) != 0)
        fail(ErrorCode::IsotropyViolated, "unopposed points do not span an isotropic subspace");
  if (span->dim() > 2)
    fail(ErrorCode::IsotropyViolated, "isotropic span has impossible dimension");

  auto vertex = geom.vertex_of_subspace(*span);
  if (!vertex) fail(ErrorCode::TraceAssertionFailed, "centre span is not a vertex of the building");
  return CentreInfo{*vertex, *span, omega.contains(*vertex)};
}

// ---------------------------------------------------------------------------
// Classification against the CR-or-centre dichotomy

inline std::vector<std::vector<Chamber>> stabilizing_automorphisms(
    const Geometry& geom, const ConvexChamberSubcomplex& omega,
    std::uint64_t seed = 0) {
  std::vector<std::vector<Chamber>> out;
  if (geom.kind() == GeomKind::Thin) return out;
  for (const MatRows& m : geom.matrix_group(20160, 1000, seed)) {
    auto perm = geom.chamber_permutation(m);
    bool stab = true;
    for (Chamber c : omega.chambers())
      if (!omega.contains_chamber(perm[c])) {
        stab = false;
        break;
      }
    if (stab) out.push_back(std::move(perm));
  }
  return out;
}

inline Verdict classify(const Geometry& geom, const ConvexChamberSubcomplex& omega,
                        std::uint64_t seed = 0) {
  auto cr = certify_cr(omega);
  if (std::holds_alternative<Verdict>(cr)) return std::get<Verdict>(std::move(cr));

  Verdict verdict;
  if (geom.kind() == GeomKind::Thin) {
    verdict.kind = Verdict::Kind::Inconclusive;
    verdict.reason = "no centre construction is implemented for thin buildings";
    return verdict;
  }

  CentreInfo centre = geom.kind() == GeomKind::FlagA ? find_centre_A(geom, omega)
                                                     : find_centre_polar(geom, omega);
  verdict.kind = Verdict::Kind::Centre;
  if (!centre.in_omega)
    verdict.findings.push_back(
        "centre simplex is not a face of any subcomplex chamber (subspace " +
        centre.subspace.encode() + ")");

  // invariance evidence over the stabilizer of Ω in the matrix group
  auto stab = stabilizing_automorphisms(geom, omega, seed);
  const Building& b = omega.building();
  for (const auto& perm : stab) {
    Simplex image(b, perm[centre.simplex.representative()], centre.simplex.type());
    if (image != centre.simplex) {
      verdict.kind = Verdict::Kind::Inconclusive;
      verdict.reason = "a stabilizing automorphism moves the centre simplex";
      return verdict;
    }
  }
  verdict.evidence.push_back(
      "centre fixed by all " + std::to_string(stab.size()) +
      " stabilizing matrix automorphisms tested (matrix-induced, type-preserving only)");
  verdict.centre = std::move(centre);
  return verdict;
}

}  // namespace bldg
