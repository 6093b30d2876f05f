#pragma once

// Buildings as chamber systems: per-type panel partitions, a Weyl-valued
// distance computed by BFS with the monotone extension rule, residues,
// projections (gates) and opposition.  Assembly runs the full axiom checks
// on desk-scale inputs (≤ 2000 chambers).

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <queue>
#include <unordered_map>
#include <vector>

#include "bldg/coxeter.hpp"
#include "bldg/error.hpp"
#include "bldg/types.hpp"

namespace bldg {

using Chamber = std::uint32_t;

class Building {
 public:
  static constexpr std::size_t kFullCheckLimit = 2000;
  static constexpr std::size_t kFullTableLimit = 1000;

  // panels[t-1] is the partition of the chamber set into t-panels.
  Building(WeylGroup weyl, std::vector<std::vector<std::vector<Chamber>>> panels)
      : weyl_(std::move(weyl)), panels_(std::move(panels)) {
    validate_partitions();
    build_adjacency();
    check_connected();
    check_axioms();
    if (size() <= kFullTableLimit) {
      table_.resize(static_cast<std::size_t>(size()) * size());
      for (Chamber x = 0; x < size(); ++x)
        bfs_delta(x, &table_[static_cast<std::size_t>(x) * size()]);
    }
  }

  const WeylGroup& weyl() const { return weyl_; }
  int rank() const { return weyl_.rank(); }
  Chamber size() const { return nchambers_; }

  const std::vector<std::vector<std::vector<Chamber>>>& panels() const { return panels_; }

  // Chambers of the t-panel through c, including c itself.
  const std::vector<Chamber>& panel(Chamber c, int t) const {
    check_chamber(c);
    return panels_[t - 1][panel_of_[t - 1][c]];
  }

  Elem delta(Chamber x, Chamber y) const {
    check_chamber(x);
    check_chamber(y);
    if (!table_.empty()) return table_[static_cast<std::size_t>(x) * size() + y];
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->rows.find(x);
    if (it == cache_->rows.end()) {
      std::vector<Elem> row(size());
      bfs_delta(x, row.data());
      it = cache_->rows.emplace(x, std::move(row)).first;
    }
    return it->second[y];
  }

  int dist(Chamber x, Chamber y) const { return weyl_.length(delta(x, y)); }

  bool is_opposite_chambers(Chamber x, Chamber y) const {
    return delta(x, y) == weyl_.longest();
  }

  bool thick() const {
    for (const auto& family : panels_)
      for (const auto& block : family)
        if (block.size() < 3) return false;
    return true;
  }

  // Residue of c under adjacencies of the given types, sorted.
  std::vector<Chamber> residue(Chamber c, TypeSet types) const {
    check_chamber(c);
    std::vector<Chamber> out = {c};
    std::vector<bool> seen(size(), false);
    seen[c] = true;
    for (std::size_t head = 0; head < out.size(); ++head) {
      Chamber x = out[head];
      for (int t : type_list(types))
        for (Chamber y : panel(x, t))
          if (!seen[y]) {
            seen[y] = true;
            out.push_back(y);
          }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void check_chamber(Chamber c) const {
    if (c >= size()) fail(ErrorCode::UnknownChamber, "chamber " + std::to_string(c));
  }

  void validate_partitions() {
    if (static_cast<int>(panels_.size()) != rank())
      fail(ErrorCode::AxiomViolation, "need one panel family per type");
    nchambers_ = 0;
    for (const auto& family : panels_)
      for (const auto& block : family)
        for (Chamber c : block) nchambers_ = std::max(nchambers_, c + 1);
    if (nchambers_ == 0) fail(ErrorCode::AxiomViolation, "empty chamber set");
    panel_of_.assign(rank(), std::vector<std::uint32_t>(nchambers_, UINT32_MAX));
    for (int t = 0; t < rank(); ++t) {
      for (std::size_t b = 0; b < panels_[t].size(); ++b) {
        if (panels_[t][b].size() < 2)
          fail(ErrorCode::AxiomViolation,
               "singleton " + std::to_string(t + 1) + "-panel");
        for (Chamber c : panels_[t][b]) {
          if (c >= nchambers_ || panel_of_[t][c] != UINT32_MAX)
            fail(ErrorCode::AxiomViolation, "panels do not partition the chambers");
          panel_of_[t][c] = static_cast<std::uint32_t>(b);
        }
        std::sort(panels_[t][b].begin(), panels_[t][b].end());
      }
      for (Chamber c = 0; c < nchambers_; ++c)
        if (panel_of_[t][c] == UINT32_MAX)
          fail(ErrorCode::AxiomViolation,
               "chamber " + std::to_string(c) + " missing from a " +
                   std::to_string(t + 1) + "-panel");
    }
  }

  void build_adjacency() {}  // adjacency is read straight off the panels

  void check_connected() const {
    std::vector<bool> seen(size(), false);
    std::vector<Chamber> stack = {0};
    seen[0] = true;
    std::size_t n = 1;
    while (!stack.empty()) {
      Chamber x = stack.back();
      stack.pop_back();
      for (int t = 1; t <= rank(); ++t)
        for (Chamber y : panel(x, t))
          if (!seen[y]) {
            seen[y] = true;
            ++n;
            stack.push_back(y);
          }
    }
    if (n != size()) fail(ErrorCode::Disconnected, "chamber graph is not connected");
  }

  // BFS with the monotone extension rule; `consistency` additionally checks
  // that the rule never assigns two different values (δ well-definedness)
  // and that every panel has a unique gate seen from the source.
  void bfs_delta(Chamber src, Elem* row, bool consistency = false) const {
    std::vector<bool> known(size(), false);
    row[src] = weyl_.identity();
    known[src] = true;
    std::queue<Chamber> q;
    q.push(src);
    while (!q.empty()) {
      Chamber x = q.front();
      q.pop();
      for (int t = 1; t <= rank(); ++t) {
        Elem ext = weyl_.multiply(row[x], t);
        if (weyl_.length(ext) <= weyl_.length(row[x])) continue;
        for (Chamber y : panel(x, t)) {
          if (y == x) continue;
          if (!known[y]) {
            known[y] = true;
            row[y] = ext;
            q.push(y);
          } else if (consistency && row[y] != ext) {
            // x has no right descent at t, so x is the gate of this panel
            // and every other member must sit at row[x]·s_t.
            fail(ErrorCode::AxiomViolation,
                 "Weyl distance ill-defined at chambers " + std::to_string(src) +
                     "," + std::to_string(y));
          }
        }
      }
    }
    for (Chamber y = 0; y < size(); ++y)
      if (!known[y]) fail(ErrorCode::Disconnected, "unreached chamber in BFS");
    if (!consistency) return;
    for (int t = 1; t <= rank(); ++t)
      for (const auto& block : panels_[t - 1]) {
        Chamber gate = block[0];
        for (Chamber c : block)
          if (weyl_.length(row[c]) < weyl_.length(row[gate])) gate = c;
        Elem other = weyl_.multiply(row[gate], t);
        for (Chamber c : block) {
          if (c == gate) continue;
          if (row[c] != other)
            fail(ErrorCode::AxiomViolation,
                 "gate property fails on a " + std::to_string(t) +
                     "-panel seen from chamber " + std::to_string(src));
        }
      }
  }

  void check_axioms() const {
    std::vector<Chamber> sources;
    if (size() <= kFullCheckLimit) {
      sources.resize(size());
      for (Chamber c = 0; c < size(); ++c) sources[c] = c;
    } else {
      for (Chamber c = 0; c < size(); c += size() / 50 + 1) sources.push_back(c);
    }
    std::vector<Elem> row(size());
    for (Chamber src : sources) bfs_delta(src, row.data(), /*consistency=*/true);
  }

  WeylGroup weyl_;
  std::vector<std::vector<std::vector<Chamber>>> panels_;
  std::vector<std::vector<std::uint32_t>> panel_of_;
  Chamber nchambers_ = 0;
  std::vector<Elem> table_;
  struct RowCache {
    std::mutex mutex;
    std::unordered_map<Chamber, std::vector<Elem>> rows;
  };
  std::unique_ptr<RowCache> cache_ = std::make_unique<RowCache>();
};

inline Building assemble(WeylGroup weyl,
                         std::vector<std::vector<std::vector<Chamber>>> panels) {
  return Building(std::move(weyl), std::move(panels));
}

// The thin building of W: chambers are group elements, t-panels the right
// cosets of ⟨s_t⟩, so δ(u,v) = u⁻¹v.
inline Building thin_building(const CoxeterDiagram& diagram) {
  WeylGroup w(diagram);
  std::vector<std::vector<std::vector<Chamber>>> panels(w.rank());
  for (int t = 1; t <= w.rank(); ++t) {
    std::vector<bool> used(w.size(), false);
    for (Elem e = 0; e < w.size(); ++e) {
      if (used[e]) continue;
      Elem f = w.multiply(e, t);
      used[e] = used[f] = true;
      panels[t - 1].push_back({static_cast<Chamber>(std::min(e, f)),
                               static_cast<Chamber>(std::max(e, f))});
    }
  }
  return Building(std::move(w), std::move(panels));
}

// ---------------------------------------------------------------------------
// Simplices as residues

class Simplex {
 public:
  // The type-J face of the given chamber.
  Simplex(const Building& b, Chamber c, TypeSet type)
      : b_(&b), type_(type) {
    if ((type & ~full_types(b.rank())) != 0)
      fail(ErrorCode::BadType, "type set " + type_string(type) + " not within I");
    star_ = b.residue(c, full_types(b.rank()) & ~type);
  }

  const Building& building() const { return *b_; }
  TypeSet type() const { return type_; }
  TypeSet cotype() const { return full_types(b_->rank()) & ~type_; }
  Chamber representative() const { return star_.front(); }

  // Chambers of St R, the residue of cotype type().
  const std::vector<Chamber>& star() const { return star_; }

  bool is_chamber() const { return type_ == full_types(b_->rank()); }
  bool is_vertex() const { return type_count(type_) == 1; }
  bool is_empty() const { return type_ == 0; }

  bool has_face(const Simplex& f) const {
    return (f.type_ & ~type_) == 0 && Simplex(*b_, representative(), f.type_) == f;
  }

  Simplex face(TypeSet sub) const {
    if ((sub & ~type_) != 0)
      fail(ErrorCode::NotAFace, "requested face type not contained in the simplex type");
    return Simplex(*b_, representative(), sub);
  }

  friend bool operator==(const Simplex& a, const Simplex& b) {
    return a.b_ == b.b_ && a.type_ == b.type_ && a.star_.front() == b.star_.front();
  }
  friend bool operator!=(const Simplex& a, const Simplex& b) { return !(a == b); }
  friend bool operator<(const Simplex& a, const Simplex& b) {
    if (a.type_ != b.type_) return a.type_ < b.type_;
    return a.star_.front() < b.star_.front();
  }

 private:
  const Building* b_;
  TypeSet type_;
  std::vector<Chamber> star_;
};

inline std::vector<Chamber> star_chambers(const Simplex& s) { return s.star(); }

// Gate of the star of R seen from c: the unique chamber of St R nearest c.
inline Chamber proj_chamber(const Simplex& r, Chamber c) {
  const Building& b = r.building();
  const auto& star = r.star();
  Chamber best = star.front();
  int bd = b.dist(c, best);
  int ties = 1;
  for (std::size_t k = 1; k < star.size(); ++k) {
    int d = b.dist(c, star[k]);
    if (d < bd) {
      bd = d;
      best = star[k];
      ties = 1;
    } else if (d == bd) {
      ++ties;
    }
  }
  if (ties != 1) fail(ErrorCode::AxiomViolation, "gate is not unique");
  return best;
}

// proj_R(S): the simplex of St R whose star is exactly the set of gates of
// the chambers of St S.  Computed as the common face of those gates.
inline Simplex proj_simplex(const Simplex& r, const Simplex& s) {
  const Building& b = r.building();
  std::vector<Chamber> gates;
  for (Chamber d : s.star()) {
    Chamber g = proj_chamber(r, d);
    if (std::find(gates.begin(), gates.end(), g) == gates.end()) gates.push_back(g);
  }
  TypeSet common = 0;
  for (int t = 1; t <= b.rank(); ++t) {
    bool agree = true;
    Simplex v0(b, gates.front(), type_bit(t));
    for (std::size_t k = 1; k < gates.size() && agree; ++k)
      agree = Simplex(b, gates[k], type_bit(t)) == v0;
    if (agree) common |= type_bit(t);
  }
  Simplex out(b, gates.front(), common);
  if (out.star().size() != gates.size())
    fail(ErrorCode::NotAFace, "gate set is not the star of a simplex");
  return out;
}

// Every chamber of St A has an opposite in St B.  Opposition of simplices
// is this condition in both directions; one direction alone is satisfied
// vacuously when St A is much smaller than St B.
inline bool star_covered_by_opposites(const Simplex& a, const Simplex& b) {
  const Building& bd = a.building();
  for (Chamber c : a.star()) {
    bool found = false;
    for (Chamber d : b.star())
      if (bd.is_opposite_chambers(c, d)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

inline bool is_opposite_simplices(const Simplex& a, const Simplex& b) {
  return star_covered_by_opposites(a, b) && star_covered_by_opposites(b, a);
}

// Fast criterion, cross-validated against the literal one in the test suite:
// σ-related types plus a single opposite chamber pair between the stars.
inline bool is_opposite_simplices_fast(const Simplex& a, const Simplex& b) {
  const Building& bd = a.building();
  if (bd.weyl().opposition(a.type()) != b.type()) return false;
  for (Chamber c : a.star())
    for (Chamber d : b.star())
      if (bd.is_opposite_chambers(c, d)) return true;
  return false;
}

inline void check_in_star(const Simplex& r, const Simplex& x, const char* who) {
  if (!x.has_face(r))
    fail(ErrorCode::NotInStar, std::string(who) + " does not contain the base simplex");
}

// Opposition inside the residue building St R of type (W_{I∖J}, I∖J).
inline bool opposite_in_star(const Simplex& r, const Simplex& x, const Simplex& y) {
  check_in_star(r, x, "x");
  check_in_star(r, y, "y");
  const Building& b = r.building();
  Elem w0j = b.weyl().parabolic_longest(r.cotype());
  for (Chamber c : x.star()) {
    bool found = false;
    for (Chamber d : y.star())
      if (b.delta(c, d) == w0j) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

// Transfer through an opposite: project y1 through an opposite of x1 to
// of the base simplex.  If y0 ∈ St x1 is opposite y1 within St x1, the
// result is opposite y0 in Δ (asserted by the property suite).
inline Simplex opposite_transfer(const Simplex& x1, const Simplex& x1_opp,
                                 const Simplex& y1) {
  if (!is_opposite_simplices(x1, x1_opp))
    fail(ErrorCode::NotOpposite, "x1_opp is not opposite x1");
  check_in_star(x1, y1, "y1");
  return proj_simplex(x1_opp, y1);
}

// Convex hull of an opposite pair: the gallery interval, which is the
// apartment spanned by x and y.
inline std::vector<Chamber> apartment_hull(const Building& b, Chamber x, Chamber y) {
  if (!b.is_opposite_chambers(x, y))
    fail(ErrorCode::NotOpposite, "chambers are not opposite");
  std::vector<Chamber> out;
  int d = b.dist(x, y);
  for (Chamber z = 0; z < b.size(); ++z)
    if (b.dist(x, z) + b.dist(z, y) == d) out.push_back(z);
  return out;
}

}  // namespace bldg
