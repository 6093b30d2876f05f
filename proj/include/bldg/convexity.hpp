#pragma once

// Gallery-convex chamber subcomplexes.  Convexity is defined by interval
// closure on chambers; closure under projections is a verified consequence
// (see the property suites), not the definition.

#include <algorithm>
#include <set>
#include <vector>

#include "bldg/building.hpp"

namespace bldg {

// {z : dist(x,z) + dist(z,y) = dist(x,y)}
inline std::vector<Chamber> interval(const Building& b, Chamber x, Chamber y) {
  std::vector<Chamber> out;
  int d = b.dist(x, y);
  for (Chamber z = 0; z < b.size(); ++z)
    if (b.dist(x, z) + b.dist(z, y) == d) out.push_back(z);
  return out;
}

class ConvexChamberSubcomplex {
 public:
  ConvexChamberSubcomplex(const Building& b, std::vector<Chamber> chambers)
      : b_(&b), chambers_(std::move(chambers)) {
    if (chambers_.empty()) fail(ErrorCode::NotChamberComplex, "empty chamber set");
    std::sort(chambers_.begin(), chambers_.end());
    chambers_.erase(std::unique(chambers_.begin(), chambers_.end()), chambers_.end());
    member_.assign(b.size(), false);
    for (Chamber c : chambers_) {
      if (c >= b.size()) fail(ErrorCode::UnknownChamber, std::to_string(c));
      member_[c] = true;
    }
  }

  const Building& building() const { return *b_; }
  const std::vector<Chamber>& chambers() const { return chambers_; }
  std::size_t size() const { return chambers_.size(); }

  bool contains_chamber(Chamber c) const { return c < member_.size() && member_[c]; }

  // A simplex belongs to the subcomplex iff it is a face of a member chamber.
  bool contains(const Simplex& s) const {
    for (Chamber c : s.star())
      if (contains_chamber(c)) return true;
    return false;
  }

  // Deduplicated type-J faces of member chambers, sorted by representative.
  std::vector<Simplex> simplices_of_type(TypeSet J) const {
    if ((J & ~full_types(b_->rank())) != 0)
      fail(ErrorCode::BadType, "type set " + type_string(J) + " not within I");
    std::vector<Simplex> out;
    std::set<Chamber> reps;
    for (Chamber c : chambers_) {
      Simplex s(*b_, c, J);
      if (reps.insert(s.representative()).second) out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Every face of every member chamber, all nonempty types.
  std::vector<Simplex> all_simplices() const {
    std::vector<Simplex> out;
    for (TypeSet J = 1; J <= full_types(b_->rank()); ++J) {
      auto of_type = simplices_of_type(J);
      out.insert(out.end(), of_type.begin(), of_type.end());
    }
    return out;
  }

 private:
  const Building* b_;
  std::vector<Chamber> chambers_;
  std::vector<bool> member_;
};

// Least interval-closed superset of the seed; worklist over chamber pairs in
// ascending id order for reproducibility.
inline ConvexChamberSubcomplex convex_hull(const Building& b,
                                           std::vector<Chamber> seed) {
  if (seed.empty()) fail(ErrorCode::NotChamberComplex, "empty seed");
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  std::vector<bool> in(b.size(), false);
  std::vector<Chamber> members = seed;
  for (Chamber c : members) in[c] = true;
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Chamber> snapshot = members;
    for (std::size_t i = 0; i < snapshot.size(); ++i)
      for (std::size_t j = i + 1; j < snapshot.size(); ++j)
        for (Chamber z : interval(b, snapshot[i], snapshot[j]))
          if (!in[z]) {
            in[z] = true;
            members.push_back(z);
            grew = true;
          }
  }
  std::sort(members.begin(), members.end());
  return ConvexChamberSubcomplex(b, std::move(members));
}

inline bool is_convex(const Building& b, const std::vector<Chamber>& chambers) {
  if (chambers.empty()) return false;
  auto hull = convex_hull(b, chambers);
  std::vector<Chamber> sorted = chambers;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return hull.chambers() == sorted;
}

// Checks that a chamber map is a panel-preserving bijection.
inline void check_automorphism(const Building& b, const std::vector<Chamber>& perm) {
  if (perm.size() != b.size())
    fail(ErrorCode::AxiomViolation, "chamber map has wrong domain");
  std::vector<bool> hit(b.size(), false);
  for (Chamber c : perm) {
    if (c >= b.size() || hit[c])
      fail(ErrorCode::AxiomViolation, "chamber map is not a bijection");
    hit[c] = true;
  }
  for (int t = 1; t <= b.rank(); ++t)
    for (const auto& blk : b.panels()[t - 1]) {
      std::vector<Chamber> image;
      for (Chamber c : blk) image.push_back(perm[c]);
      std::sort(image.begin(), image.end());
      if (image != b.panel(perm[blk[0]], t))
        fail(ErrorCode::AxiomViolation, "chamber map does not preserve panels");
    }
}

// Chambers fixed by every given type-preserving automorphism.  Convexity of
// the result is asserted by the property suite, not assumed here.
inline ConvexChamberSubcomplex fixed_subcomplex(
    const Building& b, const std::vector<std::vector<Chamber>>& automorphisms) {
  for (const auto& perm : automorphisms) check_automorphism(b, perm);
  std::vector<Chamber> fixed;
  for (Chamber c = 0; c < b.size(); ++c) {
    bool ok = true;
    for (const auto& perm : automorphisms)
      if (perm[c] != c) {
        ok = false;
        break;
      }
    if (ok) fixed.push_back(c);
  }
  if (fixed.empty()) fail(ErrorCode::EmptyFixedSet, "no chamber is fixed by all maps");
  return ConvexChamberSubcomplex(b, std::move(fixed));
}

}  // namespace bldg
