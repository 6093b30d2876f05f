#pragma once

// Concrete geometries realizing the supported buildings, with chamber ids
// assigned by lexicographic order of the canonical flag serialization, and
// the matrix groups acting on them (GL_{n+1}(F_p) for type A, Sp_4(F_p)
// for C_2).

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bldg/building.hpp"
#include "bldg/gf.hpp"

namespace bldg {

enum class GeomKind { Thin, FlagA, SymplecticC2 };

class Geometry {
 public:
  GeomKind kind() const { return kind_; }
  int p() const { return p_; }
  int n() const { return n_; }  // A_n rank; 2 for C_2
  int ambient() const { return kind_ == GeomKind::FlagA ? n_ + 1 : 4; }
  const std::string& spec() const { return spec_; }
  const Building& building() const { return *building_; }

  // Per chamber, the flag subspaces indexed by vertex type - 1.
  const std::vector<FullFlag>& flags() const { return flags_; }

  std::string flag_key(const FullFlag& f) const {
    std::string s;
    for (const auto& sub : f) {
      s += sub.encode();
      s += '|';
    }
    return s;
  }

  Chamber chamber_of(const FullFlag& f) const {
    auto it = chamber_index_.find(flag_key(f));
    if (it == chamber_index_.end())
      fail(ErrorCode::UnknownChamber, "flag is not a chamber of this geometry");
    return it->second;
  }

  // Subspace attached to a vertex (type-{t} simplex).
  const Subspace& vertex_subspace(const Simplex& v) const {
    if (!v.is_vertex()) fail(ErrorCode::BadType, "not a vertex");
    int t = type_list(v.type())[0];
    return flags_[v.representative()][t - 1];
  }

  // Vertex simplex carrying a given subspace, if the subspace occurs in the
  // geometry (dim d subspaces are type-d vertices for FlagA; for C_2, points
  // are type 1 and isotropic lines type 2).
  std::optional<Simplex> vertex_of_subspace(const Subspace& s) const {
    int t = s.dim();
    if (kind_ == GeomKind::SymplecticC2 && t > 2) return std::nullopt;
    if (t < 1 || t > n_) return std::nullopt;
    for (Chamber c = 0; c < building_->size(); ++c)
      if (flags_[c][t - 1] == s) return Simplex(*building_, c, type_bit(t));
    return std::nullopt;
  }

  // Chamber permutation induced by a matrix; checks invertibility, form
  // preservation for C_2, and that the result permutes the chamber set.
  std::vector<Chamber> chamber_permutation(const MatRows& g) const {
    if (kind_ == GeomKind::Thin)
      fail(ErrorCode::UnsupportedGeometry, "thin buildings carry no matrix action");
    if (!mat_invertible(p_, g)) fail(ErrorCode::Singular, "matrix is singular");
    if (kind_ == GeomKind::SymplecticC2) symplectic_multiplier(p_, g);
    std::vector<Chamber> perm(building_->size());
    std::vector<bool> hit(building_->size(), false);
    for (Chamber c = 0; c < building_->size(); ++c) {
      Chamber img = chamber_of(apply_matrix(flags_[c], g));
      perm[c] = img;
      if (hit[img]) fail(ErrorCode::Singular, "matrix action is not a bijection on flags");
      hit[img] = true;
    }
    return perm;
  }

  // Order of the full matrix group (GL or Sp).
  std::size_t matrix_group_order() const {
    std::size_t order = 1;
    if (kind_ == GeomKind::FlagA) {
      std::size_t pm = 1;
      for (int k = 0; k < ambient(); ++k) pm *= p_;
      std::size_t pk = 1;
      for (int k = 0; k < ambient(); ++k) {
        order *= pm - pk;
        pk *= p_;
      }
    } else if (kind_ == GeomKind::SymplecticC2) {
      std::size_t q = p_;
      order = q * q * q * q * (q * q - 1) * (q * q * q * q - 1);
    }
    return order;
  }

  std::vector<MatRows> matrix_generators() const {
    int a = ambient();
    auto identity = [&] {
      MatRows m(a, Vec(a, 0));
      for (int i = 0; i < a; ++i) m[i][i] = 1;
      return m;
    };
    std::vector<MatRows> gens;
    if (kind_ == GeomKind::FlagA) {
      MatRows swap01 = identity();
      std::swap(swap01[0], swap01[1]);
      gens.push_back(swap01);
      MatRows cycle(a, Vec(a, 0));
      for (int i = 0; i < a; ++i) cycle[(i + 1) % a][i] = 1;
      gens.push_back(cycle);
      MatRows shear = identity();
      shear[0][1] = 1;
      gens.push_back(shear);
      if (p_ > 2) {
        MatRows diag = identity();
        diag[0][0] = 2;  // 2 generates F_3^* and F_5^*; enough at p <= 3
        gens.push_back(diag);
      }
    } else if (kind_ == GeomKind::SymplecticC2) {
      // symplectic transvections x -> x + λ⟨x,v⟩v
      for (const Subspace& pt : enumerate_points(p_, 4)) {
        const Vec& v = pt.basis()[0];
        for (int lambda = 1; lambda < p_; ++lambda) {
          MatRows m = identity();
          for (int j = 0; j < a; ++j) {
            Vec ej(a, 0);
            ej[j] = 1;
            int c = symplectic_form(p_, ej, v) * lambda % p_;
            for (int i = 0; i < a; ++i)
              m[i][j] = static_cast<std::uint8_t>((m[i][j] + c * v[i]) % p_);
          }
          gens.push_back(std::move(m));
        }
      }
    }
    return gens;
  }

  // Full enumeration by closure when the group order is at most `cap`,
  // otherwise `sample` seeded pseudo-random elements.
  std::vector<MatRows> matrix_group(std::size_t cap = 20160, std::size_t sample = 1000,
                                    std::uint64_t seed = 0) const {
    auto gens = matrix_generators();
    if (matrix_group_order() <= cap) {
      std::map<std::string, MatRows> seen;
      MatRows id(ambient(), Vec(ambient(), 0));
      for (int i = 0; i < ambient(); ++i) id[i][i] = 1;
      seen[mat_encode(id)] = id;
      std::vector<MatRows> frontier = {id};
      while (!frontier.empty()) {
        std::vector<MatRows> next;
        for (const auto& m : frontier)
          for (const auto& g : gens) {
            MatRows prod = mat_mul(p_, m, g);
            auto key = mat_encode(prod);
            if (!seen.count(key)) {
              seen[key] = prod;
              next.push_back(std::move(prod));
            }
          }
        frontier = std::move(next);
      }
      std::vector<MatRows> out;
      out.reserve(seen.size());
      for (auto& [k, m] : seen) out.push_back(std::move(m));
      return out;
    }
    std::mt19937_64 rng(seed);
    std::vector<MatRows> out;
    MatRows id(ambient(), Vec(ambient(), 0));
    for (int i = 0; i < ambient(); ++i) id[i][i] = 1;
    for (std::size_t k = 0; k < sample; ++k) {
      MatRows m = id;
      for (int step = 0; step < 40; ++step)
        m = mat_mul(p_, m, gens[rng() % gens.size()]);
      out.push_back(std::move(m));
    }
    return out;
  }

  // Parses "A2:p=2", "C2:p=3", "thin:A3", "thin:I2:4".
  static Geometry build(const std::string& spec) {
    Geometry g;
    g.spec_ = spec;
    if (spec.rfind("thin:", 0) == 0) {
      g.kind_ = GeomKind::Thin;
      CoxeterDiagram d = CoxeterDiagram::parse(spec.substr(5));
      g.n_ = d.rank;
      g.building_ = std::make_shared<Building>(thin_building(d));
      return g;
    }
    auto colon = spec.find(":p=");
    if (colon == std::string::npos)
      fail(ErrorCode::UnsupportedGeometry, "cannot parse geometry spec: " + spec);
    std::string head = spec.substr(0, colon);
    int p = 0;
    try {
      p = std::stoi(spec.substr(colon + 3));
    } catch (const std::exception&) {
      fail(ErrorCode::UnsupportedGeometry, "bad prime in geometry spec: " + spec);
    }
    if (head == "C2") {
      g.kind_ = GeomKind::SymplecticC2;
      g.p_ = p;
      g.n_ = 2;
      g.build_symplectic();
    } else if (head.size() == 2 && head[0] == 'A') {
      g.kind_ = GeomKind::FlagA;
      g.p_ = p;
      g.n_ = head[1] - '0';
      if (g.n_ < 2 || g.n_ > 3)
        fail(ErrorCode::UnsupportedGeometry, "only A2/A3 flag geometries: " + spec);
      g.build_flag_a();
    } else {
      fail(ErrorCode::UnsupportedGeometry, "unknown geometry: " + spec);
    }
    return g;
  }

 private:
  void index_flags(std::vector<FullFlag> flags) {
    std::sort(flags.begin(), flags.end(), [this](const FullFlag& a, const FullFlag& b) {
      return flag_key(a) < flag_key(b);
    });
    flags_ = std::move(flags);
    for (Chamber c = 0; c < flags_.size(); ++c) chamber_index_[flag_key(flags_[c])] = c;
  }

  // t-panels: flags agreeing on every vertex except the type-t one.
  std::vector<std::vector<std::vector<Chamber>>> panels_from_flags(int rank) const {
    std::vector<std::vector<std::vector<Chamber>>> panels(rank);
    for (int t = 1; t <= rank; ++t) {
      std::map<std::string, std::vector<Chamber>> blocks;
      for (Chamber c = 0; c < flags_.size(); ++c) {
        std::string key;
        for (int u = 1; u <= rank; ++u)
          if (u != t) key += flags_[c][u - 1].encode() + "|";
        blocks[key].push_back(c);
      }
      for (auto& [k, blk] : blocks) panels[t - 1].push_back(std::move(blk));
    }
    return panels;
  }

  void build_flag_a() {
    auto fl = enumerate_flags_A(n_, p_);
    index_flags(std::move(fl));
    WeylGroup w(CoxeterDiagram::make(Family::A, n_));
    building_ = std::make_shared<Building>(std::move(w), panels_from_flags(n_));
  }

  void build_symplectic() {
    SymplecticGeometry sg = enumerate_flags_C2(p_);
    std::vector<FullFlag> fl;
    for (const auto& [pi, li] : sg.flags) fl.push_back({sg.points[pi], sg.lines[li]});
    index_flags(std::move(fl));
    WeylGroup w(CoxeterDiagram::make(Family::C, 2));
    building_ = std::make_shared<Building>(std::move(w), panels_from_flags(2));
  }

  GeomKind kind_ = GeomKind::Thin;
  int p_ = 0;
  int n_ = 0;
  std::string spec_;
  std::shared_ptr<Building> building_;
  std::vector<FullFlag> flags_;
  std::map<std::string, Chamber> chamber_index_;
};

}  // namespace bldg
