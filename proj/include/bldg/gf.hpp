#pragma once

// Exact linear algebra over small prime fields (p <= 7) and enumeration of
// the flag geometries realizing thick buildings of types A_n and C_2.
// Subspaces are canonicalized by their reduced row-echelon basis, so
// equality and hashing are representational.

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "bldg/error.hpp"

namespace bldg {

using Vec = std::vector<std::uint8_t>;
using MatRows = std::vector<Vec>;

inline void check_prime(int p) {
  if (p != 2 && p != 3 && p != 5 && p != 7)
    fail(ErrorCode::NotPrime, "unsupported field F_" + std::to_string(p));
}

inline int inv_mod(int a, int p) {
  a %= p;
  for (int x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  fail(ErrorCode::Singular, "no inverse of " + std::to_string(a) + " mod " + std::to_string(p));
}

// In-place reduced row echelon form; returns the rank.  Zero rows are dropped.
inline int rref(int p, MatRows& rows) {
  check_prime(p);
  if (rows.empty()) return 0;
  std::size_t ncols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    int inv = inv_mod(rows[r][c], p);
    for (auto& x : rows[r]) x = static_cast<std::uint8_t>(x * inv % p);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][c] == 0) continue;
      int f = rows[k][c];
      for (std::size_t j = 0; j < ncols; ++j)
        rows[k][j] = static_cast<std::uint8_t>(((rows[k][j] - f * rows[r][j]) % p + p) % p);
    }
    ++r;
  }
  rows.resize(r);
  return static_cast<int>(r);
}

class Subspace {
 public:
  Subspace(int p, int ambient_dim, MatRows basis) : p_(p), ambient_(ambient_dim) {
    check_prime(p);
    for (const auto& row : basis)
      if (static_cast<int>(row.size()) != ambient_dim)
        fail(ErrorCode::AmbientMismatch, "basis row length != ambient dimension");
    rref(p, basis);
    basis_ = std::move(basis);
  }

  static Subspace zero(int p, int ambient_dim) { return Subspace(p, ambient_dim, {}); }

  static Subspace span_of(int p, int ambient_dim, const Vec& v) {
    return Subspace(p, ambient_dim, {v});
  }

  int p() const { return p_; }
  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const MatRows& basis() const { return basis_; }

  bool contains(Vec v) const {
    for (const auto& row : basis_) {
      std::size_t lead = 0;
      while (lead < row.size() && row[lead] == 0) ++lead;
      if (lead == row.size()) continue;
      int f = v[lead];
      if (f == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j)
        v[j] = static_cast<std::uint8_t>(((v[j] - f * row[j]) % p_ + p_) % p_);
    }
    return std::all_of(v.begin(), v.end(), [](std::uint8_t x) { return x == 0; });
  }

  bool contains_subspace(const Subspace& other) const {
    for (const auto& row : other.basis_)
      if (!contains(row)) return false;
    return true;
  }

  // All nonzero vectors of the subspace, one per p^dim - 1.
  std::vector<Vec> nonzero_vectors() const {
    std::vector<Vec> out;
    int d = dim();
    std::vector<int> coeff(d, 0);
    while (true) {
      std::size_t k = 0;
      while (k < coeff.size() && coeff[k] == p_ - 1) coeff[k++] = 0;
      if (k == coeff.size()) break;
      ++coeff[k];
      Vec v(ambient_, 0);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < ambient_; ++j)
          v[j] = static_cast<std::uint8_t>((v[j] + coeff[i] * basis_[i][j]) % p_);
      out.push_back(std::move(v));
    }
    return out;
  }

  std::string encode() const {
    std::string s;
    for (const auto& row : basis_) {
      for (auto x : row) s += static_cast<char>('0' + x);
      s += '.';
    }
    if (s.empty()) s = "0";
    return s;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.p_ == b.p_ && a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }
  friend bool operator<(const Subspace& a, const Subspace& b) {
    return a.encode() < b.encode();
  }

 private:
  int p_;
  int ambient_;
  MatRows basis_;
};

inline void check_same_ambient(const Subspace& u, const Subspace& v) {
  if (u.p() != v.p() || u.ambient_dim() != v.ambient_dim())
    fail(ErrorCode::AmbientMismatch, "subspaces live in different ambient spaces");
}

inline Subspace span_join(const Subspace& u, const Subspace& v) {
  check_same_ambient(u, v);
  MatRows rows = u.basis();
  rows.insert(rows.end(), v.basis().begin(), v.basis().end());
  return Subspace(u.p(), u.ambient_dim(), std::move(rows));
}

// Intersection by the Zassenhaus block construction.
inline Subspace meet(const Subspace& u, const Subspace& v) {
  check_same_ambient(u, v);
  int a = u.ambient_dim(), p = u.p();
  MatRows block;
  for (const auto& r : u.basis()) {
    Vec row(2 * a, 0);
    std::copy(r.begin(), r.end(), row.begin());
    std::copy(r.begin(), r.end(), row.begin() + a);
    block.push_back(std::move(row));
  }
  for (const auto& r : v.basis()) {
    Vec row(2 * a, 0);
    std::copy(r.begin(), r.end(), row.begin());
    block.push_back(std::move(row));
  }
  rref(p, block);
  MatRows inter;
  for (const auto& row : block) {
    bool left_zero = std::all_of(row.begin(), row.begin() + a,
                                 [](std::uint8_t x) { return x == 0; });
    if (left_zero) inter.emplace_back(row.begin() + a, row.end());
  }
  return Subspace(p, a, std::move(inter));
}

// Column-vector convention: a matrix g maps v to g·v; subspace images apply
// g to every basis vector.
inline Vec mat_apply(int p, const MatRows& g, const Vec& v) {
  Vec out(g.size(), 0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    int acc = 0;
    for (std::size_t j = 0; j < v.size(); ++j) acc += g[i][j] * v[j];
    out[i] = static_cast<std::uint8_t>(acc % p);
  }
  return out;
}

inline MatRows mat_mul(int p, const MatRows& a, const MatRows& b) {
  MatRows out(a.size(), Vec(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j)
        out[i][j] = static_cast<std::uint8_t>((out[i][j] + a[i][k] * b[k][j]) % p);
    }
  return out;
}

inline bool mat_invertible(int p, MatRows g) {
  std::size_t n = g.size();
  return static_cast<std::size_t>(rref(p, g)) == n;
}

inline Subspace subspace_image(const Subspace& s, const MatRows& g) {
  MatRows rows;
  for (const auto& r : s.basis()) rows.push_back(mat_apply(s.p(), g, r));
  return Subspace(s.p(), s.ambient_dim(), std::move(rows));
}

inline std::string mat_encode(const MatRows& g) {
  std::string s;
  for (const auto& row : g) {
    for (auto x : row) s += static_cast<char>('0' + x);
    s += '.';
  }
  return s;
}

// ---------------------------------------------------------------------------
// Flag enumeration

using FullFlag = std::vector<Subspace>;  // V_1 ⊂ ... ⊂ V_n in F_p^{n+1}

inline std::vector<Subspace> enumerate_points(int p, int ambient) {
  // canonical representatives: last nonzero coordinate normalized by rref
  std::vector<Subspace> pts;
  std::vector<int> v(ambient, 0);
  while (true) {
    std::size_t k = 0;
    while (k < v.size() && v[k] == p - 1) v[k++] = 0;
    if (k == v.size()) break;
    ++v[k];
    Vec row(ambient);
    for (int i = 0; i < ambient; ++i) row[i] = static_cast<std::uint8_t>(v[i]);
    Subspace s = Subspace::span_of(p, ambient, row);
    if (s.basis()[0] == row) pts.push_back(std::move(s));  // keep one rep per line
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

inline void extend_flags(int p, int ambient, int n, FullFlag& chain,
                         std::vector<FullFlag>& out) {
  if (static_cast<int>(chain.size()) == n) {
    out.push_back(chain);
    return;
  }
  const Subspace top = chain.back();  // copy: chain reallocates below
  std::vector<Subspace> seen;
  for (const Subspace& pt : enumerate_points(p, ambient)) {
    if (top.contains(pt.basis()[0])) continue;
    Subspace next = span_join(top, pt);
    if (std::find(seen.begin(), seen.end(), next) != seen.end()) continue;
    seen.push_back(next);
    chain.push_back(next);
    extend_flags(p, ambient, n, chain, out);
    chain.pop_back();
  }
}

inline std::vector<FullFlag> enumerate_flags_A(int n, int p) {
  check_prime(p);
  if (n < 1 || n > 3 || p > 3)
    fail(ErrorCode::SizeLimit, "A_" + std::to_string(n) + "(" + std::to_string(p) +
                                   ") outside the supported range");
  int ambient = n + 1;
  std::vector<FullFlag> out;
  for (const Subspace& pt : enumerate_points(p, ambient)) {
    FullFlag chain = {pt};
    extend_flags(p, ambient, n, chain, out);
  }
  return out;
}

// ---------------------------------------------------------------------------
// The symplectic quadrangle C_2(p)

inline int symplectic_form(int p, const Vec& x, const Vec& y) {
  int v = x[0] * y[1] - x[1] * y[0] + x[2] * y[3] - x[3] * y[2];
  return ((v % p) + p) % p;
}

struct SymplecticGeometry {
  int p;
  std::vector<Subspace> points;             // all 1-spaces of F_p^4
  std::vector<Subspace> lines;              // totally isotropic 2-spaces
  std::vector<std::pair<int, int>> flags;   // incident (point index, line index)

  bool isotropic(const Subspace& s) const {
    auto vs = s.nonzero_vectors();
    for (const auto& x : vs)
      for (const auto& y : vs)
        if (symplectic_form(p, x, y) != 0) return false;
    return true;
  }
};

inline SymplecticGeometry enumerate_flags_C2(int p) {
  check_prime(p);
  if (p > 3) fail(ErrorCode::SizeLimit, "C2(" + std::to_string(p) + ") outside the supported range");
  SymplecticGeometry g;
  g.p = p;
  g.points = enumerate_points(p, 4);
  std::vector<Subspace> seen;
  for (std::size_t i = 0; i < g.points.size(); ++i)
    for (std::size_t j = i + 1; j < g.points.size(); ++j) {
      if (symplectic_form(p, g.points[i].basis()[0], g.points[j].basis()[0]) != 0) continue;
      Subspace line = span_join(g.points[i], g.points[j]);
      if (std::find(seen.begin(), seen.end(), line) != seen.end()) continue;
      seen.push_back(line);
    }
  std::sort(seen.begin(), seen.end());
  g.lines = std::move(seen);
  for (std::size_t pi = 0; pi < g.points.size(); ++pi)
    for (std::size_t li = 0; li < g.lines.size(); ++li)
      if (g.lines[li].contains_subspace(g.points[pi]))
        g.flags.emplace_back(static_cast<int>(pi), static_cast<int>(li));
  return g;
}

// Image of a flag under an invertible matrix.  For symplectic geometries the
// matrix must preserve the form up to a nonzero scalar.
inline FullFlag apply_matrix(const FullFlag& flag, const MatRows& g) {
  if (flag.empty()) return flag;
  int p = flag[0].p();
  if (!mat_invertible(p, g)) fail(ErrorCode::Singular, "matrix is singular");
  FullFlag out;
  for (const auto& s : flag) out.push_back(subspace_image(s, g));
  return out;
}

inline int symplectic_multiplier(int p, const MatRows& g) {
  // ⟨gx, gy⟩ = λ⟨x, y⟩ with one λ for all pairs, else FormNotPreserved
  int n = 4;
  int lambda = -1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec ei(n, 0), ej(n, 0);
      ei[i] = 1;
      ej[j] = 1;
      int before = symplectic_form(p, ei, ej);
      int after = symplectic_form(p, mat_apply(p, g, ei), mat_apply(p, g, ej));
      if (before == 0) {
        if (after != 0) fail(ErrorCode::FormNotPreserved, "perpendicularity not preserved");
        continue;
      }
      int l = after * inv_mod(before, p) % p;
      if (l == 0) fail(ErrorCode::FormNotPreserved, "form collapses");
      if (lambda == -1) lambda = l;
      else if (lambda != l) fail(ErrorCode::FormNotPreserved, "inconsistent multiplier");
    }
  return lambda;
}

}  // namespace bldg
