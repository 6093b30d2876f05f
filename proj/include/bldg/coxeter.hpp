#pragma once

// Finite Coxeter groups of types A_n, B_n/C_n, D_n and I2(m), fully
// enumerated with exact word arithmetic.  Elements are canonicalized by
// their action on a faithful reference structure (permutations for A,
// signed permutations for B/C/D, images of two points of Z_{2m} for I2),
// so every reduced word of an element yields the same canonical form.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <string>
#include <vector>

#include "bldg/error.hpp"
#include "bldg/types.hpp"

namespace bldg {

enum class Family { A, B, C, D, I2 };

inline char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    case Family::I2: return 'I';
  }
  return '?';
}

struct CoxeterDiagram {
  Family family;
  int rank;
  int i2_order = 0;  // m for I2(m)
  std::vector<std::vector<int>> m;  // 1-based stored 0-based: m[i-1][j-1]

  int entry(int i, int j) const { return m[i - 1][j - 1]; }

  bool neighbours(int i, int j) const { return i != j && entry(i, j) >= 3; }

  // Connectivity of the diagram's neighbour graph on I.
  bool irreducible() const {
    std::vector<bool> seen(rank, false);
    std::vector<int> stack = {0};
    seen[0] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < rank; ++u)
        if (!seen[u] && m[v][u] >= 3) {
          seen[u] = true;
          stack.push_back(u);
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  }

  std::string name() const {
    if (family == Family::I2) return "I2:" + std::to_string(i2_order);
    return std::string(1, family_letter(family)) + std::to_string(rank);
  }

  static CoxeterDiagram make(Family family, int rank, int i2_order = 0) {
    CoxeterDiagram d;
    d.family = family;
    d.rank = rank;
    d.i2_order = i2_order;
    auto chain = [&](int upto) {
      for (int i = 0; i + 1 < upto; ++i) d.m[i][i + 1] = d.m[i + 1][i] = 3;
    };
    switch (family) {
      case Family::A:
        if (rank < 1) fail(ErrorCode::UnsupportedDiagram, "A_n needs n >= 1");
        d.init_matrix();
        chain(rank);
        break;
      case Family::B:
      case Family::C:
        if (rank < 2) fail(ErrorCode::UnsupportedDiagram, "B_n/C_n needs n >= 2");
        d.init_matrix();
        chain(rank);
        d.m[rank - 2][rank - 1] = d.m[rank - 1][rank - 2] = 4;
        break;
      case Family::D:
        if (rank < 4) fail(ErrorCode::UnsupportedDiagram, "D_n needs n >= 4");
        d.init_matrix();
        chain(rank - 1);
        d.m[rank - 3][rank - 1] = d.m[rank - 1][rank - 3] = 3;
        break;
      case Family::I2:
        if (rank != 2 || i2_order < 2)
          fail(ErrorCode::UnsupportedDiagram, "I2(m) needs rank 2, m >= 2");
        d.init_matrix();
        d.m[0][1] = d.m[1][0] = i2_order;
        break;
    }
    return d;
  }

  // Accepts "A3", "C2", "D4", "I2:6".
  static CoxeterDiagram parse(const std::string& s) {
    if (s.size() < 2) fail(ErrorCode::UnsupportedDiagram, "diagram string too short: " + s);
    if (s.rfind("I2:", 0) == 0) {
      int m = 0;
      try {
        m = std::stoi(s.substr(3));
      } catch (const std::exception&) {
        fail(ErrorCode::UnsupportedDiagram, "bad I2 order in " + s);
      }
      return make(Family::I2, 2, m);
    }
    Family f;
    switch (s[0]) {
      case 'A': f = Family::A; break;
      case 'B': f = Family::B; break;
      case 'C': f = Family::C; break;
      case 'D': f = Family::D; break;
      default: fail(ErrorCode::UnsupportedDiagram, "unknown family in " + s);
    }
    int rank = 0;
    try {
      rank = std::stoi(s.substr(1));
    } catch (const std::exception&) {
      fail(ErrorCode::UnsupportedDiagram, "bad rank in " + s);
    }
    return make(f, rank);
  }

 private:
  void init_matrix() {
    m.assign(rank, std::vector<int>(rank, 2));
    for (int i = 0; i < rank; ++i) m[i][i] = 1;
  }
};

using Elem = std::uint32_t;  // index into the enumerated group

class WeylGroup {
 public:
  static constexpr std::size_t kSizeCap = 100000;
  static constexpr Elem kIdentity = 0;

  explicit WeylGroup(const CoxeterDiagram& diagram) : diagram_(diagram) {
    check_order_bound();
    enumerate();
    find_longest();
    compute_inverses();
    compute_parabolic_longest();
    compute_opposition();
  }

  const CoxeterDiagram& diagram() const { return diagram_; }
  int rank() const { return diagram_.rank; }
  std::size_t size() const { return right_.size(); }

  Elem identity() const { return kIdentity; }
  Elem longest() const { return longest_; }

  int length(Elem w) const { return static_cast<int>(word_[w].size()); }

  // One stored reduced word, 1-based generator labels.
  std::vector<int> word(Elem w) const {
    std::vector<int> out;
    out.reserve(word_[w].size());
    for (auto g : word_[w]) out.push_back(g + 1);
    return out;
  }

  const std::vector<std::int32_t>& canonical_form(Elem w) const { return canon_[w]; }

  Elem generator(int i) const {
    check_generator(i);
    return right_[kIdentity][i - 1];
  }

  // w * s_i
  Elem multiply(Elem w, int i) const {
    check_generator(i);
    return right_[w][i - 1];
  }

  Elem multiply_elem(Elem a, Elem b) const {
    Elem r = a;
    for (auto g : word_[b]) r = right_[r][g];
    return r;
  }

  Elem inverse(Elem w) const { return inverse_[w]; }

  // Longest element of the standard parabolic W_J; identity for J = ∅.
  Elem parabolic_longest(TypeSet J) const {
    if ((J & ~full_types(rank())) != 0)
      fail(ErrorCode::BadType, "J not a subset of I: " + type_string(J));
    return parabolic_longest_[J];
  }

  // σ with w0 s_i w0 = s_{σ(i)}; an involution and diagram automorphism.
  int opposition(int i) const {
    check_generator(i);
    return opposition_[i - 1];
  }

  TypeSet opposition(TypeSet J) const {
    TypeSet out = 0;
    for (int i : type_list(J)) out |= type_bit(opposition(i));
    return out;
  }

 private:
  void check_generator(int i) const {
    if (i < 1 || i > rank())
      fail(ErrorCode::BadGenerator, "generator " + std::to_string(i) + " not in I");
  }

  void check_order_bound() const {
    // exact order formulas; overflow-safe under the cap
    long double order = 1;
    int n = diagram_.rank;
    switch (diagram_.family) {
      case Family::A:
        for (int k = 2; k <= n + 1; ++k) order *= k;
        break;
      case Family::B:
      case Family::C:
        for (int k = 2; k <= n; ++k) order *= k;
        for (int k = 0; k < n; ++k) order *= 2;
        break;
      case Family::D:
        for (int k = 2; k <= n; ++k) order *= k;
        for (int k = 0; k < n - 1; ++k) order *= 2;
        break;
      case Family::I2:
        order = 2.0L * diagram_.i2_order;
        break;
    }
    if (order > static_cast<long double>(kSizeCap))
      fail(ErrorCode::SizeLimit, diagram_.name() + " exceeds |W| <= 100000");
  }

  std::vector<std::int32_t> identity_form() const {
    int n = diagram_.rank;
    std::vector<std::int32_t> v;
    switch (diagram_.family) {
      case Family::A:
        v.resize(n + 1);
        std::iota(v.begin(), v.end(), 0);
        break;
      case Family::B:
      case Family::C:
      case Family::D:
        v.resize(n);
        std::iota(v.begin(), v.end(), 1);  // signed entries ±1..±n
        break;
      case Family::I2:
        v = {0, 1};  // images of 0 and 1 in Z_{2m}
        break;
    }
    return v;
  }

  std::vector<std::int32_t> apply_generator(const std::vector<std::int32_t>& v, int g0) const {
    // right multiplication: compose with s_{g0+1} innermost
    int n = diagram_.rank;
    std::vector<std::int32_t> w = v;
    switch (diagram_.family) {
      case Family::A:
        std::swap(w[g0], w[g0 + 1]);
        break;
      case Family::B:
      case Family::C:
        if (g0 < n - 1)
          std::swap(w[g0], w[g0 + 1]);
        else
          w[n - 1] = -w[n - 1];
        break;
      case Family::D:
        if (g0 < n - 1) {
          std::swap(w[g0], w[g0 + 1]);
        } else {
          std::int32_t a = w[n - 2], b = w[n - 1];
          w[n - 2] = -b;
          w[n - 1] = -a;
        }
        break;
      case Family::I2: {
        // v stores (f(0), f(1)) for f(x) = f(0) ± x mod 2m
        int mm = 2 * diagram_.i2_order;
        auto eval = [&](int x) {
          x = ((x % mm) + mm) % mm;
          int step = (v[1] - v[0] + mm) % mm;
          return step == 1 ? (v[0] + x) % mm : ((v[0] - x) % mm + mm) % mm;
        };
        if (g0 == 0) {
          // s_1: x -> -x
          w[0] = eval(0);
          w[1] = eval(-1);
        } else {
          // s_2: x -> 2 - x
          w[0] = eval(2);
          w[1] = eval(1);
        }
        break;
      }
    }
    return w;
  }

  void enumerate() {
    int n = diagram_.rank;
    std::map<std::vector<std::int32_t>, Elem> index;
    auto id = identity_form();
    canon_.push_back(id);
    word_.push_back({});
    right_.push_back(std::vector<Elem>(n));
    index[id] = kIdentity;
    std::queue<Elem> q;
    q.push(kIdentity);
    while (!q.empty()) {
      Elem w = q.front();
      q.pop();
      for (int g = 0; g < n; ++g) {
        auto form = apply_generator(canon_[w], g);
        auto it = index.find(form);
        Elem e;
        if (it == index.end()) {
          e = static_cast<Elem>(canon_.size());
          if (e >= kSizeCap) fail(ErrorCode::SizeLimit, "enumeration exceeded cap");
          index[form] = e;
          canon_.push_back(std::move(form));
          auto wd = word_[w];
          wd.push_back(static_cast<std::uint8_t>(g));
          word_.push_back(std::move(wd));
          right_.push_back(std::vector<Elem>(n));
          q.push(e);
        } else {
          e = it->second;
        }
        right_[w][g] = e;
      }
    }
  }

  void find_longest() {
    longest_ = kIdentity;
    for (Elem w = 0; w < size(); ++w)
      if (length(w) > length(longest_)) longest_ = w;
  }

  void compute_inverses() {
    inverse_.resize(size());
    for (Elem w = 0; w < size(); ++w) {
      Elem r = kIdentity;
      const auto& wd = word_[w];
      for (auto it = wd.rbegin(); it != wd.rend(); ++it) r = right_[r][*it];
      inverse_[w] = r;
    }
  }

  void compute_parabolic_longest() {
    int n = rank();
    parabolic_longest_.assign(std::size_t{1} << n, kIdentity);
    std::vector<bool> seen(size());
    for (TypeSet J = 0; J < (TypeSet{1} << n); ++J) {
      std::fill(seen.begin(), seen.end(), false);
      std::vector<Elem> stack = {kIdentity};
      seen[kIdentity] = true;
      Elem best = kIdentity;
      while (!stack.empty()) {
        Elem w = stack.back();
        stack.pop_back();
        if (length(w) > length(best)) best = w;
        for (int i : type_list(J)) {
          Elem e = right_[w][i - 1];
          if (!seen[e]) {
            seen[e] = true;
            stack.push_back(e);
          }
        }
      }
      parabolic_longest_[J] = best;
    }
  }

  void compute_opposition() {
    opposition_.resize(rank());
    for (int i = 1; i <= rank(); ++i) {
      Elem c = multiply_elem(multiply(longest_, i), longest_);
      bool found = false;
      for (int j = 1; j <= rank(); ++j)
        if (generator(j) == c) {
          opposition_[i - 1] = j;
          found = true;
          break;
        }
      if (!found) fail(ErrorCode::AxiomViolation, "w0 s_i w0 is not a generator");
    }
  }

  CoxeterDiagram diagram_;
  std::vector<std::vector<std::int32_t>> canon_;
  std::vector<std::vector<std::uint8_t>> word_;
  std::vector<std::vector<Elem>> right_;
  std::vector<Elem> inverse_;
  std::vector<Elem> parabolic_longest_;
  std::vector<int> opposition_;
  Elem longest_ = kIdentity;
};

inline WeylGroup build_weyl(const CoxeterDiagram& diagram) { return WeylGroup(diagram); }

}  // namespace bldg
