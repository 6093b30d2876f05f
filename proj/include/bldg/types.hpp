#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bldg {

// A set of types J ⊆ I = {1,...,rank}, stored with bit (i-1) for type i.
using TypeSet = std::uint32_t;

inline TypeSet type_bit(int i) { return TypeSet{1} << (i - 1); }

inline TypeSet full_types(int rank) { return (TypeSet{1} << rank) - 1; }

inline bool has_type(TypeSet J, int i) { return (J & type_bit(i)) != 0; }

inline int type_count(TypeSet J) { return __builtin_popcount(J); }

inline std::vector<int> type_list(TypeSet J) {
  std::vector<int> out;
  for (int i = 1; J != 0; ++i, J >>= 1)
    if (J & 1) out.push_back(i);
  return out;
}

inline std::string type_string(TypeSet J) {
  std::string s = "{";
  bool first = true;
  for (int i : type_list(J)) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

}  // namespace bldg
