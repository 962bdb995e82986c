// Multiplication tables for the small groups used across the tests:
// cyclic, dihedral, dicyclic, direct products, and permutation closures.
// Element 0 is always the identity.
#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "gp/table_group.hpp"

namespace zoo {

inline gp::FiniteGroupTable cyclic(int n) { return gp::cyclic_table(n); }

// Dihedral group of order 2n: rotations 0..n-1, reflections n..2n-1.
inline gp::FiniteGroupTable dihedral(int n) {
  int m = 2 * n;
  std::vector<int> t(m * m);
  auto idx = [&](int a, int b) -> int& { return t[a * m + b]; };
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int i = a % n, j = b % n;
      bool ra = a >= n, rb = b >= n;
      int rot;
      if (!ra && !rb)
        rot = (i + j) % n;
      else if (!ra && rb)
        rot = (j + i) % n;
      else if (ra && !rb)
        rot = (i - j + n) % n;
      else
        rot = (i - j + n) % n;
      idx(a, b) = rot + ((ra != rb) ? n : 0);
    }
  return gp::FiniteGroupTable(m, std::move(t));
}

// Dicyclic group of order 4n: a^k for k < 2n, then a^k b; b^2 = a^n,
// b a b^-1 = a^-1.  Dic(2) is the quaternion group Q8.
inline gp::FiniteGroupTable dicyclic(int n) {
  int m = 4 * n, half = 2 * n;
  std::vector<int> t(m * m);
  auto idx = [&](int a, int b) -> int& { return t[a * m + b]; };
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int i = a % half, j = b % half;
      bool ba = a >= half, bb = b >= half;
      int rot;
      bool has_b;
      if (!ba && !bb) {
        rot = (i + j) % half;
        has_b = false;
      } else if (!ba && bb) {
        rot = (i + j) % half;
        has_b = true;
      } else if (ba && !bb) {
        rot = (i - j + half) % half;
        has_b = true;
      } else {
        rot = (i - j + n + half) % half;  // (a^i b)(a^j b) = a^(i-j+n)
        has_b = false;
      }
      idx(a, b) = rot + (has_b ? half : 0);
    }
  return gp::FiniteGroupTable(m, std::move(t));
}

inline gp::FiniteGroupTable product(const gp::FiniteGroupTable& a,
                                    const gp::FiniteGroupTable& b) {
  return gp::direct_product_table(a, b);
}

// Closure of a set of permutations under composition, identity first,
// remaining elements in discovery order.
inline gp::FiniteGroupTable from_permutations(
    const std::vector<std::vector<int>>& gens) {
  size_t deg = gens.at(0).size();
  std::vector<int> id(deg);
  for (size_t i = 0; i < deg; ++i) id[i] = (int)i;
  std::vector<std::vector<int>> elems{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  for (size_t k = 0; k < elems.size(); ++k) {
    for (const auto& g : gens) {
      std::vector<int> composed(deg);
      for (size_t i = 0; i < deg; ++i) composed[i] = g[elems[k][i]];
      if (index.emplace(composed, (int)elems.size()).second)
        elems.push_back(composed);
    }
  }
  int m = (int)elems.size();
  std::vector<int> t(m * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      std::vector<int> composed(deg);
      for (size_t i = 0; i < deg; ++i) composed[i] = elems[a][elems[b][i]];
      t[a * m + b] = index.at(composed);
    }
  return gp::FiniteGroupTable(m, std::move(t));
}

inline gp::FiniteGroupTable symmetric3() { return dihedral(3); }

inline gp::FiniteGroupTable alternating4() {
  return from_permutations({{1, 2, 0, 3}, {1, 0, 3, 2}});  // (012), (01)(23)
}

inline gp::FiniteGroupTable quaternion8() { return dicyclic(2); }

// All isomorphism types of groups of order <= 12, identity included.
inline std::vector<std::pair<std::string, gp::FiniteGroupTable>>
groups_up_to_order_12() {
  std::vector<std::pair<std::string, gp::FiniteGroupTable>> out;
  out.emplace_back("C1", gp::FiniteGroupTable(1, {0}));
  out.emplace_back("C2", cyclic(2));
  out.emplace_back("C3", cyclic(3));
  out.emplace_back("C4", cyclic(4));
  out.emplace_back("C2xC2", product(cyclic(2), cyclic(2)));
  out.emplace_back("C5", cyclic(5));
  out.emplace_back("C6", cyclic(6));
  out.emplace_back("S3", symmetric3());
  out.emplace_back("C7", cyclic(7));
  out.emplace_back("C8", cyclic(8));
  out.emplace_back("C4xC2", product(cyclic(4), cyclic(2)));
  out.emplace_back("C2xC2xC2", product(product(cyclic(2), cyclic(2)),
                                       cyclic(2)));
  out.emplace_back("D4", dihedral(4));
  out.emplace_back("Q8", quaternion8());
  out.emplace_back("C9", cyclic(9));
  out.emplace_back("C3xC3", product(cyclic(3), cyclic(3)));
  out.emplace_back("C10", cyclic(10));
  out.emplace_back("D5", dihedral(5));
  out.emplace_back("C11", cyclic(11));
  out.emplace_back("C12", cyclic(12));
  out.emplace_back("C6xC2", product(cyclic(6), cyclic(2)));
  out.emplace_back("D6", dihedral(6));
  out.emplace_back("A4", alternating4());
  out.emplace_back("Dic3", dicyclic(3));
  return out;
}

}  // namespace zoo
