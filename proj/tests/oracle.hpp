// Test-only oracle: enumerates T_n as plain image vectors and classifies them
// with predicates written from the definitions, independent of the library.
#ifndef CHAINMAPS_TESTS_ORACLE_HPP
#define CHAINMAPS_TESTS_ORACLE_HPP

#include <cstdlib>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

using Map = std::vector<int>;  // Map[x-1] = image of x

inline std::vector<Map> all_maps(int n) {
  std::vector<Map> out;
  Map a(n, 1);
  for (;;) {
    out.push_back(a);
    int i = n - 1;
    while (i >= 0 && a[i] == n) a[i--] = 1;
    if (i < 0) return out;
    ++a[i];
  }
}

inline bool preserving(const Map& a) {
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = x; y < a.size(); ++y)
      if (a[x] > a[y]) return false;
  return true;
}

inline bool reversing(const Map& a) {
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = x; y < a.size(); ++y)
      if (a[x] < a[y]) return false;
  return true;
}

inline bool contraction(const Map& a) {
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y)
      if (std::abs(a[x] - a[y]) > std::abs(int(x) - int(y))) return false;
  return true;
}

inline bool decreasing(const Map& a) {
  for (std::size_t x = 0; x < a.size(); ++x)
    if (a[x] > int(x) + 1) return false;
  return true;
}

inline bool idempotent(const Map& a) {
  for (std::size_t x = 0; x < a.size(); ++x)
    if (a[a[x] - 1] != a[x]) return false;
  return true;
}

inline int height(const Map& a) { return int(std::set<int>(a.begin(), a.end()).size()); }
inline int fix(const Map& a) {
  int m = 0;
  for (std::size_t x = 0; x < a.size(); ++x) m += a[x] == int(x) + 1;
  return m;
}
inline int right_waist(const Map& a) { return *std::set<int>(a.begin(), a.end()).rbegin(); }

inline std::vector<Map> filter(int n, const std::function<bool(const Map&)>& keep) {
  std::vector<Map> out;
  for (auto& a : all_maps(n))
    if (keep(a)) out.push_back(a);
  return out;
}

inline std::vector<Map> oct(int n) {
  return filter(n, [](const Map& a) { return preserving(a) && contraction(a); });
}
inline std::vector<Map> orct_star(int n) {
  return filter(n, [](const Map& a) { return reversing(a) && contraction(a); });
}
inline std::vector<Map> orct(int n) {
  return filter(n, [](const Map& a) { return (preserving(a) || reversing(a)) && contraction(a); });
}
inline std::vector<Map> odct(int n) {
  return filter(n, [](const Map& a) { return preserving(a) && contraction(a) && decreasing(a); });
}

/// Number of members with the given statistics; a negative argument means
/// "any value".
inline long count(const std::vector<Map>& family, int p, int m, int k) {
  long c = 0;
  for (const auto& a : family)
    c += (p < 0 || height(a) == p) && (m < 0 || fix(a) == m) && (k < 0 || right_waist(a) == k);
  return c;
}

}  // namespace oracle

#endif  // CHAINMAPS_TESTS_ORACLE_HPP
