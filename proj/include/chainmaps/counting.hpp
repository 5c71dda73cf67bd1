#ifndef CHAINMAPS_COUNTING_HPP
#define CHAINMAPS_COUNTING_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "chainmaps/family.hpp"
#include "chainmaps/generators.hpp"

namespace chainmaps {

/// Exact non-negative integer. Every function in this header returns values
/// >= 0 and never touches floating point.
using BigCount = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigCount& v) { return v.str(); }

/// A query naming one class of F(n; ...): the chain size plus any subset
/// of height p, fix m and right waist k.
struct CountKey {
  int n = 1;
  std::optional<int> p;
  std::optional<int> m;
  std::optional<int> k;

  KeySelection selection() const noexcept {
    return {p.has_value(), m.has_value(), k.has_value()};
  }

  /// Throws std::invalid_argument unless n >= 1, every given statistic lies
  /// in {0..n}, and p, k >= 1 when given.
  void validate() const {
    if (n < 1) throw std::invalid_argument("n must be positive");
    auto in_range = [&](const std::optional<int>& s, int lo, const char* what) {
      if (s && (*s < lo || *s > n)) {
        throw std::invalid_argument(std::string(what) + "=" + std::to_string(*s) +
                                    " is outside {" + std::to_string(lo) + ".." +
                                    std::to_string(n) + "}");
      }
    };
    in_range(p, 1, "p");
    in_range(m, 0, "m");
    in_range(k, 1, "k");
  }
};

// ---------------------------------------------------------------------------
// Binomials and the three summation identities

/// C(a, b), zero for b < 0 or b > a. Requires a >= 0.
inline BigCount binomial(long a, long b) {
  if (a < 0) throw std::invalid_argument("binomial upper index must be non-negative");
  if (b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  BigCount r = 1;
  for (long i = 1; i <= b; ++i) {
    r *= a - b + i;
    r /= i;
  }
  return r;
}

inline BigCount pow2(int e) {
  if (e < 0) throw std::invalid_argument("negative power of two");
  BigCount r = 1;
  r <<= e;
  return r;
}

/// Number of size-k multisets from p kinds, C(p + k - 1, k); 1 when k = 0.
inline BigCount multichoose(long p, long k) {
  if (k == 0) return 1;
  return binomial(p + k - 1, k);
}

/// sum_k C(n, m - k) C(p, k) == C(n + p, m).
///
/// The sum runs over every k that can contribute (0..m). Stopping at k = n
/// drops terms whenever m and p both exceed n.
inline bool check_vandermonde(int m, int n, int p) {
  BigCount lhs = 0;
  for (int k = 0; k <= m; ++k) lhs += binomial(n, m - k) * binomial(p, k);
  return lhs == binomial(n + p, m);
}

/// sum_{i=0}^{j-a} C(j - i, a) == C(j + 1, a + 1), for j >= a.
inline bool check_hockey_stick(int j, int a) {
  if (j < a || a < 0) throw std::invalid_argument("hockey-stick identity needs j >= a >= 0");
  BigCount lhs = 0;
  for (int i = 0; i <= j - a; ++i) lhs += binomial(j - i, a);
  return lhs == binomial(j + 1, a + 1);
}

/// sum_{k=0}^{n} C(n - k, n - m) C(p + k - 1, k) == C(n + p, m), for m <= n.
inline bool check_convolution_3b(int m, int n, int p) {
  if (m > n || m < 0 || p < 0) {
    throw std::invalid_argument("convolution identity needs 0 <= m <= n and p >= 0");
  }
  BigCount lhs = 0;
  for (int k = 0; k <= n; ++k) lhs += binomial(n - k, n - m) * multichoose(p, k);
  return lhs == binomial(n + p, m);
}

// ---------------------------------------------------------------------------
// Order-preserving full contractions

namespace detail {

inline bool chain(int n, int k, int p, int m) noexcept {
  return n >= k && k >= p && p >= m && m >= 1;
}

// C(n-m-1, n-p-1) with the identity map (m = n) counted once.
inline BigCount oct_cell(int n, int p, int m) {
  if (m == n) return p == n ? 1 : 0;
  return binomial(n - m - 1, n - p - 1);
}

}  // namespace detail

/// F(n; p, m, k) on OCT_n: C(n-m-1, n-p-1), independent of k.
inline BigCount oct_f_pmk(int n, int p, int m, int k) {
  if (!detail::chain(n, k, p, m)) return 0;
  return detail::oct_cell(n, p, m);
}

inline BigCount oct_f_pm(int n, int p, int m) {
  if (!detail::chain(n, n, p, m)) return 0;
  return (n - p + 1) * detail::oct_cell(n, p, m);
}

inline BigCount oct_f_pk(int n, int p, int k) {
  if (!detail::chain(n, k, p, 1)) return 0;
  return binomial(n - 1, p - 1);
}

inline BigCount oct_f_mk(int n, int m, int k) {
  if (!detail::chain(n, k, m, m)) return 0;
  BigCount sum = 0;
  for (int p = m; p <= k; ++p) sum += detail::oct_cell(n, p, m);
  return sum;
}

inline BigCount oct_f_p(int n, int p) {
  if (p < 1 || p > n) return 0;
  return (n - p + 1) * binomial(n - 1, p - 1);
}

inline BigCount oct_f_k(int n, int k) {
  if (k < 1 || k > n) return 0;
  BigCount sum = 0;
  for (int p = 1; p <= k; ++p) sum += binomial(n - 1, p - 1);
  return sum;
}

/// (n-m+3) 2^(n-m-2) for n > m >= 1; 1 at m = n. Written as
/// (n-m+3) 2^(n-m) / 4, which is integral for every n - m >= 1.
inline BigCount oct_f_m(int n, int m) {
  if (m < 1 || m > n) return 0;
  if (m == n) return 1;
  return (n - m + 3) * pow2(n - m) / 4;
}

/// (n+1) 2^(n-2); 1 at n = 1.
inline BigCount oct_order(int n) {
  if (n < 1) return 0;
  if (n == 1) return 1;
  return (n + 1) * pow2(n - 2);
}

/// Counts over E(OCT_n). Idempotents correspond to intervals [a, b] of X_n,
/// with p = m = b - a + 1 and k = b, so any subset of (p, m, k) is answerable.
inline BigCount oct_idem_f(const CountKey& key) {
  const int n = key.n;
  if (key.p && key.m && *key.p != *key.m) return 0;
  const std::optional<int> len = key.p ? key.p : key.m;
  if (len && (*len < 1 || *len > n)) return 0;
  if (key.k && (*key.k < 1 || *key.k > n)) return 0;
  if (len && key.k) return *len <= *key.k ? 1 : 0;
  if (len) return n - *len + 1;
  if (key.k) return *key.k;
  return binomial(n + 1, 2);
}

// ---------------------------------------------------------------------------
// Order-preserving or order-reversing full contractions

/// a_n from n a_n = (n+2) a_{n-1} + 2(n+1) a_{n-2}, a_1 = 1, a_2 = 2, for
/// n = 1..n_max. Each step divides over the rationals and throws
/// std::logic_error if the quotient is not an integer.
inline std::vector<BigCount> a_sequence(int n_max) {
  std::vector<BigCount> a(static_cast<std::size_t>(std::max(n_max, 0)) + 1, 0);
  if (n_max >= 1) a[1] = 1;
  if (n_max >= 2) a[2] = 2;
  for (int n = 3; n <= n_max; ++n) {
    const boost::multiprecision::cpp_rational next(
        (n + 2) * a[n - 1] + 2 * (n + 1) * a[n - 2], BigCount(n));
    if (boost::multiprecision::denominator(next) != 1) {
      throw std::logic_error("a_" + std::to_string(n) + " is not an integer");
    }
    a[n] = boost::multiprecision::numerator(next);
  }
  return a;
}

inline BigCount a_seq(int n) {
  if (n < 1) throw std::invalid_argument("a_n is defined for n >= 1");
  return a_sequence(n)[static_cast<std::size_t>(n)];
}

inline BigCount orct_f_pk(int n, int p, int k) {
  if (!detail::chain(n, k, p, 1)) return 0;
  return p > 1 ? 2 * binomial(n - 1, p - 1) : BigCount(1);
}

inline BigCount orct_f_p(int n, int p) {
  if (p < 1 || p > n) return 0;
  return p > 1 ? 2 * (n - p + 1) * binomial(n - 1, p - 1) : BigCount(n);
}

inline BigCount orct_f_k(int n, int k) {
  if (k < 1 || k > n) return 0;
  return 2 * oct_f_k(n, k) - 1;
}

inline BigCount orct_order(int n) {
  if (n < 1) return 0;
  return (n + 1) * pow2(n - 1) - n;
}

/// Fixed-point distribution of the order-reversing contractions.
inline BigCount orct_star_f_m(int n, int m) {
  if (n < 1 || m < 0 || m > n) return 0;
  if (m == 0) return n == 1 ? BigCount(0) : a_seq(n - 1);
  if (m == 1) return a_seq(n);
  return 0;
}

/// Fixed-point distribution of ORCT_n. At n = 1 the m = 1 closed form
/// a_n + (n+2) 2^(n-3) - n is not an integer; the single map is counted
/// through the m = n case instead.
inline BigCount orct_f_m(int n, int m) {
  if (n < 1 || m < 0 || m > n) return 0;
  if (m == 0) return n == 1 ? BigCount(0) : a_seq(n - 1);
  if (m == n) return 1;
  if (m == 1) return a_seq(n) + (n + 2) * pow2(n) / 8 - n;
  return (n - m + 3) * pow2(n - m) / 4;
}

/// b(n, p): order-reversing contractions of height p with exactly one fixed
/// point.
///
///   b(n, p) = (n-p+1) sum_{i>=1} C(n-2i, p-2i+1)   for 1 <= p < n
///   b(n, n) = 1 if n is odd, else 0
///
/// The only candidate at p = n is the reversal x -> n-x+1, whose midpoint is
/// fixed exactly when n is odd.
inline BigCount b_closed(int n, int p) {
  if (p < 1 || p > n) return 0;
  if (p == n) return n % 2;
  BigCount sum = 0;
  for (int i = 1; p - 2 * i + 1 >= 0; ++i) sum += binomial(n - 2 * i, p - 2 * i + 1);
  return (n - p + 1) * sum;
}

/// b(n,p) = (n-p+1) C(n-2, p-1) + b(n-2, p-2), with b(n,1) = n, b(2,2) = 0
/// and b(n,0) = 0.
inline BigCount b_recurrence_a(int n, int p) {
  if (p < 1 || p > n) return 0;
  if (p == 1) return n;
  if (n == 2 && p == 2) return 0;
  return (n - p + 1) * binomial(n - 2, p - 1) + b_recurrence_a(n - 2, p - 2);
}

/// (n-p) b(n,p) = (n-p+1) b(n-1,p) + (n-p) b(n-1,p-1) for n > p, with
/// b(n,n) = 1 for odd n and 0 for even n. The division is checked.
inline BigCount b_recurrence_b(int n, int p) {
  if (p < 1 || p > n) return 0;
  // rows[i][j] = b(i, j) for j <= min(i, p)
  std::vector<std::vector<BigCount>> rows(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) {
    const int width = std::min(i, p);
    auto& row = rows[i];
    row.assign(static_cast<std::size_t>(width) + 1, 0);
    for (int j = 1; j <= width; ++j) {
      if (j == i) {
        row[j] = i % 2;
        continue;
      }
      const BigCount numer = (i - j + 1) * rows[i - 1][j] + (i - j) * rows[i - 1][j - 1];
      if (numer % (i - j) != 0) {
        throw std::logic_error("b(" + std::to_string(i) + "," + std::to_string(j) +
                               ") recurrence is not integral");
      }
      row[j] = numer / (i - j);
    }
  }
  return rows[n][p];
}

// ---------------------------------------------------------------------------
// Order-preserving, order-decreasing full contractions

namespace detail {

// C(n-m-1, p-m) with the identity map (m = n) counted once.
inline BigCount odct_cell(int n, int p, int m) {
  if (m == n) return p == n ? 1 : 0;
  return binomial(n - m - 1, p - m);
}

}  // namespace detail

/// Nonzero only when p = k: the image of an ODCT_n map is {1..p}.
inline BigCount odct_f_pkm(int n, int p, int k, int m) {
  if (!detail::chain(n, k, p, m) || p != k) return 0;
  return detail::odct_cell(n, p, m);
}

inline BigCount odct_f_pm(int n, int p, int m) {
  if (!detail::chain(n, n, p, m)) return 0;
  return detail::odct_cell(n, p, m);
}

inline BigCount odct_f_mk(int n, int m, int k) {
  if (!detail::chain(n, k, m, m)) return 0;
  return detail::odct_cell(n, k, m);
}

inline BigCount odct_f_p(int n, int p) {
  if (p < 1 || p > n) return 0;
  return binomial(n - 1, p - 1);
}

inline BigCount odct_f_k(int n, int k) {
  if (k < 1 || k > n) return 0;
  return binomial(n - 1, k - 1);
}

inline BigCount odct_f_m(int n, int m) {
  if (m < 1 || m > n) return 0;
  if (m == n) return 1;
  return pow2(n - m - 1);
}

inline BigCount odct_order(int n) {
  if (n < 1) return 0;
  return pow2(n - 1);
}

/// Counts over E(ODCT_n): the idempotents fix {1..b} and collapse the rest
/// onto b, so p = m = k = b.
inline BigCount odct_idem(const CountKey& key) {
  std::optional<int> common;
  for (const auto& s : {key.p, key.m, key.k}) {
    if (!s) continue;
    if (common && *common != *s) return 0;
    common = s;
  }
  if (!common) return key.n;
  return *common >= 1 && *common <= key.n ? 1 : 0;
}

// ---------------------------------------------------------------------------
// Catalog: every named counting function, dispatchable by name and key.

struct Formula {
  std::string_view name;
  /// Family whose (p, m, k) histogram this function counts, if any.
  std::optional<Family> family;
  /// Accepted statistic sets. Most functions take exactly one.
  std::vector<KeySelection> arities;
  /// Smallest fix value that is a meaningful key, used for tables.
  int min_fix = 1;
  std::function<BigCount(const CountKey&)> eval;

  bool accepts(KeySelection keys) const {
    return std::find(arities.begin(), arities.end(), keys) != arities.end();
  }
};

namespace detail {

inline std::vector<KeySelection> all_key_selections() {
  std::vector<KeySelection> out;
  for (int mask = 7; mask >= 0; --mask) out.push_back({(mask & 4) != 0, (mask & 2) != 0, (mask & 1) != 0});
  return out;
}

inline std::vector<Formula> build_catalog() {
  constexpr KeySelection none{};
  constexpr KeySelection P{true, false, false};
  constexpr KeySelection M{false, true, false};
  constexpr KeySelection K{false, false, true};
  constexpr KeySelection PM{true, true, false};
  constexpr KeySelection PK{true, false, true};
  constexpr KeySelection MK{false, true, true};
  constexpr KeySelection PMK{true, true, true};
  const auto any = all_key_selections();

  std::vector<Formula> c;
  auto add = [&](std::string_view name, std::optional<Family> f, std::vector<KeySelection> ar,
                 int min_fix, std::function<BigCount(const CountKey&)> eval) {
    c.push_back(Formula{name, f, std::move(ar), min_fix, std::move(eval)});
  };

  add("oct_f_pmk", Family::OCT, {PMK}, 1, [](const CountKey& q) { return oct_f_pmk(q.n, *q.p, *q.m, *q.k); });
  add("oct_f_pm", Family::OCT, {PM}, 1, [](const CountKey& q) { return oct_f_pm(q.n, *q.p, *q.m); });
  add("oct_f_pk", Family::OCT, {PK}, 1, [](const CountKey& q) { return oct_f_pk(q.n, *q.p, *q.k); });
  add("oct_f_mk", Family::OCT, {MK}, 1, [](const CountKey& q) { return oct_f_mk(q.n, *q.m, *q.k); });
  add("oct_f_p", Family::OCT, {P}, 1, [](const CountKey& q) { return oct_f_p(q.n, *q.p); });
  add("oct_f_k", Family::OCT, {K}, 1, [](const CountKey& q) { return oct_f_k(q.n, *q.k); });
  add("oct_f_m", Family::OCT, {M}, 1, [](const CountKey& q) { return oct_f_m(q.n, *q.m); });
  add("oct_order", Family::OCT, {none}, 1, [](const CountKey& q) { return oct_order(q.n); });
  add("oct_idem_f", Family::E_OCT, any, 1, [](const CountKey& q) { return oct_idem_f(q); });

  add("orct_f_pk", Family::ORCT, {PK}, 1, [](const CountKey& q) { return orct_f_pk(q.n, *q.p, *q.k); });
  add("orct_f_p", Family::ORCT, {P}, 1, [](const CountKey& q) { return orct_f_p(q.n, *q.p); });
  add("orct_f_k", Family::ORCT, {K}, 1, [](const CountKey& q) { return orct_f_k(q.n, *q.k); });
  add("orct_f_m", Family::ORCT, {M}, 0, [](const CountKey& q) { return orct_f_m(q.n, *q.m); });
  add("orct_order", Family::ORCT, {none}, 1, [](const CountKey& q) { return orct_order(q.n); });
  add("orct_star_f_m", Family::ORCT_STAR, {M}, 0, [](const CountKey& q) { return orct_star_f_m(q.n, *q.m); });

  add("odct_f_pkm", Family::ODCT, {PMK}, 1, [](const CountKey& q) { return odct_f_pkm(q.n, *q.p, *q.k, *q.m); });
  add("odct_f_pm", Family::ODCT, {PM}, 1, [](const CountKey& q) { return odct_f_pm(q.n, *q.p, *q.m); });
  add("odct_f_mk", Family::ODCT, {MK}, 1, [](const CountKey& q) { return odct_f_mk(q.n, *q.m, *q.k); });
  add("odct_f_p", Family::ODCT, {P}, 1, [](const CountKey& q) { return odct_f_p(q.n, *q.p); });
  add("odct_f_k", Family::ODCT, {K}, 1, [](const CountKey& q) { return odct_f_k(q.n, *q.k); });
  add("odct_f_m", Family::ODCT, {M}, 1, [](const CountKey& q) { return odct_f_m(q.n, *q.m); });
  add("odct_order", Family::ODCT, {none}, 1, [](const CountKey& q) { return odct_order(q.n); });
  add("odct_idem", Family::E_ODCT, any, 1, [](const CountKey& q) { return odct_idem(q); });

  add("a_seq", std::nullopt, {none}, 1, [](const CountKey& q) { return a_seq(q.n); });
  add("b_closed", std::nullopt, {P}, 1, [](const CountKey& q) { return b_closed(q.n, *q.p); });
  add("b_recurrence_a", std::nullopt, {P}, 1, [](const CountKey& q) { return b_recurrence_a(q.n, *q.p); });
  add("b_recurrence_b", std::nullopt, {P}, 1, [](const CountKey& q) { return b_recurrence_b(q.n, *q.p); });
  return c;
}

}  // namespace detail

inline const std::vector<Formula>& formula_catalog() {
  static const std::vector<Formula> catalog = detail::build_catalog();
  return catalog;
}

inline const Formula* find_formula(std::string_view name) {
  for (const auto& f : formula_catalog()) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

/// Validates the key and its arity, then evaluates. Throws
/// std::invalid_argument on either failure.
inline BigCount evaluate(const Formula& f, const CountKey& key) {
  key.validate();
  if (!f.accepts(key.selection())) {
    throw std::invalid_argument(std::string(f.name) + " does not take statistics (" +
                                key.selection().label() + ")");
  }
  return f.eval(key);
}

}  // namespace chainmaps

#endif  // CHAINMAPS_COUNTING_HPP
