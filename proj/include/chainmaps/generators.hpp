#ifndef CHAINMAPS_GENERATORS_HPP
#define CHAINMAPS_GENERATORS_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chainmaps/family.hpp"
#include "chainmaps/transformation.hpp"

namespace chainmaps {

/// Largest n for which exhaustive search over all n^n maps runs without an
/// explicit override.
inline constexpr int kBruteForceCap = 8;

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(int n)
      : std::runtime_error("brute force over T_" + std::to_string(n) + " exceeds the n <= " +
                           std::to_string(kBruteForceCap) +
                           " budget (use the budget override to force it)") {}
};

enum class Mode { brute, direct };

namespace detail {

inline void check_chain_size(int n) {
  if (n < 1) throw std::invalid_argument("chain size must be positive, got " + std::to_string(n));
}

/// Visits every 0/1 vector of the given length with exactly `ones` ones, in
/// ascending lexicographic order.
template <class Visitor>
void for_each_step_vector(int length, int ones, Visitor&& visit) {
  if (ones < 0 || ones > length) return;
  std::vector<int> steps(static_cast<std::size_t>(length), 0);
  std::fill(steps.end() - ones, steps.end(), 1);
  do {
    visit(std::as_const(steps));
  } while (std::next_permutation(steps.begin(), steps.end()));
}

}  // namespace detail

/// Exhaustive filter over T_n, yielding members of `family` in lexicographic
/// order of their image lists. This is the oracle every closed form is
/// checked against; it deliberately uses only the definitional predicates.
template <class Visitor>
void for_each_brute_force(int n, Family family, Visitor&& visit, bool override_budget = false) {
  detail::check_chain_size(n);
  if (n > kBruteForceCap && !override_budget) throw BudgetExceeded(n);
  std::vector<int> img(static_cast<std::size_t>(n), 1);
  for (;;) {
    if (is_member(family, img)) visit(Transformation(n, img));
    int i = n - 1;
    while (i >= 0 && img[i] == n) img[i--] = 1;
    if (i < 0) return;
    ++img[i];
  }
}

/// One cell of the OCT_n construction: height p, image start c, and the
/// p - 1 gaps (numbered 1..n-1, gap x sits between x and x+1) where the
/// image steps up by one. Every other gap steps by zero.
struct GeneratorPartition {
  int height = 1;
  int start = 1;
  std::vector<int> step_positions;

  Transformation materialize(int n) const {
    if (height < 1 || height > n || start < 1 || start > n - height + 1 ||
        static_cast<int>(step_positions.size()) != height - 1) {
      throw std::invalid_argument("generator partition does not describe an OCT_" +
                                  std::to_string(n) + " element");
    }
    std::vector<int> img(static_cast<std::size_t>(n), start);
    for (int gap : step_positions) {
      if (gap < 1 || gap >= n) throw std::invalid_argument("step position out of range");
      for (int x = gap; x < n; ++x) ++img[static_cast<std::size_t>(x)];
    }
    return Transformation(n, std::move(img));
  }
};

/// Recovers the partition of an OCT_n element. Precondition: alpha is in OCT_n.
inline GeneratorPartition partition_of(const Transformation& alpha) {
  GeneratorPartition part;
  part.start = alpha(1);
  for (int x = 1; x < alpha.size(); ++x) {
    if (alpha(x + 1) != alpha(x)) part.step_positions.push_back(x);
  }
  part.height = static_cast<int>(part.step_positions.size()) + 1;
  return part;
}

/// All OCT_n elements with height p and left waist c, in lexicographic
/// order of the step vector. Disjoint cells may be produced concurrently.
template <class Visitor>
void for_each_oct_cell(int n, int height, int start, Visitor&& visit) {
  if (height < 1 || height > n || start < 1 || start > n - height + 1) return;
  detail::for_each_step_vector(n - 1, height - 1, [&](const std::vector<int>& steps) {
    std::vector<int> img(static_cast<std::size_t>(n));
    img[0] = start;
    for (int x = 1; x < n; ++x) img[x] = img[x - 1] + steps[x - 1];
    visit(Transformation(n, std::move(img)));
  });
}

/// OCT_n by ascending height, then ascending left waist, then step vector.
template <class Visitor>
void for_each_oct(int n, Visitor&& visit) {
  detail::check_chain_size(n);
  for (int p = 1; p <= n; ++p) {
    for (int c = 1; c <= n - p + 1; ++c) for_each_oct_cell(n, p, c, visit);
  }
}

/// Order-reversing contractions: the reflection of each OCT_n element, in
/// the same order.
template <class Visitor>
void for_each_orct_star(int n, Visitor&& visit) {
  for_each_oct(n, [&](const Transformation& a) { visit(reflect(a)); });
}

/// ORCT_n: all of OCT_n, then the reflected maps of height >= 2. The n
/// constants are monotone in both directions and appear once.
template <class Visitor>
void for_each_orct(int n, Visitor&& visit) {
  for_each_oct(n, visit);
  detail::check_chain_size(n);
  for (int p = 2; p <= n; ++p) {
    for (int c = 1; c <= n - p + 1; ++c) {
      for_each_oct_cell(n, p, c, [&](const Transformation& a) { visit(reflect(a)); });
    }
  }
}

/// ODCT_n: image of 1 pinned to 1, every 0/1 step vector, by ascending height.
template <class Visitor>
void for_each_odct(int n, Visitor&& visit) {
  detail::check_chain_size(n);
  for (int p = 1; p <= n; ++p) for_each_oct_cell(n, p, 1, visit);
}

/// Idempotents of OCT_n (one per interval [a, b]: fix it pointwise, send
/// x < a to a and x > b to b) or of ODCT_n (intervals with a = 1). Ordered by
/// ascending height, then ascending a.
template <class Visitor>
void for_each_idempotent(int n, Family family, Visitor&& visit) {
  detail::check_chain_size(n);
  if (family != Family::E_OCT && family != Family::E_ODCT) {
    throw std::invalid_argument("idempotent stream needs E_OCT or E_ODCT, got " +
                                std::string(name(family)));
  }
  for (int p = 1; p <= n; ++p) {
    const int last_start = family == Family::E_ODCT ? 1 : n - p + 1;
    for (int a = 1; a <= last_start; ++a) {
      const int b = a + p - 1;
      std::vector<int> img(static_cast<std::size_t>(n));
      for (int x = 1; x <= n; ++x) img[x - 1] = std::clamp(x, a, b);
      visit(Transformation(n, std::move(img)));
    }
  }
}

/// Members of `family`. Direct mode uses the constructive stream when the
/// family has one and falls back to brute force otherwise.
template <class Visitor>
void for_each_member(int n, Family family, Mode mode, Visitor&& visit,
                     bool override_budget = false) {
  if (mode == Mode::brute || !has_direct_stream(family)) {
    for_each_brute_force(n, family, visit, override_budget);
    return;
  }
  switch (family) {
    case Family::OCT: for_each_oct(n, visit); return;
    case Family::ORCT: for_each_orct(n, visit); return;
    case Family::ORCT_STAR: for_each_orct_star(n, visit); return;
    case Family::ODCT: for_each_odct(n, visit); return;
    case Family::E_OCT:
    case Family::E_ODCT: for_each_idempotent(n, family, visit); return;
    default: return;
  }
}

inline std::vector<Transformation> collect(int n, Family family, Mode mode,
                                           bool override_budget = false) {
  std::vector<Transformation> out;
  for_each_member(
      n, family, mode, [&](const Transformation& a) { out.push_back(a); }, override_budget);
  return out;
}

/// Which of the statistics (p, m, k) form a histogram key. Tuples list the
/// selected statistics in the order p, m, k.
struct KeySelection {
  bool height = false;
  bool fix = false;
  bool right_waist = false;

  int arity() const noexcept { return int{height} + int{fix} + int{right_waist}; }

  std::string label() const {
    std::string out;
    auto add = [&](bool on, const char* s) {
      if (!on) return;
      if (!out.empty()) out += ',';
      out += s;
    };
    add(height, "p");
    add(fix, "m");
    add(right_waist, "k");
    return out.empty() ? std::string("-") : out;
  }

  friend bool operator==(const KeySelection&, const KeySelection&) = default;
};

using KeyTuple = std::vector<int>;
using Histogram = std::map<KeyTuple, std::uint64_t>;

inline KeyTuple key_of(const Transformation& a, KeySelection keys) {
  KeyTuple t;
  const auto img = a.images();
  if (keys.height) {
    std::vector<int> sorted(img.begin(), img.end());
    std::sort(sorted.begin(), sorted.end());
    t.push_back(static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin()));
  }
  if (keys.fix) t.push_back(raw::fix_count(img));
  if (keys.right_waist) t.push_back(*std::max_element(img.begin(), img.end()));
  return t;
}

/// Exact counts per observed key tuple. Tuples that never occur are absent.
inline Histogram histogram(int n, Family family, KeySelection keys, Mode mode = Mode::direct,
                           bool override_budget = false) {
  Histogram h;
  for_each_member(
      n, family, mode, [&](const Transformation& a) { ++h[key_of(a, keys)]; }, override_budget);
  return h;
}

}  // namespace chainmaps

#endif  // CHAINMAPS_GENERATORS_HPP
