#ifndef CHAINMAPS_VERIFY_HPP
#define CHAINMAPS_VERIFY_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "chainmaps/counting.hpp"
#include "chainmaps/family.hpp"
#include "chainmaps/generators.hpp"
#include "chainmaps/transformation.hpp"

namespace chainmaps {

/// One comparison of a closed form (or an expected object count) against
/// enumeration. `at` is "*" when the values are totals over every key, or
/// the first mismatching key when any key disagreed; either way `pass`
/// holds exactly when the two values are equal.
struct Run {
  std::string suite;
  std::string check;
  std::string family;
  std::string keys;
  int n = 0;
  std::string at = "*";
  BigCount formula_value = 0;
  BigCount enumerated_value = 0;
  std::uint64_t mismatches = 0;
  bool pass = true;
  double elapsed_seconds = 0.0;

  /// Same run apart from timing.
  bool same_outcome(const Run& o) const {
    return suite == o.suite && check == o.check && family == o.family && keys == o.keys &&
           n == o.n && at == o.at && formula_value == o.formula_value &&
           enumerated_value == o.enumerated_value && mismatches == o.mismatches &&
           pass == o.pass;
  }
};

struct FamilySummary {
  std::uint64_t runs = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  friend bool operator==(const FamilySummary&, const FamilySummary&) = default;
};

struct VerificationReport {
  std::vector<Run> runs;

  std::map<std::string, FamilySummary> summary() const {
    std::map<std::string, FamilySummary> out;
    for (const auto& r : runs) {
      auto& s = out[r.family];
      ++s.runs;
      ++(r.pass ? s.passed : s.failed);
    }
    return out;
  }

  std::uint64_t failures() const {
    return static_cast<std::uint64_t>(
        std::count_if(runs.begin(), runs.end(), [](const Run& r) { return !r.pass; }));
  }

  bool all_passed() const { return failures() == 0; }

  void append(const VerificationReport& other) {
    runs.insert(runs.end(), other.runs.begin(), other.runs.end());
  }
};

namespace detail {

using Clock = std::chrono::steady_clock;

inline double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Folds per-key comparisons into a Run.
class RunBuilder {
 public:
  RunBuilder(std::string suite, std::string check, std::string family, std::string keys, int n)
      : start_(Clock::now()) {
    run_.suite = std::move(suite);
    run_.check = std::move(check);
    run_.family = std::move(family);
    run_.keys = std::move(keys);
    run_.n = n;
  }

  void compare(const std::string& at, const BigCount& expected, const BigCount& observed) {
    total_expected_ += expected;
    total_observed_ += observed;
    if (expected != observed && run_.mismatches++ == 0) {
      run_.at = at;
      bad_expected_ = expected;
      bad_observed_ = observed;
    }
  }

  Run finish() {
    run_.pass = run_.mismatches == 0;
    run_.formula_value = run_.pass ? total_expected_ : bad_expected_;
    run_.enumerated_value = run_.pass ? total_observed_ : bad_observed_;
    run_.elapsed_seconds = seconds_since(start_);
    return run_;
  }

 private:
  Run run_;
  Clock::time_point start_;
  BigCount total_expected_ = 0, total_observed_ = 0, bad_expected_ = 0, bad_observed_ = 0;
};

inline std::string key_label(KeySelection keys, int p, int m, int k) {
  std::string out;
  auto add = [&](bool on, const char* s, int v) {
    if (!on) return;
    if (!out.empty()) out += ',';
    out += s;
    out += '=';
    out += std::to_string(v);
  };
  add(keys.height, "p", p);
  add(keys.fix, "m", m);
  add(keys.right_waist, "k", k);
  return out.empty() ? std::string("()") : out;
}

inline std::uint64_t lookup(const Histogram& h, const KeyTuple& t) {
  auto it = h.find(t);
  return it == h.end() ? 0 : it->second;
}

inline Histogram marginalize(const Histogram& full, KeySelection keys) {
  Histogram out;
  for (const auto& [t, count] : full) {
    KeyTuple sub;
    if (keys.height) sub.push_back(t[0]);
    if (keys.fix) sub.push_back(t[1]);
    if (keys.right_waist) sub.push_back(t[2]);
    out[sub] += count;
  }
  return out;
}

inline constexpr KeySelection kFullKey{true, true, true};

/// Full (p, m, k) histograms for several families at once. Brute mode makes
/// a single pass over T_n and filters each family by its predicate.
inline std::map<Family, Histogram> family_histograms(int n, const std::vector<Family>& families,
                                                     Mode mode, bool override_budget) {
  std::map<Family, Histogram> out;
  for (Family f : families) out[f];
  if (mode == Mode::brute) {
    for_each_brute_force(
        n, Family::T,
        [&](const Transformation& a) {
          std::optional<KeyTuple> key;
          for (Family f : families) {
            if (!is_member(f, a)) continue;
            if (!key) key = key_of(a, kFullKey);
            ++out[f][*key];
          }
        },
        override_budget);
  } else {
    for (Family f : families) out[f] = histogram(n, f, kFullKey, Mode::direct, override_budget);
  }
  return out;
}

inline void check_range(int n_lo, int n_hi) {
  if (n_lo < 1 || n_lo > n_hi) {
    throw std::invalid_argument("need 1 <= n_lo <= n_hi, got " + std::to_string(n_lo) + ".." +
                                std::to_string(n_hi));
  }
}

}  // namespace detail

/// Compares every catalog function tied to one of `families` against the
/// enumerated histogram, over every key tuple p in 1..n, m in 0..n,
/// k in 1..n (out-of-chain keys are expected to count zero). One run per
/// (function, statistic set, n), ordered by catalog position then n.
inline VerificationReport cross_validate(int n_lo, int n_hi, std::vector<Family> families,
                                         Mode mode, bool override_budget = false) {
  detail::check_range(n_lo, n_hi);
  if (mode == Mode::brute && n_hi > kBruteForceCap && !override_budget) {
    throw BudgetExceeded(n_hi);
  }
  std::sort(families.begin(), families.end());
  families.erase(std::unique(families.begin(), families.end()), families.end());

  struct Slot {
    std::size_t formula;
    std::size_t arity;
    int n;
    Run run;
  };
  std::vector<Slot> slots;
  const auto& catalog = formula_catalog();

  for (int n = n_lo; n <= n_hi; ++n) {
    const auto start = detail::Clock::now();
    const auto hists = detail::family_histograms(n, families, mode, override_budget);
    const double enumeration_seconds = detail::seconds_since(start);
    std::map<Family, bool> charged;

    for (std::size_t fi = 0; fi < catalog.size(); ++fi) {
      const Formula& formula = catalog[fi];
      if (!formula.family || !hists.contains(*formula.family)) continue;
      const Family family = *formula.family;
      for (std::size_t ai = 0; ai < formula.arities.size(); ++ai) {
        const KeySelection keys = formula.arities[ai];
        detail::RunBuilder builder("cross_validate", std::string(formula.name),
                                   std::string(name(family)), keys.label(), n);
        const Histogram h = detail::marginalize(hists.at(family), keys);

        const int p_lo = keys.height ? 1 : 0, p_hi = keys.height ? n : 0;
        const int m_lo = 0, m_hi = keys.fix ? n : 0;
        const int k_lo = keys.right_waist ? 1 : 0, k_hi = keys.right_waist ? n : 0;
        for (int p = p_lo; p <= p_hi; ++p) {
          for (int m = m_lo; m <= m_hi; ++m) {
            for (int k = k_lo; k <= k_hi; ++k) {
              CountKey q{n, std::nullopt, std::nullopt, std::nullopt};
              KeyTuple t;
              if (keys.height) q.p = p, t.push_back(p);
              if (keys.fix) q.m = m, t.push_back(m);
              if (keys.right_waist) q.k = k, t.push_back(k);
              builder.compare(detail::key_label(keys, p, m, k), evaluate(formula, q),
                              detail::lookup(h, t));
            }
          }
        }
        Run run = builder.finish();
        if (!charged[family]) {
          run.elapsed_seconds += enumeration_seconds;
          charged[family] = true;
        }
        slots.push_back({fi, ai, n, std::move(run)});
      }
    }
  }

  std::stable_sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) {
    return std::tie(a.formula, a.arity, a.n) < std::tie(b.formula, b.arity, b.n);
  });
  VerificationReport report;
  for (auto& s : slots) report.runs.push_back(std::move(s.run));
  return report;
}

/// Structural properties checked exhaustively over T_n for each n:
/// convexity of fix and image sets of contractions, the OCT step
/// characterization, the idempotent criterion, reflection behaviour, the
/// fixed-point bound for order-reversing maps, the OCT chain inequality, the
/// reflection bijection at height >= 2, and closure of OCT, ORCT and ODCT
/// under composition (all pairs for n <= 6, 20000 seeded random pairs
/// above).
inline VerificationReport invariant_suite(int n_lo, int n_hi, bool override_budget = false) {
  detail::check_range(n_lo, n_hi);
  if (n_hi > kBruteForceCap && !override_budget) throw BudgetExceeded(n_hi);

  VerificationReport report;
  for (int n = n_lo; n <= n_hi; ++n) {
    auto tally = [&](const char* check, const char* family, auto&& body) {
      detail::RunBuilder b("invariant", check, family, "-", n);
      std::uint64_t examined = 0, held = 0;
      body(examined, held);
      b.compare("*", examined, held);
      report.runs.push_back(b.finish());
    };

    std::uint64_t ct = 0, ct_fixed = 0, fix_convex = 0, image_convex = 0;
    std::uint64_t total = 0, step_ok = 0, idem_ok = 0, reflect_ok = 0;
    std::uint64_t reversing = 0, reversing_ok = 0;
    std::vector<Transformation> oct, orct, odct, orct_star_tall;
    const auto start = detail::Clock::now();
    for_each_brute_force(
        n, Family::T,
        [&](const Transformation& a) {
          ++total;
          const StatProfile s = stat_profile(a);
          const bool contraction = is_contraction(a);
          const bool preserving = is_order_preserving(a);
          const bool reversing_map = is_order_reversing(a);
          if (contraction) {
            ++ct;
            image_convex += is_convex(s.image_set);
            if (s.fix >= 1) {
              ++ct_fixed;
              fix_convex += is_convex(s.fix_set);
            }
          }
          bool unit_steps = true;
          for (int x = 1; x < n; ++x) {
            const int d = a(x + 1) - a(x);
            unit_steps = unit_steps && (d == 0 || d == 1);
          }
          step_ok += unit_steps == (preserving && contraction);
          idem_ok += is_idempotent(a) == (s.image_set == s.fix_set);
          const Transformation r = reflect(a);
          reflect_ok += reflect(r) == a && preserving == is_order_reversing(r) &&
                        reversing_map == is_order_preserving(r) &&
                        contraction == is_contraction(r);
          if (reversing_map) {
            ++reversing;
            reversing_ok += s.fix <= 1;
          }
          if (preserving && contraction) oct.push_back(a);
          if ((preserving || reversing_map) && contraction) orct.push_back(a);
          if (preserving && contraction && is_order_decreasing(a)) odct.push_back(a);
          if (reversing_map && contraction && s.height >= 2) orct_star_tall.push_back(a);
        },
        override_budget);
    const double sweep_seconds = detail::seconds_since(start);

    tally("fix_convex", "CT", [&](auto& e, auto& h) { e = ct_fixed, h = fix_convex; });
    report.runs.back().elapsed_seconds += sweep_seconds;
    tally("image_convex", "CT", [&](auto& e, auto& h) { e = ct, h = image_convex; });
    tally("oct_step_characterization", "T", [&](auto& e, auto& h) { e = total, h = step_ok; });
    tally("idempotent_criterion", "T", [&](auto& e, auto& h) { e = total, h = idem_ok; });
    tally("reflection_involution", "T", [&](auto& e, auto& h) { e = total, h = reflect_ok; });
    tally("reversing_fix_at_most_one", "ORCT_STAR",
          [&](auto& e, auto& h) { e = reversing, h = reversing_ok; });
    tally("chain_inequality", "OCT", [&](auto& e, auto& h) {
      for (const auto& a : oct) {
        const StatProfile s = stat_profile(a);
        const int p = s.height, m = s.fix, k = s.right_waist;
        ++e;
        h += n >= k && k >= p && p >= m && m >= 1 && (k != 1 || p == 1) && (p != 1 || m <= 1);
      }
    });
    tally("reflection_bijection", "ORCT_STAR", [&](auto& e, auto& h) {
      std::set<Transformation> targets(orct_star_tall.begin(), orct_star_tall.end());
      std::set<Transformation> hit;
      std::uint64_t tall = 0;
      bool inside = true;
      for (const auto& a : oct) {
        if (stat_profile(a).height < 2) continue;
        ++tall;
        const Transformation r = reflect(a);
        inside = inside && targets.contains(r);
        hit.insert(r);
      }
      e = targets.size();
      h = inside && tall == targets.size() ? hit.size() : 0;
    });

    auto closure = [&](const char* family_name, Family family,
                       const std::vector<Transformation>& members) {
      tally("closure", family_name, [&](auto& e, auto& h) {
        if (n <= 6) {
          for (const auto& a : members) {
            for (const auto& b : members) {
              ++e;
              h += is_member(family, compose(a, b));
            }
          }
          return;
        }
        std::mt19937_64 rng(0x5eed0000u + static_cast<unsigned>(n));
        std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
        for (int i = 0; i < 20000; ++i) {
          ++e;
          h += is_member(family, compose(members[pick(rng)], members[pick(rng)]));
        }
      });
    };
    closure("OCT", Family::OCT, oct);
    closure("ORCT", Family::ORCT, orct);
    closure("ODCT", Family::ODCT, odct);
  }
  return report;
}

/// Bounds for recurrence_suite.
struct RecurrenceBounds {
  /// b(n,p) recurrences against the closed form for n <= this.
  int b_n_max = 30;
  /// Integrality of a_n for n <= this.
  int a_n_max = 200;
  /// Brute-force comparisons (b, a_n, fixed-point distributions) for n <= this.
  int oracle_n_max = kBruteForceCap;
};

/// The b(n,p) recurrences, integrality of a_n, and the fixed-point
/// distributions of ORCT*_n and ORCT_n checked against brute force.
inline VerificationReport recurrence_suite(const RecurrenceBounds& bounds,
                                           bool override_budget = false) {
  if (bounds.oracle_n_max > kBruteForceCap && !override_budget) {
    throw BudgetExceeded(bounds.oracle_n_max);
  }
  VerificationReport report;

  for (int n = 1; n <= bounds.b_n_max; ++n) {
    detail::RunBuilder ra("recurrence", "b_recurrence_a_vs_closed", "ORCT_STAR", "p", n);
    detail::RunBuilder rb("recurrence", "b_recurrence_b_vs_closed", "ORCT_STAR", "p", n);
    for (int p = 1; p <= n; ++p) {
      const BigCount closed = b_closed(n, p);
      ra.compare("p=" + std::to_string(p), closed, b_recurrence_a(n, p));
      rb.compare("p=" + std::to_string(p), closed, b_recurrence_b(n, p));
    }
    report.runs.push_back(ra.finish());
    report.runs.push_back(rb.finish());
  }

  {
    detail::RunBuilder b("recurrence", "a_seq_integral", "ORCT_STAR", "-", bounds.a_n_max);
    std::uint64_t integral_terms = 0;
    try {
      integral_terms = a_sequence(bounds.a_n_max).size() - 1;
    } catch (const std::logic_error&) {
      integral_terms = 0;
    }
    b.compare("*", static_cast<std::uint64_t>(std::max(bounds.a_n_max, 0)), integral_terms);
    report.runs.push_back(b.finish());
  }

  for (int n = 1; n <= bounds.oracle_n_max; ++n) {
    Histogram star, orct;
    for_each_brute_force(
        n, Family::T,
        [&](const Transformation& a) {
          const bool star_member = is_member(Family::ORCT_STAR, a);
          const bool orct_member = is_member(Family::ORCT, a);
          if (!star_member && !orct_member) return;
          const KeyTuple t = key_of(a, {true, true, false});
          if (star_member) ++star[t];
          if (orct_member) ++orct[{t[1]}];
        },
        override_budget);
    Histogram star_m;
    for (const auto& [t, c] : star) star_m[{t[1]}] += c;

    detail::RunBuilder b("recurrence", "b_closed_vs_oracle", "ORCT_STAR", "p", n);
    for (int p = 1; p <= n; ++p) {
      b.compare("p=" + std::to_string(p), b_closed(n, p), detail::lookup(star, {p, 1}));
    }
    report.runs.push_back(b.finish());

    detail::RunBuilder a("recurrence", "a_seq_vs_oracle", "ORCT_STAR", "-", n);
    a.compare("*", a_seq(n), detail::lookup(star_m, {1}));
    report.runs.push_back(a.finish());

    detail::RunBuilder s("recurrence", "orct_star_fix_distribution", "ORCT_STAR", "m", n);
    detail::RunBuilder o("recurrence", "orct_fix_distribution", "ORCT", "m", n);
    for (int m = 0; m <= n; ++m) {
      s.compare("m=" + std::to_string(m), orct_star_f_m(n, m), detail::lookup(star_m, {m}));
      o.compare("m=" + std::to_string(m), orct_f_m(n, m), detail::lookup(orct, {m}));
    }
    report.runs.push_back(s.finish());
    report.runs.push_back(o.finish());
  }
  return report;
}

inline VerificationReport recurrence_suite(int n_max) {
  RecurrenceBounds bounds;
  bounds.b_n_max = n_max;
  return recurrence_suite(bounds);
}

// ---------------------------------------------------------------------------
// Serialization (schema 1)

inline constexpr int kReportSchema = 1;

inline nlohmann::ordered_json to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  j["all_passed"] = report.all_passed();
  auto& runs = j["runs"] = nlohmann::ordered_json::array();
  for (const Run& r : report.runs) {
    runs.push_back({{"suite", r.suite},
                    {"check", r.check},
                    {"family", r.family},
                    {"keys", r.keys},
                    {"n", r.n},
                    {"at", r.at},
                    {"formula_value", to_decimal(r.formula_value)},
                    {"enumerated_value", to_decimal(r.enumerated_value)},
                    {"mismatches", r.mismatches},
                    {"status", r.pass ? "pass" : "fail"},
                    {"elapsed_seconds", r.elapsed_seconds}});
  }
  auto& summary = j["summary"] = nlohmann::ordered_json::object();
  for (const auto& [family, s] : report.summary()) {
    summary[family] = {{"runs", s.runs}, {"passed", s.passed}, {"failed", s.failed}};
  }
  return j;
}

/// Throws std::invalid_argument on a wrong schema version, a missing field,
/// or a run whose status disagrees with its two values.
inline VerificationReport report_from_json(const nlohmann::ordered_json& j) {
  if (!j.contains("schema") || j.at("schema") != kReportSchema) {
    throw std::invalid_argument("unsupported verification report schema");
  }
  VerificationReport report;
  try {
    for (const auto& e : j.at("runs")) {
      Run r;
      r.suite = e.at("suite").get<std::string>();
      r.check = e.at("check").get<std::string>();
      r.family = e.at("family").get<std::string>();
      r.keys = e.at("keys").get<std::string>();
      r.n = e.at("n").get<int>();
      r.at = e.at("at").get<std::string>();
      r.formula_value = BigCount(e.at("formula_value").get<std::string>());
      r.enumerated_value = BigCount(e.at("enumerated_value").get<std::string>());
      r.mismatches = e.at("mismatches").get<std::uint64_t>();
      r.pass = e.at("status").get<std::string>() == "pass";
      r.elapsed_seconds = e.at("elapsed_seconds").get<double>();
      if (r.pass != (r.formula_value == r.enumerated_value)) {
        throw std::invalid_argument("run " + r.check + " n=" + std::to_string(r.n) +
                                    " has a status inconsistent with its values");
      }
      report.runs.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed verification report: ") + e.what());
  }
  return report;
}

}  // namespace chainmaps

#endif  // CHAINMAPS_VERIFY_HPP
