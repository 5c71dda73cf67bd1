#ifndef CHAINMAPS_TRANSFORMATION_HPP
#define CHAINMAPS_TRANSFORMATION_HPP

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace chainmaps {

/// A full transformation of the chain X_n = {1, ..., n}.
///
/// Points and images are 1-based at every interface. The image of x is
/// written `alpha(x)`; composition is left-to-right, so `compose(a, b)(x)`
/// is `b(a(x))`.
class Transformation {
 public:
  /// Throws std::invalid_argument if n < 1, the image list has the wrong
  /// length, or an image falls outside {1..n}.
  Transformation(int n, std::vector<int> images) : images_(std::move(images)) {
    if (n < 1) {
      throw std::invalid_argument("chain size must be positive, got " + std::to_string(n));
    }
    if (images_.size() != static_cast<std::size_t>(n)) {
      throw std::invalid_argument("expected " + std::to_string(n) + " images, got " +
                                  std::to_string(images_.size()));
    }
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] < 1 || images_[i] > n) {
        throw std::invalid_argument("image " + std::to_string(images_[i]) + " of point " +
                                    std::to_string(i + 1) + " is outside {1.." +
                                    std::to_string(n) + "}");
      }
    }
  }

  static Transformation identity(int n) {
    std::vector<int> images(n > 0 ? static_cast<std::size_t>(n) : 0);
    for (std::size_t i = 0; i < images.size(); ++i) images[i] = static_cast<int>(i) + 1;
    return Transformation(n, std::move(images));
  }

  static Transformation constant(int n, int value) {
    return Transformation(n, std::vector<int>(n > 0 ? static_cast<std::size_t>(n) : 0, value));
  }

  int size() const noexcept { return static_cast<int>(images_.size()); }

  std::span<const int> images() const noexcept { return images_; }

  /// Image of the point x, 1 <= x <= size(). Unchecked.
  int operator()(int x) const noexcept { return images_[static_cast<std::size_t>(x - 1)]; }

  friend bool operator==(const Transformation&, const Transformation&) = default;
  friend auto operator<=>(const Transformation& a, const Transformation& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<int> images_;
};

inline Transformation make_transformation(int n, std::vector<int> images) {
  return Transformation(n, std::move(images));
}

/// x -> (x alpha) beta.
inline Transformation compose(const Transformation& alpha, const Transformation& beta) {
  if (alpha.size() != beta.size()) {
    throw std::invalid_argument("cannot compose maps on chains of size " +
                                std::to_string(alpha.size()) + " and " +
                                std::to_string(beta.size()));
  }
  std::vector<int> images(alpha.images().size());
  for (int x = 1; x <= alpha.size(); ++x) images[x - 1] = beta(alpha(x));
  return Transformation(alpha.size(), std::move(images));
}

// Predicates over a raw 1-based image list. The enumerators run these on a
// scratch buffer before a Transformation is materialized.
namespace raw {

inline bool order_preserving(std::span<const int> img) noexcept {
  return std::is_sorted(img.begin(), img.end());
}

inline bool order_reversing(std::span<const int> img) noexcept {
  return std::is_sorted(img.begin(), img.end(), std::greater<>{});
}

/// |x - y| >= |x alpha - y alpha| over every pair.
inline bool contraction(std::span<const int> img) noexcept {
  const std::size_t n = img.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      const int image_gap = img[x] > img[y] ? img[x] - img[y] : img[y] - img[x];
      if (static_cast<std::size_t>(image_gap) > y - x) return false;
    }
  }
  return true;
}

inline bool order_decreasing(std::span<const int> img) noexcept {
  for (std::size_t i = 0; i < img.size(); ++i) {
    if (img[i] > static_cast<int>(i) + 1) return false;
  }
  return true;
}

/// alpha^2 = alpha.
inline bool idempotent(std::span<const int> img) noexcept {
  for (int y : img) {
    if (img[static_cast<std::size_t>(y - 1)] != y) return false;
  }
  return true;
}

inline int fix_count(std::span<const int> img) noexcept {
  int m = 0;
  for (std::size_t i = 0; i < img.size(); ++i) m += img[i] == static_cast<int>(i) + 1;
  return m;
}

}  // namespace raw

inline bool is_order_preserving(const Transformation& a) noexcept {
  return raw::order_preserving(a.images());
}
inline bool is_order_reversing(const Transformation& a) noexcept {
  return raw::order_reversing(a.images());
}
inline bool is_contraction(const Transformation& a) noexcept {
  return raw::contraction(a.images());
}
inline bool is_order_decreasing(const Transformation& a) noexcept {
  return raw::order_decreasing(a.images());
}
inline bool is_idempotent(const Transformation& a) { return compose(a, a) == a; }

/// The statistics of one transformation: height p = |Im|, fix m = |F|,
/// right waist k = max Im, left waist = min Im.
struct StatProfile {
  int height = 0;
  int fix = 0;
  int right_waist = 0;
  int left_waist = 0;
  std::vector<int> fix_set;
  std::vector<int> image_set;

  friend bool operator==(const StatProfile&, const StatProfile&) = default;
};

inline StatProfile stat_profile(const Transformation& a) {
  StatProfile s;
  std::vector<bool> hit(static_cast<std::size_t>(a.size()) + 1, false);
  for (int x = 1; x <= a.size(); ++x) {
    hit[a(x)] = true;
    if (a(x) == x) s.fix_set.push_back(x);
  }
  for (int y = 1; y <= a.size(); ++y) {
    if (hit[y]) s.image_set.push_back(y);
  }
  s.height = static_cast<int>(s.image_set.size());
  s.fix = static_cast<int>(s.fix_set.size());
  s.left_waist = s.image_set.front();
  s.right_waist = s.image_set.back();
  return s;
}

/// True if the sorted set is a run of consecutive integers. The empty set
/// counts as convex.
inline bool is_convex(std::span<const int> sorted_points) noexcept {
  return sorted_points.empty() ||
         sorted_points.back() - sorted_points.front() + 1 ==
             static_cast<int>(sorted_points.size());
}

/// x -> n - x alpha + 1.
inline Transformation reflect(const Transformation& a) {
  std::vector<int> images(a.images().begin(), a.images().end());
  for (int& y : images) y = a.size() - y + 1;
  return Transformation(a.size(), std::move(images));
}

/// Textual form `n: i1 i2 ... in`.
inline std::string to_string(const Transformation& a) {
  std::string out = std::to_string(a.size());
  out += ':';
  for (int y : a.images()) {
    out += ' ';
    out += std::to_string(y);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Transformation& a) {
  return os << to_string(a);
}

/// Inverse of to_string. Accepts exactly the canonical form: a decimal n,
/// a colon, then n images each preceded by a single space.
inline Transformation parse_transformation(std::string_view line) {
  auto fail = [&](const std::string& why) -> Transformation {
    throw std::invalid_argument("cannot parse transformation '" + std::string(line) +
                                "': " + why);
  };
  auto read_int = [&](std::size_t& pos, int& value) {
    const char* first = line.data() + pos;
    const char* last = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr == first) return false;
    pos += static_cast<std::size_t>(ptr - first);
    return true;
  };

  std::size_t pos = 0;
  int n = 0;
  if (!read_int(pos, n)) return fail("missing chain size");
  if (pos >= line.size() || line[pos] != ':') return fail("expected ':' after chain size");
  ++pos;
  if (n < 1) return fail("chain size must be positive");
  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(n));
  while (pos < line.size()) {
    if (line[pos] != ' ') return fail("expected a single space before each image");
    ++pos;
    int y = 0;
    if (!read_int(pos, y)) return fail("malformed image");
    images.push_back(y);
  }
  return Transformation(n, std::move(images));
}

}  // namespace chainmaps

#endif  // CHAINMAPS_TRANSFORMATION_HPP
