#ifndef CHAINMAPS_FAMILY_HPP
#define CHAINMAPS_FAMILY_HPP

#include <array>
#include <optional>
#include <span>
#include <string_view>

#include "chainmaps/transformation.hpp"

namespace chainmaps {

/// Families of full transformations of X_n.
///
///   T          every full map
///   O / OR     order-preserving / order-preserving or order-reversing
///   CT         contractions
///   D          order-decreasing
///   OCT        O and CT
///   ORCT       OR and CT
///   ORCT_STAR  order-reversing contractions (constants included)
///   ODCT       D and OCT
///   E_OCT      idempotents of OCT
///   E_ODCT     idempotents of ODCT
enum class Family { T, O, OR, CT, D, OCT, ORCT, ORCT_STAR, ODCT, E_OCT, E_ODCT };

inline constexpr std::array<Family, 11> kAllFamilies = {
    Family::T,    Family::O,         Family::OR,   Family::CT,    Family::D,     Family::OCT,
    Family::ORCT, Family::ORCT_STAR, Family::ODCT, Family::E_OCT, Family::E_ODCT};

/// Families with closed-form counts and a constructive generator.
inline constexpr std::array<Family, 6> kCountedFamilies = {
    Family::OCT, Family::ORCT, Family::ORCT_STAR, Family::ODCT, Family::E_OCT, Family::E_ODCT};

constexpr std::string_view name(Family f) noexcept {
  switch (f) {
    case Family::T: return "T";
    case Family::O: return "O";
    case Family::OR: return "OR";
    case Family::CT: return "CT";
    case Family::D: return "D";
    case Family::OCT: return "OCT";
    case Family::ORCT: return "ORCT";
    case Family::ORCT_STAR: return "ORCT_STAR";
    case Family::ODCT: return "ODCT";
    case Family::E_OCT: return "E_OCT";
    case Family::E_ODCT: return "E_ODCT";
  }
  return "?";
}

/// Accepts the names produced by name(), plus "ORCT*".
inline std::optional<Family> parse_family(std::string_view text) noexcept {
  if (text == "ORCT*") return Family::ORCT_STAR;
  for (Family f : kAllFamilies) {
    if (name(f) == text) return f;
  }
  return std::nullopt;
}

constexpr bool has_direct_stream(Family f) noexcept {
  switch (f) {
    case Family::OCT:
    case Family::ORCT:
    case Family::ORCT_STAR:
    case Family::ODCT:
    case Family::E_OCT:
    case Family::E_ODCT: return true;
    default: return false;
  }
}

inline bool is_member(Family f, std::span<const int> img) noexcept {
  switch (f) {
    case Family::T: return true;
    case Family::O: return raw::order_preserving(img);
    case Family::OR: return raw::order_preserving(img) || raw::order_reversing(img);
    case Family::CT: return raw::contraction(img);
    case Family::D: return raw::order_decreasing(img);
    case Family::OCT: return raw::order_preserving(img) && raw::contraction(img);
    case Family::ORCT:
      return (raw::order_preserving(img) || raw::order_reversing(img)) && raw::contraction(img);
    case Family::ORCT_STAR: return raw::order_reversing(img) && raw::contraction(img);
    case Family::ODCT:
      return raw::order_decreasing(img) && raw::order_preserving(img) && raw::contraction(img);
    case Family::E_OCT: return is_member(Family::OCT, img) && raw::idempotent(img);
    case Family::E_ODCT: return is_member(Family::ODCT, img) && raw::idempotent(img);
  }
  return false;
}

inline bool is_member(Family f, const Transformation& a) noexcept {
  return is_member(f, a.images());
}

}  // namespace chainmaps

#endif  // CHAINMAPS_FAMILY_HPP
