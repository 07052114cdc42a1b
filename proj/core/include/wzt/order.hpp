#pragma once

#include <string_view>

namespace wzt {

/// Verdict of a three-way comparison under some group ordering.
enum class Ordering { less, equal, greater };

/// Sign of an element relative to the identity: positive means 1 < g.
enum class Sign { negative, zero, positive };

constexpr std::string_view to_string(Ordering o) {
  switch (o) {
    case Ordering::less: return "less";
    case Ordering::equal: return "equal";
    case Ordering::greater: return "greater";
  }
  return "?";
}

constexpr std::string_view to_string(Sign s) {
  switch (s) {
    case Sign::negative: return "negative";
    case Sign::zero: return "zero";
    case Sign::positive: return "positive";
  }
  return "?";
}

constexpr Ordering opposite(Ordering o) {
  if (o == Ordering::less) return Ordering::greater;
  if (o == Ordering::greater) return Ordering::less;
  return Ordering::equal;
}

/// Maps the sign of a^{-1} b to the verdict of "a vs b":
/// positive difference means a < b.
constexpr Ordering ordering_from_difference_sign(Sign s) {
  switch (s) {
    case Sign::positive: return Ordering::less;
    case Sign::zero: return Ordering::equal;
    case Sign::negative: return Ordering::greater;
  }
  return Ordering::equal;
}

}  // namespace wzt
