#pragma once

#include <optional>
#include <string>

namespace halfplane {

/// A point of the projective real line: a finite real number or Infinity.
///
/// Negation and inversion are total: inv(0) = Infinity, inv(Infinity) = 0,
/// and Infinity is its own negative.
class ProjectiveReal {
 public:
  /// Throws Error(invalid_argument) for NaN or +-inf; use infinity() instead.
  explicit ProjectiveReal(double value);
  ProjectiveReal() : ProjectiveReal(0.0) {}

  static ProjectiveReal infinity() noexcept { return ProjectiveReal(InfinityTag{}); }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  bool is_finite() const noexcept { return value_.has_value(); }
  /// Finite value; throws Error(out_of_domain) at Infinity.
  double value() const;

  ProjectiveReal neg() const noexcept;
  ProjectiveReal inv() const noexcept;

  bool equals(double v) const noexcept { return value_ && *value_ == v; }
  friend bool operator==(const ProjectiveReal&, const ProjectiveReal&) = default;

  /// Parses "inf", "infinity" (any case) or a decimal number.
  static ProjectiveReal parse(const std::string& text);
  std::string to_string() const;

 private:
  struct InfinityTag {};
  explicit ProjectiveReal(InfinityTag) noexcept {}

  std::optional<double> value_;
};

}  // namespace halfplane
