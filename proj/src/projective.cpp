#include "halfplane/projective.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>

#include "halfplane/error.hpp"

namespace halfplane {

ProjectiveReal::ProjectiveReal(double value) : value_(value) {
  if (!std::isfinite(value)) {
    throw Error(Errc::invalid_argument, "ProjectiveReal: finite value required, use infinity()");
  }
}

double ProjectiveReal::value() const {
  if (!value_) throw Error(Errc::out_of_domain, "ProjectiveReal: value() at Infinity");
  return *value_;
}

ProjectiveReal ProjectiveReal::neg() const noexcept {
  if (!value_) return infinity();
  return ProjectiveReal(-*value_);
}

ProjectiveReal ProjectiveReal::inv() const noexcept {
  if (!value_) return ProjectiveReal(0.0);
  if (*value_ == 0.0) return infinity();
  return ProjectiveReal(1.0 / *value_);
}

ProjectiveReal ProjectiveReal::parse(const std::string& text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "inf" || lower == "infinity" || lower == "+inf" || lower == "-inf") {
    return infinity();
  }
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw Error(Errc::invalid_argument, "cannot parse projective real '" + text + "'");
  }
  if (used != text.size()) {
    throw Error(Errc::invalid_argument, "cannot parse projective real '" + text + "'");
  }
  return ProjectiveReal(v);
}

std::string ProjectiveReal::to_string() const {
  if (!value_) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", *value_);
  return buf;
}

}  // namespace halfplane
