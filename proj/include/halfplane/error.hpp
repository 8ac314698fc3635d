#pragma once

#include <stdexcept>
#include <string>

namespace halfplane {

enum class Errc {
  ok = 0,
  invalid_argument,
  boost_undefined,
  invalid_momentum,
  cpt_invariant_boundary,
  invalid_deficiency,
  grid_too_small,
  out_of_domain,
  no_edge_state,
  non_convergent,
  degenerate_pair,
  undefined_epsilon,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace halfplane
