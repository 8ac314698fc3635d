#include "halfplane/error.hpp"

namespace halfplane {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::ok: return "ok";
    case Errc::invalid_argument: return "invalid argument";
    case Errc::boost_undefined: return "boost undefined for gamma = +-1";
    case Errc::invalid_momentum: return "invalid momentum";
    case Errc::cpt_invariant_boundary: return "CPT-invariant boundary gamma = +-1 rejected";
    case Errc::invalid_deficiency: return "deficiency parameter must be positive";
    case Errc::grid_too_small: return "grid too small";
    case Errc::out_of_domain: return "argument out of domain";
    case Errc::no_edge_state: return "no edge state";
    case Errc::non_convergent: return "numerical procedure did not converge";
    case Errc::degenerate_pair: return "degenerate conjugate pair";
    case Errc::undefined_epsilon: return "edge velocity sign undefined";
  }
  return "unknown error";
}

}  // namespace halfplane
