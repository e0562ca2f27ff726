#ifndef TROP_ERROR_HPP
#define TROP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace trop {

enum class errc {
  all_zero_window,
  nonzero_constant_term,
  non_unit_linear_term,
  duplicate_abscissa,
  insufficient_points,
  zero_omega_division,
  too_many_edges,
  not_log_divergent,
  non_quartic_vertex,
  too_large,
  massive_unsupported,
  too_many_vertices,
  out_of_range,
  window_too_small,
  missing_mass_order,
  residual_pole,
  singular_system,
  non_convergence,
  zero_coefficient,
  gamma_pole,
  insufficient_length,
  parse_error,
  cache_mismatch,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

}  // namespace trop

#endif
