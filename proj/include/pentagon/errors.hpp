#pragma once

#include <stdexcept>
#include <string>

namespace pentagon {

enum class errc {
  division_by_zero,
  conductor_mismatch,
  not_a_divisor,
  dimension_mismatch,
  not_a_square_dimension,
  singular_matrix,
  not_bijective,
  not_rpe,
  tag_mismatch,
  structure_violation,
  not_abelian,
  not_an_action,
  invalid_matched_pair,
  not_normal,
  not_complement,
  not_a_bicharacter,
  not_a_coalgebra_basis,
  counit_zero,
  unit_not_in_basis,
  size_too_large,
  unknown_name,
  bad_input,
};

const char* errc_name(errc c);

/// Library error carrying a machine-readable code and, where the spec asks
/// for one, a witness (a colliding pair, an offending triple, ...).
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what, std::string witness = {})
      : std::runtime_error(what), code_(code), witness_(std::move(witness)) {}
  errc code() const noexcept { return code_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  errc code_;
  std::string witness_;
};

[[noreturn]] inline void fail(errc code, const std::string& what,
                              std::string witness = {}) {
  throw error(code, what, std::move(witness));
}

}  // namespace pentagon
