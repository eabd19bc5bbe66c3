#pragma once

// Unit system, geometry primitives and shared result types.
//
// Everything inside the library works in Hartree atomic units with
// hbar = e = m_e = k_B = 1. Temperatures are energies. Conversions to
// laboratory units happen only at the command-line boundary.

#include <cstdint>
#include <string>
#include <string_view>

#include <Eigen/Core>

namespace fluct {

namespace constants {
/// Speed of light in atomic units (inverse fine-structure constant, CODATA 2018).
inline constexpr double c = 137.035999084;
inline constexpr double c2 = c * c;
inline constexpr double c3 = c * c * c;

inline constexpr double hartree_in_ev = 27.211386245988;
inline constexpr double hartree_in_joule = 4.3597447222071e-18;
inline constexpr double bohr_in_nm = 0.0529177210903;
/// k_B * 1 K expressed in Hartree.
inline constexpr double kelvin_in_hartree = 3.1668115634556e-6;
}  // namespace constants

using Vector3 = Eigen::Vector3d;
using Matrix3 = Eigen::Matrix3d;

/// Returns v/|v|. Throws DomainError for a zero vector.
Vector3 normalized(const Vector3& v);

/// True when |v| = 1 within 1e-12.
bool is_unit(const Vector3& v);

/// Result of a numerically integrated energy (or any quadrature).
struct EnergyResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::int64_t evaluations = 0;
};

enum class Unit {
  hartree,
  electron_volt,
  joule,
  bohr,
  nanometre,
  kelvin,
  hartree_temperature,
};

enum class Dimension { energy, length, temperature };

/// Parses the tags hartree, eV, joule, bohr, nm, kelvin, hartree_temperature.
Unit parse_unit(std::string_view tag);
std::string_view unit_tag(Unit unit);
Dimension dimension_of(Unit unit);

/// Converts between two units of the same dimension. Throws DomainError
/// when the dimensions differ.
double convert(double value, Unit from, Unit to);
double convert(double value, std::string_view from, std::string_view to);

}  // namespace fluct
