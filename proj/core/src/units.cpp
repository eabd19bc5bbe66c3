#include "fluct/core.hpp"

#include <array>
#include <cmath>
#include <utility>

#include "fluct/errors.hpp"

namespace fluct {

namespace {

struct UnitInfo {
  Unit unit;
  std::string_view tag;
  Dimension dimension;
  double in_atomic;  // value of one unit expressed in the atomic unit of its dimension
};

constexpr std::array<UnitInfo, 7> kUnits{{
    {Unit::hartree, "hartree", Dimension::energy, 1.0},
    {Unit::electron_volt, "eV", Dimension::energy, 1.0 / constants::hartree_in_ev},
    {Unit::joule, "joule", Dimension::energy, 1.0 / constants::hartree_in_joule},
    {Unit::bohr, "bohr", Dimension::length, 1.0},
    {Unit::nanometre, "nm", Dimension::length, 1.0 / constants::bohr_in_nm},
    {Unit::kelvin, "kelvin", Dimension::temperature, constants::kelvin_in_hartree},
    {Unit::hartree_temperature, "hartree_temperature", Dimension::temperature, 1.0},
}};

const UnitInfo& info(Unit unit) {
  for (const auto& u : kUnits) {
    if (u.unit == unit) return u;
  }
  throw DomainError("core", "unknown unit");
}

}  // namespace

Vector3 normalized(const Vector3& v) {
  const double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw DomainError("core", "cannot normalize a zero or non-finite vector");
  }
  return v / n;
}

bool is_unit(const Vector3& v) { return std::abs(v.norm() - 1.0) <= 1e-12; }

Unit parse_unit(std::string_view tag) {
  for (const auto& u : kUnits) {
    if (u.tag == tag) return u.unit;
  }
  throw DomainError("core", "unknown unit tag '" + std::string(tag) + "'");
}

std::string_view unit_tag(Unit unit) { return info(unit).tag; }

Dimension dimension_of(Unit unit) { return info(unit).dimension; }

double convert(double value, Unit from, Unit to) {
  const auto& a = info(from);
  const auto& b = info(to);
  if (a.dimension != b.dimension) {
    throw DomainError("core", "cannot convert " + std::string(a.tag) + " to " +
                                  std::string(b.tag) + ": incompatible dimensions");
  }
  if (from == to) return value;
  return value * a.in_atomic / b.in_atomic;
}

double convert(double value, std::string_view from, std::string_view to) {
  return convert(value, parse_unit(from), parse_unit(to));
}

}  // namespace fluct
