#include "spdc/units.hpp"

#include <cstdlib>
#include <map>
#include <sstream>

#include "spdc/types.hpp"

namespace spdc::units {
namespace {

struct Parsed {
  double value;
  std::string unit;  // empty if none
};

Parsed split(const std::string& text) {
  std::istringstream in(text);
  double value;
  if (!(in >> value)) {
    throw ConfigError("not a numeric quantity: '" + text + "'");
  }
  std::string unit;
  in >> unit;
  std::string rest;
  if (in >> rest) {
    throw ConfigError("trailing garbage in quantity: '" + text + "'");
  }
  return {value, unit};
}

double lookup(const Parsed& p, const std::map<std::string, double>& table,
              const std::string& kind, const std::string& text) {
  if (p.unit.empty()) {
    throw ConfigError("missing " + kind + " unit suffix on '" + text + "'");
  }
  auto it = table.find(p.unit);
  if (it == table.end()) {
    throw ConfigError("unknown " + kind + " unit '" + p.unit + "' in '" + text + "'");
  }
  return p.value * it->second;
}

}  // namespace

double parse_length(const std::string& text) {
  static const std::map<std::string, double> table = {
      {"m", 1.0}, {"mm", 1e-3}, {"um", 1e-6}, {"nm", 1e-9}};
  return lookup(split(text), table, "length", text);
}

double parse_time(const std::string& text) {
  static const std::map<std::string, double> table = {
      {"s", 1.0},  {"ms", 1e-3}, {"us", 1e-6},
      {"ns", 1e-9}, {"ps", 1e-12}, {"fs", 1e-15}};
  return lookup(split(text), table, "time", text);
}

double parse_time_per_length(const std::string& text) {
  static const std::map<std::string, double> table = {
      {"s/m", 1.0}, {"ps/mm", 1e-9}, {"fs/mm", 1e-12}, {"fs/um", 1e-9}};
  return lookup(split(text), table, "time/length", text);
}

double parse_wavenumber(const std::string& text) {
  static const std::map<std::string, double> table = {
      {"rad/m", 1.0}, {"rad/mm", 1e3}, {"1/m", 1.0}, {"1/mm", 1e3}};
  return lookup(split(text), table, "wavenumber", text);
}

double parse_dimensionless(const std::string& text) {
  Parsed p = split(text);
  if (!p.unit.empty()) {
    throw ConfigError("unexpected unit '" + p.unit + "' on dimensionless quantity '" +
                      text + "'");
  }
  return p.value;
}

}  // namespace spdc::units
