#pragma once

// Machine-readable renderings used by the CLI. Big numbers are always
// decimal strings; polynomials are arrays of "p/q" strings, constant first.

#include "repulsion/pell.hpp"
#include "repulsion/poly.hpp"
#include "repulsion/quasipoly.hpp"
#include "repulsion/repulsion.hpp"
#include "repulsion/shift.hpp"

#include <json.hpp>

#include <span>
#include <string>

namespace repulsion::report {

using json = nlohmann::json;

json poly_json(const Poly& p);

/// Accepts an array of "p/q" or "p" strings (or plain integers).
Poly poly_from_json(const json& j);

json quasi_json(const Quasipoly& q);
json pell_json(std::span<const pell::Solution> solutions);

json hit_json(const Hit& h);
json hits_json(std::span<const Hit> hits);

inline constexpr const char* kCsvHeader = "n,p,m,t,delta";
std::string hits_csv(std::span<const Hit> hits);
std::string hits_plain(std::span<const Hit> hits);

/// {"class": name, "details": {...}}
json shift_class_json(const ShiftClass& c);
json classify_json(const ProgressionReport& r);
std::string classify_plain(const ProgressionReport& r);

json points_json(std::span<const CurvePoint> points);

}  // namespace repulsion::report
