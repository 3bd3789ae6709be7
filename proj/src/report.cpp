#include "repulsion/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace repulsion::report {

json poly_json(const Poly& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_fraction_string(c));
  return out;
}

Poly poly_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be a JSON array of coefficients");
  std::vector<Rational> coeffs;
  for (const auto& c : j) {
    if (c.is_string())
      coeffs.push_back(parse_rational(c.get<std::string>()));
    else if (c.is_number_integer())
      coeffs.emplace_back(c.get<long>());
    else
      throw std::invalid_argument("polynomial coefficients must be strings or integers");
  }
  return Poly(std::move(coeffs));
}

json quasi_json(const Quasipoly& q) {
  json comps = json::array();
  for (const auto& c : q.components) comps.push_back(poly_json(c));
  return {{"B", q.bound}, {"L", q.period}, {"alpha", to_fraction_string(q.alpha)}, {"components", comps}};
}

json pell_json(std::span<const pell::Solution> solutions) {
  json out = json::array();
  for (const auto& s : solutions)
    out.push_back({{"t", s.t.get_str()}, {"n", s.n.get_str()}, {"m", s.m.get_str()}, {"x", s.x.get_str()}});
  return out;
}

json hit_json(const Hit& h) {
  return {{"B", h.bound},          {"k", h.exponent},      {"n", std::to_string(h.n)},
          {"p", h.p.get_str()},    {"m", h.m.get_str()},   {"t", h.t.get_str()},
          {"delta", h.delta.get_str()}};
}

json hits_json(std::span<const Hit> hits) {
  json out = json::array();
  for (const auto& h : hits) out.push_back(hit_json(h));
  return out;
}

std::string hits_csv(std::span<const Hit> hits) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const auto& h : hits)
    out << h.n << ',' << h.p.get_str() << ',' << h.m.get_str() << ',' << h.t.get_str() << ',' << h.delta.get_str()
        << '\n';
  return out.str();
}

namespace {

std::string aligned(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()));
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << "  ";
      out << std::setw(static_cast<int>(width[i])) << row[i];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace

std::string hits_plain(std::span<const Hit> hits) {
  std::vector<std::vector<std::string>> rows{{"n", "p", "m", "t", "delta"}};
  for (const auto& h : hits)
    rows.push_back({std::to_string(h.n), h.p.get_str(), h.m.get_str(), h.t.get_str(), h.delta.get_str()});
  return aligned(rows);
}

json shift_class_json(const ShiftClass& c) {
  json details = json::object();
  if (const auto* p = std::get_if<PowerShift>(&c)) {
    details = {{"a", to_fraction_string(p->scale)}, {"R", poly_json(p->root)}};
  } else if (const auto* s = std::get_if<SingleRoot>(&c)) {
    details = {{"degree", s->degree},
               {"exponents_coprime", s->exponents_coprime},
               {"k_divides_degree", s->k_divides_degree},
               {"root", to_fraction_string(s->root)},
               {"root_denominator", s->root.get_den().get_str()}};
  } else if (const auto* g = std::get_if<GenusAtLeastOne>(&c)) {
    details = {{"r_t", g->distinct_roots}};
  } else if (std::holds_alternative<TwoRoots>(c)) {
    details = {{"r_t", 2}};
  }
  return {{"class", std::string(class_name(c))}, {"details", details}};
}

json classify_json(const ProgressionReport& r) {
  json table = json::array();
  for (const auto& e : r.entries) {
    json row = shift_class_json(e.cls);
    row["residue"] = e.residue;
    row["t"] = e.t.get_str();
    table.push_back(std::move(row));
  }
  return {{"B", r.bound},
          {"k", r.k},
          {"d", r.tolerance},
          {"L", r.period},
          {"theorem_hypotheses", r.hypotheses},
          {"power_shifts", r.power_shifts},
          {"counts", r.counts},
          {"table", table}};
}

std::string classify_plain(const ProgressionReport& r) {
  std::vector<std::vector<std::string>> rows{{"residue", "t", "class"}};
  for (const auto& e : r.entries) rows.push_back({std::to_string(e.residue), e.t.get_str(), std::string(class_name(e.cls))});
  std::ostringstream out;
  out << aligned(rows);
  out << "theorem_hypotheses: " << (r.hypotheses ? "true" : "false") << '\n';
  for (const auto& [name, count] : r.counts) out << name << ": " << count << '\n';
  return out.str();
}

json points_json(std::span<const CurvePoint> points) {
  json out = json::array();
  for (const auto& p : points) out.push_back({{"X", p.X.get_str()}, {"Y", p.Y.get_str()}});
  return out;
}

}  // namespace repulsion::report
