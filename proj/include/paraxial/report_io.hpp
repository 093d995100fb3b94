#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "paraxial/errors.hpp"
#include "paraxial/field.hpp"
#include "paraxial/radon.hpp"
#include "paraxial/theorem.hpp"
#include "paraxial/wigner.hpp"

namespace paraxial {

/// Shortest round-trippable decimal for a double.
inline std::string format_float(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// Writes to a sibling temp file and renames into place, so readers never see
/// a partial file.
inline void atomic_write_file(const std::filesystem::path& path, const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp.string() + " for writing");
    out << content;
    if (!out) throw Error("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

/// x,re,im,intensity rows.
inline std::string field_csv(const SampledField& f) {
  std::string out = f.domain == Domain::Space ? "x,re,im,intensity\n" : "nu,re,im,intensity\n";
  for (std::size_t k = 0; k < f.grid.n; ++k) {
    const auto s = f.samples[k];
    out += format_float(f.grid.coord(k)) + ',' + format_float(s.real()) + ',' +
           format_float(s.imag()) + ',' + format_float(std::norm(s)) + '\n';
  }
  return out;
}

/// Header row: empty cell then the nu values; each data row: x_i then W(nu_j, x_i).
inline std::string wigner_csv(const WignerDistribution& w) {
  std::string out;
  for (std::size_t j = 0; j < w.nu_grid.n; ++j) out += ',' + format_float(w.nu_grid.coord(j));
  out += '\n';
  for (std::size_t i = 0; i < w.x_grid.n; ++i) {
    out += format_float(w.x_grid.coord(i));
    for (std::size_t j = 0; j < w.nu_grid.n; ++j) out += ',' + format_float(w.at(i, j));
    out += '\n';
  }
  return out;
}

/// coordinate,density rows.
inline std::string radon_csv(const RadonProjection& r) {
  std::string out = r.mode == RadonMode::Spatial ? "x,density\n" : "nu,density\n";
  for (std::size_t k = 0; k < r.out_grid.n; ++k)
    out += format_float(r.out_grid.coord(k)) + ',' + format_float(r.density[k]) + '\n';
  return out;
}

/// One density column per entry, on a shared coordinate grid.
struct NamedColumn {
  std::string name;
  const std::vector<double>* values;
};

inline std::string table_csv(const Grid1D& grid, const char* coord_name,
                             std::initializer_list<NamedColumn> columns) {
  std::string out{coord_name};
  for (const auto& c : columns) out += ',' + c.name;
  out += '\n';
  for (std::size_t k = 0; k < grid.n; ++k) {
    out += format_float(grid.coord(k));
    for (const auto& c : columns) out += ',' + format_float((*c.values)[k]);
    out += '\n';
  }
  return out;
}

/// coordinate,value rows for a single density column.
inline std::string column_csv(const Grid1D& grid, const std::vector<double>& values,
                              const char* coord_name, const char* value_name) {
  std::string out = std::string(coord_name) + ',' + value_name + '\n';
  for (std::size_t k = 0; k < grid.n; ++k)
    out += format_float(grid.coord(k)) + ',' + format_float(values[k]) + '\n';
  return out;
}

/// Machine-readable verification report. Cases that errored carry an "error"
/// string and null metrics; pass means the case ran and met the tolerance.
inline nlohmann::ordered_json report_to_json(const std::vector<TheoremReport>& reports,
                                             const std::vector<std::string>& matrix_texts,
                                             double tolerance) {
  nlohmann::ordered_json doc;
  doc["version"] = 1;
  doc["tolerance"] = tolerance;
  auto& cases = doc["cases"];
  cases = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    nlohmann::ordered_json c;
    c["mode"] = r.mode == TheoremMode::Spatial ? "spatial" : "frequency";
    c["matrix"] = {r.matrix.a, r.matrix.b, r.matrix.c, r.matrix.d};
    if (i < matrix_texts.size() && !matrix_texts[i].empty()) c["matrix_text"] = matrix_texts[i];
    c["n"] = r.out_grid.n;
    c["half_width"] = -r.out_grid.x0;
    if (r.error.empty()) {
      c["err_linf"] = r.err_linf;
      c["err_l1"] = r.err_l1;
      c["mass_lhs"] = r.mass_lhs;
      c["mass_rhs"] = r.mass_rhs;
      if (r.window_leak) c["window_leak"] = true;
      c["pass"] = r.err_linf <= tolerance;
    } else {
      c["error"] = r.error;
      c["err_linf"] = nullptr;
      c["err_l1"] = nullptr;
      c["mass_lhs"] = nullptr;
      c["mass_rhs"] = nullptr;
      c["pass"] = false;
    }
    cases.push_back(std::move(c));
  }
  return doc;
}

}  // namespace paraxial
