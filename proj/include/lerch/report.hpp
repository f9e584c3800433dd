#pragma once

#include <fstream>
#include <set>

#include <json.hpp>

#include "lerch/identities.hpp"
#include "lerch/verify_types.hpp"

namespace lerch {

namespace detail {

// 17 significant decimal digits: guaranteed binary64 round trip
inline std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 8);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

}  // namespace detail

/// JSON document: one object per report, deterministic field and key order,
/// floating point at 17 significant digits.
inline std::string emit_json(const std::vector<identity_report>& reports) {
  using detail::fmt17;
  std::string out = "[";
  bool first_rep = true;
  for (const auto& r : reports) {
    out += first_rep ? "\n" : ",\n";
    first_rep = false;
    out += "  {\"id\": \"" + detail::json_escape(r.kase.id) + "\", \"params\": {";
    bool first = true;
    for (const auto& [k, v] : r.kase.params) {
      if (!first) out += ", ";
      first = false;
      out += "\"" + detail::json_escape(k) + "\": {\"re\": " + fmt17(v.real()) +
             ", \"im\": " + fmt17(v.imag()) + "}";
    }
    out += "}, \"lhs\": {\"re\": " + fmt17(r.lhs.real()) + ", \"im\": " + fmt17(r.lhs.imag()) +
           "}, \"rhs\": {\"re\": " + fmt17(r.rhs.real()) + ", \"im\": " + fmt17(r.rhs.imag()) +
           "}, \"abs_residual\": " + fmt17(r.abs_residual) +
           ", \"rel_residual\": " + fmt17(r.rel_residual) +
           ", \"pass\": " + (r.pass ? "true" : "false") + ", \"notes\": \"" +
           detail::json_escape(r.notes) + "\"}";
  }
  out += first_rep ? "]" : "\n]";
  out += "\n";
  return out;
}

/// Inverse of emit_json (field-for-field; used by the round-trip checks).
inline std::vector<identity_report> parse_reports_json(const std::string& text) {
  nlohmann::json doc = nlohmann::json::parse(text);
  std::vector<identity_report> out;
  for (const auto& j : doc) {
    identity_report r;
    r.kase.id = j.at("id").get<std::string>();
    for (auto it = j.at("params").begin(); it != j.at("params").end(); ++it)
      r.kase.params[it.key()] =
          cplx(it.value().at("re").get<double>(), it.value().at("im").get<double>());
    r.lhs = cplx(j.at("lhs").at("re").get<double>(), j.at("lhs").at("im").get<double>());
    r.rhs = cplx(j.at("rhs").at("re").get<double>(), j.at("rhs").at("im").get<double>());
    r.abs_residual = j.at("abs_residual").get<double>();
    r.rel_residual = j.at("rel_residual").get<double>();
    r.pass = j.at("pass").get<bool>();
    r.notes = j.at("notes").get<std::string>();
    out.push_back(std::move(r));
  }
  return out;
}

/// CSV: id, flattened params (union of keys, sorted, as <key>_re/<key>_im),
/// lhs/rhs, residuals, pass, notes. UTF-8, LF line endings.
inline std::string emit_csv(const std::vector<identity_report>& reports) {
  using detail::fmt17;
  std::set<std::string> keys;
  for (const auto& r : reports)
    for (const auto& [k, v] : r.kase.params) keys.insert(k);

  std::string out = "id";
  for (const auto& k : keys) out += "," + k + "_re," + k + "_im";
  out += ",lhs_re,lhs_im,rhs_re,rhs_im,abs_residual,rel_residual,pass,notes\n";
  for (const auto& r : reports) {
    out += detail::csv_escape(r.kase.id);
    for (const auto& k : keys) {
      auto it = r.kase.params.find(k);
      if (it == r.kase.params.end()) {
        out += ",,";
      } else {
        out += "," + fmt17(it->second.real()) + "," + fmt17(it->second.imag());
      }
    }
    out += "," + fmt17(r.lhs.real()) + "," + fmt17(r.lhs.imag());
    out += "," + fmt17(r.rhs.real()) + "," + fmt17(r.rhs.imag());
    out += "," + fmt17(r.abs_residual) + "," + fmt17(r.rel_residual);
    out += r.pass ? ",true," : ",false,";
    out += detail::csv_escape(r.notes) + "\n";
  }
  return out;
}

/// table1.csv: row metadata, computed quotient, target and pass flag.
inline std::string emit_table1_csv(const std::vector<table1_row>& rows,
                                   const std::vector<identity_report>& reports) {
  using detail::fmt17;
  std::string out =
      "row,multiplicity,sign,quotient,closed_form,closed_form_text,rel_residual,pass\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    const auto& rep = reports.at(i);
    out += std::to_string(row.index) + "," + std::to_string(row.multiplicity) + "," +
           std::to_string(row.sign) + "," + fmt17(table1_quotient(row)) + "," +
           fmt17(row.closed_form_value.real()) + "," + detail::csv_escape(row.closed_form_text) +
           "," + fmt17(rep.rel_residual) + (rep.pass ? ",true\n" : ",false\n");
  }
  return out;
}

/// figure_samples.csv: r and f(r) split into components plus |f|.
inline std::string emit_figure_csv(const std::vector<figure_sample>& samples) {
  using detail::fmt17;
  std::string out = "r_re,r_im,f_re,f_im,f_abs\n";
  for (const auto& s : samples) {
    out += fmt17(s.r.real()) + "," + fmt17(s.r.imag()) + ",";
    if (is_finite(s.f)) {
      out += fmt17(s.f.real()) + "," + fmt17(s.f.imag()) + "," + fmt17(std::abs(s.f));
    } else {
      out += ",,";
    }
    out += "\n";
  }
  return out;
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  os << content;
}

// ---------------------------------------------------------------------------
// suite configuration document
// ---------------------------------------------------------------------------

/// Schema:
/// {
///   "version": 1,
///   "identities": [
///     {"id": "T1",
///      "grid": {"k": [-2, -1, "0.5+0.3i"], "m": [0.1], "a": [1], "n": [0], "z": [1]},
///      "tol_abs": 1e-9, "tol_rel": 1e-9,
///      "branch": {"rhs_log1": 0}}
///   ]
/// }
/// Omitting "grid" selects the identity's built-in default grid. Complex
/// literals use the a+bi string form.
inline suite_config parse_suite_config(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("config: invalid JSON: ") + e.what());
  }
  suite_config cfg;
  cfg.version = doc.value("version", 1);
  if (!doc.contains("identities") || !doc["identities"].is_array())
    throw std::invalid_argument("config: missing \"identities\" array");
  for (const auto& j : doc["identities"]) {
    suite_grid g;
    g.id = j.at("id").get<std::string>();
    find_identity(g.id);  // unknown ids are config errors
    if (j.contains("grid")) {
      for (auto it = j["grid"].begin(); it != j["grid"].end(); ++it) {
        std::vector<cplx> vals;
        for (const auto& v : it.value()) {
          if (v.is_number()) {
            vals.push_back(cplx(v.get<double>(), 0.0));
          } else if (v.is_string()) {
            auto parsed = parse_complex_literal(v.get<std::string>());
            if (!parsed)
              throw std::invalid_argument("config: bad complex literal: " +
                                          v.get<std::string>());
            vals.push_back(*parsed);
          } else {
            throw std::invalid_argument("config: grid values must be numbers or strings");
          }
        }
        if (vals.empty()) throw std::invalid_argument("config: empty axis " + it.key());
        g.axes[it.key()] = std::move(vals);
      }
    }
    g.tol_abs = j.value("tol_abs", 0.0);
    g.tol_rel = j.value("tol_rel", 0.0);
    if (j.contains("branch"))
      for (auto it = j["branch"].begin(); it != j["branch"].end(); ++it)
        g.branch[it.key()] = it.value().get<int>();
    cfg.grids.push_back(std::move(g));
  }
  return cfg;
}

}  // namespace lerch
