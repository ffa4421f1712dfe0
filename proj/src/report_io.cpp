#include "rbfourier/report_io.hpp"

#include <fstream>
#include <sstream>

#include "rbfourier/errors.hpp"

namespace rbf {

nlohmann::json matrix_to_json(const MatrixXd& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json matrix_to_json(const MatrixXcd& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

MatrixXd matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty())
    fail(ErrorCode::ParseError, "matrix JSON must be a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j.front().size());
  MatrixXd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (static_cast<Eigen::Index>(j[i].size()) != cols)
      fail(ErrorCode::ParseError, "matrix JSON rows have inconsistent lengths");
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = j[i][k].get<double>();
  }
  return m;
}

nlohmann::json group_table_to_json(const GroupTable& table) {
  nlohmann::json j;
  j["order"] = table.order;
  j["identity_index"] = table.identity_index;
  j["labels"] = std::string(table.labels.begin(), table.labels.end());
  j["mult"] = table.mult;
  j["inv"] = table.inv;
  j["words"] = table.words;
  j["classes"] = table.classes;
  return j;
}

nlohmann::json spectrum_to_json(const FourierSpectrum& spectrum) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& b : spectrum.blocks) {
    nlohmann::json eigs = nlohmann::json::array();
    for (const auto& ev : b.eigenvalues) eigs.push_back({ev.real(), ev.imag()});
    blocks.push_back({{"irrep", b.irrep_name},
                      {"d_sigma", b.d_sigma},
                      {"block", matrix_to_json(b.block)},
                      {"eigenvalues", eigs},
                      {"singular_values", b.singular_values}});
  }
  return {{"gate_set_dim", spectrum.gate_set_dim}, {"blocks", blocks}};
}

nlohmann::json summary_to_json(const SpectralSummary& s) {
  return {{"t", s.t},
          {"p", s.p},
          {"t_bar", s.t_bar},
          {"p_bar", s.p_bar},
          {"q", s.q},
          {"q_irrep", s.q_irrep_name},
          {"next_eigenvalue", s.next_eigenvalue},
          {"next_eigenvalue_irrep", s.next_eigenvalue_irrep},
          {"delta", s.delta}};
}

nlohmann::json bounds_to_json(const std::vector<BoundCheck>& bounds) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& b : bounds)
    j.push_back({{"name", b.name},
                 {"lhs", b.lhs},
                 {"rhs", b.rhs},
                 {"slack", b.slack},
                 {"holds", b.holds}});
  return j;
}

nlohmann::json gauge_to_json(const GaugeTransform& g) {
  nlohmann::json j;
  j["kind"] = g.kind == GaugeKind::Depolarizing ? "depolarizing" : "optimal";
  j["fidelity"] = g.fidelity;
  j["error"] = 1.0 - g.fidelity;
  j["t_bar"] = g.t_bar;
  j["p_bar"] = g.p_bar;
  j["s"] = matrix_to_json(g.s);
  if (g.kind == GaugeKind::Depolarizing) j["d_residual"] = g.d_residual;
  return j;
}

nlohmann::json decay_model_to_json(const DecayModel& m) {
  return {{"a", m.a},
          {"b", m.b},
          {"c", m.c},
          {"p_bar", m.p_bar},
          {"t_bar", m.t_bar},
          {"residual", m.residual},
          {"p_identifiable", m.p_identifiable}};
}

std::string decay_csv_string(const std::vector<LengthStats>& stats) {
  std::ostringstream out;
  out.precision(17);
  out << "m,mean,stderr,exact\n";
  for (const auto& ls : stats)
    out << ls.m << ',' << ls.mean << ',' << ls.stderr_mean << ',' << ls.exact << '\n';
  return out.str();
}

void write_decay_csv(const std::string& path, const std::vector<LengthStats>& stats) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::ValidationError, "cannot write " + path);
  out << decay_csv_string(stats);
}

namespace {

const char* json_type_name(const nlohmann::json& v) {
  if (v.is_object()) return "object";
  if (v.is_array()) return "array";
  if (v.is_string()) return "string";
  if (v.is_boolean()) return "boolean";
  if (v.is_number_integer() || v.is_number_unsigned()) return "integer";
  if (v.is_number()) return "number";
  return "null";
}

void validate_node(const nlohmann::json& value, const nlohmann::json& schema,
                   const std::string& path, std::vector<std::string>& errors) {
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& candidate : schema["enum"])
      if (candidate == value) found = true;
    if (!found) errors.push_back(path + ": value not in enum");
  }
  if (schema.contains("type")) {
    const std::string want = schema["type"].get<std::string>();
    const std::string have = json_type_name(value);
    const bool number_ok = want == "number" && have == "integer";
    if (want != have && !number_ok) {
      errors.push_back(path + ": expected " + want + ", got " + have);
      return;
    }
  }
  if (value.is_object()) {
    if (schema.contains("required"))
      for (const auto& key : schema["required"])
        if (!value.contains(key.get<std::string>()))
          errors.push_back(path + ": missing required key '" + key.get<std::string>() + "'");
    if (schema.contains("properties"))
      for (auto it = schema["properties"].begin(); it != schema["properties"].end(); ++it)
        if (value.contains(it.key()))
          validate_node(value[it.key()], it.value(), path + "/" + it.key(), errors);
  }
  if (value.is_array() && schema.contains("items")) {
    for (size_t i = 0; i < value.size(); ++i)
      validate_node(value[i], schema["items"], path + "[" + std::to_string(i) + "]", errors);
  }
}

constexpr const char* kReportSchema = R"JSON({
  "schemas": {
    "gauge": {
      "type": "object",
      "required": ["kind", "fidelity", "error", "s"],
      "properties": {
        "kind": {"type": "string", "enum": ["depolarizing", "optimal"]},
        "fidelity": {"type": "number"},
        "error": {"type": "number"},
        "t_bar": {"type": "number"},
        "p_bar": {"type": "number"},
        "d_residual": {"type": "number"},
        "s": {"type": "array", "items": {"type": "array", "items": {"type": "number"}}}
      }
    },
    "spectral": {
      "type": "object",
      "required": ["t", "p", "t_bar", "p_bar", "q", "delta"],
      "properties": {
        "t": {"type": "number"}, "p": {"type": "number"},
        "t_bar": {"type": "number"}, "p_bar": {"type": "number"},
        "q": {"type": "number"}, "q_irrep": {"type": "string"},
        "delta": {"type": "number"}
      }
    },
    "bounds": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["name", "lhs", "rhs", "slack", "holds"],
        "properties": {
          "name": {"type": "string"}, "lhs": {"type": "number"},
          "rhs": {"type": "number"}, "slack": {"type": "number"},
          "holds": {"type": "boolean"}
        }
      }
    },
    "decay": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["m", "mean", "stderr", "exact"],
        "properties": {
          "m": {"type": "integer"}, "mean": {"type": "number"},
          "stderr": {"type": "number"}, "exact": {"type": "number"}
        }
      }
    },
    "proctor": {
      "type": "object",
      "required": ["scenario", "params", "seed", "spectral", "bounds", "gauges", "decay"],
      "properties": {
        "scenario": {"type": "string", "enum": ["proctor"]},
        "params": {"type": "object", "required": ["theta"]},
        "seed": {"type": "integer"},
        "choi_min_computational": {"type": "array", "items": {"type": "number"}},
        "choi_min_dep_gauge": {"type": "array", "items": {"type": "number"}}
      }
    },
    "wallman": {
      "type": "object",
      "required": ["scenario", "params", "seed", "computational", "depolarizing", "optimal", "samples"],
      "properties": {
        "scenario": {"type": "string", "enum": ["wallman"]},
        "params": {"type": "object", "required": ["nu", "theta", "n_samples"]},
        "seed": {"type": "integer"},
        "computational": {"type": "object", "required": ["mean", "stdev"]},
        "depolarizing": {"type": "object", "required": ["mean", "stdev", "min", "max"]},
        "optimal": {"type": "object", "required": ["mean", "stdev", "min", "max"]},
        "samples": {
          "type": "array",
          "items": {
            "type": "object",
            "required": ["subset", "err_computational", "err_depolarizing", "err_optimal"]
          }
        }
      }
    },
    "leakage": {
      "type": "object",
      "required": ["scenario", "embedded", "unembedded"],
      "properties": {
        "scenario": {"type": "string", "enum": ["leakage"]},
        "embedded": {
          "type": "object",
          "required": ["group_order", "unit_eigenvalues", "per_irrep", "largest_non_unit"]
        },
        "unembedded": {"type": "object", "required": ["group_order", "unit_eigenvalues"]}
      }
    },
    "custom": {
      "type": "object",
      "required": ["scenario", "params", "seed", "spectral", "bounds", "gauges"],
      "properties": {
        "scenario": {"type": "string", "enum": ["custom"]},
        "params": {"type": "object", "required": ["group", "basis"]}
      }
    }
  }
})JSON";

}  // namespace

const nlohmann::json& report_schema() {
  static const nlohmann::json schema = nlohmann::json::parse(kReportSchema);
  return schema;
}

std::vector<std::string> validate_against_schema(const nlohmann::json& value,
                                                 const nlohmann::json& schema) {
  std::vector<std::string> errors;
  validate_node(value, schema, "$", errors);
  // composite references: apply the shared sub-schemas to well-known fields
  const auto& shared = report_schema()["schemas"];
  if (value.is_object()) {
    if (value.contains("spectral")) validate_node(value["spectral"], shared["spectral"], "$/spectral", errors);
    if (value.contains("bounds")) validate_node(value["bounds"], shared["bounds"], "$/bounds", errors);
    if (value.contains("decay")) validate_node(value["decay"], shared["decay"], "$/decay", errors);
    if (value.contains("gauges")) {
      for (const char* kind : {"depolarizing", "optimal"})
        if (value["gauges"].contains(kind))
          validate_node(value["gauges"][kind], shared["gauge"],
                        std::string("$/gauges/") + kind, errors);
    }
  }
  return errors;
}

}  // namespace rbf
