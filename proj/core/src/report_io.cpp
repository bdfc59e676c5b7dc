#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "graphent/error.hpp"
#include "graphent/harness.hpp"

namespace graphent {

namespace {

using Json = nlohmann::ordered_json;

Json optional_number(const std::optional<double>& x) {
  return x ? Json(*x) : Json(nullptr);
}

Json report_json(const BoundReport& r) {
  Json j;
  j["theorem"] = to_string(r.theorem);
  j["variant"] = to_string(r.variant);
  j["alpha"] = r.alpha;
  j["direction"] = to_string(r.direction);
  j["lhs"] = r.lhs;
  j["bound"] = r.bound;
  if (r.lower_bound) j["lower_bound"] = *r.lower_bound;
  j["precondition_met"] = r.precondition_met;
  j["verdict"] = to_string(r.verdict);
  j["holds"] = r.holds();
  j["slack"] = r.slack;
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = std::move(params);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json template_json(const FunctionalTemplate& t) {
  Json j;
  j["kind"] = to_string(t.kind);
  if (t.use_defaults) {
    j["coefficients"] = "default";
  } else {
    j["coeff_range"] = {t.coeff_lo, t.coeff_hi};
  }
  if (t.kind == FunctionalKind::kExponential) j["beta"] = t.beta;
  return j;
}

Json config_json(const SweepConfig& cfg) {
  Json j;
  j["seed"] = cfg.seed;
  j["n_range"] = {cfg.n_min, cfg.n_max};
  j["edge_probabilities"] = cfg.edge_probabilities;
  j["trials_per_cell"] = cfg.trials_per_cell;
  j["alpha_grid"] = cfg.alpha_grid;
  Json specs = Json::array();
  for (const auto& t : cfg.functional_specs) specs.push_back(template_json(t));
  j["functional_specs"] = std::move(specs);
  Json variants = Json::array();
  for (Variant v : cfg.variants) variants.push_back(to_string(v));
  j["variants"] = std::move(variants);
  if (cfg.theorems) {
    Json ids = Json::array();
    for (TheoremId id : *cfg.theorems) ids.push_back(to_string(id));
    j["theorems"] = std::move(ids);
  } else {
    j["theorems"] = "all";
  }
  j["include_battery"] = cfg.include_battery;
  j["max_redraws"] = cfg.max_redraws;
  j["max_exemplars"] = cfg.max_exemplars;
  j["include_cells"] = cfg.include_cells;
  j["threads"] = cfg.threads;
  return j;
}

template <class T>
T get_as(const Json& j, std::string_view key) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ValidationError("config key '" + std::string(key) + "' has the wrong type");
  }
}

FunctionalTemplate template_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("functional_specs entries must be objects");
  FunctionalTemplate t;
  for (const auto& [key, value] : j.items()) {
    if (key == "kind") {
      const auto kind = get_as<std::string>(value, key);
      if (kind == "linear") {
        t.kind = FunctionalKind::kLinear;
      } else if (kind == "exponential" || kind == "exp") {
        t.kind = FunctionalKind::kExponential;
      } else {
        throw ValidationError("unknown functional kind '" + kind + "'");
      }
    } else if (key == "coeff_range") {
      const auto range = get_as<std::vector<double>>(value, key);
      if (range.size() != 2) throw ValidationError("coeff_range needs [lo, hi]");
      t.coeff_lo = range[0];
      t.coeff_hi = range[1];
    } else if (key == "coefficients") {
      if (get_as<std::string>(value, key) != "default") {
        throw ValidationError("coefficients may only be \"default\"");
      }
      t.use_defaults = true;
    } else if (key == "beta") {
      t.beta = get_as<double>(value, key);
    } else {
      throw ValidationError("unknown functional spec key '" + key + "'");
    }
  }
  if (t.kind == FunctionalKind::kLinear && j.contains("beta")) {
    throw ValidationError("beta only applies to exponential functionals");
  }
  return t;
}

}  // namespace

SweepConfig sweep_config_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + static_cast<std::size_t>(
                              std::count(text.begin(), text.begin() + upto, '\n'));
    throw ParseError(line, std::string("config JSON: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError("config must be a JSON object");

  SweepConfig cfg;
  for (const auto& [key, value] : j.items()) {
    if (key == "seed") {
      cfg.seed = get_as<std::uint64_t>(value, key);
    } else if (key == "n_range") {
      const auto range = get_as<std::vector<std::size_t>>(value, key);
      if (range.size() != 2) throw ValidationError("n_range needs [lo, hi]");
      cfg.n_min = range[0];
      cfg.n_max = range[1];
    } else if (key == "edge_probabilities") {
      cfg.edge_probabilities = get_as<std::vector<double>>(value, key);
    } else if (key == "trials_per_cell") {
      cfg.trials_per_cell = get_as<std::size_t>(value, key);
    } else if (key == "alpha_grid") {
      cfg.alpha_grid = get_as<std::vector<double>>(value, key);
    } else if (key == "functional_specs") {
      if (!value.is_array()) throw ValidationError("functional_specs must be a list");
      cfg.functional_specs.clear();
      for (const auto& t : value) cfg.functional_specs.push_back(template_from_json(t));
    } else if (key == "variants") {
      cfg.variants.clear();
      for (const auto& name : get_as<std::vector<std::string>>(value, key)) {
        try {
          cfg.variants.push_back(parse_variant(name));
        } catch (const DomainError& e) {
          throw ValidationError(e.what());
        }
      }
    } else if (key == "theorems") {
      if (value.is_string() && value.get<std::string>() == "all") {
        cfg.theorems.reset();
        continue;
      }
      std::vector<TheoremId> ids;
      for (const auto& name : get_as<std::vector<std::string>>(value, key)) {
        try {
          ids.push_back(parse_theorem_id(name));
        } catch (const DomainError& e) {
          throw ValidationError(e.what());
        }
      }
      cfg.theorems = std::move(ids);
    } else if (key == "include_battery") {
      cfg.include_battery = get_as<bool>(value, key);
    } else if (key == "max_redraws") {
      cfg.max_redraws = get_as<std::size_t>(value, key);
    } else if (key == "max_exemplars") {
      cfg.max_exemplars = get_as<std::size_t>(value, key);
    } else if (key == "include_cells") {
      cfg.include_cells = get_as<bool>(value, key);
    } else if (key == "threads") {
      cfg.threads = get_as<std::size_t>(value, key);
    } else {
      throw ValidationError("unknown config key '" + key + "'");
    }
  }
  cfg.validate();
  return cfg;
}

std::string sweep_config_to_json(const SweepConfig& cfg) {
  return config_json(cfg).dump(2) + "\n";
}

ReportFormat parse_report_format(std::string_view name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "text") return ReportFormat::kText;
  throw DomainError("unknown report format '" + std::string(name) + "'");
}

std::string bound_report_json(const BoundReport& r, int indent) {
  return report_json(r).dump(indent) + "\n";
}

namespace {

std::string json_summary(const SweepReport& r, bool include_runtime) {
  Json j;
  j["config"] = config_json(r.config);
  j["corpus"] = {{"graphs", r.corpus_size}, {"redraws", r.total_redraws}};
  Json cells = Json::array();
  for (const auto& c : r.cells) {
    // Flat cell layout: identifiers first, then the report fields.
    Json cell;
    cell["graph_id"] = c.graph_id;
    cell["source"] = c.source;
    Json fields = report_json(c.report);
    for (auto& [k, v] : fields.items()) cell[k] = std::move(v);
    cells.push_back(std::move(cell));
  }
  j["cells"] = std::move(cells);
  Json aggs = Json::array();
  for (const auto& a : r.aggregates) {
    aggs.push_back({{"theorem", to_string(a.theorem)},
                    {"variant", to_string(a.variant)},
                    {"checked", a.checked},
                    {"held", a.held},
                    {"violated", a.violated},
                    {"not_applicable", a.not_applicable},
                    {"min_slack", optional_number(a.min_slack)},
                    {"mean_slack", optional_number(a.mean_slack)}});
  }
  j["aggregates"] = std::move(aggs);
  Json exemplars = Json::array();
  for (const auto& e : r.exemplars) {
    exemplars.push_back({{"graph_id", e.graph_id},
                         {"source", e.source},
                         {"edge_list", e.edge_list},
                         {"report", report_json(e.report)}});
  }
  j["exemplars"] = std::move(exemplars);
  if (include_runtime) j["runtime_seconds"] = r.runtime_seconds;
  return j.dump(2) + "\n";
}

std::string number_text(const std::optional<double>& x, int digits = 12) {
  if (!x) return "";
  std::ostringstream out;
  out << std::setprecision(digits) << *x;
  return out.str();
}

std::string csv_summary(const SweepReport& r) {
  std::ostringstream out;
  out << "theorem,variant,checked,held,violated,not_applicable,min_slack,mean_slack\n";
  for (const auto& a : r.aggregates) {
    out << to_string(a.theorem) << ',' << to_string(a.variant) << ',' << a.checked
        << ',' << a.held << ',' << a.violated << ',' << a.not_applicable << ','
        << number_text(a.min_slack) << ',' << number_text(a.mean_slack) << '\n';
  }
  return out.str();
}

std::string text_summary(const SweepReport& r, bool include_runtime) {
  std::ostringstream out;
  out << "graphs: " << r.corpus_size << "  redraws: " << r.total_redraws
      << "  exemplars: " << r.exemplars.size();
  if (include_runtime) {
    out << "  runtime: " << std::fixed << std::setprecision(2) << r.runtime_seconds
        << " s" << std::defaultfloat;
  }
  out << "\n\n";
  out << std::left << std::setw(24) << "theorem" << std::setw(11) << "variant"
      << std::right << std::setw(9) << "checked" << std::setw(9) << "held"
      << std::setw(9) << "violated" << std::setw(9) << "n/a" << std::setw(16)
      << "min_slack" << std::setw(16) << "mean_slack" << '\n';
  for (const auto& a : r.aggregates) {
    out << std::left << std::setw(24) << to_string(a.theorem) << std::setw(11)
        << to_string(a.variant) << std::right << std::setw(9) << a.checked
        << std::setw(9) << a.held << std::setw(9) << a.violated << std::setw(9)
        << a.not_applicable << std::setw(16)
        << (a.min_slack ? number_text(a.min_slack, 6) : "-")
        << std::setw(16)
        << (a.mean_slack ? number_text(a.mean_slack, 6) : "-") << '\n';
  }
  return out.str();
}

}  // namespace

std::string summarize_report(const SweepReport& r, ReportFormat format,
                             bool include_runtime) {
  switch (format) {
    case ReportFormat::kJson: return json_summary(r, include_runtime);
    case ReportFormat::kCsv: return csv_summary(r);
    case ReportFormat::kText: return text_summary(r, include_runtime);
  }
  return {};
}

}  // namespace graphent
