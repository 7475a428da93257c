#include <json.hpp>
#include <string>

#include "casimir/errors.hpp"
#include "casimir/models.hpp"

namespace casimir {
namespace {

using nlohmann::json;

double required(const json& doc, const char* key, std::string_view model) {
  if (!doc.contains(key)) {
    throw DomainError(std::string("config: model '") + std::string(model) +
                      "' requires key '" + key + "'");
  }
  if (!doc.at(key).is_number()) {
    throw DomainError(std::string("config: key '") + key + "' must be a number");
  }
  return doc.at(key).get<double>();
}

double optional(const json& doc, const char* key, double fallback) {
  if (!doc.contains(key)) return fallback;
  if (!doc.at(key).is_number()) {
    throw DomainError(std::string("config: key '") + key + "' must be a number");
  }
  return doc.at(key).get<double>();
}

}  // namespace

ModelSpec parse_model_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("config: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("model") || !doc["model"].is_string()) {
    throw DomainError("config: expected an object with a string key 'model'");
  }
  const std::string name = doc["model"].get<std::string>();

  ModelSpec spec;
  spec.params.m = optional(doc, "m", 1.0);
  spec.params.lambda = optional(doc, "lambda", 1.0);
  if (name == "delta") {
    spec.model = DeltaModel{required(doc, "kappa", name)};
  } else if (name == "robin") {
    spec.model =
        RobinDirichletModel{required(doc, "kappa", name), required(doc, "L", name)};
  } else if (name == "hole") {
    spec.model =
        PotentialHoleModel{required(doc, "U0", name), required(doc, "R", name)};
  } else {
    throw DomainError("config: unknown model '" + name + "'");
  }
  spec.params.validate();
  validate(spec.model);
  return spec;
}

std::string to_json(const ModelSpec& spec) {
  json doc;
  doc["model"] = std::string(model_name(spec.model));
  doc["m"] = spec.params.m;
  doc["lambda"] = spec.params.lambda;
  if (const auto* d = std::get_if<DeltaModel>(&spec.model)) {
    doc["kappa"] = d->kappa;
  } else if (const auto* r = std::get_if<RobinDirichletModel>(&spec.model)) {
    doc["kappa"] = r->kappa;
    doc["L"] = r->L;
  } else if (const auto* h = std::get_if<PotentialHoleModel>(&spec.model)) {
    doc["U0"] = h->U0;
    doc["R"] = h->R;
  }
  return doc.dump();
}

}  // namespace casimir
