// Copyright 2026 The lncert Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lncert/json_io.hpp"

#include <json.hpp>

namespace lncert {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json named_values_to_json(const NamedValues& values) {
  ordered_json obj = ordered_json::object();
  for (const auto& [name, value] : values) obj[name] = value.to_string();
  return obj;
}

NamedValues named_values_from_json(const ordered_json& obj) {
  if (!obj.is_object()) fail(ErrorCode::UsageError, "expected a JSON object of rationals");
  NamedValues values;
  for (const auto& [name, value] : obj.items()) {
    values.emplace_back(name, Rational::from_string(value.get<std::string>()));
  }
  return values;
}

}  // namespace

std::string certificate_to_json(const Certificate& cert) {
  ordered_json j;
  j["claim_kind"] = claim_kind_name(cert.claim_kind);
  j["statement"] = cert.statement;
  j["parameters"] = named_values_to_json(cert.parameters);

  ordered_json parts = ordered_json::array();
  for (const Partition& p : cert.partitions) {
    ordered_json pts = ordered_json::array();
    for (const Rational& x : p.points()) pts.push_back(x.to_string());
    parts.push_back(std::move(pts));
  }
  j["partitions"] = std::move(parts);

  ordered_json terms = ordered_json::array();
  for (const BoundTerm& t : cert.terms) {
    ordered_json term;
    term["a"] = t.a.to_string();
    term["b"] = t.b.to_string();
    term["method"] = method_name(t.method);
    term["value"] = t.value.to_string();
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);

  j["totals"] = named_values_to_json(cert.totals);
  j["verdict"] = verdict_name(cert.verdict);

  ordered_json config;
  config["eps"] = cert.config.eps.to_string();
  config["refinement_floor"] = cert.config.refinement_floor.to_string();
  config["max_bisections"] = cert.config.max_bisections;
  if (cert.config.pi) {
    config["pi_lo"] = cert.config.pi->lo().to_string();
    config["pi_hi"] = cert.config.pi->hi().to_string();
  }
  j["config"] = std::move(config);

  return j.dump();
}

Certificate certificate_from_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::UsageError, std::string("certificate JSON parse failure: ") + e.what());
  }

  try {
    Certificate cert;
    cert.claim_kind = claim_kind_from_name(j.at("claim_kind").get<std::string>());
    cert.statement = j.at("statement").get<std::string>();
    cert.parameters = named_values_from_json(j.at("parameters"));

    for (const auto& part : j.at("partitions")) {
      std::vector<Rational> pts;
      for (const auto& x : part) pts.push_back(Rational::from_string(x.get<std::string>()));
      cert.partitions.emplace_back(std::move(pts));
    }

    for (const auto& term : j.at("terms")) {
      BoundTerm t{Rational::from_string(term.at("a").get<std::string>()),
                  Rational::from_string(term.at("b").get<std::string>()),
                  method_from_name(term.at("method").get<std::string>()),
                  Rational::from_string(term.at("value").get<std::string>())};
      cert.terms.push_back(std::move(t));
    }

    cert.totals = named_values_from_json(j.at("totals"));
    cert.verdict = verdict_from_name(j.at("verdict").get<std::string>());

    const auto& config = j.at("config");
    cert.config.eps = Rational::from_string(config.at("eps").get<std::string>());
    cert.config.refinement_floor =
        Rational::from_string(config.at("refinement_floor").get<std::string>());
    cert.config.max_bisections = config.at("max_bisections").get<long>();
    if (config.contains("pi_lo")) {
      cert.config.pi = Interval(Rational::from_string(config.at("pi_lo").get<std::string>()),
                                Rational::from_string(config.at("pi_hi").get<std::string>()));
    }
    return cert;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::UsageError, std::string("certificate JSON shape failure: ") + e.what());
  }
}

}  // namespace lncert
