#include "kwise/measure_io.hpp"

#include <json.hpp>

#include "kwise/error.hpp"

namespace kwise {

namespace {

using ordered_json = nlohmann::ordered_json;

Rational parse_mass(const nlohmann::json& value, const char* what) {
  if (!value.is_string())
    fail(ErrorCode::kParse, std::string(what) + " must be a rational string");
  Rational r = Rational::parse(value.get<std::string>());
  if (r.sign() < 0) fail(ErrorCode::kParse, std::string(what) + " must be nonnegative");
  if (r.is_zero())
    fail(ErrorCode::kParse, std::string(what) + " of zero must be omitted");
  return r;
}

unsigned parse_dimension(const nlohmann::json& doc) {
  if (!doc.contains("n") || !doc["n"].is_number_unsigned())
    fail(ErrorCode::kParse, "measure document needs a positive integer field 'n'");
  auto n = doc["n"].get<std::uint64_t>();
  if (n < 1 || n > kMaxOrbitN) fail(ErrorCode::kGuard, "measure dimension out of range");
  return static_cast<unsigned>(n);
}

void check_fields(const nlohmann::json& doc, const char* payload) {
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (it.key() != "kind" && it.key() != "n" && it.key() != payload)
      fail(ErrorCode::kParse, "unknown field '" + it.key() + "' in measure document");
}

unsigned parse_weight_key(const std::string& key, unsigned n) {
  if (key.empty() || key.size() > 9 || (key.size() > 1 && key[0] == '0'))
    fail(ErrorCode::kParse, "bad weight index '" + key + "'");
  for (char c : key)
    if (c < '0' || c > '9') fail(ErrorCode::kParse, "bad weight index '" + key + "'");
  unsigned w = static_cast<unsigned>(std::stoul(key));
  if (w > n) fail(ErrorCode::kParse, "weight index " + key + " exceeds n");
  return w;
}

}  // namespace

std::string serialize_measure(const Measure& m) {
  ordered_json doc;
  if (const auto* orbit = std::get_if<OrbitMeasure>(&m)) {
    doc["kind"] = "orbit";
    doc["n"] = orbit->n();
    ordered_json weights = ordered_json::object();
    for (unsigned w = 0; w <= orbit->n(); ++w)
      if (!orbit->weight(w).is_zero()) weights[std::to_string(w)] = orbit->weight(w).str();
    doc["weights"] = std::move(weights);
  } else {
    const auto& atomic = std::get<AtomicMeasure>(m);
    doc["kind"] = "atomic";
    doc["n"] = atomic.n();
    ordered_json atoms = ordered_json::object();
    // std::map order over masks is already deterministic; emit pattern keys
    // in lexicographic order instead so the file reads naturally.
    std::map<std::string, std::string> by_pattern;
    for (const auto& [mask, mass] : atomic.atoms())
      by_pattern.emplace(SignVector(atomic.n(), mask).str(), mass.str());
    for (const auto& [pattern, mass] : by_pattern) atoms[pattern] = mass;
    doc["atoms"] = std::move(atoms);
  }
  return doc.dump(2) + "\n";
}

Measure parse_measure(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kParse, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string())
    fail(ErrorCode::kParse, "measure document needs a 'kind' field");
  const std::string kind = doc["kind"].get<std::string>();

  if (kind == "orbit") {
    check_fields(doc, "weights");
    unsigned n = parse_dimension(doc);
    if (!doc.contains("weights") || !doc["weights"].is_object())
      fail(ErrorCode::kParse, "orbit measure needs a 'weights' object");
    std::vector<Rational> weights(n + 1);
    for (auto it = doc["weights"].begin(); it != doc["weights"].end(); ++it) {
      unsigned w = parse_weight_key(it.key(), n);
      if (!weights[w].is_zero()) fail(ErrorCode::kParse, "duplicate weight index " + it.key());
      weights[w] = parse_mass(it.value(), "orbit weight");
    }
    try {
      return OrbitMeasure(n, std::move(weights));
    } catch (const Error& e) {
      fail(ErrorCode::kParse, e.what());
    }
  }

  if (kind == "atomic") {
    check_fields(doc, "atoms");
    unsigned n = parse_dimension(doc);
    if (n > kMaxAtomicN) fail(ErrorCode::kGuard, "atomic measure dimension exceeds the guard");
    if (!doc.contains("atoms") || !doc["atoms"].is_object())
      fail(ErrorCode::kParse, "atomic measure needs an 'atoms' object");
    std::map<std::uint32_t, Rational> atoms;
    for (auto it = doc["atoms"].begin(); it != doc["atoms"].end(); ++it) {
      std::uint32_t mask = SignVector::parse(n, it.key()).mask();
      if (atoms.count(mask)) fail(ErrorCode::kParse, "duplicate atom '" + it.key() + "'");
      atoms.emplace(mask, parse_mass(it.value(), "atom mass"));
    }
    try {
      return AtomicMeasure(n, std::move(atoms));
    } catch (const Error& e) {
      fail(ErrorCode::kParse, e.what());
    }
  }

  fail(ErrorCode::kParse, "unknown measure kind '" + kind + "'");
}

unsigned measure_n(const Measure& m) {
  return std::visit([](const auto& x) { return x.n(); }, m);
}

}  // namespace kwise
