#include "sigmaf/cli/document.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

#include "sigmaf/errors.hpp"

namespace sigmaf::cli {

namespace {

const Json& require_field(const Json& root, const char* key) {
  auto it = root.find(key);
  if (it == root.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

std::string require_string(const Json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError(where + ": expected a string, got " + std::string(v.type_name()));
  return v.get<std::string>();
}

}  // namespace

const NamedSet* InputDocument::find(std::string_view name) const {
  for (const auto& s : sets) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

std::vector<std::string> InputDocument::set_names() const {
  std::vector<std::string> out;
  for (const auto& s : sets) out.push_back(s.name);
  return out;
}

InputDocument parse_document(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!root.is_object()) throw ParseError("document root must be an object");
  for (const auto& [key, value] : root.items()) {
    if (key != "universe" && key != "sets" && key != "probabilities" && key != "events") {
      throw ParseError("unknown field '" + key + "'");
    }
  }

  InputDocument doc;

  const Json& universe = require_field(root, "universe");
  if (!universe.is_array() || universe.empty()) throw ParseError("universe: expected a nonempty array of labels");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    labels.push_back(require_string(universe[i], "universe[" + std::to_string(i) + "]"));
  }
  try {
    doc.universe = Universe::create(std::move(labels));
  } catch (const InvalidInput& e) {
    throw ParseError(std::string("universe: ") + e.what());
  }

  const Json& sets = require_field(root, "sets");
  if (!sets.is_object()) throw ParseError("sets: expected an object mapping names to label arrays");
  for (const auto& [name, members] : sets.items()) {
    const std::string where = "sets." + name;
    if (!members.is_array()) throw ParseError(where + ": expected an array of labels");
    SetMask mask = doc.universe->empty_set();
    for (std::size_t i = 0; i < members.size(); ++i) {
      const std::string label = require_string(members[i], where + "[" + std::to_string(i) + "]");
      auto index = doc.universe->index_of(label);
      if (!index) throw ParseError(where + "[" + std::to_string(i) + "]: label '" + label + "' is not in the universe");
      if (mask.test(*index)) throw ParseError(where + "[" + std::to_string(i) + "]: label '" + label + "' repeated");
      mask.set(*index);
    }
    doc.sets.push_back({name, std::move(mask)});
  }

  if (auto it = root.find("probabilities"); it != root.end()) {
    if (!it->is_object()) throw ParseError("probabilities: expected an object mapping labels to \"p/q\"");
    std::vector<std::optional<Rational>> masses(doc.universe->size());
    for (const auto& [label, value] : it->items()) {
      const std::string where = "probabilities." + label;
      auto index = doc.universe->index_of(label);
      if (!index) throw ParseError(where + ": label is not in the universe");
      try {
        masses[*index] = parse_rational(require_string(value, where));
      } catch (const InvalidInput& e) {
        throw ParseError(where + ": " + e.what());
      }
    }
    std::vector<Rational> aligned;
    for (std::size_t i = 0; i < masses.size(); ++i) {
      if (!masses[i]) throw ParseError("probabilities: no mass for point '" + doc.universe->label(i) + "'");
      aligned.push_back(*masses[i]);
    }
    try {
      ProbabilitySpace check(doc.universe, aligned);
    } catch (const InvalidInput& e) {
      throw ParseError(std::string("probabilities: ") + e.what());
    }
    doc.probabilities = std::move(aligned);
  }

  if (auto it = root.find("events"); it != root.end()) {
    if (!it->is_array()) throw ParseError("events: expected an array of set names");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string name = require_string((*it)[i], "events[" + std::to_string(i) + "]");
      if (!doc.find(name)) throw ParseError("events[" + std::to_string(i) + "]: no set named '" + name + "'");
      doc.events.push_back(name);
    }
  }
  return doc;
}

InputDocument load_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_document(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

Json serialize(const InputDocument& doc) {
  Json root = Json::object();
  root["universe"] = doc.universe->labels();
  Json sets = Json::object();
  for (const auto& s : doc.sets) {
    Json members = Json::array();
    for (auto i : s.mask.indices()) members.push_back(doc.universe->label(i));
    sets[s.name] = std::move(members);
  }
  root["sets"] = std::move(sets);
  if (doc.probabilities) {
    Json probs = Json::object();
    for (std::size_t i = 0; i < doc.universe->size(); ++i) {
      probs[doc.universe->label(i)] = format_rational((*doc.probabilities)[i]);
    }
    root["probabilities"] = std::move(probs);
  }
  if (!doc.events.empty()) root["events"] = doc.events;
  return root;
}

GeneratingClass generating_class(const InputDocument& doc, const std::vector<std::string>& names) {
  std::vector<NamedSet> members;
  if (names.empty()) {
    members = doc.sets;
  } else {
    for (const auto& n : names) {
      const NamedSet* s = doc.find(n);
      if (!s) {
        std::string available;
        for (const auto& a : doc.set_names()) available += (available.empty() ? "" : ", ") + a;
        throw ParseError("no set named '" + n + "' (available: " + available + ")");
      }
      members.push_back(*s);
    }
  }
  if (members.empty()) throw InvalidInput("the document defines no sets");
  return GeneratingClass(doc.universe, std::move(members));
}

ProbabilitySpace probability_space(const InputDocument& doc) {
  if (!doc.probabilities) throw ParseError("the document has no 'probabilities' field");
  return ProbabilitySpace(doc.universe, *doc.probabilities);
}

}  // namespace sigmaf::cli
