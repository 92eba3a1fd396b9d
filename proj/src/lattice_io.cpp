#include "sasaki/lattice_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "sasaki/error.hpp"

namespace sasaki {

using nlohmann::json;

RawOml parse_lattice(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Format, std::string("lattice file is not valid JSON: ") + e.what());
  }
  try {
    for (const char* key : {"elements", "leq", "ortho", "bottom", "top"}) {
      if (!doc.contains(key)) throw Error(ErrorKind::Format, std::string("missing field '") + key + "'");
    }
    RawOml raw;
    raw.elements = doc.at("elements").get<std::vector<std::string>>();
    std::set<std::string> seen;
    for (const auto& e : raw.elements) {
      if (!seen.insert(e).second) throw Error(ErrorKind::Format, "duplicate element name '" + e + "'");
    }
    for (const auto& pair : doc.at("leq")) {
      if (!pair.is_array() || pair.size() != 2) {
        throw Error(ErrorKind::Format, "leq entries must be [x, y] pairs");
      }
      raw.leq.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
    raw.ortho = doc.at("ortho").get<std::map<std::string, std::string>>();
    for (const auto& e : raw.elements) {
      if (!raw.ortho.count(e)) throw Error(ErrorKind::Format, "ortho is not defined on '" + e + "'");
    }
    for (const auto& [from, to] : raw.ortho) {
      if (!seen.count(from) || !seen.count(to)) {
        throw Error(ErrorKind::Format, "ortho mentions unknown element '" + (seen.count(from) ? to : from) + "'");
      }
    }
    raw.bottom = doc.at("bottom").get<std::string>();
    raw.top = doc.at("top").get<std::string>();
    return raw;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Format, std::string("malformed lattice document: ") + e.what());
  }
}

RawOml load_lattice_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Format, "cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_lattice(buf.str());
}

std::string serialize_lattice(const RawOml& raw) {
  json doc;
  doc["elements"] = raw.elements;
  json leq = json::array();
  for (const auto& [x, y] : raw.leq) leq.push_back({x, y});
  doc["leq"] = leq;
  doc["ortho"] = raw.ortho;
  doc["bottom"] = raw.bottom;
  doc["top"] = raw.top;
  return doc.dump(2) + "\n";
}

std::string serialize_lattice(const FiniteOml& lattice) { return serialize_lattice(lattice.to_raw()); }

}  // namespace sasaki
