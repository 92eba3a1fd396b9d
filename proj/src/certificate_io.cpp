#include "sasaki/certificate_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sasaki/error.hpp"

namespace sasaki {

using nlohmann::json;

std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

std::string vec(const Vec3& v) {
  return "[" + format_real(v[0]) + ", " + format_real(v[1]) + ", " + format_real(v[2]) + "]";
}

template <typename Range>
std::string vec_list(const Range& vs) {
  std::string out = "[";
  bool first = true;
  for (const Vec3& v : vs) {
    if (!first) out += ", ";
    out += vec(v);
    first = false;
  }
  return out + "]";
}

std::string step(const CollapseStep& s) {
  std::ostringstream os;
  os << "{\"parent\": " << s.parent << ", \"plane\": " << vec_list(s.plane) << ", \"witness\": " << s.witness
     << ", \"phi\": " << format_real(s.phi) << ", \"result\": " << vec(s.result) << "}";
  return os.str();
}

Vec3 read_vec(const json& j) {
  if (!j.is_array() || j.size() != 3) throw Error(ErrorKind::Format, "vectors must have 3 entries");
  Vec3 v;
  for (int i = 0; i < 3; ++i) v[i] = j.at(i).get<double>();
  return v;
}

CollapseStep read_step(const json& j) {
  CollapseStep s;
  s.parent = j.at("parent").get<std::size_t>();
  s.witness = j.at("witness").get<std::size_t>();
  s.phi = j.at("phi").get<double>();
  const auto& plane = j.at("plane");
  if (!plane.is_array() || plane.size() != 2) throw Error(ErrorKind::Format, "plane needs 2 spanning vectors");
  s.plane = {read_vec(plane[0]), read_vec(plane[1])};
  s.result = read_vec(j.at("result"));
  return s;
}

}  // namespace

std::string serialize_certificate(const CollapseCertificate& cert) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"schema\": \"" << kCertificateSchema << "\",\n";
  os << "  \"tolerance\": " << format_real(cert.tolerance) << ",\n";
  os << "  \"basis\": " << vec_list(cert.basis) << ",\n";
  os << "  \"initial_atoms\": " << vec_list(cert.initial_atoms) << ",\n";
  if (cert.premise) {
    os << "  \"premise\": {\"subspace\": " << vec_list(cert.premise->subspace)
       << ", \"source\": " << cert.premise->source << ", \"result\": ";
    if (cert.premise->result) {
      os << *cert.premise->result;
    } else {
      os << "null";
    }
    os << "},\n";
  }
  os << "  \"rounds\": [";
  for (std::size_t r = 0; r < cert.rounds.size(); ++r) {
    os << (r ? ",\n" : "\n") << "    {\"steps\": [" << step(cert.rounds[r].first) << ", "
       << step(cert.rounds[r].second) << "]}";
  }
  os << (cert.rounds.empty() ? "],\n" : "\n  ],\n");
  os << "  \"final\": ";
  if (cert.final_pair) {
    os << "[" << cert.final_pair->first << ", " << cert.final_pair->second << "]";
  } else {
    os << "null";
  }
  os << "\n}\n";
  return os.str();
}

CollapseCertificate parse_certificate(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Format, std::string("certificate is not valid JSON: ") + e.what());
  }
  try {
    if (doc.value("schema", std::string()) != kCertificateSchema) {
      throw Error(ErrorKind::Format, std::string("certificate schema must be '") + kCertificateSchema + "'");
    }
    CollapseCertificate cert;
    cert.tolerance = doc.at("tolerance").get<double>();
    const auto& basis = doc.at("basis");
    if (!basis.is_array() || basis.size() != 3) throw Error(ErrorKind::Format, "basis needs 3 vectors");
    for (int i = 0; i < 3; ++i) cert.basis[i] = read_vec(basis[i]);
    for (const auto& v : doc.at("initial_atoms")) cert.initial_atoms.push_back(read_vec(v));
    if (doc.contains("premise") && !doc["premise"].is_null()) {
      const auto& p = doc["premise"];
      Premise premise;
      for (const auto& v : p.at("subspace")) premise.subspace.push_back(read_vec(v));
      premise.source = p.at("source").get<std::size_t>();
      if (!p.at("result").is_null()) premise.result = p["result"].get<std::size_t>();
      cert.premise = std::move(premise);
    }
    for (const auto& r : doc.at("rounds")) {
      const auto& steps = r.at("steps");
      if (!steps.is_array() || steps.size() != 2) throw Error(ErrorKind::Format, "each round has exactly 2 steps");
      cert.rounds.push_back({read_step(steps[0]), read_step(steps[1])});
    }
    const auto& fin = doc.at("final");
    if (!fin.is_null()) {
      if (!fin.is_array() || fin.size() != 2) throw Error(ErrorKind::Format, "final must name two items");
      cert.final_pair = std::pair{fin[0].get<std::size_t>(), fin[1].get<std::size_t>()};
    }
    return cert;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Format, std::string("malformed certificate: ") + e.what());
  }
}

CollapseCertificate load_certificate_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Format, "cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_certificate(buf.str());
}

void save_certificate_file(const CollapseCertificate& cert, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Format, "cannot write '" + path.string() + "'");
  out << serialize_certificate(cert);
  if (!out) throw Error(ErrorKind::Format, "failed writing '" + path.string() + "'");
}

}  // namespace sasaki
