#include "cli.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sasaki/certificate_io.hpp"
#include "sasaki/collapse.hpp"
#include "sasaki/error.hpp"
#include "sasaki/filters.hpp"
#include "sasaki/lattice_io.hpp"
#include "sasaki/lemma.hpp"
#include "sasaki/prevaluation.hpp"
#include "sasaki/schedule.hpp"

namespace sasaki::cli {

namespace {

using nlohmann::json;

constexpr double kLemmaTolerance = 1e-4;

double degrees_to_radians(double deg) { return deg * std::numbers::pi / 180.0; }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

Vec3 parse_vec(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) throw Error(ErrorKind::Format, "expected a vector x,y,z but got '" + text + "'");
  Vec3 v;
  for (int i = 0; i < 3; ++i) {
    std::size_t used = 0;
    try {
      v[i] = std::stod(parts[i], &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != parts[i].size()) {
      throw Error(ErrorKind::Format, "not a number: '" + parts[i] + "'");
    }
  }
  if (!v.allFinite()) throw Error(ErrorKind::Format, "vector entries must be finite");
  return v;
}

std::string set_text(const std::vector<std::string>& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? ", " : "") + names[i];
  return out + "}";
}

// Loads and validates; the violation (if any) is printed and reported as nullopt.
std::optional<FiniteOml> load_valid(const std::string& path, std::ostream& out, bool machine) {
  auto result = validate_oml(load_lattice_file(path));
  if (auto* v = std::get_if<OmlViolation>(&result)) {
    if (machine) {
      out << json{{"valid", false},
                  {"violation", to_string(v->kind)},
                  {"law", to_string(v->law)},
                  {"witnesses", {v->x, v->y}}}
                 .dump()
          << "\n";
    } else {
      out << v->describe() << "\n";
    }
    return std::nullopt;
  }
  return std::get<FiniteOml>(std::move(result));
}

int cmd_oml_check(const std::string& path, bool machine, std::ostream& out) {
  auto lattice = load_valid(path, out, machine);
  if (!lattice) return kRejected;
  if (machine) {
    out << json{{"valid", true}, {"elements", lattice->size()}}.dump() << "\n";
  } else {
    out << "valid OML (" << lattice->size() << " elements)\n";
  }
  return kOk;
}

struct FilterArgs {
  std::string path;
  bool enumerate = false;
  std::string closure;
  bool prevals = false;
  bool valuations = false;
  std::size_t bound = kDefaultEnumerationBound;
};

int cmd_filters(const FilterArgs& a, bool machine, std::ostream& out) {
  auto lattice = load_valid(a.path, out, machine);
  if (!lattice) return kRejected;
  const FiniteOml& l = *lattice;

  if (!a.closure.empty()) {
    std::vector<Element> generators;
    for (const auto& name : split(a.closure, ',')) generators.push_back(l.element(name));
    const auto s = UpSet::generated_by(l, generators);
    const auto f = sasaki_closure(s);
    const auto names = f.upset().member_names();
    if (machine) {
      out << json{{"closure", names}, {"proper", f.is_proper()}, {"steps", sasaki_closure_depth(s)}}.dump()
          << "\n";
    } else {
      out << set_text(names) << " " << (f.is_proper() ? "proper" : "improper") << "\n";
    }
    return kOk;
  }

  if (a.enumerate) {
    const auto filters = enumerate_sasaki_filters(l, a.bound);
    json list = json::array();
    for (const auto& f : filters) {
      if (machine) {
        list.push_back({{"members", f.upset().member_names()}, {"proper", f.is_proper()}});
      } else {
        out << set_text(f.upset().member_names()) << (f.is_proper() ? " proper" : "") << "\n";
      }
    }
    if (machine) {
      out << json{{"filters", list}, {"count", filters.size()}}.dump() << "\n";
    } else {
      out << "count " << filters.size() << "\n";
    }
    return kOk;
  }

  const auto labelings = a.valuations ? find_valuations(l, a.bound) : enumerate_prevaluations(l, a.bound);
  json list = json::array();
  for (const auto& v : labelings) {
    const auto names = UpSet::from_mask(l, v.ones()).member_names();
    if (machine) {
      list.push_back(names);
    } else {
      out << set_text(names) << "\n";
    }
  }
  const char* what = a.valuations ? "valuations" : "prevaluations";
  if (machine) {
    out << json{{what, list}, {"count", labelings.size()}}.dump() << "\n";
  } else {
    out << "count " << labelings.size() << "\n";
  }
  return a.valuations && labelings.empty() ? kRejected : kOk;
}

int cmd_lemma(double theta_deg, int grid, bool refine, bool machine, std::ostream& out) {
  if (!(theta_deg > 0.0 && theta_deg < 90.0)) {
    throw Error(ErrorKind::ThetaOutOfRange, "--theta must lie strictly between 0 and 90 degrees");
  }
  const double theta = degrees_to_radians(theta_deg);
  const Interval analytic = lemma_interval(theta);
  const LemmaScan scan = scan_pair_dot(theta, grid, refine);
  const double dev_min = std::abs(scan.min - analytic.lo);
  const double dev_max = std::abs(scan.max - analytic.hi);
  const bool ok = dev_min <= kLemmaTolerance && dev_max <= kLemmaTolerance;
  if (machine) {
    out << json{{"theta_degrees", theta_deg},
                {"observed", {scan.min, scan.max}},
                {"analytic", {analytic.lo, analytic.hi}},
                {"deviation", {dev_min, dev_max}},
                {"within_tolerance", ok}}
               .dump()
        << "\n";
  } else {
    out << std::setprecision(12);
    out << "theta     " << theta_deg << " deg\n";
    out << "observed  [" << scan.min << ", " << scan.max << "]\n";
    out << "analytic  [" << analytic.lo << ", " << analytic.hi << "]\n";
    out << std::setprecision(3) << std::scientific;
    out << "deviation min " << dev_min << ", max " << dev_max << (ok ? "  ok" : "  EXCEEDS 1e-4") << "\n";
    out << std::defaultfloat;
  }
  return ok ? kOk : kRejected;
}

Vec3 random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  for (;;) {
    Vec3 v(gauss(rng), gauss(rng), gauss(rng));
    if (v.norm() > 1e-6) return v.normalized();
  }
}

void report_certificate(const CollapseCertificate& cert, const std::string& path, bool machine,
                        std::ostream& out) {
  const auto report = verify_certificate(cert);
  if (machine) {
    out << json{{"rounds", cert.rounds.size()},
                {"final_abs_dot", report.final_abs_dot},
                {"bottom_depth", report.bottom_depth},
                {"self_check", report.accepted},
                {"out", path}}
               .dump()
        << "\n";
  } else {
    out << "rounds " << cert.rounds.size() << "\n";
    out << "final |u.v| " << std::setprecision(3) << std::scientific << report.final_abs_dot
        << std::defaultfloat << "\n";
    out << "certificate written to " << path << "\n";
  }
}

int cmd_collapse(const std::string& u_text, const std::string& v_text, std::optional<std::uint64_t> seed,
                 const std::string& path, bool machine, std::ostream& out) {
  Vec3 u, v;
  if (seed) {
    std::mt19937_64 rng(*seed);
    u = random_unit(rng);
    v = random_unit(rng);
  } else {
    u = parse_vec(u_text);
    v = parse_vec(v_text);
  }
  Subspace3 a, b;
  try {
    a = span({u});
    b = span({v});
  } catch (const Error& e) {
    throw Error(ErrorKind::Format, std::string("degenerate input vector: ") + e.what());
  }
  const auto cert = collapse(a, b);
  save_certificate_file(cert, path);
  report_certificate(cert, path, machine, out);
  return kOk;
}

int cmd_refute(const std::string& atom_text, const std::vector<std::string>& span_texts,
               const std::string& path, bool machine, std::ostream& out) {
  const Vec3 u = parse_vec(atom_text);
  std::vector<Vec3> vs;
  for (const auto& t : span_texts) vs.push_back(parse_vec(t));
  const Subspace3 a = span({u});
  const Subspace3 e = vs.empty() ? Subspace3::zero() : span(vs);
  const auto cert = refute_second_element(a, e);
  save_certificate_file(cert, path);
  report_certificate(cert, path, machine, out);
  return kOk;
}

int cmd_verify(const std::string& path, bool machine, std::ostream& out) {
  const auto cert = load_certificate_file(path);
  const auto report = verify_certificate(cert);
  if (machine) {
    out << json{{"accepted", report.accepted},
                {"failed_check", to_string(report.failed)},
                {"reason", report.reason},
                {"rounds", report.rounds},
                {"bottom_depth", report.bottom_depth},
                {"final_abs_dot", report.final_abs_dot}}
               .dump()
        << "\n";
  } else if (report.accepted) {
    out << "accepted: bottom derived after " << report.bottom_depth << " closure steps (" << report.rounds
        << " rounds)\n";
  } else {
    out << "rejected at check " << to_string(report.failed) << ": " << report.reason << "\n";
  }
  return report.accepted ? kOk : kRejected;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sasaki filters on orthomodular lattices and collapse certificates", "sasaki"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "human";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "machine"}));

  auto* oml_check = app.add_subcommand("oml-check", "Validate a lattice file");
  std::string lattice_path;
  oml_check->add_option("path", lattice_path, "Lattice file")->required();

  auto* filters = app.add_subcommand("filters", "Sasaki filters of a lattice");
  FilterArgs fa;
  filters->add_option("path", fa.path, "Lattice file")->required();
  auto* mode = filters->add_option_group("mode");
  mode->add_flag("--enumerate", fa.enumerate, "List every Sasaki filter");
  mode->add_option("--closure", fa.closure, "Closure of up(x1) u ... u up(xk), names comma separated");
  mode->add_flag("--prevals", fa.prevals, "List pre-valuations");
  mode->add_flag("--valuations", fa.valuations, "List valuations");
  mode->require_option(1);
  filters->add_option("--max-elements", fa.bound, "Enumeration bound")->capture_default_str();

  auto* lemma = app.add_subcommand("lemma", "Grid-scan the projected inner product");
  double theta_deg = 0;
  int grid = 720;
  bool no_refine = false;
  lemma->add_option("--theta", theta_deg, "Angle between the rays, degrees")->required();
  lemma->add_option("--grid", grid, "Grid subdivisions per axis")->capture_default_str();
  lemma->add_flag("--no-refine", no_refine, "Skip local refinement");

  auto* collapse_cmd = app.add_subcommand("collapse", "Generate a collapse certificate for two rays");
  std::string u_text, v_text, out_path;
  std::optional<std::uint64_t> seed;
  auto* u_opt = collapse_cmd->add_option("--u", u_text, "First ray x,y,z");
  auto* v_opt = collapse_cmd->add_option("--v", v_text, "Second ray x,y,z");
  auto* seed_opt = collapse_cmd->add_option("--seed", seed, "Draw a random pair from this seed");
  u_opt->needs(v_opt);
  v_opt->needs(u_opt);
  seed_opt->excludes(u_opt)->excludes(v_opt);
  collapse_cmd->add_option("--out", out_path, "Certificate output path")->required();

  auto* refute = app.add_subcommand("refute", "Refute a second element next to an atom");
  std::string atom_text, refute_out;
  std::vector<std::string> span_texts;
  refute->add_option("--atom", atom_text, "Atom x,y,z")->required();
  refute->add_option("--span", span_texts, "Spanning vector of the subspace (repeatable)");
  refute->add_option("--out", refute_out, "Certificate output path")->required();

  auto* verify = app.add_subcommand("verify", "Replay and check a certificate");
  std::string cert_path;
  verify->add_option("path", cert_path, "Certificate file")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  const bool machine = format == "machine";
  try {
    if (oml_check->parsed()) return cmd_oml_check(lattice_path, machine, out);
    if (filters->parsed()) return cmd_filters(fa, machine, out);
    if (lemma->parsed()) return cmd_lemma(theta_deg, grid, !no_refine, machine, out);
    if (collapse_cmd->parsed()) {
      if (!seed && u_text.empty()) {
        err << "collapse needs --u and --v, or --seed\n";
        return kUsage;
      }
      return cmd_collapse(u_text, v_text, seed, out_path, machine, out);
    }
    if (refute->parsed()) return cmd_refute(atom_text, span_texts, refute_out, machine, out);
    if (verify->parsed()) return cmd_verify(cert_path, machine, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::TooLarge:
      case ErrorKind::AlreadyAbove:
      case ErrorKind::TooManyRounds:
        return kRejected;
      default:
        return kUsage;
    }
  }
  return kUsage;
}

}  // namespace sasaki::cli
