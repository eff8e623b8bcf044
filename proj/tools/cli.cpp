#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "certificate_json.hpp"
#include "liaison/invariants.hpp"
#include "liaison/pipelines.hpp"

namespace liaisonlab {

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

struct Config {
  std::string pipeline;
  std::uint64_t prime = 10007;
  std::uint64_t seed = 42;
  std::string format = "json";
  std::string output;
  int points = 5;
  std::string point_mode = "ambient";
  int extension_cap = 1;
  int jobs = 1;
  std::string dump_ideals;
  std::string dump_choices;
  std::string input;
  std::vector<std::string> h0;
  bool saturate = false;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// C'' -> Cpp, C'_embedded -> Cp_embedded.
std::string file_stem(const std::string& name) {
  std::string s;
  for (char c : name) s += c == '\'' ? std::string("p") : std::string(1, c);
  return s;
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

liaison::Multidegree parse_degree(const std::string& s) {
  liaison::Multidegree d;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      d.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw UsageError("bad degree '" + s + "'");
    }
  }
  if (d.empty()) throw UsageError("empty degree");
  return d;
}

liaison::Ideal load_ideal(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path);
  return liaison::read_ideal(f);
}

int cmd_pipeline(const Config& cfg, bool construct, std::ostream& out, std::ostream& err) {
  auto id = liaison::parse_pipeline(cfg.pipeline);
  if (!id) throw UsageError("unknown pipeline " + cfg.pipeline);
  if (!liaison::is_prime(cfg.prime) || cfg.prime < liaison::kMinPrime || cfg.prime > liaison::kMaxPrime) {
    throw UsageError("--prime must be a prime in [1009, 1048576]");
  }
  liaison::PipelineOptions o;
  o.prime = cfg.prime;
  o.seed = cfg.seed;
  o.points = cfg.points;
  o.point_mode = cfg.point_mode == "on-curve" ? liaison::PointMode::kOnCurve : liaison::PointMode::kAmbient;
  o.extension_cap = cfg.extension_cap;
  o.jobs = cfg.jobs;
  o.record_choices = !cfg.dump_choices.empty();

  liaison::Certificate cert;
  try {
    cert = liaison::run_pipeline(*id, o);
  } catch (const liaison::Error& e) {
    if (e.code() != liaison::ErrorCode::kDegenerateSample) throw;
    err << e.what() << '\n';
    return kExitDegenerate;
  }

  std::string dir = cfg.dump_ideals;
  if (construct && dir.empty()) {
    dir = std::string(liaison::pipeline_name(*id)) + "-p" + std::to_string(cfg.prime) + "-s" + std::to_string(cfg.seed);
  }
  if (!dir.empty()) {
    fs::create_directories(dir);
    for (const auto& [name, ideal] : cert.ideals) {
      std::ofstream f(fs::path(dir) / (file_stem(name) + ".ideal"));
      f << "# " << name << '\n';
      liaison::write_ideal(f, ideal);
    }
  }
  if (!cfg.dump_choices.empty()) {
    std::ostringstream os;
    for (auto c : cert.choices) os << c << '\n';
    write_text(cfg.dump_choices, os.str(), out);
  }
  write_text(cfg.output, cfg.format == "json" ? to_json(cert).dump(2) + "\n" : to_text(cert), out);
  return cert.pass() ? kExitPass : kExitCheckFailed;
}

int cmd_gb(const Config& cfg, std::ostream& out) {
  liaison::Ideal I = load_ideal(cfg.input);
  const auto& gb = I.groebner();
  if (cfg.format == "json") {
    ordered_json j;
    j["ring"] = {{"p", I.ring()->field().p()}, {"blocks", I.ring()->block_spec()}};
    ordered_json elems = ordered_json::array();
    for (const auto& g : gb.elements()) elems.push_back(g.to_string(liaison::Polynomial::Residues::kLeast));
    j["groebner_basis"] = std::move(elems);
    write_text(cfg.output, j.dump(2) + "\n", out);
  } else {
    std::ostringstream os;
    liaison::write_ideal(os, liaison::Ideal::from_groebner(gb));
    write_text(cfg.output, os.str(), out);
  }
  return kExitPass;
}

int cmd_invariants(const Config& cfg, std::ostream& out) {
  liaison::Ideal I = load_ideal(cfg.input);
  if (cfg.saturate) I = liaison::saturate_irrelevant(I);
  ordered_json j;
  j["ring"] = {{"p", I.ring()->field().p()}, {"blocks", I.ring()->block_spec()}};
  const int dim = liaison::scheme_dimension(I);
  j["dimension"] = dim;
  if (dim == 1) {
    auto inv = liaison::curve_invariants(I);
    j["degree"] = inv.degree;
    j["genus"] = inv.genus;
  } else if (dim == 0) {
    j["length"] = liaison::zero_dim_degree(I);
  }
  ordered_json h0 = ordered_json::object();
  for (const auto& s : cfg.h0) h0[s] = liaison::h0_ideal(I, parse_degree(s));
  j["h0"] = std::move(h0);
  if (cfg.format == "json") {
    write_text(cfg.output, j.dump(2) + "\n", out);
  } else {
    std::ostringstream os;
    for (const auto& [k, v] : j.items()) os << k << ": " << v.dump() << '\n';
    write_text(cfg.output, os.str(), out);
  }
  return kExitPass;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Liaison constructions of curves over finite fields", "liaisonlab"};
  app.require_subcommand(1);
  Config cfg;

  auto add_pipeline_flags = [&cfg](CLI::App* sub) {
    sub->add_option("--pipeline", cfg.pipeline, "h10-8 | m10-n | h13-7 | h12-8")
        ->required()
        ->check(CLI::IsMember({"h10-8", "m10-n", "h13-7", "h12-8", "h10_8", "m10_n", "h13_7", "h12_8"}));
    sub->add_option("--prime", cfg.prime, "field characteristic")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    sub->add_option("--format", cfg.format, "json | text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    sub->add_option("-o,--output", cfg.output, "certificate path (default stdout)");
    sub->add_option("--points", cfg.points, "marked points for m10-n")->check(CLI::Range(0, 5))->capture_default_str();
    sub->add_option("--point-mode", cfg.point_mode, "ambient | on-curve")
        ->check(CLI::IsMember({"ambient", "on-curve"}))
        ->capture_default_str();
    sub->add_option("--extension-cap", cfg.extension_cap, "largest closed-point degree in the fiber scan")
        ->check(CLI::Range(1, 3))
        ->capture_default_str();
    sub->add_option("--jobs", cfg.jobs, "worker threads for fiber scans")->check(CLI::Range(1, 256))->capture_default_str();
    sub->add_option("--dump-ideals", cfg.dump_ideals, "directory for intermediate ideals");
    sub->add_option("--dump-choices", cfg.dump_choices, "file for the raw random draws ('-' for stdout)");
  };
  auto* verify = app.add_subcommand("verify", "run a pipeline and write its certificate");
  add_pipeline_flags(verify);
  auto* construct = app.add_subcommand("construct", "run a pipeline and dump every intermediate ideal");
  add_pipeline_flags(construct);

  auto add_file_flags = [&cfg](CLI::App* sub) {
    sub->add_option("file", cfg.input, "ideal file")->required();
    sub->add_option("--format", cfg.format, "json | text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    sub->add_option("-o,--output", cfg.output, "output path (default stdout)");
  };
  auto* gb = app.add_subcommand("gb", "reduced Groebner basis of an ideal file");
  add_file_flags(gb);
  auto* inv = app.add_subcommand("invariants", "dimension, degree, genus and h0 values of an ideal file");
  add_file_flags(inv);
  inv->add_option("--h0", cfg.h0, "degree such as 5,2 (repeatable)");
  inv->add_flag("--saturate", cfg.saturate, "saturate by the irrelevant ideal first");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "liaisonlab: " << e.what() << '\n';
    return kExitUsage;
  }

  if (const char* cache = std::getenv("LIAISONLAB_CACHE"); cache && *cache) {
    liaison::set_groebner_cache_directory(std::string(cache));
  }
  try {
    if (verify->parsed()) return cmd_pipeline(cfg, false, out, err);
    if (construct->parsed()) return cmd_pipeline(cfg, true, out, err);
    if (gb->parsed()) return cmd_gb(cfg, out);
    return cmd_invariants(cfg, out);
  } catch (const UsageError& e) {
    err << "liaisonlab: " << e.what() << '\n';
    return kExitUsage;
  } catch (const liaison::Error& e) {
    err << "liaisonlab: " << e.what() << '\n';
    const bool bad_input = e.code() == liaison::ErrorCode::kParse || e.code() == liaison::ErrorCode::kInvalidArgument ||
                           e.code() == liaison::ErrorCode::kHomogeneity;
    return bad_input ? kExitUsage : kExitCheckFailed;
  }
}

}  // namespace liaisonlab
