// vkobs: batch front end emitting one JSON report per invocation.

#include "CLI11.hpp"
#include "json.hpp"

#include "vk/chords.hpp"
#include "vk/obstructions.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using nlohmann::json;
using namespace vk;

namespace {

constexpr int kComputed = 0;
constexpr int kInternal = 1;
constexpr int kParse = 2;
constexpr int kPrecondition = 3;
constexpr int kUsage = 64;

struct Failure : std::runtime_error {
  Failure(int c, std::string k, const std::string& m) : std::runtime_error(m), code(c), kind(std::move(k)) {}
  int code;
  std::string kind;
  json detail = json::object();
};

auto sha256(const std::string& data) -> std::string {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return out.str();
}

auto read_file(const std::string& path) -> std::string {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure(kParse, "io", "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

auto to_json(const Integer& x) -> json {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

auto to_json(const AbelianGroup& g) -> json {
  json torsion = json::array();
  for (const auto& t : g.torsion) torsion.push_back(to_json(t));
  return {{"free_rank", g.free_rank}, {"torsion", torsion}, {"text", g.to_string()}};
}

auto to_json(const ObstructionReport& r) -> json {
  json out{{"ambient", r.ambient},
           {"trivial", r.trivial},
           {"order", r.order ? to_json(*r.order) : json(nullptr)},
           {"verdict", verdict_name(r.verdict)}};
  if (r.co_index) out["co_index"] = *r.co_index;
  return out;
}

auto to_json(const Trail& t) -> json {
  json out = json::array();
  for (auto [arc, dir] : t.steps) out.push_back({arc, dir});
  return out;
}

auto derivative_json(const DerivativeData& v) -> json {
  json out = json::array();
  for (const auto& [k, x] : v.values) out.push_back({k.first, k.second, to_json(x)});
  return out;
}

auto formula_json(const ArrowFormula& f) -> json {
  json coeff = json::array();
  for (int c = 0; c < f.arcs; ++c)
    for (int d = 0; d < f.arcs; ++d)
      if (f.at(c, d) != 0) coeff.push_back({c, d, to_json(f.at(c, d))});
  return {{"coefficients", coeff}, {"constant", to_json(f.constant)}, {"doubled", f.doubled}};
}

auto simplex_json(const Simplex& s) -> json {
  json out = json::array();
  for (auto v : s) out.push_back(v);
  return out;
}

auto complex_summary(const SimplicialComplex& k) -> json {
  json counts = json::array();
  for (int d = 0; d <= k.dimension(); ++d) counts.push_back(k.count(d));
  return {{"dimension", k.dimension()}, {"simplex_counts", counts}};
}

auto load_complex(const std::string& path, std::string& digest_input) -> SimplicialComplex {
  const auto text = read_file(path);
  digest_input += text;
  return parse_complex(text);
}

auto load_embedding(const std::string& path, std::string& digest_input) -> SpatialGraphEmbedding {
  const auto text = read_file(path);
  digest_input += text;
  return parse_embedding(text);
}

// Flattened "key: value" lines for the text format.
void print_text(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) print_text(v, prefix.empty() ? k : prefix + "." + k, out);
  } else {
    out << prefix << ": " << j.dump() << "\n";
  }
}

struct Options {
  unsigned seed = 1;
  bool no_timing = false;
  bool text = false;
  std::string complex_path;
  std::string second_path;
  std::string code;
  std::string deriv_path;
  std::string fixture_name;
  bool mod2 = false;
  bool verify = false;
  bool cone = false;
  bool raw = false;
  int k = 1;
};

auto run_obstruction(const Options& o, std::string& digest) -> json {
  const auto k = load_complex(o.complex_path, digest);
  const auto r = van_kampen(k);
  auto out = to_json(r);
  out["complex"] = complex_summary(k);
  if (o.mod2) out["mod2_trivial"] = r.mod2_trivial;
  return out;
}

auto run_h2n(const Options& o, std::string& digest) -> json {
  const auto k = load_complex(o.complex_path, digest);
  const auto g = h2n_presentation(k);
  json out{{"complex", complex_summary(k)}, {"group", to_json(g)}};
  if (o.verify) {
    const auto direct = h2n_direct(k);
    out["direct"] = to_json(direct);
    out["agree"] = direct == g;
    if (!(direct == g)) throw Failure(kInternal, "internal", "presentation and direct computation disagree");
  }
  return out;
}

auto run_coindex(const Options& o, std::string& digest) -> json {
  auto k = load_complex(o.complex_path, digest);
  if (o.cone) k = cone(k);
  const auto p = deleted_product(k);
  const auto& e = p.complex;
  return {{"complex", complex_summary(k)}, {"cone", o.cone}, {"co_index", co_index(e)}, {"yang_index", yang_index(e)}};
}

auto run_linkless(const Options& o, std::string& digest) -> json {
  const auto g = load_complex(o.complex_path, digest);
  if (g.dimension() > 1) throw Failure(kPrecondition, "precondition", "linkless expects a graph");
  auto out = to_json(linkless_obstruction(g));
  out["complex"] = complex_summary(g);
  return out;
}

auto run_isotopy(const Options& o, std::string& digest) -> json {
  const auto f = load_embedding(o.complex_path, digest);
  const auto g = load_embedding(o.second_path, digest);
  auto out = to_json(isotopy_obstruction(f, g, o.seed));
  out["seed"] = o.seed;
  return out;
}

auto run_coconnect(const Options& o, std::string& digest) -> json {
  const auto k = load_complex(o.complex_path, digest);
  const auto r = coconnectivity_check(k, o.k);
  json stars = json::array();
  for (const auto& s : r.star_table)
    stars.push_back({{"simplex", simplex_json(s.simplex)}, {"link_dimension", s.link_dimension}, {"holds", s.holds}});
  json locus = json::array();
  for (const auto& s : r.non_manifold_locus) locus.push_back(simplex_json(s));
  return {{"complex", complex_summary(k)},
          {"n", r.n},
          {"k", r.k},
          {"hypothesis", r.hypothesis},
          {"i_k", r.i_k},
          {"ii_k_minus_1", r.ii_k_minus_1},
          {"star_table", stars},
          {"embeds_in", r.embeds_in ? json(*r.embeds_in) : json(nullptr)},
          {"non_manifold_locus", locus},
          {"locus_bound_holds", r.locus_bound_holds}};
}

auto run_chords_analyze(const Options& o, std::string& digest) -> json {
  digest += o.code;
  const auto d = parse_diagram(o.code);
  const auto b = build_config_space(d);
  const auto p = planarity(b);
  const auto h = h1_structure(b);
  json inter = json::array();
  for (auto [i, j] : interlacement(d)) inter.push_back({i, j});
  json pairs = json::array();
  for (std::size_t i = 0; i < p.manturov.size() && i < 10; ++i)
    pairs.push_back({{"a", to_json(p.manturov[i].first)}, {"b", to_json(p.manturov[i].second)}});
  json basis = json::array();
  for (const auto& v : type1_basis(d)) basis.push_back(derivative_json(v));
  return {{"diagram", d.to_string()},
          {"chords", d.chords()},
          {"arcs", d.arcs()},
          {"rank", gamma1_rank(b)},
          {"factors", irreducible_factors(d).count},
          {"interlacement", inter},
          {"planar", p.planar},
          {"zeta_trivial", p.zeta_trivial},
          {"manturov_count", p.manturov.size()},
          {"manturov_pairs", pairs},
          {"rotation", p.rotation ? json(*p.rotation) : json(nullptr)},
          {"type1_basis", basis},
          {"h1", to_json(h.h1)},
          {"kernel", to_json(h.kernel)},
          {"kernel_mod_odd", to_json(h.kernel_mod_odd)},
          {"relative_cap_vanishes", h.relative_cap_vanishes}};
}

auto run_chords_formula(const Options& o, std::string& digest) -> json {
  digest += o.code;
  const auto d = parse_diagram(o.code);
  const auto text = read_file(o.deriv_path);
  digest += text;
  const auto v = parse_derivative(text, d.arcs());
  try {
    validate_derivative(d, v);
  } catch (const RelationViolation& e) {
    Failure f(kPrecondition, e.kind, e.what());
    f.detail = {{"relation", e.kind}, {"witness", e.witness}};
    throw f;
  }
  const auto b = build_config_space(d);
  const bool trivial = is_trivial(b.complex, arrow_formula_obstruction(b, v));
  const auto f = integral_arrow_formula(b, v);
  json out{{"diagram", d.to_string()},
           {"derivative", derivative_json(v)},
           {"obstruction_trivial", trivial},
           {"propto", propto(b, v)},
           {"formula", f ? formula_json(*f) : json(nullptr)},
           {"half_integer_formula", formula_json(half_integer_formula(d, v))}};
  if (!f) out["refusal"] = "no integral arrow diagram formula: the cap product with the Euler class is nonzero";
  return out;
}

auto run_fixture(const Options& o, std::string& digest) -> json {
  digest += o.fixture_name;
  SimplicialComplex k;
  try {
    k = fixture(o.fixture_name);
  } catch (const std::invalid_argument& e) {
    throw Failure(kPrecondition, "precondition", e.what());
  }
  return {{"name", o.fixture_name}, {"complex", complex_summary(k)}, {"text", format_complex(k)}};
}

} // namespace

auto main(int argc, char** argv) -> int {
  CLI::App app{"Embedding obstructions and chord diagram invariants"};
  Options o;
  app.add_option("--seed", o.seed, "Seed for randomized projection directions")->capture_default_str();
  app.add_flag("--no-timing", o.no_timing, "Omit wall-clock timing from the report");
  app.add_flag("--text", o.text, "Print flattened key: value lines instead of JSON");
  app.require_subcommand(1);

  auto* obstruction = app.add_subcommand("obstruction", "van Kampen obstruction of a complex file");
  obstruction->add_option("complex", o.complex_path)->required();
  obstruction->add_flag("--mod2", o.mod2, "Also report the mod 2 reduction");

  auto* h2n = app.add_subcommand("h2n", "Top cohomology of the quotient via disjoint complements");
  h2n->add_option("complex", o.complex_path)->required();
  h2n->add_flag("--verify", o.verify, "Cross-check against the direct computation");

  auto* coindex = app.add_subcommand("coindex", "Co-index and Yang index of the deleted product");
  coindex->add_option("complex", o.complex_path)->required();
  coindex->add_flag("--cone", o.cone, "Use the cone over the complex");

  auto* linkless = app.add_subcommand("linkless", "Linkless embedding obstruction of a graph");
  linkless->add_option("graph", o.complex_path)->required();

  auto* isotopy = app.add_subcommand("isotopy", "Isotopy obstruction between two spatial graph embeddings");
  isotopy->add_option("first", o.complex_path)->required();
  isotopy->add_option("second", o.second_path)->required();

  auto* coconnect = app.add_subcommand("coconnect", "Co-connectivity embedding conditions");
  coconnect->add_option("complex", o.complex_path)->required();
  coconnect->add_option("--k", o.k, "Codimension gain k")->required();

  auto* chords = app.add_subcommand("chords", "Chord diagram invariants");
  chords->require_subcommand(1);
  auto* analyze = chords->add_subcommand("analyze", "Rank, factors, planarity and H_1 of a Gauss code");
  analyze->add_option("code", o.code, "Double occurrence word, quoted")->required();
  auto* formula = chords->add_subcommand("formula", "Arrow diagram formula for derivative data");
  formula->add_option("code", o.code, "Double occurrence word, quoted")->required();
  formula->add_option("--deriv", o.deriv_path, "File of 'C D value' lines")->required();

  auto* fixtures = app.add_subcommand("fixtures", "Emit a fixture complex");
  fixtures->add_option("name", o.fixture_name, "k5, k33, petersen, flores-N, sarkaria")->required();
  fixtures->add_flag("--raw", o.raw, "Print the complex file instead of a report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  std::string command;
  for (const auto* sub = app.get_subcommands().front(); sub != nullptr;) {
    command += (command.empty() ? "" : " ") + sub->get_name();
    const auto next = sub->get_subcommands();
    sub = next.empty() ? nullptr : next.front();
  }

  json report;
  report["command"] = command;
  report["argv"] = std::vector<std::string>(argv + 1, argv + argc);
  std::string digest_input;
  int code = kComputed;
  const auto start = std::chrono::steady_clock::now();
  try {
    json result;
    if (command == "obstruction")
      result = run_obstruction(o, digest_input);
    else if (command == "h2n")
      result = run_h2n(o, digest_input);
    else if (command == "coindex")
      result = run_coindex(o, digest_input);
    else if (command == "linkless")
      result = run_linkless(o, digest_input);
    else if (command == "isotopy")
      result = run_isotopy(o, digest_input);
    else if (command == "coconnect")
      result = run_coconnect(o, digest_input);
    else if (command == "chords analyze")
      result = run_chords_analyze(o, digest_input);
    else if (command == "chords formula")
      result = run_chords_formula(o, digest_input);
    else
      result = run_fixture(o, digest_input);
    if (o.raw) {
      std::cout << result["text"].get<std::string>();
      return kComputed;
    }
    report["status"] = "ok";
    report["result"] = result;
  } catch (const Failure& e) {
    code = e.code;
    report["status"] = "error";
    report["error"] = {{"kind", e.kind}, {"message", e.what()}, {"detail", e.detail}};
  } catch (const ParseError& e) {
    code = kParse;
    report["status"] = "error";
    report["error"] = {{"kind", "parse"}, {"message", e.what()}, {"detail", json::object()}};
  } catch (const DegenerateInput& e) {
    code = kPrecondition;
    report["status"] = "error";
    report["error"] = {{"kind", "degenerate"}, {"message", e.what()}, {"detail", json::object()}};
  } catch (const CycleCapExceeded& e) {
    code = kPrecondition;
    report["status"] = "error";
    report["error"] = {{"kind", "cycle-cap"}, {"message", e.what()}, {"detail", json::object()}};
  } catch (const std::invalid_argument& e) {
    code = kPrecondition;
    report["status"] = "error";
    report["error"] = {{"kind", "precondition"}, {"message", e.what()}, {"detail", json::object()}};
  } catch (const std::exception& e) {
    code = kInternal;
    report["status"] = "error";
    report["error"] = {{"kind", "internal"}, {"message", e.what()}, {"detail", json::object()}};
  }
  report["input_digest"] = "sha256:" + sha256(digest_input);
  if (!o.no_timing)
    report["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (code != kComputed) std::cerr << "vkobs: " << report["error"]["message"].get<std::string>() << "\n";

  if (o.text)
    print_text(report, "", std::cout);
  else
    std::cout << report.dump(2) << "\n";
  return code;
}
