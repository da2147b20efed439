#include "tdframe/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tdframe/construct.hpp"
#include "tdframe/error.hpp"
#include "tdframe/serialize.hpp"

namespace tdframe::cli {
namespace {

enum class Mode { exact, floating };

struct Config {
  std::string format;
  std::string mode = "exact";
  double tol = kDefaultTolerance;
  std::string out_path;
};

struct GraphSource {
  std::string graph_path;
  std::string family;
  int size = 0;
};

// Input problems that map to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

SrgGraph load_graph(const GraphSource& src) {
  if (!src.graph_path.empty()) {
    if (!src.family.empty()) throw UsageError("give either --graph or --family, not both");
    return SrgGraph::from_adjacency(parse_graph_json(read_file(src.graph_path)));
  }
  if (src.family.empty()) throw UsageError("a graph is required: --graph FILE or --family NAME");
  if (src.family == "clebsch-complement") return clebsch_complement();
  auto fam = family_from_string(src.family);
  if (!fam) throw UsageError("unknown family '" + src.family + "'");
  return generate(*fam, src.size);
}

void add_graph_options(CLI::App* sub, GraphSource& src) {
  sub->add_option("--graph", src.graph_path, "graph JSON file");
  sub->add_option("--family", src.family,
                  "triangular, lattice, paley, petersen or clebsch-complement");
  sub->add_option("--size", src.size, "family size parameter");
}

Mode mode_of(const Config& cfg) {
  if (cfg.mode == "exact") return Mode::exact;
  if (cfg.mode == "float") return Mode::floating;
  throw UsageError("--mode must be exact or float");
}

Format format_of(const Config& cfg, Format fallback) {
  if (cfg.format.empty()) return fallback;
  auto f = format_from_string(cfg.format);
  if (!f) throw UsageError("--format must be json, csv or pretty");
  return *f;
}

GramSet load_gram(const std::string& path, const Config& cfg) {
  const Mode mode = mode_of(cfg);
  const std::string text = read_file(path);
  if (mode == Mode::exact) {
    GramSet g = parse_gram_json(text);
    if (!g.exact()) throw UsageError("exact mode rejects floating-point Gram entries; use --mode float");
    return g;
  }
  // Float mode: parse, then evaluate every entry with the configured tolerance.
  const Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON in '" + path + "'");
  Json copy = j;
  for (auto& row : copy.at("entries"))
    for (auto& cell : row)
      if (cell.is_string()) cell = Scalar::parse(cell.get<std::string>(), cfg.tol).to_double();
  return parse_gram_json(copy.dump(), cfg.tol);
}

SrgParams parse_params(const std::string& text) {
  std::vector<int> vals;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      vals.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::logic_error&) {
      throw UsageError("--params expects v,k,lambda,mu");
    }
  }
  if (vals.size() != 4) throw UsageError("--params expects v,k,lambda,mu");
  return SrgParams{vals[0], vals[1], vals[2], vals[3]};
}

Json spectrum_json(const SrgParams& p) {
  const SpectralData s = spectrum_of(p);
  Json out;
  out["k"] = s.k.str();
  out["r1"] = s.r1.str();
  out["r2"] = s.r2.str();
  out["n1"] = s.n1;
  out["n2"] = s.n2;
  out["s1"] = s.s1.str();
  out["s2"] = s.s2.str();
  return out;
}

std::string render_object(const Json& j, Format f) {
  if (f == Format::json) return j.dump() + "\n";
  std::ostringstream os;
  if (f == Format::csv) {
    bool first = true;
    for (const auto& [key, _] : j.items()) os << (first ? "" : ",") << key, first = false;
    os << '\n';
    first = true;
    for (const auto& [_, value] : j.items()) {
      os << (first ? "" : ",") << (value.is_string() ? value.get<std::string>() : value.dump());
      first = false;
    }
    os << '\n';
    return os.str();
  }
  for (const auto& [key, value] : j.items())
    os << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  return os.str();
}

std::string render_gram(const GramSet& g, Format f) {
  if (f == Format::json) return gram_to_json(g).dump() + "\n";
  std::ostringstream os;
  if (f == Format::pretty) os << "N = " << g.size() << ", rank = " << g.rank() << '\n';
  for (std::size_t r = 0; r < g.size(); ++r) {
    for (std::size_t c = 0; c < g.size(); ++c)
      os << (c ? (f == Format::csv ? "," : "  ") : "") << g.gram()(r, c).str();
    os << '\n';
  }
  return os.str();
}

std::string render_graph(const SrgGraph& g, Format f) {
  if (f == Format::json) return graph_to_json(g.adjacency()).dump() + "\n";
  std::ostringstream os;
  if (f == Format::pretty) os << to_string(g.params()) << '\n';
  else os << "i,j\n";
  for (const auto& [i, j] : g.adjacency().edges()) os << i << (f == Format::csv ? "," : " ") << j << '\n';
  return os.str();
}

struct Outcome {
  std::string text;
  int code = 0;
};

Outcome cmd_srg_check(const Config& cfg, const GraphSource& src, const std::string& params) {
  const Format f = format_of(cfg, Format::json);
  Json out;
  int code = 0;
  if (!params.empty()) {
    const SrgParams p = parse_params(params);
    out["params"] = params_to_json(p);
    try {
      validate_params(p.v, p.k, p.lambda, p.mu);
      out["feasible"] = true;
      out["primitive"] = is_primitive(p);
      out["complement"] = params_to_json(complement_params(p));
      out["spectrum"] = spectrum_json(p);
    } catch (const InvalidParameters& e) {
      out["feasible"] = false;
      out["reason"] = e.what();
      code = 1;
    }
    return {render_object(out, f), code};
  }
  Adjacency adj;
  if (!src.graph_path.empty()) {
    adj = parse_graph_json(read_file(src.graph_path));
  } else {
    adj = load_graph(src).adjacency();
  }
  const SrgCheck check = is_strongly_regular(adj);
  out["v"] = adj.order();
  out["strongly_regular"] = static_cast<bool>(check);
  if (check) {
    out["params"] = params_to_json(*check.params);
    out["primitive"] = is_primitive(*check.params);
    out["spectrum"] = spectrum_json(*check.params);
  } else {
    Json w;
    w["reason"] = check.witness->reason;
    w["i"] = check.witness->i;
    w["j"] = check.witness->j;
    w["expected"] = check.witness->expected;
    w["found"] = check.witness->found;
    out["witness"] = std::move(w);
    code = 1;
  }
  return {render_object(out, f), code};
}

Outcome cmd_srg_gen(const Config& cfg, const GraphSource& src) {
  if (src.family.empty()) throw UsageError("srg gen needs --family");
  return {render_graph(load_graph(src), format_of(cfg, Format::json)), 0};
}

struct EmbedOptions {
  int which = 0;
  std::string weights;
  bool region = false;
  bool simplex = false;
};

Outcome cmd_embed(const Config& cfg, const GraphSource& src, const EmbedOptions& opt) {
  const Format f = format_of(cfg, Format::json);
  const SrgGraph g = load_graph(src);
  const int chosen = (opt.which != 0) + !opt.weights.empty() + opt.region + opt.simplex;
  if (chosen != 1) throw UsageError("embed needs exactly one of --which, --weights, --region, --simplex");
  if (opt.region) {
    const FeasibleRegion r = feasible_region(g);
    Json out;
    out["srg"] = params_to_json(g.params());
    Json cons = Json::array();
    for (const auto& c : r.constraints)
      cons.push_back({c.constant.str(), c.edge_coefficient.str(), c.nonedge_coefficient.str()});
    Json verts = Json::array();
    for (const auto& v : r.vertices) verts.push_back({v.edge.str(), v.nonedge.str()});
    out["constraints"] = std::move(cons);
    out["vertices"] = std::move(verts);
    return {render_object(out, f), 0};
  }
  if (opt.simplex) return {render_gram(simplex_gram(g.order()), f), 0};
  if (opt.which != 0) return {render_gram(dgs_gram(g, opt.which), f), 0};

  std::vector<Scalar> w;
  std::stringstream ss(opt.weights);
  std::string part;
  while (std::getline(ss, part, ',')) w.push_back(Scalar::parse(part));
  if (w.size() != 3) throw UsageError("--weights expects w0,w1,w2");
  return {render_gram(mixed_gram(g, EmbeddingWeights(w[0], w[1], w[2])), f), 0};
}

Outcome cmd_six(const Config& cfg, const GraphSource& src) {
  const SrgGraph g = load_graph(src);
  std::vector<Classification> cs;
  int code = 0;
  for (auto& built : six_frames(g)) {
    if (!built.classification.report.tight || !built.classification.report.flags.empty()) code = 1;
    cs.push_back(std::move(built.classification));
  }
  return {serialize_reports(cs, format_of(cfg, Format::json)), code};
}

Outcome cmd_classify(const Config& cfg, const std::string& path) {
  const Classification c = classify(load_gram(path, cfg));
  const int code = c.tag == FrameTag::not_two_distance_tight ? 1 : 0;
  return {serialize_report(c, format_of(cfg, Format::json)), code};
}

Outcome cmd_verify(const Config& cfg, const std::string& path) {
  const FrameReport r = analyze(load_gram(path, cfg));
  const int code = r.tight && r.flags.empty() ? 0 : 1;
  return {serialize_report(r, format_of(cfg, Format::json)), code};
}

Outcome cmd_table(const Config& cfg) {
  return {serialize_table(reproduce_table(), format_of(cfg, Format::csv)), 0};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-distance tight frames from strongly regular graphs", "tdframe"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--format", cfg.format, "json, csv or pretty");
  app.add_option("--mode", cfg.mode, "exact or float")->envname("TDFRAME_MODE");
  app.add_option("--tol", cfg.tol, "relative tolerance in float mode");
  app.add_option("--out", cfg.out_path, "write output to this file");

  GraphSource src;
  std::string params;
  std::string gram_path;
  EmbedOptions embed;

  auto* srg = app.add_subcommand("srg", "check or generate strongly regular graphs");
  srg->require_subcommand(1);
  srg->fallthrough();
  auto* srg_check = srg->add_subcommand("check", "verify a graph or a parameter set");
  add_graph_options(srg_check, src);
  srg_check->add_option("--params", params, "v,k,lambda,mu");
  auto* srg_gen = srg->add_subcommand("gen", "generate a family member as graph JSON");
  add_graph_options(srg_gen, src);

  auto* emb = app.add_subcommand("embed", "spherical embeddings and the feasible region");
  add_graph_options(emb, src);
  emb->add_option("--which", embed.which, "eigenspace 1 or 2")->check(CLI::IsMember({1, 2}));
  emb->add_option("--weights", embed.weights, "w0,w1,w2 mixing weights");
  emb->add_flag("--region", embed.region, "feasible (a, b) triangle");
  emb->add_flag("--simplex", embed.simplex, "regular simplex on the vertices");

  auto* six = app.add_subcommand("six", "build and verify the six frames of a graph");
  add_graph_options(six, src);

  auto* cls = app.add_subcommand("classify", "classify a Gram matrix");
  cls->add_option("--gram", gram_path, "Gram JSON file")->required();

  auto* table = app.add_subcommand("table", "the twelve two-distance frames of three SRGs");

  auto* verify = app.add_subcommand("verify", "run every frame check on a Gram matrix");
  verify->add_option("--gram", gram_path, "Gram JSON file")->required();

  for (auto* sub : {srg_check, srg_gen, emb, six, cls, table, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Outcome result;
  try {
    mode_of(cfg);
    format_of(cfg, Format::json);
    if (srg_check->parsed()) result = cmd_srg_check(cfg, src, params);
    else if (srg_gen->parsed()) result = cmd_srg_gen(cfg, src);
    else if (emb->parsed()) result = cmd_embed(cfg, src, embed);
    else if (six->parsed()) result = cmd_six(cfg, src);
    else if (cls->parsed()) result = cmd_classify(cfg, gram_path);
    else if (table->parsed()) result = cmd_table(cfg);
    else if (verify->parsed()) result = cmd_verify(cfg, gram_path);
  } catch (const NotPositiveSemidefinite& e) {
    err << "tdframe: " << e.what() << '\n';
    return 1;
  } catch (const CertificateMismatch& e) {
    err << "tdframe: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "tdframe: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "tdframe: malformed input: " << e.what() << '\n';
    return 2;
  }

  if (cfg.out_path.empty()) {
    out << result.text;
  } else {
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) {
      err << "tdframe: cannot write '" << cfg.out_path << "'\n";
      return 2;
    }
    file << result.text;
  }
  return result.code;
}

}  // namespace tdframe::cli
