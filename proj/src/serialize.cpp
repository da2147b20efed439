#include "tdframe/serialize.hpp"

#include <algorithm>
#include <sstream>

#include "tdframe/error.hpp"

namespace tdframe {
namespace {

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

template <typename Fn>
auto guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("unexpected JSON shape: ") + e.what());
  }
}

Json opt_scalar(const std::optional<Scalar>& s) { return s ? Json(s->str()) : Json(nullptr); }

std::optional<Scalar> scalar_opt(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return Scalar::parse(j.get<std::string>());
}

template <typename T>
Json opt_value(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <typename T>
std::optional<T> value_opt(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

DesignKind design_from_string(const std::string& s) {
  for (auto d : {DesignKind::two_design, DesignKind::shifted_two_design, DesignKind::neither})
    if (to_string(d) == s) return d;
  throw ParseError("unknown design kind '" + s + "'");
}

FrameTag tag_from(const std::string& s) {
  auto t = frame_tag_from_string(s);
  if (!t) throw ParseError("unknown frame tag '" + s + "'");
  return *t;
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string or_empty(const std::optional<Scalar>& s) { return s ? s->str() : ""; }

template <typename T>
std::string or_empty(const std::optional<T>& v) {
  return v ? std::to_string(*v) : "";
}

constexpr std::string_view kReportCsvHeader =
    "N,n,tight,A,fp,a,b,N_a,t,design,lrs_k,equiangular,srg_v,srg_k,srg_lambda,srg_mu,flags";

std::string report_csv_fields(const FrameReport& r) {
  std::ostringstream os;
  os << r.big_n << ',' << r.n << ',' << (r.tight ? "true" : "false") << ',' << r.frame_bound.str()
     << ',' << r.fp.str() << ',' << or_empty(r.a) << ',' << or_empty(r.b) << ','
     << or_empty(r.n_a) << ',' << or_empty(r.t) << ',' << to_string(r.design) << ','
     << or_empty(r.lrs_k) << ',' << (r.equiangular ? "true" : "false") << ',';
  if (r.srg) {
    os << r.srg->v << ',' << r.srg->k << ',' << r.srg->lambda << ',' << r.srg->mu;
  } else {
    os << ",,,";
  }
  os << ',' << join(r.flags, ';');
  return os.str();
}

void report_pretty(std::ostream& os, const FrameReport& r, const std::string& indent) {
  auto line = [&](std::string_view key, const std::string& value) {
    os << indent << key << ": " << value << '\n';
  };
  line("N", std::to_string(r.big_n));
  line("n", std::to_string(r.n));
  line("tight", r.tight ? "yes" : "no");
  line("frame bound A", r.frame_bound.str());
  line("frame potential", r.fp.str() + (r.fp_meets_bound ? " (= N^2/n)" : " (> N^2/n)"));
  if (r.a) line("a", r.a->str());
  if (r.b) line("b", r.b->str());
  if (r.n_a) line("N_a", std::to_string(*r.n_a));
  if (r.t) line("row sum t", r.t->str());
  line("design", std::string(to_string(r.design)));
  if (r.lrs_k) line("LRS k", std::to_string(*r.lrs_k));
  if (r.equiangular) line("equiangular", "yes");
  if (r.srg) line("graph", to_string(*r.srg));
  if (!r.flags.empty()) line("flags", join(r.flags, ' '));
}

}  // namespace

std::optional<Format> format_from_string(std::string_view name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "pretty") return Format::pretty;
  return std::nullopt;
}

Adjacency parse_graph_json(std::string_view text) {
  const Json j = parse_json(text);
  return guarded([&] {
    const long v = j.at("v").get<long>();
    if (v < 1) throw ParseError("graph needs v >= 1");
    Adjacency a(static_cast<std::size_t>(v));
    for (const auto& e : j.at("edges")) {
      if (e.size() != 2) throw ParseError("edge must be a pair");
      const long x = e[0].get<long>();
      const long y = e[1].get<long>();
      if (x < 0 || y < 0 || x >= v || y >= v || x == y) {
        throw ParseError("bad edge [" + std::to_string(x) + "," + std::to_string(y) + "]");
      }
      a.connect(static_cast<std::size_t>(x), static_cast<std::size_t>(y));
    }
    return a;
  });
}

Json graph_to_json(const Adjacency& a) {
  Json edges = Json::array();
  for (const auto& [i, j] : a.edges()) edges.push_back({i, j});
  Json out;
  out["v"] = a.order();
  out["edges"] = std::move(edges);
  return out;
}

GramSet parse_gram_json(std::string_view text, std::optional<double> tolerance) {
  const Json j = parse_json(text);
  auto [m, stated] = guarded([&] {
    const auto& rows = j.at("entries");
    const std::size_t n = rows.size();
    if (j.contains("N") && j.at("N").get<std::size_t>() != n)
      throw ParseError("\"N\" disagrees with the number of rows");
    Matrix m(n, n);
    const double tol = tolerance.value_or(kDefaultTolerance);
    for (std::size_t r = 0; r < n; ++r) {
      if (rows[r].size() != n) throw DimensionMismatch("Gram row " + std::to_string(r) + " has wrong length");
      for (std::size_t c = 0; c < n; ++c) {
        const auto& cell = rows[r][c];
        m(r, c) = cell.is_string() ? Scalar::parse(cell.get<std::string>(), tol)
                  : cell.is_number_integer() ? Scalar(cell.get<long>())
                                             : Scalar::floating(cell.get<double>(), tol);
      }
    }
    std::optional<std::size_t> stated;
    if (j.contains("n_rank") && !j.at("n_rank").is_null()) stated = j.at("n_rank").get<std::size_t>();
    return std::pair{std::move(m), stated};
  });
  GramSet g = GramSet::certify(std::move(m), tolerance);
  if (stated && *stated != g.rank()) {
    throw CertificateMismatch("stated n_rank " + std::to_string(*stated) + " but certified rank is " +
                              std::to_string(g.rank()));
  }
  return g;
}

Json gram_to_json(const GramSet& g) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < g.size(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < g.size(); ++c) row.push_back(g.gram()(r, c).str());
    rows.push_back(std::move(row));
  }
  Json out;
  out["n_rank"] = g.rank();
  out["N"] = g.size();
  out["entries"] = std::move(rows);
  return out;
}

Json params_to_json(const SrgParams& p) {
  Json out;
  out["v"] = p.v;
  out["k"] = p.k;
  out["lambda"] = p.lambda;
  out["mu"] = p.mu;
  return out;
}

SrgParams params_from_json(const Json& j) {
  return guarded([&] {
    return SrgParams{j.at("v").get<int>(), j.at("k").get<int>(), j.at("lambda").get<int>(),
                     j.at("mu").get<int>()};
  });
}

Json report_to_json(const FrameReport& r) {
  Json out;
  out["N"] = r.big_n;
  out["n"] = r.n;
  out["tight"] = r.tight;
  out["A"] = r.frame_bound.str();
  out["fp"] = r.fp.str();
  out["fp_meets_bound"] = r.fp_meets_bound;
  out["a"] = opt_scalar(r.a);
  out["b"] = opt_scalar(r.b);
  out["N_a"] = opt_value(r.n_a);
  out["t"] = opt_scalar(r.t);
  out["design"] = std::string(to_string(r.design));
  out["lrs_k"] = opt_value(r.lrs_k);
  out["equiangular"] = r.equiangular;
  out["srg"] = r.srg ? params_to_json(*r.srg) : Json(nullptr);
  out["flags"] = r.flags;
  return out;
}

FrameReport report_from_json(const Json& j) {
  return guarded([&] {
    FrameReport r;
    r.big_n = j.at("N").get<std::size_t>();
    r.n = j.at("n").get<std::size_t>();
    r.tight = j.at("tight").get<bool>();
    r.frame_bound = Scalar::parse(j.at("A").get<std::string>());
    r.fp = Scalar::parse(j.at("fp").get<std::string>());
    r.fp_meets_bound = j.value("fp_meets_bound", false);
    r.a = scalar_opt(j.at("a"));
    r.b = scalar_opt(j.at("b"));
    r.n_a = value_opt<std::size_t>(j.at("N_a"));
    r.t = scalar_opt(j.at("t"));
    r.design = design_from_string(j.at("design").get<std::string>());
    r.lrs_k = value_opt<int>(j.at("lrs_k"));
    r.equiangular = j.at("equiangular").get<bool>();
    if (!j.at("srg").is_null()) r.srg = params_from_json(j.at("srg"));
    r.flags = j.value("flags", std::vector<std::string>{});
    return r;
  });
}

Json classification_to_json(const Classification& c) {
  Json out;
  out["tag"] = std::string(to_string(c.tag));
  out["srg"] = c.srg ? params_to_json(*c.srg) : Json(nullptr);
  out["embedding"] = c.embedding ? Json(std::string(to_string(*c.embedding))) : Json(nullptr);
  out["report"] = report_to_json(c.report);
  return out;
}

Classification classification_from_json(const Json& j) {
  return guarded([&] {
    Classification c;
    c.tag = tag_from(j.at("tag").get<std::string>());
    if (!j.at("srg").is_null()) c.srg = params_from_json(j.at("srg"));
    if (!j.at("embedding").is_null()) c.embedding = tag_from(j.at("embedding").get<std::string>());
    c.report = report_from_json(j.at("report"));
    return c;
  });
}

std::string serialize_report(const FrameReport& r, Format f) {
  switch (f) {
    case Format::json: return report_to_json(r).dump() + "\n";
    case Format::csv: return std::string(kReportCsvHeader) + "\n" + report_csv_fields(r) + "\n";
    case Format::pretty: {
      std::ostringstream os;
      report_pretty(os, r, "");
      return os.str();
    }
  }
  return {};
}

std::string serialize_report(const Classification& c, Format f) { return serialize_reports({c}, f); }

std::string serialize_reports(const std::vector<Classification>& cs, Format f) {
  std::ostringstream os;
  switch (f) {
    case Format::json:
      if (cs.size() == 1) {
        os << classification_to_json(cs.front()).dump() << '\n';
      } else {
        Json arr = Json::array();
        for (const auto& c : cs) arr.push_back(classification_to_json(c));
        os << arr.dump() << '\n';
      }
      break;
    case Format::csv:
      os << "tag,embedding," << kReportCsvHeader << '\n';
      for (const auto& c : cs) {
        os << to_string(c.tag) << ',' << (c.embedding ? to_string(*c.embedding) : "") << ','
           << report_csv_fields(c.report) << '\n';
      }
      break;
    case Format::pretty:
      for (std::size_t i = 0; i < cs.size(); ++i) {
        const auto& c = cs[i];
        if (i) os << '\n';
        os << to_string(c.tag);
        if (c.srg) os << " of " << to_string(*c.srg);
        if (c.embedding && *c.embedding != c.tag) os << " (embedding " << to_string(*c.embedding) << ")";
        os << '\n';
        report_pretty(os, c.report, "  ");
      }
      break;
  }
  return os.str();
}

FrameReport parse_report(std::string_view json_text) { return report_from_json(parse_json(json_text)); }

Classification parse_classification(std::string_view json_text) {
  return classification_from_json(parse_json(json_text));
}

std::string table_to_csv(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "srg_v,srg_k,srg_lambda,srg_mu,kind,n,N,N_a,a,b,flags\n";
  for (const auto& r : rows) {
    os << r.srg.v << ',' << r.srg.k << ',' << r.srg.lambda << ',' << r.srg.mu << ','
       << (r.kind == DesignBranch::design ? "design" : "shifted") << ',' << r.n << ',' << r.big_n
       << ',' << r.n_a << ',' << r.a.str() << ',' << r.b.str() << ',' << join(r.flags, ';') << '\n';
  }
  return os.str();
}

std::string serialize_table(const std::vector<TableRow>& rows, Format f) {
  switch (f) {
    case Format::csv: return table_to_csv(rows);
    case Format::json: {
      Json arr = Json::array();
      for (const auto& r : rows) {
        Json o;
        o["srg"] = params_to_json(r.srg);
        o["kind"] = r.kind == DesignBranch::design ? "design" : "shifted";
        o["n"] = r.n;
        o["N"] = r.big_n;
        o["N_a"] = r.n_a;
        o["a"] = r.a.str();
        o["b"] = r.b.str();
        o["flags"] = r.flags;
        arr.push_back(std::move(o));
      }
      return arr.dump() + "\n";
    }
    case Format::pretty: {
      std::ostringstream os;
      for (const auto& r : rows) {
        os << to_string(r.srg) << "  " << (r.kind == DesignBranch::design ? "design " : "shifted")
           << "  FUNTF(" << r.n << ',' << r.big_n << ',' << r.n_a << ',' << r.a.str() << ','
           << r.b.str() << ')';
        if (!r.flags.empty()) os << "  [" << join(r.flags, ' ') << ']';
        os << '\n';
      }
      return os.str();
    }
  }
  return {};
}

}  // namespace tdframe
