// Acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tdframe/construct.hpp"
#include "tdframe/error.hpp"
#include "tdframe/serialize.hpp"

using namespace tdframe;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (failures.size() < 5) failures.push_back(what);
    }
  }
};

struct Named {
  std::string name;
  SrgGraph graph;
};

struct Frame {
  std::string source;
  SrgParams params;
  std::size_t index;  // position in six_frames
  GramSet gram;
  Classification built;
};

std::vector<Named> family_graphs() {
  std::vector<Named> out;
  for (int m = 4; m <= 8; ++m) out.push_back({"T(" + std::to_string(m) + ")", generate(Family::triangular, m)});
  for (int m = 2; m <= 6; ++m) out.push_back({"L(" + std::to_string(m) + ")", generate(Family::lattice, m)});
  for (int q : {5, 9, 13, 17}) out.push_back({"P(" + std::to_string(q) + ")", generate(Family::paley, q)});
  out.push_back({"Petersen", generate(Family::petersen)});
  out.push_back({"Clebsch-complement", clebsch_complement()});
  return out;
}

SrgParams advertised(const std::string& name) {
  if (name == "Petersen") return {10, 3, 0, 1};
  if (name == "Clebsch-complement") return {16, 10, 6, 6};
  const int m = std::stoi(name.substr(2));
  if (name[0] == 'T') return {m * (m - 1) / 2, 2 * (m - 2), m - 2, 4};
  if (name[0] == 'L') return {m * m, 2 * (m - 1), m - 2, 2};
  return {m, (m - 1) / 2, (m - 5) / 4, (m - 1) / 4};
}

bool primitive(const SrgParams& p) { return p.mu != 0 && p.mu != p.k; }

std::vector<Frame> all_frames(const std::vector<Named>& graphs, std::vector<std::string>& skipped) {
  std::vector<Frame> out;
  for (const auto& [name, g] : graphs) {
    if (!primitive(g.params())) {
      skipped.push_back(name);
      continue;
    }
    auto built = six_frames(g);
    for (std::size_t i = 0; i < built.size(); ++i)
      out.push_back({name, g.params(), i, built[i].gram, built[i].classification});
  }
  return out;
}

Scalar frame_potential_direct(const Matrix& g) {
  Scalar s;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) s += g(i, j) * g(i, j);
  return s;
}

Scalar ratio(std::size_t num, std::size_t den) {
  return Scalar(Rational(static_cast<long>(num), static_cast<long>(den)));
}

std::string tuple_str(std::size_t n, std::size_t big_n, std::size_t na, const Scalar& a, const Scalar& b) {
  std::ostringstream os;
  os << '(' << n << ',' << big_n << ',' << na << ',' << a << ',' << b << ')';
  return os.str();
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string part;
  while (std::getline(ss, part, sep)) out.push_back(part);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

// 1 ------------------------------------------------------------------------
Outcome table_reproduction() {
  Outcome o;
  struct Row {
    SrgParams srg;
    const char* kind;
    std::size_t n, big_n, na;
    Scalar a, b;
  };
  // As printed; the (9,15,...) entry prints N_a = 8.
  const std::vector<Row> printed = {
      {{10, 6, 3, 4}, "design", 4, 10, 6, Scalar(1, 6), Scalar(-2, 3)},
      {{10, 6, 3, 4}, "design", 5, 10, 3, Scalar(1, 3), Scalar(-1, 3)},
      {{10, 6, 3, 4}, "shifted", 5, 10, 6, Scalar(1, 3), Scalar(-1, 3)},
      {{10, 6, 3, 4}, "shifted", 6, 10, 3, Scalar(4, 9), Scalar(-1, 9)},
      {{15, 8, 4, 4}, "design", 5, 15, 8, Scalar(1, 4), Scalar(-1, 2)},
      {{15, 8, 4, 4}, "design", 9, 15, 8, Scalar(1, 6), Scalar(-1, 4)},
      {{15, 8, 4, 4}, "shifted", 6, 15, 8, Scalar(3, 8), Scalar(-1, 4)},
      {{15, 8, 4, 4}, "shifted", 10, 15, 6, Scalar(1, 4), Scalar(-1, 8)},
      {{16, 10, 6, 6}, "design", 5, 16, 10, Scalar(1, 5), Scalar(-3, 5)},
      {{16, 10, 6, 6}, "design", 10, 16, 5, Scalar(1, 5), Scalar(-1, 5)},
      {{16, 10, 6, 6}, "shifted", 6, 16, 10, Scalar(1, 3), Scalar(-1, 3)},
      {{16, 10, 6, 6}, "shifted", 11, 16, 5, Scalar(3, 11), Scalar(-1, 11)},
  };
  const auto start = std::chrono::steady_clock::now();
  std::string csv;
  FILE* p = ::popen(TDFRAME_BINARY " table", "r");
  if (!p) {
    o.require(false, "cannot run tdframe");
    return o;
  }
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, p)) > 0) csv.append(buf, got);
  const int status = ::pclose(p);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(WIFEXITED(status) && WEXITSTATUS(status) == 0, "tdframe table exit status");
  o.require(secs < 5.0, "runtime " + std::to_string(secs) + " s");

  std::vector<std::string> lines = split(csv, '\n');
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  o.require(!lines.empty() && lines[0] == "srg_v,srg_k,srg_lambda,srg_mu,kind,n,N,N_a,a,b,flags", "header");
  o.require(lines.size() == printed.size() + 1, "row count " + std::to_string(lines.size() - 1));
  std::size_t exact = 0, flagged = 0;
  for (std::size_t i = 0; i + 1 < lines.size() && i < printed.size(); ++i) {
    const auto f = split(lines[i + 1], ',');
    if (f.size() != 11) {
      o.require(false, "malformed row " + lines[i + 1]);
      continue;
    }
    const Row& w = printed[i];
    const bool head = std::stoi(f[0]) == w.srg.v && std::stoi(f[1]) == w.srg.k &&
                      std::stoi(f[2]) == w.srg.lambda && std::stoi(f[3]) == w.srg.mu && f[4] == w.kind &&
                      std::stoul(f[5]) == w.n && std::stoul(f[6]) == w.big_n &&
                      Scalar::parse(f[8]) == w.a && Scalar::parse(f[9]) == w.b &&
                      Scalar::parse(f[8]).is_exact() && Scalar::parse(f[9]).is_exact();
    const std::size_t na = std::stoul(f[7]);
    const bool discrepancy = f[10].find("na-discrepancy:published=8") != std::string::npos;
    if (i == 5) {
      o.require(head && na == 6 && discrepancy, "row (9,15) should be N_a=6 flagged against 8: " + lines[i + 1]);
      flagged += head && na == 6 && discrepancy;
    } else {
      o.require(head && na == w.na && f[10].find("na-discrepancy") == std::string::npos,
                "row " + lines[i + 1] + " vs " + tuple_str(w.n, w.big_n, w.na, w.a, w.b));
      exact += head && na == w.na;
    }
  }
  std::ostringstream d;
  d << exact << "/11 rows exact, (9,15,N_a) emitted as 6 with flag: " << (flagged ? "yes" : "no")
    << ", runtime " << std::fixed;
  d.precision(2);
  d << secs << " s";
  o.detail = d.str();
  return o;
}

// 2 ------------------------------------------------------------------------
Outcome tightness(const std::vector<Frame>& frames, const std::vector<std::string>& skipped) {
  Outcome o;
  for (const auto& f : frames) {
    const Matrix& g = f.gram.gram();
    const std::size_t big_n = f.gram.size(), n = f.gram.rank();
    const std::string id = f.source + " frame " + std::to_string(f.index);
    o.require(f.gram.exact(), id + " not exact");
    o.require(g * g == ratio(big_n, n) * g, id + " G^2 != (N/n) G");
    o.require(frame_potential_direct(g) == ratio(big_n * big_n, n), id + " FP != N^2/n");
  }
  // Perturbations: mix toward I or toward another Gram of the same size.
  std::mt19937_64 rng(2024);
  std::size_t perturbed = 0;
  while (perturbed < 100) {
    const Frame& f = frames[rng() % frames.size()];
    if (f.gram.rank() == f.gram.size()) continue;  // the basis is fixed by mixing with I
    Scalar eps(oracle::from_q(oracle::random_q(rng, 0, 1, 40)));
    if (eps.is_zero() || eps == Scalar(1)) continue;
    Matrix other = Matrix::identity(f.gram.size());
    if (rng() % 2) {
      // a random Gram with the same N built from +-1 sign flips of a different frame
      const Frame& h = frames[rng() % frames.size()];
      if (h.gram.size() == f.gram.size() && &h != &f) {
        other = h.gram.gram();
        for (std::size_t i = 0; i < other.rows(); ++i) {
          if (rng() % 2 == 0) continue;
          for (std::size_t j = 0; j < other.cols(); ++j) {
            if (i == j) continue;
            other(i, j) = -other(i, j);
            other(j, i) = -other(j, i);
          }
        }
      }
    }
    const GramSet p = GramSet::certify((Scalar(1) - eps) * f.gram.gram() + eps * other);
    const Matrix& g = p.gram();
    const bool tight = g * g == ratio(p.size(), p.rank()) * g;
    const bool fp = frame_potential_direct(g) == ratio(p.size() * p.size(), p.rank());
    if (tight) continue;  // the mixture happened to stay tight; draw again
    o.require(!fp, "perturbed " + f.source + " frame " + std::to_string(f.index) + ": FP meets bound but not tight");
    o.require(!check_gram_tight(p).tight && !frame_potential(p).meets_bound, "library disagrees on perturbed Gram");
    ++perturbed;
  }
  std::ostringstream d;
  d << frames.size() << " frames exact-tight with FP = N^2/n; " << perturbed
    << " perturbed Grams fail both; imprimitive skipped:";
  for (const auto& s : skipped) d << ' ' << s;
  o.detail = d.str();
  return o;
}

// 3 ------------------------------------------------------------------------
Outcome design_dichotomy(const std::vector<Frame>& frames) {
  Outcome o;
  std::size_t two_distance = 0;
  for (const auto& f : frames) {
    const std::string id = f.source + " frame " + std::to_string(f.index);
    const auto sums = f.gram.gram().row_sums();
    const Scalar bound = ratio(f.gram.size(), f.gram.rank());
    const bool zero = std::all_of(sums.begin(), sums.end(), [](const Scalar& s) { return s.is_zero(); });
    const bool shifted = std::all_of(sums.begin(), sums.end(), [&](const Scalar& s) { return s == bound; });
    o.require(zero != shifted, id + " row sums not exactly one branch");
    o.require(shifted == (f.index >= 3), id + " wrong branch");
    const auto p = two_distance_profile(f.gram);
    if (const auto* t = std::get_if<TwoDistanceProfile>(&p)) {
      ++two_distance;
      const std::size_t big_n = f.gram.size(), n = f.gram.rank();
      // eq:b, both branches, evaluated here from (a, b, N, n)
      const Scalar nn(static_cast<long>(n)), nm(static_cast<long>(big_n - n)), n1(static_cast<long>(big_n - 1));
      const Scalar design = -nn * (t->a + t->b) - nn * t->a * t->b * n1 - nm;
      const Scalar lifted = nm * (t->a + t->b) - nn * t->a * t->b * n1 - nm;
      o.require((zero ? design : lifted).is_zero(), id + " matching branch equation fails");
      const BranchCheck bc = b_equation_branch(f.gram);
      o.require(bc.equation_holds && (bc.branch == DesignBranch::shifted) == shifted, id + " library branch");
    }
  }
  // (1/3, -1/3) on T(5): both frames satisfy both equations; t decides.
  const SrgGraph t5 = generate(Family::triangular, 5);
  const GramSet d = dgs_gram(t5, 2);
  const GramSet s = shift_lift(dgs_gram(t5, 1));
  const BranchCheck bd = b_equation_branch(d), bs = b_equation_branch(s);
  const FrameReport rd = analyze(d), rs = analyze(s);
  const bool ambiguity = *rd.a == Scalar(1, 3) && *rd.b == Scalar(-1, 3) && *rs.a == Scalar(1, 3) &&
                         *rs.b == Scalar(-1, 3) && bd.branch == DesignBranch::design && bd.t.is_zero() &&
                         bs.branch == DesignBranch::shifted && bs.t == Scalar(2) && rd.n_a == 3u &&
                         rs.n_a == 6u &&
                         design_equation_residual(Scalar(1, 3), Scalar(-1, 3), 10, 5).is_zero() &&
                         shifted_equation_residual(Scalar(1, 3), Scalar(-1, 3), 10, 5).is_zero();
  o.require(ambiguity, "T(5) (1/3,-1/3) ambiguity not resolved by t");
  o.detail = std::to_string(frames.size()) + " frames on exactly one branch, " + std::to_string(two_distance) +
             " two-distance frames satisfy the matching equation; T(5) (1/3,-1/3): design N_a=3 (t=0), "
             "shifted N_a=6 (t=2)";
  return o;
}

// 4 ------------------------------------------------------------------------
std::pair<SrgParams, int> canonical(const SrgParams& p, int j) {
  const SrgParams c = complement_params(p);
  if (p.k > c.k) return {p, j};
  if (c.k > p.k) return {c, 3 - j};
  return {j == 1 ? p : c, 1};
}

Outcome round_trip(const std::vector<Frame>& frames, const std::vector<Named>& graphs) {
  Outcome o;
  const FrameTag constructed[] = {FrameTag::design_s1,  FrameTag::design_s2,  FrameTag::design_simplex,
                                  FrameTag::shifted_s1, FrameTag::shifted_s2, FrameTag::orthonormal_basis};
  std::size_t matched = 0, equiangular = 0;
  for (const auto& f : frames) {
    const std::string id = f.source + " frame " + std::to_string(f.index);
    const Classification c = classify(f.gram);
    const FrameTag want = constructed[f.index];
    if (want == FrameTag::design_simplex || want == FrameTag::orthonormal_basis) {
      o.require(c.tag == want, id + " got " + std::string(to_string(c.tag)));
      matched += c.tag == want;
      continue;
    }
    const int j = (f.index % 3 == 0) ? 1 : 2;
    const auto [params, jj] = canonical(f.params, j);
    FrameTag expect = f.index < 3 ? (jj == 1 ? FrameTag::design_s1 : FrameTag::design_s2)
                                  : (jj == 1 ? FrameTag::shifted_s1 : FrameTag::shifted_s2);
    FrameTag got = c.tag;
    if (c.tag == FrameTag::equiangular_out_of_scope) {
      ++equiangular;
      got = c.embedding.value_or(FrameTag::not_two_distance_tight);
    }
    const bool ok = got == expect && c.srg == params;
    o.require(ok, id + " got " + std::string(to_string(got)) + " of " + (c.srg ? to_string(*c.srg) : "none"));
    matched += ok;
  }
  std::size_t designs = 0;
  for (const auto& [name, g] : graphs) {
    if (!primitive(g.params())) continue;
    for (const GramSet& d : {dgs_gram(g, 1), dgs_gram(g, 2), simplex_gram(g.order())}) {
      o.require(center_and_reduce(shift_lift(d)) == d, name + " reduce(lift) != id");
      ++designs;
    }
  }
  o.require(frames.size() >= 60, "fewer than 60 frames");
  o.detail = std::to_string(matched) + "/" + std::to_string(frames.size()) +
             " frames recover tag and SRG (up to complement; " + std::to_string(equiangular) +
             " equiangular via recorded embedding); reduce(lift) = id on " + std::to_string(designs) +
             " two-designs";
  return o;
}

// 5 ------------------------------------------------------------------------
Outcome oracle_equivalence(const std::vector<Frame>& frames, const std::vector<Named>& graphs) {
  Outcome o;
  std::size_t certificates = 0;
  for (const auto& f : frames) {
    const auto p = two_distance_profile(f.gram);
    const auto* t = std::get_if<TwoDistanceProfile>(&p);
    if (!t) continue;
    const std::string id = f.source + " frame " + std::to_string(f.index);
    auto [on_a, on_b] = oracle::common_counts(f.gram.gram(), t->a);
    o.require(on_a.size() == 1 && on_b.size() == 1, id + " counts not constant");
    if (on_a.size() != 1 || on_b.size() != 1 || !t->n_a) continue;
    const Scalar ca = common_neighbors_a(t->a, t->b, f.gram.size(), f.gram.rank(), *t->n_a);
    const Scalar cb = common_neighbors_b(t->a, t->b, f.gram.size(), f.gram.rank(), *t->n_a);
    o.require(ca == Scalar(*on_a.begin()) && cb == Scalar(*on_b.begin()),
              id + " closed form (" + ca.str() + "," + cb.str() + ") vs brute force");
    if (t->a != -t->b) {
      const auto cert = common_neighbor_certificate(f.gram);
      o.require(cert.c_a == *on_a.begin() && cert.c_b == *on_b.begin(), id + " certificate");
    }
    ++certificates;
  }
  std::size_t graphs_checked = 0, spectra = 0;
  for (const auto& [name, g] : graphs) {
    const SrgParams want = advertised(name);
    const SrgCheck check = is_strongly_regular(g.adjacency());
    const auto counted = oracle::srg_params(g.adjacency());
    o.require(check && *check.params == want && counted &&
                  (*counted == std::array<int, 4>{want.v, want.k, want.lambda, want.mu}),
              name + " brute force != advertised");
    ++graphs_checked;
    const SpectralData s = spectrum_of(want);
    const auto spec = oracle::spectrum(oracle::adjacency(g.adjacency()));
    std::vector<std::pair<double, int>> expect;
    for (auto [val, mult] : {std::pair{s.r2.to_double(), s.n2}, std::pair{s.r1.to_double(), s.n1},
                             std::pair{s.k.to_double(), 1}})
      if (mult > 0) expect.emplace_back(val, mult);
    bool same = spec.size() == expect.size();
    for (std::size_t i = 0; same && i < spec.size(); ++i)
      same = std::abs(spec[i].first - expect[i].first) < 1e-9 && spec[i].second == expect[i].second;
    o.require(same, name + " spectrum");
    spectra += same;
  }
  o.detail = std::to_string(certificates) + " two-distance frames: brute-force C_a, C_b = closed forms; " +
             std::to_string(graphs_checked) + " graphs match advertised parameters; " + std::to_string(spectra) +
             " spectra within 1e-9 of Eigen";
  return o;
}

// 6 ------------------------------------------------------------------------
Outcome feasible_region_exactness(const std::vector<Named>& graphs) {
  Outcome o;
  std::mt19937_64 rng(6);
  std::size_t points = 0, inside_total = 0, graphs_checked = 0;
  for (const auto& [name, g] : graphs) {
    if (!primitive(g.params())) continue;
    ++graphs_checked;
    const FeasibleRegion r = feasible_region(g);
    const InnerProductPair v1 = dgs_inner_products(g.params(), 1), v2 = dgs_inner_products(g.params(), 2);
    o.require(r.vertices[0] == InnerProductPair{1, 1} && r.vertices[1] == v1 && r.vertices[2] == v2,
              name + " vertices");
    // sample the bounding box of the triangle, widened a little
    double lo_a = 1, hi_a = 1, lo_b = 1, hi_b = 1;
    for (const auto& v : r.vertices) {
      lo_a = std::min(lo_a, v.edge.to_double());
      hi_a = std::max(hi_a, v.edge.to_double());
      lo_b = std::min(lo_b, v.nonedge.to_double());
      hi_b = std::max(hi_b, v.nonedge.to_double());
    }
    std::uniform_int_distribution<long> den(1, 60);
    auto sample = [&](double lo, double hi) {
      const long d = den(rng);
      std::uniform_int_distribution<long> num(static_cast<long>(std::floor((lo - 0.1) * d)),
                                              static_cast<long>(std::ceil((hi + 0.1) * d)));
      return Scalar(num(rng), d);
    };
    const Eigen::MatrixXd a1 = oracle::adjacency(g.adjacency());
    const Eigen::MatrixXd a2 = Eigen::MatrixXd::Ones(a1.rows(), a1.cols()) -
                               Eigen::MatrixXd::Identity(a1.rows(), a1.cols()) - a1;
    for (int it = 0; it < 200; ++it) {
      const Scalar a = sample(lo_a, hi_a), b = sample(lo_b, hi_b);
      const bool inside = r.contains(a, b);
      const bool psd = is_psd(two_value_matrix(g, a, b)).psd;
      o.require(inside == psd, name + " (" + a.str() + "," + b.str() + ")");
      const double lo = oracle::eigenvalues(Eigen::MatrixXd::Identity(a1.rows(), a1.cols()) +
                                            a.to_double() * a1 + b.to_double() * a2)
                            .minCoeff();
      if (std::abs(lo) > 1e-9) o.require((lo > 0) == psd, name + " Eigen disagrees");
      inside_total += inside;
      ++points;
    }
  }
  o.detail = std::to_string(graphs_checked) + " primitive SRGs x 200 points (" + std::to_string(inside_total) +
             " inside): exact PSD = triangle membership; vertices (1,1), (a1,b1), (a2,b2) exact";
  return o;
}

// 7 ------------------------------------------------------------------------
Outcome lrs_conformance(const std::vector<Frame>& frames) {
  Outcome o;
  std::size_t applicable = 0;
  std::vector<std::string> above_bound;
  for (const auto& f : frames) {
    const auto p = two_distance_profile(f.gram);
    const auto* t = std::get_if<TwoDistanceProfile>(&p);
    const std::size_t big_n = f.gram.size(), n = f.gram.rank();
    if (!t || big_n <= 2 * n + 1) continue;
    ++applicable;
    const std::string id = f.source + " frame " + std::to_string(f.index);
    int found = 0;
    for (int k = 2; k <= static_cast<int>(big_n); ++k) {
      if ((Scalar(k) * t->a - Scalar(1)) / Scalar(k - 1) == t->b) {
        found = k;
        break;
      }
    }
    o.require(found >= 2, id + " has no integer k");
    const int k_max = static_cast<int>(std::floor((1 + std::sqrt(2.0 * static_cast<double>(n))) / 2));
    if (found > k_max) {
      above_bound.push_back(tuple_str(n, big_n, t->n_a.value_or(0), t->a, t->b) + " k=" + std::to_string(found) +
                            " > floor((1+sqrt(2n))/2)=" + std::to_string(k_max));
    }
    const LrsCheck lib = lrs_check(f.gram);
    o.require(lib.k == found && lib.k_max == k_max, id + " library LRS disagrees");
  }
  const auto t5 = lrs_check(Scalar(1, 6), Scalar(-2, 3), 10, 4);
  const auto cc = lrs_check(Scalar(1, 5), Scalar(-3, 5), 16, 5);
  o.require(t5.k == 2 && cc.k == 2, "k=2 examples");
  std::ostringstream d;
  d << applicable << " frames with N > 2n+1 admit integer k; k=2 for (4,10,1/6,-2/3) and (5,16,1/5,-3/5)";
  if (!above_bound.empty()) {
    d << "; note: the stated upper bound is below 2 at n=4, so the required k=2 exceeds it for";
    std::sort(above_bound.begin(), above_bound.end());
    above_bound.erase(std::unique(above_bound.begin(), above_bound.end()), above_bound.end());
    for (const auto& s : above_bound) d << ' ' << s;
  }
  o.detail = d.str();
  return o;
}

// 8 ------------------------------------------------------------------------
Outcome counterexample() {
  Outcome o;
  Matrix m = johnson_simplex_frame(7).gram();
  for (std::size_t j = 1; j < m.rows(); ++j) {
    m(0, j) = -m(0, j);
    m(j, 0) = -m(j, 0);
  }
  const GramSet g = GramSet::certify(m);
  const Scalar third(1, 3);
  o.require(g.size() == 28 && g.rank() == 7, "size/rank");
  o.require(m * m == ratio(28, 7) * m, "not tight");
  o.require(frame_potential_direct(m) == ratio(28 * 28, 7), "FP");
  std::vector<std::size_t> minus(28, 0);
  bool two_valued = true;
  for (std::size_t i = 0; i < 28; ++i)
    for (std::size_t j = 0; j < 28; ++j) {
      if (i == j) continue;
      if (m(i, j) == -third) ++minus[i];
      else two_valued = two_valued && m(i, j) == third;
    }
  o.require(two_valued, "not two-valued +-1/3");
  o.require(minus[0] == 12, "first row has " + std::to_string(minus[0]) + " entries -1/3");
  bool others_differ = true;
  for (std::size_t i = 1; i < 28; ++i) others_differ = others_differ && minus[i] != 12;
  o.require(others_differ, "another row also has 12");
  const FrameReport r = analyze(g);
  o.require(r.tight && r.equiangular && !r.n_a, "library report");
  std::set<std::size_t> counts(minus.begin() + 1, minus.end());
  std::ostringstream d;
  d << "{-x1, x2..x28}: tight (G^2 = 4G, FP = 112), inner products +-1/3, row 1 has 12 entries -1/3, other rows have";
  for (auto c : counts) d << ' ' << c;
  d << "; not row-regular";
  o.detail = d.str();
  return o;
}

// 9 ------------------------------------------------------------------------
Outcome johnson_identity() {
  Outcome o;
  for (int n = 3; n <= 12; ++n) {
    const GramSet j = johnson_simplex_frame(n);
    o.require(j.gram() == dgs_gram(generate(Family::triangular, n + 1), 1).gram(),
              "n=" + std::to_string(n) + " differs from the triangular embedding");
    const Eigen::MatrixXd ref = oracle::johnson_gram(n);
    o.require((oracle::to_eigen(j.gram()) - ref).cwiseAbs().maxCoeff() < 1e-12,
              "n=" + std::to_string(n) + " differs from float construction");
    const auto p = two_distance_profile(j);
    const auto* t = std::get_if<TwoDistanceProfile>(&p);
    o.require(t != nullptr, "n=" + std::to_string(n) + " not two-distance");
    if (t && n == 7) o.require(t->a == Scalar(1, 3) && t->b == Scalar(-1, 3), "n=7 not +-1/3");
    if (t) o.require((t->a == -t->b) == (n == 7), "n=" + std::to_string(n) + " equiangular mismatch");
  }
  o.detail = "n = 3..12 entrywise equal to the E1 embedding of T(n+1); n = 7 equiangular with a = 1/3, b = -1/3";
  return o;
}

}  // namespace

int main() {
  const auto graphs = family_graphs();
  std::vector<std::string> skipped;
  std::vector<Frame> frames;
  try {
    frames = all_frames(graphs, skipped);
  } catch (const std::exception& e) {
    std::cout << "setup FAIL: " << e.what() << '\n';
    return 1;
  }

  const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
      {1, [] { return table_reproduction(); }},
      {2, [&] { return tightness(frames, skipped); }},
      {3, [&] { return design_dichotomy(frames); }},
      {4, [&] { return round_trip(frames, graphs); }},
      {5, [&] { return oracle_equivalence(frames, graphs); }},
      {6, [&] { return feasible_region_exactness(graphs); }},
      {7, [&] { return lrs_conformance(frames); }},
      {8, [] { return counterexample(); }},
      {9, [] { return johnson_identity(); }},
  };
  int failed = 0;
  for (const auto& [id, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail;
    for (const auto& f : o.failures) std::cout << "\n    " << f;
    std::cout << std::endl;
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
