// Command-line frontend: exact computations on the differential geometry of
// a symmetric-group conjugacy class, with JSON output and a result cache.
#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ncforms/braided_hopf.hpp"
#include "ncforms/derham.hpp"
#include "ncforms/expr.hpp"
#include "ncforms/flat_moduli.hpp"
#include "ncforms/geometry.hpp"

using json = nlohmann::ordered_json;
using namespace ncf;

namespace {

constexpr int kSchemaVersion = 1;

struct Options {
  int n = 3;
  std::string cls = "2";
  bool signed_ = false;
  bool woronowicz = false;
  int maxDegree = -1;
  int degree = 0;
  bool heavy = false;
  bool jsonOut = false;
  bool decompose = false;
  bool e3 = false;
  bool s3 = false;
  std::string cacheDir;
  int threads = 1;
  unsigned seed = 0;
  int samples = 5;
  std::string aStr = "(12)";
  std::string element;
  std::string suite = "core";
};

json jmatrix(const QMatrix& M) {
  json rows = json::array();
  for (int i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < M.cols(); ++j) row.push_back(rat_to_string(M(i, j)));
    rows.push_back(row);
  }
  return rows;
}

GradedAlgebra make_algebra(const Options& o) {
  auto cm = CrossedModule::build(o.n, CycleType::parse(o.cls, o.n), o.signed_);
  return GradedAlgebra(std::move(cm),
                       o.woronowicz ? Flavor::Woronowicz : Flavor::Quadratic,
                       o.signed_ ? AlgSign::FominKirillov : AlgSign::Exterior,
                       o.heavy);
}

std::string flavor_name(const Options& o) {
  return o.woronowicz ? "woronowicz" : "quadratic";
}

// "(12)(34)" with single-digit points, or "(1,10)" comma-separated.
Perm parse_perm(int N, const std::string& s) {
  std::vector<std::vector<int>> cycles;
  std::string body;
  bool open = false;
  auto flushCycle = [&] {
    std::vector<int> cycle;
    if (body.find(',') != std::string::npos) {
      std::istringstream ss(body);
      std::string tok;
      while (std::getline(ss, tok, ',')) cycle.push_back(std::stoi(tok));
    } else {
      for (char ch : body) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
          throw std::invalid_argument("bad permutation string: " + s);
        cycle.push_back(ch - '0');
      }
    }
    if (cycle.size() > 1) cycles.push_back(cycle);
    body.clear();
  };
  for (char ch : s) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '(') {
      if (open) throw std::invalid_argument("bad permutation string: " + s);
      open = true;
    } else if (ch == ')') {
      if (!open) throw std::invalid_argument("bad permutation string: " + s);
      flushCycle();
      open = false;
    } else if (open) {
      body += ch;
    } else {
      throw std::invalid_argument("bad permutation string: " + s);
    }
  }
  if (open) throw std::invalid_argument("bad permutation string: " + s);
  return Perm::from_cycles(N, cycles);
}

std::string tensor_string(const GradedAlgebra& alg, const TensorVec& v) {
  std::string out;
  for (const auto& [w, c] : v.terms()) {
    std::string coef = rat_to_string(c);
    if (!out.empty()) out += c >= 0 ? " + " : " - ";
    else if (c < 0) out += "-";
    Rat abs = c >= 0 ? c : Rat(-c);
    if (abs != 1) out += rat_to_string(abs) + "*";
    out += alg.word_string(w);
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// report assembly

struct Report {
  json doc;
  bool ok = true;

  Report(const std::string& command, const Options& o) {
    doc["schema"] = kSchemaVersion;
    doc["command"] = command;
    doc["config"] = {{"n", o.n},         {"class", o.cls},
                     {"signed", o.signed_}, {"flavor", flavor_name(o)},
                     {"max_degree", o.maxDegree}, {"heavy", o.heavy},
                     {"seed", o.seed},    {"samples", o.samples},
                     {"threads", o.threads}};
    doc["results"] = json::object();
    // fixed so identical (argv, seed) runs render byte-identically
    doc["timings"] = nullptr;
  }

  void assertion(const std::string& name, bool pass) {
    doc["results"]["assertions"].push_back({{"name", name}, {"pass", pass}});
    ok = ok && pass;
  }

  int finish(const Options& o) {
    doc["ok"] = ok;
    if (o.jsonOut) {
      std::cout << doc.dump(2) << "\n";
    } else if (doc["results"].contains("assertions")) {
      for (const auto& a : doc["results"]["assertions"])
        std::cout << (a["pass"].get<bool>() ? "ok   " : "FAIL ")
                  << a["name"].get<std::string>() << "\n";
      std::cout << (ok ? "all assertions passed" : "ASSERTIONS FAILED") << "\n";
    }
    return ok ? 0 : 1;
  }
};

// ---------------------------------------------------------------------------
// cache

std::string cache_dir(const Options& o) {
  if (!o.cacheDir.empty()) return o.cacheDir;
  if (const char* env = std::getenv("NCFORMS_CACHE")) return env;
  return "";
}

std::string cache_path(const Options& o, const std::string& cmd) {
  std::ostringstream name;
  name << cache_dir(o) << "/ncforms-v" << kSchemaVersion << "-" << cmd << "-n"
       << o.n << "-c" << o.cls << (o.signed_ ? "-signed" : "-unsigned") << "-"
       << flavor_name(o) << "-d" << o.maxDegree << ".json";
  return name.str();
}

bool cache_load(const Options& o, const std::string& cmd, json& results) {
  if (cache_dir(o).empty()) return false;
  std::ifstream in(cache_path(o, cmd));
  if (!in) return false;
  json doc = json::parse(in, nullptr, false);
  if (doc.is_discarded() || doc.value("schema", -1) != kSchemaVersion) return false;
  results = doc["results"];
  return true;
}

void cache_store(const Options& o, const std::string& cmd, const json& results) {
  if (cache_dir(o).empty()) return;
  json doc = {{"schema", kSchemaVersion}, {"results", results}};
  std::ofstream out(cache_path(o, cmd));
  out << doc.dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// subcommands

int cmd_relations(const Options& o) {
  Report rep("relations", o);
  json res;
  if (!cache_load(o, "relations", res)) {
    GradedAlgebra alg = make_algebra(o);
    res["dimension"] = static_cast<int>(alg.relation_space().size());
    json rels = json::array();
    for (const TensorVec& r : alg.relation_space()) {
      json terms = json::array();
      for (const auto& [w, c] : r.terms())
        terms.push_back({{"word", alg.word_string(w)}, {"coeff", rat_to_string(c)}});
      rels.push_back(terms);
    }
    res["relations"] = std::move(rels);
    cache_store(o, "relations", res);
  }
  rep.doc["results"] = res;
  if (!o.jsonOut) {
    std::cout << "degree-2 relation space dimension: " << res["dimension"] << "\n";
    for (const auto& r : res["relations"]) {
      std::string line;
      for (const auto& t : r) {
        if (!line.empty()) line += " + ";
        line += t["coeff"].get<std::string>() + "*" + t["word"].get<std::string>();
      }
      std::cout << "  " << line << " = 0\n";
    }
  }
  return rep.finish(o);
}

int cmd_hilbert(const Options& o) {
  Report rep("hilbert", o);
  json res;
  if (!cache_load(o, "hilbert", res)) {
    GradedAlgebra alg = make_algebra(o);
    auto hs = alg.hilbert_series(o.maxDegree);
    json dims = json::array();
    for (const Int& d : hs.dims) dims.push_back(d.get_str());
    res["dims"] = dims;
    if (hs.closed_form) {
      json cf = json::array();
      for (const Int& d : *hs.closed_form) cf.push_back(d.get_str());
      res["closed_form"] = cf;
      res["closed_form_match"] = hs.dims == *hs.closed_form;
    }
    cache_store(o, "hilbert", res);
  }
  rep.doc["results"] = res;
  if (res.contains("closed_form_match"))
    rep.ok = res["closed_form_match"].get<bool>();
  if (!o.jsonOut) {
    std::cout << "graded dimensions:";
    for (const auto& d : res["dims"]) std::cout << " " << d.get<std::string>();
    std::cout << "\n";
    if (res.contains("closed_form_match"))
      std::cout << "closed form "
                << (rep.ok ? "matches" : "DOES NOT match") << "\n";
  }
  return rep.finish(o);
}

int cmd_cohomology(const Options& o) {
  Report rep("cohomology", o);
  GradedAlgebra alg = make_algebra(o);
  DeRham dr(&alg, o.heavy);
  auto coh = dr.cohomology(o.degree, true);
  json res;
  res["degree"] = o.degree;
  res["dim"] = coh.dim;
  json reps = json::array();
  for (const OmegaElement& w : coh.representatives) {
    json terms = json::array();
    for (const auto& [key, c] : w.coords())
      terms.push_back({{"g", dr.group()[key.first].cycle_string()},
                       {"word", alg.basis_word_string(w.degree(), key.second)},
                       {"coeff", rat_to_string(c)}});
    reps.push_back(terms);
  }
  res["representatives"] = std::move(reps);
  rep.doc["results"] = res;
  if (!o.jsonOut)
    std::cout << "dim H^" << o.degree << " = " << coh.dim << "\n";
  return rep.finish(o);
}

int cmd_flat(const Options& o) {
  Report rep("flat", o);
  FlatModuli fm(CrossedModule::build(o.n, CycleType::parse(o.cls, o.n), false));
  json strata = json::array();
  for (const auto& s : fm.enumerate()) {
    json entry;
    entry["cardinality"] = s.cardinality;
    entry["count"] = static_cast<int>(s.sets.size());
    json sets = json::array();
    for (ClassSubset X : s.sets) {
      json members = json::array();
      for (int b = 0; b < fm.cm().size(); ++b)
        if (X >> b & 1) members.push_back(fm.cm().element(b).cycle_string());
      sets.push_back(members);
      if (!fm.verify_flat(fm.indicator(X))) rep.ok = false;
    }
    entry["sets"] = std::move(sets);
    if (o.decompose && s.cardinality > 0) {
      StratumModule m = fm.stratum_module(s);
      entry["module_dim"] = m.dimension;
      entry["quotiented_by_theta"] = m.quotientedByTheta;
      json chi = json::array();
      for (const Rat& v : m.character) chi.push_back(rat_to_string(v));
      entry["character"] = chi;
      entry["label"] = m.label;
    }
    strata.push_back(std::move(entry));
  }
  rep.doc["results"]["strata"] = std::move(strata);
  if (!o.jsonOut) {
    for (const auto& s : rep.doc["results"]["strata"]) {
      std::cout << "F_" << s["cardinality"] << ": " << s["count"] << " set(s)";
      if (s.contains("label")) std::cout << "  -> " << s["label"].get<std::string>();
      std::cout << "\n";
    }
    std::cout << "all enumerated connections flat: " << (rep.ok ? "yes" : "NO") << "\n";
  }
  return rep.finish(o);
}

int cmd_killing(const Options& o) {
  Report rep("killing", o);
  auto cm = CrossedModule::build(o.n, CycleType::parse(o.cls, o.n), false);
  Metric eta = killing_form(cm);
  rep.doc["results"]["eta"] = jmatrix(eta.eta);
  rep.doc["results"]["provenance"] = eta.provenance;
  if (!o.jsonOut) {
    for (int i = 0; i < eta.eta.rows(); ++i) {
      for (int j = 0; j < eta.eta.cols(); ++j)
        std::cout << (j ? " " : "") << rat_to_string(eta.eta(i, j));
      std::cout << "\n";
    }
  }
  return rep.finish(o);
}

int cmd_metric_det(const Options& o) {
  Report rep("metric-det", o);
  MetricDetReport r = general_metric_det_check(o.n, o.samples, o.seed);
  rep.doc["results"] = {{"n", r.N},
                        {"samples", r.samples},
                        {"agreements", r.agreements},
                        {"ok", r.ok}};
  rep.ok = r.ok;
  if (!o.jsonOut)
    std::cout << "determinant factorization: " << r.agreements << "/"
              << r.samples << " random points agree\n";
  return rep.finish(o);
}

int cmd_fourier(const Options& o) {
  Report rep("fourier", o);
  if (!o.e3) throw CLI::ValidationError("fourier", "requires --e3");
  auto cm = CrossedModule::build(3, CycleType::parse("2", 3), true);
  GradedAlgebra alg(std::move(cm), Flavor::Quadratic, AlgSign::FominKirillov);
  alg.build_degree(4);
  BraidedGroup bg(&alg);
  FourierE3 fourier(&bg);
  json table = json::array();
  for (int d = 0; d <= 4; ++d)
    for (int i = 0; i < alg.dim(d); ++i) {
      AlgElement x = alg.element(d, i);
      table.push_back({{"input", x.to_string()},
                       {"transform", fourier.transform(x).to_string()}});
    }
  rep.doc["results"]["table"] = table;
  json ranks = json::array();
  for (int d = 0; d <= 4; ++d) ranks.push_back(rank(bg.gram(d)));
  rep.doc["results"]["gram_ranks"] = ranks;
  rep.doc["results"]["top"] = fourier.top().to_string();
  if (!o.jsonOut)
    for (const auto& row : table)
      std::cout << "S(" << row["input"].get<std::string>()
                << ") = " << row["transform"].get<std::string>() << "\n";
  return rep.finish(o);
}

int cmd_hodge(const Options& o) {
  Report rep("hodge", o);
  if (!o.s3) throw CLI::ValidationError("hodge", "requires --s3");
  HodgeStarS3 h;
  json degrees = json::array();
  for (int m = 0; m <= 4; ++m)
    degrees.push_back({{"degree", m},
                       {"star", jmatrix(h.star_matrix(m))},
                       {"rank", h.star_rank(m)},
                       {"star_square_scalar", rat_to_string(h.star_square_scalar(m))}});
  rep.doc["results"]["degrees"] = degrees;
  rep.doc["results"]["top"] = h.top().to_string();
  if (!o.jsonOut)
    for (const auto& d : degrees)
      std::cout << "degree " << d["degree"] << ": rank " << d["rank"]
                << ", *^2 = " << d["star_square_scalar"].get<std::string>()
                << " * id\n";
  return rep.finish(o);
}

int cmd_derive(const Options& o) {
  Report rep("derive", o);
  auto cm = CrossedModule::build(o.n, CycleType::parse("2", o.n), true);
  GradedAlgebra alg(std::move(cm), Flavor::Quadratic, AlgSign::FominKirillov,
                    o.heavy);
  BraidedGroup bg(&alg);
  int a = alg.cm().index_of(parse_perm(o.n, o.aStr));
  AlgElement f = parse_element(alg, o.element);
  AlgElement left = bg.braided_derivative(a, f, false);
  AlgElement right = bg.braided_derivative(a, f, true);
  rep.doc["results"] = {{"a", alg.cm().element(a).cycle_string()},
                        {"element", f.to_string()},
                        {"D", left.to_string()},
                        {"Dbar", right.to_string()}};
  if (!o.jsonOut) {
    std::cout << "f        = " << f.to_string() << "\n";
    std::cout << "D_a f    = " << left.to_string() << "\n";
    std::cout << "Dbar_a f = " << right.to_string() << "\n";
  }
  return rep.finish(o);
}

// ---------------------------------------------------------------------------
// property suites

void suite_core(Report& rep, const Options& o) {
  auto mkext = [](int N, const char* cls, bool heavy = false) {
    return GradedAlgebra(CrossedModule::build(N, CycleType::parse(cls, N), false),
                         Flavor::Quadratic, AlgSign::Exterior, heavy);
  };

  {
    auto hs = mkext(3, "2").hilbert_series(-1);
    std::vector<Int> want = {1, 3, 4, 3, 1};
    rep.assertion("3-point exterior dims 1,3,4,3,1", hs.dims == want);
    rep.assertion("3-point Hilbert closed form",
                  hs.closed_form && *hs.closed_form == hs.dims);
    auto h4 = mkext(4, "2").hilbert_series(3);
    rep.assertion("4-point exterior dims 1,6,19,42",
                  h4.dims == std::vector<Int>{1, 6, 19, 42});
  }
  {
    bool all = true;
    for (int N = 3; N <= 6; ++N) {
      GradedAlgebra alg = mkext(N, "2");
      alg.build_degree(2);
      all = all && Int(alg.dim(2)) == Int(N) * (N - 1) * (N - 2) * (3 * N + 7) / 24;
    }
    rep.assertion("degree-2 dimension closed form, N=3..6", all);
  }
  {
    bool all = true;
    for (auto [N, cls] : std::vector<std::pair<int, const char*>>{
             {3, "2"}, {4, "2"}, {3, "3"}}) {
      auto cm = CrossedModule::build(N, CycleType::parse(cls, N), false);
      GradedAlgebra quad(cm, Flavor::Quadratic, AlgSign::Exterior);
      GradedAlgebra wor(cm, Flavor::Woronowicz, AlgSign::Exterior);
      quad.build_degree(3);
      wor.build_degree(3);
      for (int d = 0; d <= 3; ++d) all = all && quad.dim(d) == wor.dim(d);
    }
    rep.assertion("quadratic and antisymmetrizer quotients agree to degree 3", all);
  }
  {
    GradedAlgebra alg = mkext(3, "2");
    DeRham dr(&alg);
    std::vector<int> dims;
    for (int k = 0; k <= 4; ++k) dims.push_back(dr.cohomology(k).dim);
    rep.assertion("3-point cohomology profile 1,1,0,1,1",
                  dims == std::vector<int>{1, 1, 0, 1, 1});
    GradedAlgebra alg4 = mkext(4, "2");
    DeRham dr4(&alg4);
    rep.assertion("4-point H^0 = H^1 = 1",
                  dr4.cohomology(0).dim == 1 && dr4.cohomology(1).dim == 1);
    bool d2 = true;
    for (int g = 0; g < dr.group_size(); ++g)
      for (int d = 0; d <= 2; ++d)
        for (int i = 0; i < alg.dim(d); ++i)
          d2 = d2 && dr.d(dr.d(dr.delta(g, d, i))).is_zero();
    rep.assertion("d^2 = 0 on the 3-point complex", d2);
  }
  {
    FlatModuli fm(CrossedModule::build(4, CycleType::parse("2", 4), false));
    std::map<int, int> sizes;
    for (const auto& s : fm.enumerate())
      sizes[s.cardinality] = static_cast<int>(s.sets.size());
    rep.assertion("4-point 2-cycle strata 1,6,3,4,1",
                  sizes == std::map<int, int>{{0, 1}, {1, 6}, {2, 3}, {3, 4}, {6, 1}});
    bool flat = true;
    for (const auto& s : fm.enumerate())
      for (ClassSubset X : s.sets) flat = flat && fm.verify_flat(fm.indicator(X));
    rep.assertion("every enumerated indicator connection is flat", flat);
    bool sub = true;
    for (int N : {4, 5, 6})
      sub = sub && static_cast<int>(FlatModuli::submaximal_2cycles(N).size()) == N;
    rep.assertion("submaximal strata are the point-complement family", sub);
  }
  {
    bool all = true;
    for (int N = 3; N <= 8; ++N) {
      auto cm = CrossedModule::build(N, CycleType::parse("2", N), false);
      Metric k = killing_form(cm);
      auto choose2 = [](int m) { return m < 2 ? 0 : m * (m - 1) / 2; };
      for (int a = 0; a < cm.size(); ++a)
        for (int b = 0; b < cm.size(); ++b) {
          auto ca = cm.element(a).cycles()[0], cb = cm.element(b).cycles()[0];
          int shared = 0;
          for (int p : ca)
            for (int q : cb) shared += p == q;
          int want = shared == 2   ? choose2(N)
                     : shared == 0 ? choose2(N - 4) + 2
                                   : choose2(N - 3);
          all = all && k.eta(a, b) == Rat(want);
        }
    }
    rep.assertion("Killing entries match the three binomial counts, N=3..8", all);
    bool det = true;
    for (int N = 2; N <= 6; ++N)
      det = det && general_metric_det_check(N, o.samples, o.seed + N).ok;
    rep.assertion("metric determinant factorization on random points", det);
    bool inv = true;
    for (int N = 3; N <= 12; ++N) inv = inv && killing_invertibility(N);
    rep.assertion("Killing form invertible, N=3..12", inv);
    rep.assertion("rack identities on the 4-point classes",
                  rack_checks(CrossedModule::build(4, CycleType::parse("2", 4), false)).ok &&
                      rack_checks(CrossedModule::build(4, CycleType::parse("3", 4), false)).ok);
  }
  {
    auto cm = CrossedModule::build(3, CycleType::parse("2", 3), true);
    GradedAlgebra alg(std::move(cm), Flavor::Quadratic, AlgSign::FominKirillov);
    alg.build_degree(4);
    int total = 0;
    for (int d = 0; d <= 4; ++d) total += alg.dim(d);
    rep.assertion("signed 3-point algebra has total dimension 12", total == 12);
    BraidedGroup bg(&alg);
    bool nondeg = true;
    for (int d = 0; d <= 4; ++d) nondeg = nondeg && rank(bg.gram(d)) == alg.dim(d);
    rep.assertion("factorial pairing nondegenerate in every degree", nondeg);
    FourierE3 fourier(&bg);
    bool s3cube = true;
    for (int i = 0; i < alg.dim(2); ++i) {
      AlgElement x = alg.element(2, i);
      s3cube = s3cube &&
               fourier.transform(fourier.transform(fourier.transform(x))) == x;
    }
    rep.assertion("Fourier transform cubes to the identity in degree 2", s3cube);
  }
}

void suite_tables(Report& rep, const Options&) {
  auto dims_of = [](int N, const char* cls, int maxDeg) {
    GradedAlgebra alg(CrossedModule::build(N, CycleType::parse(cls, N), false),
                      Flavor::Quadratic, AlgSign::Exterior);
    return alg.hilbert_series(maxDeg).dims;
  };
  rep.assertion("dimension table: N=2 -> 1,1",
                dims_of(2, "2", 1) == std::vector<Int>{1, 1});
  rep.assertion("dimension table: N=3 -> 1,3,4,3,1",
                dims_of(3, "2", 4) == std::vector<Int>{1, 3, 4, 3, 1});
  rep.assertion("dimension table: N=4 -> 1,6,19,42",
                dims_of(4, "2", 3) == std::vector<Int>{1, 6, 19, 42});
  rep.assertion("dimension table: N=5 -> 1,10,55,220",
                dims_of(5, "2", 3) == std::vector<Int>{1, 10, 55, 220});

  auto sizes = [](int N, const char* cls) {
    FlatModuli fm(CrossedModule::build(N, CycleType::parse(cls, N), false));
    std::map<int, int> out;
    for (const auto& s : fm.enumerate())
      out[s.cardinality] = static_cast<int>(s.sets.size());
    return out;
  };
  using M = std::map<int, int>;
  rep.assertion("flat strata: 3-point 2-cycles",
                sizes(3, "2") == M{{0, 1}, {1, 3}, {3, 1}});
  rep.assertion("flat strata: 3-point 3-cycles",
                sizes(3, "3") == M{{0, 1}, {1, 2}, {2, 1}});
  rep.assertion("flat strata: 4-point 2-cycles",
                sizes(4, "2") == M{{0, 1}, {1, 6}, {2, 3}, {3, 4}, {6, 1}});
  rep.assertion("flat strata: 4-point double transpositions",
                sizes(4, "2+2") == M{{0, 1}, {1, 3}, {2, 3}, {3, 1}});
  rep.assertion("flat strata: 4-point 3-cycles",
                sizes(4, "3") == M{{0, 1}, {1, 8}, {2, 4}, {4, 2}, {8, 1}});
  rep.assertion("flat strata: 4-point 4-cycles",
                sizes(4, "4") == M{{0, 1}, {1, 6}, {2, 3}, {6, 1}});
  rep.assertion("flat strata: 5-point 2-cycles",
                sizes(5, "2") == M{{0, 1}, {1, 10}, {2, 15}, {3, 10}, {4, 10}, {6, 5}, {10, 1}});

  auto label = [](int N, const char* cls, int card) {
    FlatModuli fm(CrossedModule::build(N, CycleType::parse(cls, N), false));
    for (const auto& s : fm.enumerate())
      if (s.cardinality == card) return fm.stratum_module(s).label;
    return std::string("missing");
  };
  rep.assertion("stratum label: 3-point 2-cycle singletons -> fund",
                label(3, "2", 1) == "fund");
  rep.assertion("stratum label: 3-point 3-cycle singletons -> sign",
                label(3, "3", 1) == "sign");
  rep.assertion("stratum label: 4-point 2-cycle triangles -> fund",
                label(4, "2", 3) == "fund");
  rep.assertion("stratum label: 4-point 2-cycle pairs -> 2",
                label(4, "2", 2) == "2");
  rep.assertion("stratum label: 4-point 3-cycle tetrahedra -> sign",
                label(4, "3", 4) == "sign");
  rep.assertion("stratum label: 5-point 2-cycle submaximal -> fund",
                label(5, "2", 6) == "fund");
  rep.assertion("stratum label: 5-point 3+2 pairs -> fund+5",
                label(5, "3+2", 2) == "fund+5");
}

void suite_heavy(Report& rep, const Options&) {
  {
    GradedAlgebra alg(CrossedModule::build(4, CycleType::parse("2", 4), false),
                      Flavor::Quadratic, AlgSign::Exterior, true);
    alg.build_degree(4);
    rep.assertion("4-point exterior degree 4 has dimension 71", alg.dim(4) == 71);
  }
  {
    GradedAlgebra alg(CrossedModule::build(5, CycleType::parse("2", 5), false),
                      Flavor::Quadratic, AlgSign::Exterior, true);
    alg.build_degree(4);
    rep.assertion("5-point exterior degree 4 has dimension 711", alg.dim(4) == 711);
  }
  {
    GradedAlgebra alg(CrossedModule::build(5, CycleType::parse("2", 5), false),
                      Flavor::Quadratic, AlgSign::Exterior, true);
    DeRham dr(&alg, true);
    rep.assertion("5-point H^1 = 1", dr.cohomology(1).dim == 1);
  }
}

int cmd_check(const Options& o) {
  Report rep("check", o);
  rep.doc["config"]["suite"] = o.suite;
  if (o.suite == "core")
    suite_core(rep, o);
  else if (o.suite == "tables")
    suite_tables(rep, o);
  else if (o.suite == "heavy")
    suite_heavy(rep, o);
  else
    throw CLI::ValidationError("check", "unknown suite: " + o.suite);
  return rep.finish(o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact differential geometry on symmetric-group conjugacy classes"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool withClass = true) {
    sub->add_option("--n", o.n, "number of points");
    if (withClass) sub->add_option("--class", o.cls, "cycle type, e.g. 2, 2+2, 3");
    sub->add_flag("--json", o.jsonOut, "JSON report output");
    sub->add_option("--cache-dir", o.cacheDir, "result cache directory");
    sub->add_option("--threads", o.threads, "worker threads (deterministic)");
    sub->add_option("--seed", o.seed, "seed for randomized checks");
    sub->add_flag("--heavy", o.heavy, "unlock larger degree/size limits");
  };

  CLI::App* rel = app.add_subcommand("relations", "degree-2 relation space");
  add_common(rel);
  rel->add_flag("--signed", o.signed_, "signed braiding");
  rel->add_flag("--woronowicz", o.woronowicz, "antisymmetrizer-kernel quotient");

  CLI::App* hil = app.add_subcommand("hilbert", "graded dimensions");
  add_common(hil);
  hil->add_flag("--signed", o.signed_, "signed braiding");
  hil->add_flag("--woronowicz", o.woronowicz, "antisymmetrizer-kernel quotient");
  hil->add_option("--max-degree", o.maxDegree, "top degree (-1: run to zero)");

  CLI::App* coh = app.add_subcommand("cohomology", "de Rham cohomology");
  add_common(coh);
  coh->add_option("--degree", o.degree, "cohomology degree");

  CLI::App* flat = app.add_subcommand("flat", "flat {0,1} connection moduli");
  add_common(flat);
  flat->add_flag("--decompose", o.decompose, "character decomposition per stratum");

  CLI::App* kil = app.add_subcommand("killing", "braided Killing form");
  add_common(kil);

  CLI::App* met = app.add_subcommand("metric-det", "metric determinant identity");
  add_common(met, false);
  met->add_option("--samples", o.samples, "random evaluation points");

  CLI::App* fou = app.add_subcommand("fourier", "braided Fourier transform");
  add_common(fou, false);
  fou->add_flag("--e3", o.e3, "the 12-dimensional 3-point algebra");

  CLI::App* hod = app.add_subcommand("hodge", "Hodge star");
  add_common(hod, false);
  hod->add_flag("--s3", o.s3, "the 3-point exterior algebra");

  CLI::App* der = app.add_subcommand("derive", "braided partial derivatives");
  add_common(der, false);
  der->add_option("--a", o.aStr, "transposition, e.g. \"(12)\"");
  der->add_option("--element", o.element, "element expression, e.g. \"[12][23] - 2[13][12]\"")
      ->required();

  CLI::App* chk = app.add_subcommand("check", "property suites");
  add_common(chk, false);
  chk->add_option("--suite", o.suite, "core | tables | heavy");
  chk->add_option("--samples", o.samples, "random evaluation points");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (rel->parsed()) return cmd_relations(o);
    if (hil->parsed()) return cmd_hilbert(o);
    if (coh->parsed()) return cmd_cohomology(o);
    if (flat->parsed()) return cmd_flat(o);
    if (kil->parsed()) return cmd_killing(o);
    if (met->parsed()) return cmd_metric_det(o);
    if (fou->parsed()) return cmd_fourier(o);
    if (hod->parsed()) return cmd_hodge(o);
    if (der->parsed()) return cmd_derive(o);
    if (chk->parsed()) return cmd_check(o);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::string msg = e.what();
    if (msg.find("exceeds cap") != std::string::npos) {
      std::cerr << "resource cap: " << msg << "\n";
      return 3;
    }
    std::cerr << "error: " << msg << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
