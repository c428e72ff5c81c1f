// Command-line front end for the cell-module engine.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>

#include "cellcat/braid.hpp"
#include "cellcat/cellgraph.hpp"
#include "cellcat/decat.hpp"
#include "cellcat/error.hpp"
#include "cellcat/hecke.hpp"
#include "cellcat/parallel.hpp"
#include "cellcat/perverse.hpp"
#include "cellcat/recovery.hpp"
#include "cellcat/zigzag.hpp"

using namespace cellcat;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kBudget = 3, kNoAnchor = 4 };

struct RunConfig {
  std::string system_path;
  std::string type = "A2";
  std::string base;
  int radius = 0;  // 0: CellGraph default for finite systems, 12 for infinite ones
  std::string word;
  std::uint64_t seed = 1;
  int samples = 300;
  int max_len = 10;
  std::string format = "table";
  bool trace = false;
  bool force_base = false;
  bool override_base = false;
  std::size_t cap = CoxeterSystem::kDefaultElementCap;
  // subcommand specific
  int m = 8, k = 3, steps = -1;
  std::string vertex, x, y;
  int n = 5, i = 0;
};

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BudgetExceeded:
    case ErrorKind::WavefrontOutOfRadius: return kBudget;
    case ErrorKind::NoAnchorFound: return kNoAnchor;
    case ErrorKind::InconsistentDifferential:
    case ErrorKind::ZigzagTruncationViolated:
    case ErrorKind::NotMinimal:
    case ErrorKind::EmptyComplex: return kFail;
    default: return kUsage;
  }
}

struct Session {
  std::unique_ptr<CoxeterSystem> sys;
  std::unique_ptr<CellGraph> graph;
  std::unique_ptr<Hecke> hecke;
};

CoxeterMatrix load_matrix(const RunConfig& cfg) {
  if (cfg.system_path.empty()) return CoxeterMatrix::named(cfg.type);
  std::ifstream in(cfg.system_path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + cfg.system_path);
  std::stringstream ss;
  ss << in.rdbuf();
  return CoxeterMatrix::from_json(ss.str());
}

bool is_finite_guess(const CoxeterMatrix& cm) {
  // graphs stop on their own in finite type; infinite entries or cycles need a radius
  for (int a = 0; a < cm.rank(); ++a)
    for (int b = 0; b < cm.rank(); ++b)
      if (a != b && cm.m(a, b) == CoxeterMatrix::kInfinity) return false;
  return cm.generators.size() > 0;
}

Session open(const RunConfig& cfg, bool with_graph) {
  Session s;
  s.sys = std::make_unique<CoxeterSystem>(load_matrix(cfg), cfg.cap);
  s.hecke = std::make_unique<Hecke>(*s.sys);
  if (with_graph) {
    Gen base = cfg.base.empty() ? CellGraph::default_base(s.sys->matrix()) : s.sys->matrix().index_of(cfg.base);
    int radius = cfg.radius;
    if (radius == 0) radius = is_finite_guess(s.sys->matrix()) && cfg.type.rfind("~", 0) != 0 ? CellGraph::kDefaultRadius : 12;
    s.graph = std::make_unique<CellGraph>(CellGraph::build(*s.sys, base, radius, cfg.force_base));
    s.graph->set_override(cfg.override_base);
  }
  return s;
}

json nf_json(const CoxeterSystem& sys, const NormalForm& nf) {
  json f = json::array();
  for (CoxElt w : nf.factors) f.push_back(sys.format(w));
  return f;
}

int cmd_nf(const RunConfig& cfg) {
  Session s = open(cfg, false);
  NormalForm nf = normal_form(*s.sys, parse_positive_word(*s.sys, cfg.word));
  if (cfg.format == "text")
    std::cout << json{{"normal_form", nf_json(*s.sys, nf)}}.dump() << "\n";
  else
    std::cout << format_normal_form(*s.sys, nf) << "\n";
  return kOk;
}

std::string vertex_set(const CellGraph& g, const std::set<int>& vs) {
  std::string out = "{";
  bool first = true;
  for (int v : vs) {
    if (!first) out += ", ";
    first = false;
    out += g.label(v);
  }
  return out + "}";
}

int cmd_recover(const RunConfig& cfg) {
  Session s = open(cfg, true);
  PositiveWord w = parse_positive_word(*s.sys, cfg.word);
  Recovery r = recover(*s.graph, w);
  const CoxeterSystem& sys = *s.sys;
  if (cfg.format == "text") {
    json j{{"normal_form", nf_json(sys, r.nf)}};
    if (cfg.trace) {
      j["trace"] = json::array();
      for (const auto& st : r.trace) {
        std::vector<std::string> a;
        for (int v : st.anchors) a.push_back(s.graph->label(v));
        j["trace"].push_back({{"top", st.top}, {"anchors", a}, {"letter", sys.name(st.letter)}, {"factor_closed", st.factor_closed}});
      }
    }
    std::cout << j.dump() << "\n";
  } else {
    if (cfg.trace) {
      int step = 0;
      for (const auto& st : r.trace)
        std::cout << "step " << ++step << ": k=" << st.top << " anchors=" << vertex_set(*s.graph, st.anchors)
                  << " apply E_" << sys.name(st.letter) << (st.factor_closed ? " -> factor closed" : "") << "\n";
    }
    std::cout << format_normal_form(sys, r.nf) << "\n";
  }
  return kOk;
}

void render_frame(const ZComplex& c, int l, bool dihedral, bool text, json& frames) {
  const CellGraph& g = c.graph();
  auto name = [&](int v) {
    return dihedral ? "[" + std::to_string(g.system().length(g.vertex(v))) + "]" : g.label(v);
  };
  if (text) {
    json objs = json::array(), arrows = json::array();
    for (const ZObject& o : c.objects()) objs.push_back({{"vertex", name(o.vertex)}, {"shift", o.shift}, {"degree", o.degree}});
    for (int i = 0; i < c.size(); ++i)
      for (const auto& [j, sc] : c.out(i))
        arrows.push_back({{"from", name(c.object(i).vertex)}, {"to", name(c.object(j).vertex)},
                          {"kind", to_string(c.entry(i, j).kind)}, {"scale", sc.get_str()}});
    frames.push_back({{"l", l}, {"objects", objs}, {"arrows", arrows}});
    return;
  }
  std::cout << "l=" << l << "\n";
  std::map<std::pair<int, int>, std::vector<std::string>> cols;  // (degree, shift) -> names
  for (const ZObject& o : c.objects()) cols[{o.degree, o.shift}].push_back(name(o.vertex));
  for (const auto& [key, names] : cols) {
    std::cout << "  degree " << key.first << ", shift " << key.second << ":";
    for (const auto& nm : names) std::cout << " " << nm;
    std::cout << "\n";
  }
  for (int i = 0; i < c.size(); ++i)
    for (const auto& [j, sc] : c.out(i))
      std::cout << "  " << name(c.object(i).vertex) << " -> " << name(c.object(j).vertex) << " (" << to_string(c.entry(i, j).kind)
                << " * " << sc.get_str() << ")\n";
  auto length = [&](int v) { return std::to_string(g.system().length(g.vertex(v))); };
  std::istringstream grid(dihedral ? PerverseTable(c).ascii(length) : PerverseTable(c).ascii());
  for (std::string line; std::getline(grid, line);) std::cout << "  | " << line << "\n";
}

int cmd_wave(RunConfig cfg, bool dihedral) {
  const bool text = cfg.format == "text";
  json frames = json::array();
  if (dihedral) {
    cfg.system_path.clear();
    cfg.type = "I2:" + std::to_string(cfg.m);
    cfg.base.clear();
    Session s = open(cfg, true);
    const int steps = cfg.steps < 0 ? cfg.m - 1 : cfg.steps;
    for (int l = 0; l <= steps; ++l) render_frame(dihedral_wave(*s.graph, cfg.k, l), l, true, text, frames);
  } else {
    Session s = open(cfg, true);
    const int v = s.graph->index_of(s.sys->canonicalize(s.sys->parse_word(cfg.vertex)));
    PositiveWord w = parse_positive_word(*s.sys, cfg.word);
    ZComplex c = unit_complex(*s.graph, v);
    render_frame(c, 0, false, text, frames);
    for (int l = 1; l <= static_cast<int>(w.size()); ++l) {
      c = minimize(tensor_F(w[w.size() - l], c));
      render_frame(c, l, false, text, frames);
    }
  }
  if (text) std::cout << json{{"frames", frames}}.dump() << "\n";
  return kOk;
}

CoxElt element(Session& s, const std::string& text) { return s.sys->canonicalize(s.sys->parse_word(text)); }

int cmd_kl(const RunConfig& cfg) {
  Session s = open(cfg, false);
  CoxElt w = element(s, cfg.x);
  if (!cfg.y.empty()) {
    std::cout << s.hecke->h(element(s, cfg.y), w) << "\n";
    return kOk;
  }
  HeckeElt c = s.hecke->kl_basis(w);
  json j = json::object();
  for (const auto& [y, p] : c.terms()) {
    if (cfg.format == "text")
      j[s.sys->format(y).empty() ? "e" : s.sys->format(y)] = p.to_string();
    else
      std::cout << "h(" << (s.sys->format(y).empty() ? "e" : s.sys->format(y)) << ") = " << p << "\n";
  }
  if (cfg.format == "text") std::cout << j.dump() << "\n";
  return kOk;
}

int cmd_hom(const RunConfig& cfg) {
  Session s = open(cfg, false);
  std::cout << s.hecke->hom_rank(element(s, cfg.x), element(s, cfg.y)) << "\n";
  return kOk;
}

void print_matrix(const std::string& title, const LaurentMatrix& m) {
  std::cout << title << "\n";
  std::size_t width = 1;
  for (const auto& row : m)
    for (const auto& e : row) width = std::max(width, e.to_string().size());
  for (const auto& row : m) {
    std::cout << " ";
    for (const auto& e : row) {
      std::string t = e.to_string();
      std::cout << " " << std::string(width - t.size(), ' ') << t;
    }
    std::cout << "\n";
  }
}

int cmd_burau(const RunConfig& cfg) {
  std::vector<int> which;
  if (cfg.i > 0)
    which.push_back(cfg.i);
  else
    for (int i = 1; i < cfg.n; ++i) which.push_back(i);
  json out = json::array();
  for (int i : which) {
    BurauMatrices b = burau_matrix(cfg.n, i);
    if (cfg.format == "text") {
      auto conv = [](const LaurentMatrix& m) {
        json rows = json::array();
        for (const auto& row : m) {
          json r = json::array();
          for (const auto& e : row) r.push_back(e.to_string());
          rows.push_back(r);
        }
        return rows;
      };
      json scaling = json::array();
      for (const auto& d : b.scaling) scaling.push_back(d.to_string());
      out.push_back({{"i", i}, {"twisted", conv(b.twisted)}, {"raw", conv(b.raw)}, {"scaling", scaling}});
    } else {
      print_matrix("sigma_" + std::to_string(i) + " (twisted basis)", b.twisted);
      print_matrix("sigma_" + std::to_string(i) + " (basis [B_[j]])", b.raw);
      std::cout << "  scaling:";
      for (const auto& d : b.scaling) std::cout << " " << d;
      std::cout << "\n";
    }
  }
  if (cfg.format == "text") std::cout << out.dump() << "\n";
  return kOk;
}

SignedWord random_signed(std::mt19937_64& rng, int rank, int max_len, bool positive) {
  std::uniform_int_distribution<int> len(0, max_len), gen(0, rank - 1), coin(0, 1);
  SignedWord w(len(rng));
  for (auto& l : w) l = {gen(rng), positive || coin(rng) ? 1 : -1};
  return w;
}

int cmd_decat(const RunConfig& cfg) {
  Session s = open(cfg, true);
  std::vector<SignedWord> words;
  if (!cfg.word.empty()) {
    words.push_back(parse_signed_word(*s.sys, cfg.word));
  } else {
    std::mt19937_64 rng(cfg.seed);
    for (int i = 0; i < cfg.samples; ++i) words.push_back(random_signed(rng, s.sys->rank(), cfg.max_len, false));
  }
  int pass = 0;
  for (const auto& w : words) {
    if (verify_decat(*s.graph, *s.hecke, w)) {
      ++pass;
    } else {
      std::cout << "mismatch: " << format_signed_word(*s.sys, w) << "\n";
    }
  }
  std::cout << "decat-check: " << pass << "/" << words.size() << " PASS\n";
  return pass == static_cast<int>(words.size()) ? kOk : kFail;
}

int cmd_fuzz(const RunConfig& cfg) {
  Session s = open(cfg, true);
  CoxeterSystem& sys = *s.sys;
  std::mt19937_64 rng(cfg.seed);
  std::vector<PositiveWord> words;
  for (int i = 0; i < cfg.samples; ++i) {
    PositiveWord w;
    for (const auto& l : random_signed(rng, sys.rank(), cfg.max_len, true)) w.push_back(l.gen);
    words.push_back(std::move(w));
  }
  std::vector<std::string> failure(words.size());
  std::vector<int> budget(words.size(), 0);
  for_each_index(static_cast<int>(words.size()), Exec::Parallel, [&](int i) {
    const PositiveWord& w = words[i];
    try {
      NormalForm nf = normal_form(sys, w);
      if (oracle_normal_form(sys, w) != nf) {
        failure[i] = "oracle disagrees";
        return;
      }
      GarsideReport rep = check_garside_against(*s.graph, w, nf);
      if (!rep.pass) {
        failure[i] = rep.detail;
        return;
      }
      if (recover_from(sys, act_positive(*s.graph, w, Exec::Serial), Exec::Serial).nf != nf) {
        failure[i] = "recovered normal form differs";
        return;
      }
      SignedWord sw;
      for (Gen g : w) sw.push_back({g, 1});
      if (!verify_decat(*s.graph, *s.hecke, sw)) failure[i] = "decategorification differs";
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::BudgetExceeded || e.kind() == ErrorKind::WavefrontOutOfRadius)
        budget[i] = 1;
      else if (e.kind() == ErrorKind::BadBaseChoice)
        throw;
      else
        failure[i] = e.what();
    }
  });
  int pass = 0, fail = 0, over = 0;
  int first = -1;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (budget[i]) {
      ++over;
    } else if (failure[i].empty()) {
      ++pass;
    } else {
      ++fail;
      if (first < 0) first = static_cast<int>(i);
    }
  }
  const int run = pass + fail;
  if (cfg.format == "text") {
    json j{{"pass", pass}, {"fail", fail}, {"budget", over}, {"samples", words.size()}, {"seed", cfg.seed}};
    if (first >= 0) j["first_failure"] = {{"word", sys.format_word(words[first])}, {"reason", failure[first]}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "fuzz: " << pass << "/" << run << " PASS";
    if (over) std::cout << ", " << over << " over budget";
    std::cout << "\n";
    if (first >= 0) std::cout << "first failure: \"" << sys.format_word(words[first]) << "\": " << failure[first] << "\n";
  }
  return fail ? kFail : over ? kBudget : kOk;
}

int cmd_graph(const RunConfig& cfg) {
  Session s = open(cfg, true);
  std::cout << s.graph->to_json() << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Categorified cell modules, Rouquier complexes and Garside normal forms"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--system", cfg.system_path, "Coxeter system file (JSON)");
    sub->add_option("--type", cfg.type, "Built-in system: A<n>, B<n>, D<n>, H3, H4, F4, I2:<m>, ~A<n>");
    sub->add_option("--format", cfg.format, "table | text")->check(CLI::IsMember({"table", "text"}));
    sub->add_option("--cap", cfg.cap, "Element table cap");
  };
  auto graph_opts = [&](CLI::App* sub) {
    sub->add_option("--base", cfg.base, "Base generator s of the cell");
    sub->add_option("--radius", cfg.radius, "Length bound for the cell graph");
    sub->add_flag("--force-base", cfg.force_base, "Allow a base violating the m >= 4 rule");
    sub->add_flag("--override", cfg.override_base, "Run categorical operations on a forced base");
  };

  auto* nf = app.add_subcommand("nf", "Garside normal form of a positive word");
  common(nf);
  nf->add_option("--word", cfg.word, "Positive word");

  auto* rec = app.add_subcommand("recover", "Recover the normal form from the categorical action");
  common(rec);
  graph_opts(rec);
  rec->add_option("--word", cfg.word, "Positive word");
  rec->add_flag("--trace", cfg.trace, "Print every step");

  auto* wave = app.add_subcommand("wave", "Minimal complexes step by step");
  common(wave);
  graph_opts(wave);
  wave->add_option("--m", cfg.m, "Dihedral order");
  wave->add_option("--k", cfg.k, "Start at vertex [k]");
  wave->add_option("--steps", cfg.steps, "Number of letters (default m-1)");
  auto* vertex_opt = wave->add_option("--vertex", cfg.vertex, "Start vertex (canonical word) for a general system");
  wave->add_option("--word", cfg.word, "Letters to apply, last letter first");

  auto* kl = app.add_subcommand("kl", "Kazhdan-Lusztig polynomials h_{y,w}");
  common(kl);
  kl->add_option("--w", cfg.x, "Element w")->required();
  kl->add_option("--y", cfg.y, "Element y (omit for all y <= w)");

  auto* hom = app.add_subcommand("hom", "Graded rank of Hom(B_x, B_y)");
  common(hom);
  hom->add_option("--x", cfg.x, "Element x")->required();
  hom->add_option("--y", cfg.y, "Element y")->required();

  auto* burau = app.add_subcommand("burau", "Burau matrices from the type A cell");
  burau->add_option("--format", cfg.format)->check(CLI::IsMember({"table", "text"}));
  burau->add_option("--n", cfg.n, "Number of strands");
  burau->add_option("--i", cfg.i, "Generator index (default: all)");

  auto* decat = app.add_subcommand("decat-check", "Compare complex classes with the Hecke action");
  common(decat);
  graph_opts(decat);
  decat->add_option("--word", cfg.word, "Signed word ('-s' for an inverse); random words if omitted");
  decat->add_option("--seed", cfg.seed);
  decat->add_option("--samples", cfg.samples);
  decat->add_option("--max-len", cfg.max_len);

  auto* fuzz = app.add_subcommand("fuzz", "Randomized cross-checks on positive words");
  common(fuzz);
  graph_opts(fuzz);
  fuzz->add_option("--seed", cfg.seed);
  fuzz->add_option("--samples", cfg.samples);
  fuzz->add_option("--max-len", cfg.max_len);

  auto* graph = app.add_subcommand("graph", "Export the cell graph");
  common(graph);
  graph_opts(graph);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*nf) return cmd_nf(cfg);
    if (*rec) return cmd_recover(cfg);
    if (*wave) return cmd_wave(cfg, vertex_opt->count() == 0);
    if (*kl) return cmd_kl(cfg);
    if (*hom) return cmd_hom(cfg);
    if (*burau) return cmd_burau(cfg);
    if (*decat) return cmd_decat(cfg);
    if (*fuzz) return cmd_fuzz(cfg);
    if (*graph) return cmd_graph(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  }
  return kUsage;
}
