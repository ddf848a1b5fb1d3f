// Batch front door for the library: subcommands run one computation each,
// emit a self-describing JSON or CSV report, and gate the exit code on the
// computed residuals so runs can be wired straight into CI.
//
//   exit 0  success, all gated quantities under their thresholds
//   exit 1  computation ran but a gate failed (or the model rejected the input)
//   exit 2  usage error (bad flags, bad specs, violated preconditions)

#include <CLI11.hpp>

#include "lorentzlab/experiments.hpp"
#include "lorentzlab/exotic.hpp"
#include "lorentzlab/harmonic.hpp"
#include "lorentzlab/lorentz.hpp"
#include "lorentzlab/mobius.hpp"
#include "lorentzlab/picard_manin.hpp"
#include "lorentzlab/principal_series.hpp"
#include "lorentzlab/run_config.hpp"
#include "lorentzlab/serialize.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace lorentzlab;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct GateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Config file: plain "key=value" lines ('#' comments) overriding the built-in
// defaults but never an explicitly passed flag.  Applied as option defaults
// before parsing, which gives exactly that precedence.
std::map<std::string, std::string> load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file: " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto h = line.find('#'); h != std::string::npos) line.erase(h);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      if (a == std::string::npos) return std::string();
      const auto b = s.find_last_not_of(" \t\r");
      return s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (!key.empty()) kv[key] = val;
  }
  return kv;
}

// Pre-scan for --config so its values can seed the option defaults.
std::map<std::string, std::string> config_from_argv(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--config" && i + 1 < argc) return load_config_file(argv[i + 1]);
    if (arg.rfind("--config=", 0) == 0) return load_config_file(arg.substr(9));
  }
  return {};
}

// ---------------------------------------------------------------------------
// Shared numeric parameters + report plumbing.
struct Shared {
  RunConfig cfg;
  std::string out_path;  // empty = stdout
  std::string format = "json";
};

void add_shared(CLI::App* cmd, Shared& sh, const std::map<std::string, std::string>& file_cfg) {
  auto def = [&](const char* key, auto fallback) {
    using T = decltype(fallback);
    const auto it = file_cfg.find(key);
    if (it == file_cfg.end()) return fallback;
    std::istringstream is(it->second);
    T v{};
    if (!(is >> v)) throw UsageError(std::string("config file: bad value for ") + key);
    return v;
  };
  sh.cfg.K = def("K", sh.cfg.K);
  sh.cfg.Q = def("Q", sh.cfg.Q);
  sh.cfg.tol = def("tol", sh.cfg.tol);
  sh.cfg.seed = def("seed", sh.cfg.seed);
  sh.cfg.threads = def("threads", sh.cfg.threads);
  cmd->add_option("--K", sh.cfg.K, "Fourier window half-width")->capture_default_str();
  cmd->add_option("--Q", sh.cfg.Q, "circle quadrature nodes")->capture_default_str();
  cmd->add_option("--tol", sh.cfg.tol, "residual gate / solver tolerance")->capture_default_str();
  cmd->add_option("--seed", sh.cfg.seed, "seed for randomized inputs")->capture_default_str();
  cmd->add_option("--threads", sh.cfg.threads, "worker cap (0 = hardware)")->capture_default_str();
  cmd->add_option("--out", sh.out_path, "report file (default: stdout)");
  cmd->add_option("--format", sh.format, "report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--config", "key=value file overriding defaults (not flags)")
      ->check(CLI::ExistingFile);
}

void emit(const Shared& sh, const std::string& content) {
  if (sh.out_path.empty()) {
    std::cout << content;
  } else {
    atomic_write(sh.out_path, content);
  }
}

// ---------------------------------------------------------------------------
// Disc-model element specs: '*'-separated product of
//   gt:<t>  k:<theta>  a:<lambda>  n:<t>  nbar:<u>  w  rand:<seed>
MobiusElement parse_element(const std::string& spec) {
  std::vector<std::string> tokens;
  {
    std::string cur;
    for (char ch : spec) {
      if (ch == '*') {
        tokens.push_back(cur);
        cur.clear();
      } else if (!std::isspace(static_cast<unsigned char>(ch))) {
        cur += ch;
      }
    }
    tokens.push_back(cur);
  }
  auto value_of = [](const std::string& tok, size_t prefix) {
    try {
      size_t used = 0;
      const std::string body = tok.substr(prefix);
      const double v = std::stod(body, &used);
      if (used != body.size()) throw std::invalid_argument(body);
      return v;
    } catch (const std::exception&) {
      throw UsageError("bad element token '" + tok + "'");
    }
  };
  MobiusElement g;  // identity
  for (const std::string& tok : tokens) {
    if (tok.empty()) throw UsageError("empty element token in '" + spec + "'");
    if (tok == "w") {
      g = g * weyl_w();
    } else if (tok.rfind("gt:", 0) == 0) {
      g = g * g_t(value_of(tok, 3));
    } else if (tok.rfind("k:", 0) == 0) {
      g = g * k_theta(value_of(tok, 2));
    } else if (tok.rfind("a:", 0) == 0) {
      const double lam = value_of(tok, 2);
      if (!(lam > 0)) throw UsageError("a:<lambda> needs lambda > 0");
      g = g * a_lambda(lam);
    } else if (tok.rfind("n:", 0) == 0) {
      g = g * n_t(value_of(tok, 2));
    } else if (tok.rfind("nbar:", 0) == 0) {
      g = g * nbar_u(value_of(tok, 5));
    } else if (tok.rfind("rand:", 0) == 0) {
      const auto seed = static_cast<std::uint64_t>(value_of(tok, 5));
      std::mt19937_64 rng(seed);
      std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);
      std::uniform_real_distribution<double> small(-0.15, 0.15);
      g = g * k_theta(angle(rng)) * g_t(small(rng)) * k_theta(angle(rng));
    } else {
      throw UsageError("unknown element token '" + tok + "'");
    }
  }
  return g;
}

// Hyperboloid-model isometry specs: '*'-separated product of
//   boost:<t>  rotation:<theta>  parabolic:<u>  random:<seed>
LIsometry parse_isometry(const std::string& spec, int dim) {
  std::vector<std::string> tokens;
  {
    std::string cur;
    for (char ch : spec) {
      if (ch == '*') {
        tokens.push_back(cur);
        cur.clear();
      } else if (!std::isspace(static_cast<unsigned char>(ch))) {
        cur += ch;
      }
    }
    tokens.push_back(cur);
  }
  auto value_of = [](const std::string& tok, size_t prefix) {
    try {
      size_t used = 0;
      const std::string body = tok.substr(prefix);
      const double v = std::stod(body, &used);
      if (used != body.size()) throw std::invalid_argument(body);
      return v;
    } catch (const std::exception&) {
      throw UsageError("bad isometry token '" + tok + "'");
    }
  };
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(dim + 1, dim + 1);
  for (const std::string& tok : tokens) {
    if (tok.empty()) throw UsageError("empty isometry token in '" + spec + "'");
    if (tok.rfind("boost:", 0) == 0) {
      m = m * lorentzlab::boost(dim, 1, value_of(tok, 6)).m;
    } else if (tok.rfind("rotation:", 0) == 0) {
      if (dim < 2) throw UsageError("rotation needs dim >= 2");
      m = m * spatial_rotation(dim, 1, 2, value_of(tok, 9)).m;
    } else if (tok.rfind("parabolic:", 0) == 0) {
      if (dim < 2) throw UsageError("parabolic needs dim >= 2");
      m = m * parabolic_translation(dim, value_of(tok, 10)).m;
    } else if (tok.rfind("random:", 0) == 0) {
      m = m * random_isometry(dim, static_cast<std::uint64_t>(value_of(tok, 7))).m;
    } else {
      throw UsageError("unknown isometry token '" + tok + "'");
    }
  }
  return make_isometry(m, 1e-8);
}

// ---------------------------------------------------------------------------
// reps: representation matrix checks for one element.
int run_reps(const Shared& sh, double s, const std::string& g_spec, const std::string& h_spec,
             const std::string& check) {
  if (!(s > 0)) throw UsageError("reps: --s must be > 0");
  if (sh.cfg.Q < 8 * sh.cfg.K) throw UsageError("reps: need Q >= 8K");
  if (sh.format != "json") throw UsageError("reps: only --format json is supported");
  const MobiusElement g = parse_element(g_spec);

  Json j;
  j["subcommand"] = "reps";
  j["config"] = config_to_json(sh.cfg);
  j["s"] = s;
  j["g"] = g_spec;
  j["disc_displacement"] = g.disc_displacement();
  const double a = g.disc_displacement();
  j["est_tail"] = a > 0 ? std::pow(a, sh.cfg.K + 1) / (1.0 - a) : 0.0;

  Json checks;
  double worst = 0.0;
  const bool all = check == "all";
  if (all || check == "intertwine") {
    const double r = intertwine_residual(s, g, sh.cfg.K, sh.cfg.Q);
    checks["intertwine"] = r;
    worst = std::max(worst, r);
  }
  if (all || check == "invariance") {
    const double r = invariance_residual(s, g, sh.cfg.K, sh.cfg.Q);
    checks["invariance"] = r;
    worst = std::max(worst, r);
  }
  if (check == "homomorphism" || (all && !h_spec.empty())) {
    if (h_spec.empty()) throw UsageError("reps: --check homomorphism needs --h");
    const MobiusElement h = parse_element(h_spec);
    j["h"] = h_spec;
    const double r = homomorphism_residual(s, g, h, sh.cfg.K, sh.cfg.Q);
    checks["homomorphism"] = r;
    worst = std::max(worst, r);
  }
  if (checks.empty()) throw UsageError("reps: unknown --check '" + check + "'");
  j["checks"] = std::move(checks);

  const bool pass = worst < sh.cfg.tol;
  j["gate"] = Json{{"tol", sh.cfg.tol}, {"max_residual", worst}, {"pass", pass}};
  emit(sh, dump_json(j));
  return pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// exotic: curvature sweep over s.
int run_exotic(const Shared& sh, const std::vector<double>& s_values, double h, double gate) {
  if (s_values.empty()) throw UsageError("exotic: need --s or --s-grid");
  for (double s : s_values)
    if (!(s > 0.5 && s < 1.5)) throw UsageError("exotic: every s must lie in (1/2, 3/2)");
  if (!(h > 0)) throw UsageError("exotic: --h must be > 0");

  std::vector<CurvatureReport> rows;
  rows.reserve(s_values.size());
  for (double s : s_values) rows.push_back(curvature_estimate(s, h, sh.cfg.Q));
  double worst = 0.0;
  for (const auto& r : rows) worst = std::max(worst, r.rel_err);
  const bool pass = worst < gate;

  if (sh.format == "csv") {
    std::vector<std::string> comments;
    {
      std::ostringstream os;
      os << "Q=" << sh.cfg.Q << " h=" << h << " gate=" << gate << " seed=" << sh.cfg.seed;
      comments.push_back(os.str());
    }
    emit(sh, curvature_csv(rows, comments));
  } else {
    Json j;
    j["subcommand"] = "exotic";
    j["config"] = config_to_json(sh.cfg);
    j["h"] = h;
    Json arr = Json::array();
    for (const auto& r : rows)
      arr.push_back(Json{{"s", r.s},
                         {"c_hat", r.c_hat},
                         {"c_formula", r.c_formula},
                         {"curvature_hat", r.curvature_hat},
                         {"curvature_theorem", r.curvature_theorem},
                         {"rel_err", r.rel_err}});
    j["reports"] = std::move(arr);
    j["gate"] = Json{{"rel_err", gate}, {"max_rel_err", worst}, {"pass", pass}};
    emit(sh, dump_json(j));
  }
  return pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// harmonic: Dirichlet solve on the concentric disc mesh.
int run_harmonic(const Shared& sh, int rings, int sectors, const std::string& boundary,
                 double s, double r, const std::string& weights, int max_iter) {
  if (rings < 1 || sectors < 3) throw UsageError("harmonic: need rings >= 1, sectors >= 3");
  if (sh.format != "json") throw UsageError("harmonic: only --format json is supported");
  const WeightScheme scheme =
      weights == "cotangent" ? WeightScheme::Cotangent : WeightScheme::Uniform;
  if (weights != "uniform" && weights != "cotangent")
    throw UsageError("harmonic: --weights must be uniform or cotangent");
  const DiscMesh mesh = build_disc_mesh(rings, sectors, scheme);

  std::vector<HPoint> bvals;
  ExoticConfig ecfg;
  if (boundary == "geodesic") {
    if (!(r > 0)) throw UsageError("harmonic: --r must be > 0");
    bvals = geodesic_boundary_values(mesh, 2, r);
  } else if (boundary == "exotic") {
    if (!(s > 0.5 && s < 1.5)) throw UsageError("harmonic: exotic boundary needs s in (1/2, 3/2)");
    if (!(r > 0 && r < 1)) throw UsageError("harmonic: exotic boundary needs r in (0, 1)");
    ecfg.s = s;
    ecfg.K = sh.cfg.K;
    ecfg.Q = sh.cfg.Q;
    bvals = exotic_boundary_values(mesh, ecfg, r);
  } else {
    throw UsageError("harmonic: --boundary must be geodesic or exotic");
  }

  SolveOptions opts;
  opts.tol = sh.cfg.tol;
  opts.max_iter = max_iter;
  const SolveResult res = solve_dirichlet(mesh, bvals, opts);

  Json j;
  j["subcommand"] = "harmonic";
  j["config"] = config_to_json(sh.cfg);
  j["mesh"] = Json{{"rings", rings},
                   {"sectors", sectors},
                   {"vertices", mesh.vertex_count()},
                   {"edges", static_cast<int>(mesh.edges.size())},
                   {"triangles", static_cast<int>(mesh.triangles.size())},
                   {"weights", weights}};
  j["boundary"] = boundary;
  j["r"] = r;
  if (boundary == "exotic") j["s"] = s;
  j["energy_initial"] = res.energy_trace.empty() ? 0.0 : res.energy_trace.front();
  j["energy_final"] = res.energy_trace.empty() ? 0.0 : res.energy_trace.back();
  j["iterations"] = res.iterations;
  j["residual"] = res.residual;
  j["converged"] = res.converged;

  if (boundary == "geodesic") {
    double dev = 0.0;
    for (const auto& p : res.state.points) dev = std::max(dev, geodesic_plane_deviation(p));
    j["max_geodesic_deviation"] = dev;
  } else {
    const Intertwiner A = Intertwiner::build(ecfg.s, ecfg.K);
    double dev = 0.0;
    for (int i = 0; i < mesh.vertex_count(); ++i) {
      const Eigen::Vector2d& p = mesh.vertices[i];
      const HPoint target = exotic_vertex_value(ecfg, A, r * Complex(p.x(), p.y()));
      dev = std::max(dev, distance(res.state.points[i], target));
    }
    j["max_equivariant_deviation"] = dev;
  }

  j["gate"] = Json{{"converged", res.converged}};
  emit(sh, dump_json(j));
  return res.converged ? 0 : 1;
}

// ---------------------------------------------------------------------------
// cremona: exact degree dynamics of a generator word.
int run_cremona(const Shared& sh, const std::string& word_text, int iters) {
  if (iters < 1) throw UsageError("cremona: --iters must be >= 1");
  std::string err;
  const auto word = parse_word(word_text, &err);
  if (!word) throw UsageError("cremona: bad --word: " + err);

  const DegreeReport rep = degree_sequence(*word, iters);
  Json j;
  j["subcommand"] = "cremona";
  j["config"] = config_to_json(sh.cfg);
  j["iters"] = iters;
  j.update(degree_report_to_json(rep));
  j["classification"] = classify_degree_growth(rep);

  if (sh.format == "csv") {
    std::string csv = "n,degree\n";
    for (size_t i = 0; i < rep.degrees.size(); ++i)
      csv += std::to_string(i + 1) + "," + rep.degrees[i].str() + "\n";
    emit(sh, csv);
  } else {
    emit(sh, dump_json(j));
  }
  return rep.truncated ? 1 : 0;
}

// ---------------------------------------------------------------------------
// classify: orbit-growth classification of a hyperboloid isometry.
int run_classify(const Shared& sh, int dim, const std::string& kind, int n_iter) {
  if (dim < 1) throw UsageError("classify: --dim must be >= 1");
  if (n_iter < 8) throw UsageError("classify: --n-iter must be >= 8");
  if (sh.format != "json") throw UsageError("classify: only --format json is supported");
  const LIsometry M = parse_isometry(kind, dim);
  const IsometryClass cls = classify_isometry(M, base_vertex(dim), n_iter);

  Json j;
  j["subcommand"] = "classify";
  j["config"] = config_to_json(sh.cfg);
  j["dim"] = dim;
  j["kind"] = kind;
  j["n_iter"] = n_iter;
  j["type"] = to_string(cls.type);
  j["translation_length"] = cls.translation_length;
  j["diagnostics"] = Json{{"orbit_bounded", cls.orbit_bounded},
                          {"linear_fit_residual", cls.linear_fit_residual},
                          {"log_fit_residual", cls.log_fit_residual},
                          {"first_distance", cls.orbit_distances.empty() ? 0.0 : cls.orbit_distances.front()},
                          {"last_distance", cls.orbit_distances.empty() ? 0.0 : cls.orbit_distances.back()}};
  emit(sh, dump_json(j));
  return 0;
}

std::vector<double> parse_grid(const std::string& text) {
  // "a:b:step" inclusive sweep, or a single value.
  std::vector<double> out;
  const auto c1 = text.find(':');
  if (c1 == std::string::npos) {
    try {
      out.push_back(std::stod(text));
    } catch (const std::exception&) {
      throw UsageError("bad grid '" + text + "'");
    }
    return out;
  }
  const auto c2 = text.find(':', c1 + 1);
  if (c2 == std::string::npos) throw UsageError("grid must be a:b:step");
  try {
    const double a = std::stod(text.substr(0, c1));
    const double b = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
    const double step = std::stod(text.substr(c2 + 1));
    if (!(step > 0)) throw UsageError("grid step must be > 0");
    for (double v = a; v <= b + 1e-12; v += step) out.push_back(v);
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError("bad grid '" + text + "'");
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lorentzlab: representation, curvature, harmonic-map, and degree-dynamics runs"};
  app.require_subcommand(1);

  std::map<std::string, std::string> file_cfg;
  try {
    file_cfg = config_from_argv(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  Shared sh_reps, sh_exotic, sh_harmonic, sh_cremona, sh_classify;

  // reps
  auto* reps = app.add_subcommand("reps", "representation-matrix residual checks");
  reps->set_help_flag("--help", "print help");  // frees -h; --h is an option here
  double reps_s = 1.0;
  std::string reps_g = "gt:0.2", reps_h, reps_check = "all";
  reps->add_option("--s", reps_s, "spectral parameter")->capture_default_str();
  reps->add_option("--g", reps_g, "element spec, e.g. gt:0.2 or k:0.3*gt:0.1")->capture_default_str();
  reps->add_option("--h", reps_h, "second element (homomorphism check)");
  reps->add_option("--check", reps_check, "intertwine|invariance|homomorphism|all")->capture_default_str();
  add_shared(reps, sh_reps, file_cfg);

  // exotic
  auto* exo = app.add_subcommand("exotic", "curvature-constant estimates for the equivariant map");
  exo->set_help_flag("--help", "print help");  // frees -h; --h is an option here
  std::string exo_grid;
  double exo_s = 1.0, exo_h = 1e-2, exo_gate = 1e-4;
  exo->add_option("--s", exo_s, "single spectral parameter")->capture_default_str();
  exo->add_option("--s-grid", exo_grid, "sweep a:b:step (overrides --s)");
  exo->add_option("--h", exo_h, "base step of the extrapolated estimate")->capture_default_str();
  exo->add_option("--gate", exo_gate, "relative-error gate")->capture_default_str();
  sh_exotic.format = "csv";
  add_shared(exo, sh_exotic, file_cfg);

  // harmonic
  auto* har = app.add_subcommand("harmonic", "Dirichlet harmonic map on the disc mesh");
  int har_rings = 8, har_sectors = 16, har_max_iter = 200000;
  std::string har_boundary = "geodesic", har_weights = "uniform";
  double har_s = 1.0, har_r = 0.5;
  har->add_option("--rings", har_rings, "mesh rings")->capture_default_str();
  har->add_option("--sectors", har_sectors, "mesh sectors")->capture_default_str();
  har->add_option("--boundary", har_boundary, "geodesic|exotic")->capture_default_str();
  har->add_option("--s", har_s, "spectral parameter (exotic boundary)")->capture_default_str();
  har->add_option("--r", har_r, "geodesic radius, or disc radius of the exotic circle")->capture_default_str();
  har->add_option("--weights", har_weights, "uniform|cotangent")->capture_default_str();
  har->add_option("--max-iter", har_max_iter, "iteration cap")->capture_default_str();
  add_shared(har, sh_harmonic, file_cfg);

  // cremona
  auto* cre = app.add_subcommand("cremona", "exact degree sequence of a generator word");
  std::string cre_word = "sigma";
  int cre_iters = 8;
  cre->add_option("--word", cre_word, "e.g. \"lin=1,0,0;0,2,0;0,0,1 | sigma\"")->capture_default_str();
  cre->add_option("--iters", cre_iters, "iterates to compute")->capture_default_str();
  add_shared(cre, sh_cremona, file_cfg);

  // classify
  auto* cla = app.add_subcommand("classify", "orbit-growth type of a hyperboloid isometry");
  int cla_dim = 2, cla_iter = 512;
  std::string cla_kind = "boost:0.3";
  cla->add_option("--dim", cla_dim, "spatial dimension N")->capture_default_str();
  cla->add_option("--kind", cla_kind, "boost:<t>|rotation:<th>|parabolic:<u>|random:<seed>, '*'-products")
      ->capture_default_str();
  cla->add_option("--n-iter", cla_iter, "orbit length")->capture_default_str();
  add_shared(cla, sh_classify, file_cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (reps->parsed()) return run_reps(sh_reps, reps_s, reps_g, reps_h, reps_check);
    if (exo->parsed()) {
      const std::vector<double> grid =
          exo_grid.empty() ? std::vector<double>{exo_s} : parse_grid(exo_grid);
      return run_exotic(sh_exotic, grid, exo_h, exo_gate);
    }
    if (har->parsed())
      return run_harmonic(sh_harmonic, har_rings, har_sectors, har_boundary, har_s, har_r,
                          har_weights, har_max_iter);
    if (cre->parsed()) return run_cremona(sh_cremona, cre_word, cre_iters);
    if (cla->parsed()) return run_classify(sh_classify, cla_dim, cla_kind, cla_iter);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
