// padfs: command-line surface for PADFS parameter sweeps and plot data.
// Subcommands: measures, wigner, inversion, parametric, decay.
// Exit codes: 0 success, 2 usage error, 3 numerical non-convergence.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "padfs/loss.hpp"
#include "padfs/measures.hpp"
#include "padfs/state.hpp"
#include "padfs/wigner.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

struct CliError : std::runtime_error {
  int code;
  CliError(const std::string& msg, int c) : std::runtime_error(msg), code(c) {}
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct CommonOpts {
  std::string out;
  double quad_radius = 0.0;  // 0 = per-state default rule
  double quad_tol = 1e-5;
  double tail_tol = 1e-14;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--out", c.out, "output path (default: stdout)");
  cmd->add_option("--quad-radius", c.quad_radius,
                  "phase-space cutoff radius (0 = automatic)");
  cmd->add_option("--quad-tol", c.quad_tol, "quadrature relative tolerance");
  cmd->add_option("--tail-tol", c.tail_tol, "Fock-tail truncation tolerance");
}

padfs::PadfsParams make_params(double alpha, int n, int k, const CommonOpts& c) {
  padfs::PadfsParams p;
  p.alpha = alpha;
  p.n = n;
  p.k = k;
  p.tail_tolerance = c.tail_tol;
  p.validate();
  return p;
}

padfs::QuadratureSpec make_spec(const padfs::PadfsParams& p, const CommonOpts& c) {
  padfs::QuadratureSpec spec = padfs::default_quadrature(p);
  if (c.quad_radius > 0.0) spec.radius = c.quad_radius;
  spec.rel_tolerance = c.quad_tol;
  return spec;
}

void emit(const std::string& body, const CommonOpts& c) {
  if (c.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw CliError("cannot open output path: " + c.out, 2);
  f << body;
  if (!f) throw CliError("write failed: " + c.out, 2);
}

std::string header(const std::string& resolved_config) {
  std::ostringstream h;
  h << "# padfs " << kVersion << "\n# " << resolved_config << "\n";
  return h.str();
}

std::string common_config(const CommonOpts& c) {
  std::ostringstream s;
  s << " quad_radius=" << (c.quad_radius > 0.0 ? num(c.quad_radius) : "auto")
    << " quad_tol=" << num(c.quad_tol) << " tail_tol=" << num(c.tail_tol);
  return s.str();
}

std::vector<double> linear_range(double start, double stop, double step) {
  std::vector<double> out;
  for (int i = 0;; ++i) {
    double v = start + i * step;
    if (v > stop + 1e-12) break;
    out.push_back(v);
  }
  return out;
}

struct MeasuresOpts {
  CommonOpts common;
  double alpha_start = 0.0, alpha_stop = 0.0, alpha_step = 0.05;
  std::vector<int> n_list{0};
  std::vector<int> k_list{0};
  std::vector<std::string> which{"LE", "N", "WLN", "delta"};
};

int run_measures(const MeasuresOpts& o) {
  if (o.alpha_step <= 0.0 || o.alpha_stop < o.alpha_start ||
      o.n_list.empty() || o.k_list.empty())
    throw CliError("invalid sweep range", 2);
  bool want_le = false, want_n = false, want_wln = false, want_delta = false;
  for (const auto& m : o.which) {
    if (m == "LE") want_le = true;
    else if (m == "N") want_n = true;
    else if (m == "WLN") want_wln = true;
    else if (m == "delta") want_delta = true;
    else throw CliError("unknown measure: " + m, 2);
  }
  std::vector<double> alphas =
      linear_range(o.alpha_start, o.alpha_stop, o.alpha_step);

  struct Point { double alpha; int n, k; };
  std::vector<Point> points;
  for (double a : alphas)
    for (int n : o.n_list)
      for (int k : o.k_list) points.push_back({a, n, k});

  std::vector<std::string> rows(points.size());
  bool converged = true;
  // worker pool over sweep points; rows land in input order
#pragma omp parallel for schedule(dynamic)
  for (size_t i = 0; i < points.size(); ++i) {
    const auto& pt = points[i];
    auto p = make_params(pt.alpha, pt.n, pt.k, o.common);
    std::ostringstream row;
    row << num(pt.alpha) << "," << pt.n << "," << pt.k;
    padfs::FockVector v = padfs::padfs_coefficients(p);
    if (want_le) row << "," << num(padfs::linear_entropy_potential(v));
    if (want_n) row << "," << num(padfs::skew_info_measure(v));
    if (want_wln) {
      auto wln = padfs::wigner_log_negativity(p, make_spec(p, o.common),
                                              padfs::Exec::serial);
      if (!wln.converged) converged = false;
      row << "," << num(wln.value) << "," << num(wln.quad_error);
    }
    if (want_delta) row << "," << num(padfs::rel_entropy_non_gaussianity(v));
    rows[i] = row.str();
  }
  if (!converged)
    throw CliError("quadrature failed to converge", 3);

  std::ostringstream cfg;
  cfg << "command: measures alpha=[" << num(o.alpha_start) << ","
      << num(o.alpha_stop) << "," << num(o.alpha_step) << "] n=[";
  for (size_t i = 0; i < o.n_list.size(); ++i)
    cfg << (i ? "," : "") << o.n_list[i];
  cfg << "] k=[";
  for (size_t i = 0; i < o.k_list.size(); ++i)
    cfg << (i ? "," : "") << o.k_list[i];
  cfg << "] measures=";
  for (size_t i = 0; i < o.which.size(); ++i)
    cfg << (i ? "," : "") << o.which[i];
  cfg << common_config(o.common);

  std::ostringstream body;
  body << header(cfg.str()) << "alpha,n,k";
  if (want_le) body << ",LE";
  if (want_n) body << ",N";
  if (want_wln) body << ",WLN,WLN_err";
  if (want_delta) body << ",delta";
  body << "\n";
  for (const auto& r : rows) body << r << "\n";
  emit(body.str(), o.common);
  return 0;
}

struct WignerOpts {
  CommonOpts common;
  double alpha = 0.0;
  int n = 0, k = 0;
  std::vector<double> window{-3.0, 3.0, -3.0, 3.0};
  int resolution = 121;
  double kappa_t = -1.0;  // < 0: noiseless
};

int run_wigner(const WignerOpts& o) {
  if (o.resolution < 2 || o.window.size() != 4 || o.window[1] <= o.window[0] ||
      o.window[3] <= o.window[2])
    throw CliError("invalid grid window or resolution", 2);
  auto p = make_params(o.alpha, o.n, o.k, o.common);
  padfs::GridWindow win{o.window[0], o.window[1], o.window[2], o.window[3]};

  padfs::WignerGrid grid;
  if (o.kappa_t >= 0.0) {
    padfs::FockVector v = padfs::padfs_coefficients(p);
    auto rho = padfs::evolve_loss(
        padfs::to_density_matrix(v, v.truncation() + 1),
        padfs::LossParams(o.kappa_t));
    grid = padfs::wigner_grid(rho, win, o.resolution);
  } else {
    grid = padfs::wigner_grid(p, win, o.resolution);
  }

  std::ostringstream cfg;
  cfg << "command: wigner alpha=" << num(o.alpha) << " n=" << o.n
      << " k=" << o.k << " window=[" << num(win.x_min) << "," << num(win.x_max)
      << "," << num(win.y_min) << "," << num(win.y_max) << "]"
      << " resolution=" << o.resolution << common_config(o.common);
  std::vector<std::string> comments{"padfs " + std::string(kVersion), cfg.str()};
  if (o.kappa_t >= 0.0) comments.push_back("kappa_t=" + num(o.kappa_t));

  std::ostringstream body;
  padfs::write_csv(grid, body, comments);
  emit(body.str(), o.common);
  return 0;
}

struct InversionOpts {
  CommonOpts common;
  int n = 1, k1 = 1, k2 = 2;
  double lo = 0.2, hi = 0.8;
};

int run_inversion(const InversionOpts& o) {
  if (!(o.hi > o.lo)) throw CliError("invalid bracket", 2);
  auto diff = [&](double a) {
    return padfs::linear_entropy_potential(
               padfs::padfs_coefficients(make_params(a, o.n, o.k1, o.common))) -
           padfs::linear_entropy_potential(
               padfs::padfs_coefficients(make_params(a, o.n, o.k2, o.common)));
  };
  double lo = o.lo, hi = o.hi;
  double flo = diff(lo), fhi = diff(hi);
  if (flo == 0.0 && fhi == 0.0)
    throw CliError("no sign change of the measure difference in bracket", 3);
  if (flo == 0.0) hi = lo;
  else if (fhi == 0.0) lo = hi;
  else if (flo * fhi > 0.0)
    throw CliError("no sign change of the measure difference in bracket", 3);
  while (hi - lo > 1e-3) {
    double mid = 0.5 * (lo + hi);
    double fmid = diff(mid);
    if (fmid == 0.0) { lo = hi = mid; break; }
    (flo * fmid > 0.0 ? lo : hi) = mid;
    if (lo == hi) break;
    flo = diff(lo);
  }
  double alpha_inv = 0.5 * (lo + hi);

  std::ostringstream cfg;
  cfg << "command: inversion n=" << o.n << " k1=" << o.k1 << " k2=" << o.k2
      << " bracket=[" << num(o.lo) << "," << num(o.hi) << "]"
      << common_config(o.common);
  std::ostringstream body;
  body << header(cfg.str()) << "n,k1,k2,alpha_inversion\n"
       << o.n << "," << o.k1 << "," << o.k2 << "," << num(alpha_inv) << "\n";
  emit(body.str(), o.common);
  return 0;
}

struct ParametricOpts {
  CommonOpts common;
  std::vector<std::string> states{"padfs:1:1", "pacs:1"};
  double alpha_start = 0.1, alpha_stop = 2.0, alpha_step = 0.1;
};

int run_parametric(const ParametricOpts& o) {
  if (o.alpha_step <= 0.0) throw CliError("invalid sweep range", 2);
  struct Spec { std::string label; int n, k; };
  std::vector<Spec> specs;
  for (const auto& s : o.states) {
    std::istringstream in(s);
    std::string fam;
    std::getline(in, fam, ':');
    Spec sp{s, 0, 0};
    if (fam == "padfs") {
      char c;
      if (!(in >> sp.n >> c >> sp.k) || c != ':')
        throw CliError("bad state spec (want padfs:<n>:<k>): " + s, 2);
    } else if (fam == "pacs") {
      if (!(in >> sp.k))
        throw CliError("bad state spec (want pacs:<k>): " + s, 2);
    } else {
      throw CliError("unknown state family: " + s, 2);
    }
    specs.push_back(sp);
  }
  // alpha_stop < alpha_start is a legitimate empty sweep (header-only file)
  std::vector<double> alphas =
      linear_range(o.alpha_start, o.alpha_stop, o.alpha_step);

  std::ostringstream cfg;
  cfg << "command: parametric states=";
  for (size_t i = 0; i < o.states.size(); ++i)
    cfg << (i ? "," : "") << o.states[i];
  cfg << " alpha=[" << num(o.alpha_start) << "," << num(o.alpha_stop) << ","
      << num(o.alpha_step) << "]" << common_config(o.common);

  std::ostringstream body;
  body << header(cfg.str()) << "family,alpha,WLN,LE,N,delta\n";
  auto row = [&](const std::string& label, double alpha,
                 const padfs::PadfsParams& p) {
    padfs::FockVector v = padfs::padfs_coefficients(p);
    auto wln = padfs::wigner_log_negativity(p, make_spec(p, o.common));
    if (!wln.converged)
      throw CliError("quadrature failed to converge", 3);
    body << label << "," << num(alpha) << "," << num(wln.value) << ","
         << num(padfs::linear_entropy_potential(v)) << ","
         << num(padfs::skew_info_measure(v)) << ","
         << num(padfs::rel_entropy_non_gaussianity(v)) << "\n";
  };
  for (const auto& sp : specs)
    for (double a : alphas)
      row(sp.label, a, make_params(a, sp.n, sp.k, o.common));
  if (!alphas.empty()) {
    // Fock-state reference points
    row("fock:1", 0.0, make_params(0.0, 1, 0, o.common));
    row("fock:2", 0.0, make_params(0.0, 2, 0, o.common));
  }
  emit(body.str(), o.common);
  return 0;
}

struct DecayOpts {
  CommonOpts common;
  double alpha = 0.5;
  int n = 1, k = 1;
  double kt_start = 0.0, kt_stop = 0.5, kt_step = 0.025;
};

int run_decay(const DecayOpts& o) {
  if (o.kt_step <= 0.0 || o.kt_stop < o.kt_start || o.kt_start < 0.0)
    throw CliError("invalid kappa_t range", 2);
  auto p = make_params(o.alpha, o.n, o.k, o.common);
  std::vector<double> grid = linear_range(o.kt_start, o.kt_stop, o.kt_step);
  auto curve = padfs::wln_decay_curve(p, grid, make_spec(p, o.common));

  std::ostringstream cfg;
  cfg << "command: decay alpha=" << num(o.alpha) << " n=" << o.n
      << " k=" << o.k << " kappa_t=[" << num(o.kt_start) << ","
      << num(o.kt_stop) << "," << num(o.kt_step) << "]"
      << common_config(o.common);

  std::ostringstream body;
  body << header(cfg.str()) << "kappa_t,WLN,WLN_err\n";
  for (const auto& pt : curve) {
    if (!pt.wln.converged)
      throw CliError("quadrature failed to converge", 3);
    body << num(pt.kappa_t) << "," << num(pt.wln.value) << ","
         << num(pt.wln.quad_error) << "\n";
  }
  emit(body.str(), o.common);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"photon-added displaced Fock states: measures, Wigner maps, loss dynamics"};
  app.set_version_flag("--version", kVersion);
  app.set_config("--config", "", "optional key=value config file");
  app.require_subcommand(1);

  MeasuresOpts mo;
  auto* measures = app.add_subcommand(
      "measures", "nonclassicality/non-Gaussianity sweep over (alpha, n, k)");
  add_common(measures, mo.common);
  measures->add_option("--alpha-start", mo.alpha_start, "sweep start");
  measures->add_option("--alpha-stop", mo.alpha_stop, "sweep stop (inclusive)");
  measures->add_option("--alpha-step", mo.alpha_step, "sweep step");
  measures->add_option("--n", mo.n_list, "Fock parameter list");
  measures->add_option("--k", mo.k_list, "added-photon list");
  measures->add_option("--measures", mo.which,
                       "subset of LE, N, WLN, delta (default: all)");

  WignerOpts wo;
  auto* wigner = app.add_subcommand("wigner", "Wigner function grid");
  add_common(wigner, wo.common);
  wigner->add_option("--alpha", wo.alpha, "displacement");
  wigner->add_option("--n", wo.n, "Fock parameter");
  wigner->add_option("--k", wo.k, "photons added");
  wigner->add_option("--window", wo.window,
                     "xmin xmax ymin ymax (default -3 3 -3 3)")
      ->expected(4);
  wigner->add_option("--resolution", wo.resolution, "points per axis");
  wigner->add_option("--kappa-t", wo.kappa_t,
                     "evolve under photon loss before evaluating");

  InversionOpts io;
  auto* inversion = app.add_subcommand(
      "inversion", "bisect the crossing of two linear-entropy curves");
  add_common(inversion, io.common);
  inversion->add_option("--n", io.n, "Fock parameter");
  inversion->add_option("--k1", io.k1, "first added-photon number");
  inversion->add_option("--k2", io.k2, "second added-photon number");
  inversion->add_option("--bracket-lo", io.lo, "bracket lower edge");
  inversion->add_option("--bracket-hi", io.hi, "bracket upper edge");

  ParametricOpts po;
  auto* parametric = app.add_subcommand(
      "parametric", "all measures per state family for parametric plots");
  add_common(parametric, po.common);
  parametric->add_option("--states", po.states,
                         "state specs: padfs:<n>:<k> or pacs:<k>");
  parametric->add_option("--alpha-start", po.alpha_start, "sweep start");
  parametric->add_option("--alpha-stop", po.alpha_stop, "sweep stop");
  parametric->add_option("--alpha-step", po.alpha_step, "sweep step");

  DecayOpts dopt;
  auto* decay = app.add_subcommand("decay", "WLN decay under photon loss");
  add_common(decay, dopt.common);
  decay->add_option("--alpha", dopt.alpha, "displacement");
  decay->add_option("--n", dopt.n, "Fock parameter");
  decay->add_option("--k", dopt.k, "photons added");
  decay->add_option("--kt-start", dopt.kt_start, "kappa_t start");
  decay->add_option("--kt-stop", dopt.kt_stop, "kappa_t stop (inclusive)");
  decay->add_option("--kt-step", dopt.kt_step, "kappa_t step");

  try {
    app.parse(argc, argv);
    if (*measures) return run_measures(mo);
    if (*wigner) return run_wigner(wo);
    if (*inversion) return run_inversion(io);
    if (*parametric) return run_parametric(po);
    if (*decay) return run_decay(dopt);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const CliError& e) {
    std::cerr << "padfs: " << e.what() << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "padfs: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
