#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "s2g/cech.hpp"
#include "s2g/cochain.hpp"
#include "s2g/cover.hpp"
#include "s2g/deligne.hpp"
#include "s2g/group.hpp"
#include "s2g/linfty.hpp"
#include "s2g/manifold.hpp"
#include "s2g/report.hpp"
#include "s2g/sds.hpp"
#include "s2g/superdiff.hpp"
#include "s2g/twogroup.hpp"

using ojson = nlohmann::ordered_json;
using namespace s2g;

namespace {

struct RunConfig {
  std::uint64_t seed = 1;
  int samples = 100;
  double tol = 1e-9;
  double h = 2e-4;
  double k = 1.0;
  std::string output;           // empty -> stdout
  std::string format = "json";  // json | text
};

struct CheckResult {
  std::string name;
  Stats stats;
  bool pass = true;
  ojson extra = ojson::object();
};

CheckResult make_check(const std::string& name, std::vector<double> residuals, double tol,
                       ojson extra = ojson::object()) {
  CheckResult c;
  c.name = name;
  c.stats = make_stats(std::move(residuals));
  c.pass = c.stats.max < tol;
  c.extra = std::move(extra);
  return c;
}

// ---------------------------------------------------------------------------
// cover
// ---------------------------------------------------------------------------
std::vector<CheckResult> run_cover_build(const RunConfig& cfg, ojson& info) {
  Rng rng(cfg.seed);
  std::array<int, 8> counts{};
  for (int s = 0; s < cfg.samples; ++s) {
    SU2 g = random_su2(rng);
    counts[static_cast<std::size_t>(minimal_patch(g) - 1)]++;
  }
  info["patches"] = 8;
  info["minimal_patch_histogram"] = counts;
  std::vector<double> res;
  Rng rng2(cfg.seed + 1);
  for (int s = 0; s < cfg.samples; ++s) {
    SU2 g = random_su2(rng2);
    res.push_back(patch_member(g, minimal_patch(g)) ? 0.0 : 1.0);
  }
  return {make_check("minimal_patch_membership", res, 0.5)};
}

std::vector<CheckResult> run_cover_inspect(const RunConfig& cfg, ojson& info) {
  Rng rng(cfg.seed);
  CoverPoint v0 = random_object(rng), v1 = random_object(rng), v2 = random_object(rng);
  CoverPoint f2 = phi2(v0, v1);
  CoverPoint f3 = phi3(v0, v1, v2);
  info["phi2_index_levels"] = f2.idx.level;
  info["phi3_index_levels"] = f3.idx.level;
  info["phi2_faces"] = ojson::array({f2.idx.sub[0].base, f2.idx.sub[1].base, f2.idx.sub[2].base});
  std::vector<double> res;
  res.push_back(index_member(f2.pt, f2.idx) ? 0.0 : 1.0);
  res.push_back(index_member(f3.pt, f3.idx) ? 0.0 : 1.0);
  return {make_check("horn_filler_membership", res, 0.5)};
}

std::vector<CheckResult> run_cover_check(const RunConfig& cfg, ojson&) {
  Rng rng(cfg.seed);
  std::vector<double> simp, idx, horn;
  for (int s = 0; s < cfg.samples; ++s) {
    Nerve n;
    for (int m = 0; m < 3; ++m) n.g.push_back(random_su2(rng));
    // d_i d_j = d_{j-1} d_i for i < j
    for (int i = 0; i <= 3; ++i)
      for (int j = i + 1; j <= 3; ++j) {
        Nerve a = face(face(n, j), i);
        Nerve b = face(face(n, i), j - 1);
        double d = 0.0;
        for (std::size_t m = 0; m < a.g.size(); ++m) d = std::max(d, dist(a.g[m], b.g[m]));
        simp.push_back(d);
      }
    // s_i then d_i / d_{i+1} recover the identity
    for (int i = 0; i <= 3; ++i) {
      Nerve sg = degeneracy(n, i);
      Nerve a = face(sg, i), b = face(sg, i + 1);
      double d = 0.0;
      for (std::size_t m = 0; m < n.g.size(); ++m)
        d = std::max(d, std::max(dist(a.g[m], n.g[m]), dist(b.g[m], n.g[m])));
      simp.push_back(d);
    }
    // index layer: minimal and random member indices restrict along faces
    SIndex J = minimal_index(n);
    idx.push_back(index_member(n, J) ? 0.0 : 1.0);
    SIndex R = random_member_index(n, rng);
    for (int m = 0; m <= 3; ++m)
      idx.push_back(index_member(face(n, m), face_index(R, m)) ? 0.0 : 1.0);
    // horn fillers project onto their prescribed faces
    CoverPoint v0 = random_object(rng), v1 = random_object(rng);
    CoverPoint f2 = phi2(v0, v1);
    horn.push_back(dist(pi1(face(f2, 0)), pi1(v1)));
    horn.push_back(dist(pi1(face(f2, 2)), pi1(v0)));
    horn.push_back(dist(pi1(face(f2, 1)), mul(pi1(v0), pi1(v1))));
    horn.push_back(face(f2, 0).idx == v1.idx ? 0.0 : 1.0);
    horn.push_back(face(f2, 2).idx == v0.idx ? 0.0 : 1.0);
  }
  return {make_check("simplicial_identities", simp, cfg.tol),
          make_check("index_membership", idx, 0.5),
          make_check("horn_filler_faces", horn, cfg.tol)};
}

// ---------------------------------------------------------------------------
// sm
// ---------------------------------------------------------------------------
std::vector<CheckResult> run_sm_check(const RunConfig& cfg, ojson&) {
  std::vector<double> ncech, nnerve, ntot;
  int seeds = std::max(1, std::min(cfg.samples / 50, 10));
  int args = std::max(1, cfg.samples / seeds);
  for (int sd = 0; sd < seeds; ++sd) {
    std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(sd);
    CochainSum mu = make_mu(seed);
    Rng rng(seed * 77 + 1);
    for (const Cochain& c : mu.parts) {
      Cochain cc = delta_cech(delta_cech(c));
      Cochain nn = delta_nerve(delta_nerve(c));
      for (int s = 0; s < args; ++s) {
        ncech.push_back(circle_dist0(cc.eval(random_arg(rng, cc.p, cc.q))));
        nnerve.push_back(circle_dist0(nn.eval(random_arg(rng, nn.p, nn.q))));
      }
    }
    CochainSum d1 = delta_total(mu);
    CochainSum d2 = delta_total(d1);
    for (const Cochain& c : d2.parts)
      for (int s = 0; s < args; ++s)
        ntot.push_back(circle_dist0(c.eval(random_arg(rng, c.p, c.q))));
  }
  CocycleReport cr = is_sm_cocycle(generate_coboundary_cocycle(cfg.seed), cfg.seed + 99,
                                   std::max(1, cfg.samples));
  return {make_check("cech_differential_squared", ncech, cfg.tol),
          make_check("nerve_differential_squared", nnerve, cfg.tol),
          make_check("total_differential_squared", ntot, cfg.tol),
          make_check("cocycle_conditions", {cr.r1, cr.r2, cr.r3, cr.r4}, cfg.tol)};
}

// ---------------------------------------------------------------------------
// twogroup
// ---------------------------------------------------------------------------
std::vector<CheckResult> run_twogroup_check(const RunConfig& cfg, ojson&) {
  TwoGroup G{generate_coboundary_cocycle(cfg.seed)};
  LawReport gr = check_groupoid(G, cfg.seed + 1, cfg.samples);
  LawReport pe = check_pentagon(G, cfg.seed + 2, cfg.samples, cfg.tol);
  LawReport in = check_interchange(G, cfg.seed + 3, cfg.samples);
  ojson pextra;
  pextra["cross_validation_mismatches"] = pe.mismatches;
  std::vector<CheckResult> out = {
      make_check("groupoid_laws", {gr.max_residual}, cfg.tol),
      make_check("pentagon", {pe.max_residual}, cfg.tol, pextra),
      make_check("interchange", {in.max_residual}, cfg.tol)};
  if (pe.mismatches > 0) out[1].pass = false;
  return out;
}

// ---------------------------------------------------------------------------
// cocycle
// ---------------------------------------------------------------------------
std::vector<CheckResult> run_cocycle_validate(const RunConfig& cfg, const std::string& system,
                                              ojson& info) {
  FiniteCover cover;
  std::vector<CheckResult> out;
  double tol = 1e-6;
  int ns = std::max(4, cfg.samples / 4);
  auto want = [&system](const char* s) { return system == "all" || system == s; };

  if (want("ordinary")) {
    ValidatorReport t = validate_ordinary(cover, trivial_ordinary(), cfg.seed, ns);
    OrdinaryCocycle gen = generate_ordinary(cfg.seed);
    ValidatorReport g = validate_ordinary(cover, gen, cfg.seed + 1, ns);
    Rng grng(cfg.seed + 2);
    auto polys = std::make_shared<std::vector<AlgPoly>>();
    for (int i = 0; i < 3; ++i) polys->push_back(random_alg_poly(grng, 0.4));
    auto gamma = [polys](int i, const SU2& x) {
      return exp_su2((*polys)[static_cast<std::size_t>(i)].eval(x));
    };
    ValidatorReport f = validate_ordinary(cover, transform_ordinary(gen, gamma), cfg.seed + 3, ns);
    ValidatorReport p = validate_ordinary(cover, perturb_ordinary(gen, 1e-2), cfg.seed + 4, ns);
    ojson extra;
    extra["perturbed_residual"] = p.max();
    extra["perturbed_fails"] = !p.pass(tol);
    CheckResult c = make_check("ordinary", {t.max(), g.max(), f.max()}, tol, extra);
    c.pass = c.pass && !p.pass(tol);
    out.push_back(c);
  }
  if (want("strict")) {
    ValidatorReport t = validate_strict(cover, trivial_strict(), cfg.seed, ns);
    StrictCocycle gen = generate_strict(cfg.seed);
    ValidatorReport g = validate_strict(cover, gen, cfg.seed + 1, ns);
    Rng grng(cfg.seed + 2);
    auto gpolys = std::make_shared<std::vector<AlgPoly>>();
    auto cpolys = std::make_shared<std::vector<AlgPoly>>();
    for (int i = 0; i < 3; ++i) gpolys->push_back(random_alg_poly(grng, 0.4));
    for (int i = 0; i < 9; ++i) cpolys->push_back(random_alg_poly(grng, 0.4));
    auto gamma = [gpolys](int i, const SU2& x) {
      return exp_su2((*gpolys)[static_cast<std::size_t>(i)].eval(x));
    };
    auto chi = [cpolys](int i, int j, const SU2& x) {
      return exp_su2((*cpolys)[static_cast<std::size_t>(3 * i + j)].eval(x));
    };
    ValidatorReport f =
        validate_strict(cover, transform_strict(gen, gamma, chi), cfg.seed + 3, ns);
    ValidatorReport p = validate_strict(cover, perturb_strict(gen, 1e-2), cfg.seed + 4, ns);
    ojson extra;
    extra["perturbed_residual"] = p.max();
    extra["perturbed_fails"] = !p.pass(tol);
    CheckResult c = make_check("strict", {t.max(), g.max(), f.max()}, tol, extra);
    c.pass = c.pass && !p.pass(tol);
    out.push_back(c);
  }
  if (want("weak")) {
    TwoGroup G{generate_coboundary_cocycle(cfg.seed)};
    ValidatorReport t = validate_weak(cover, G, trivial_weak(), cfg.seed, ns);
    WeakCoboundary cb = generate_weak_coboundary(cfg.seed + 1);
    WeakCocycle gen = weak_from_coboundary(G, cb);
    ValidatorReport g = validate_weak(cover, G, gen, cfg.seed + 2, ns);
    ValidatorReport cbr =
        validate_weak_coboundary(cover, G, trivial_weak(), gen, cb, cfg.seed + 3, ns);
    ValidatorReport p = validate_weak(cover, G, perturb_weak(gen, 1e-2), cfg.seed + 4, ns);
    ojson extra;
    extra["coboundary_residual"] = cbr.max();
    extra["perturbed_residual"] = p.max();
    extra["perturbed_fails"] = !p.pass(tol);
    CheckResult c = make_check("weak", {t.max(), g.max(), cbr.max()}, tol, extra);
    c.pass = c.pass && !p.pass(tol);
    out.push_back(c);
  }
  if (want("deligne")) {
    TwoGroup G{generate_coboundary_cocycle(cfg.seed)};
    DeligneConfig dc;
    dc.seed = cfg.seed;
    dc.h = cfg.h;
    dc.k = cfg.k;
    dc.samples = std::max(2, cfg.samples / 12);
    DeligneReport t = validate_deligne(cover, G, trivial_deligne(cover.npatch), dc);
    DeligneCoboundary cb = generate_deligne_coboundary(cfg.seed + 1, cover.npatch);
    DeligneCocycle gen = deligne_from_coboundary(G, cb, cover.npatch, dc);
    DeligneReport g = validate_deligne(cover, G, gen, dc);
    DeligneCoboundaryReport cbr = validate_deligne_coboundary(cover, G, gen, cb, dc);
    DeligneReport p = validate_deligne(cover, G, perturb_deligne(gen, 1e-2), dc);
    ojson extra;
    extra["relations"] = ojson::array({g.d1, g.d2, g.d3, g.d4, g.d5, g.d6});
    extra["coboundary_residual"] = cbr.max();
    extra["perturbed_residual"] = p.max();
    extra["perturbed_fails"] = !p.pass(dc.tol);
    CheckResult c = make_check("deligne", {t.max(), g.max(), cbr.max()}, dc.tol, extra);
    c.pass = c.pass && !p.pass(dc.tol);
    out.push_back(c);
  }
  info["tolerance"] = tol;
  return out;
}

// ---------------------------------------------------------------------------
// diff
// ---------------------------------------------------------------------------
std::vector<CheckResult> run_diff_demo(const RunConfig& cfg, ojson&) {
  int seeds = std::max(1, std::min(cfg.samples, 200));
  std::vector<double> dual, vc, eq;
  for (int dim : {3, 6}) {
    Rng rng(cfg.seed + static_cast<std::uint64_t>(dim));
    for (int s = 0; s < seeds; ++s) {
      ModuliPoint p = random_moduli(rng, static_cast<std::size_t>(dim));
      DiffReport dr = differentiate(p.omega, p.psi, cfg.k);
      dual.push_back(std::max(dr.r_omega, dr.r_psi));
      vc.push_back(dr.r_vcocycle);
      CoboundaryModuli cb = random_coboundary_moduli(rng, static_cast<std::size_t>(dim));
      EquivalenceReport er = equivalence_transform(p, cb, cfg.k);
      eq.push_back(std::max(er.r_group, er.r_circle));
    }
  }
  return {make_check("dual_route_agreement", dual, 1e-13),
          make_check("descent_cocycle_identity", vc, 1e-15),
          make_check("equivalence_residuals", eq, 1e-12)};
}

// ---------------------------------------------------------------------------
// linfty
// ---------------------------------------------------------------------------
std::vector<CheckResult> run_linfty_check(const RunConfig& cfg, ojson& info) {
  std::vector<double> res;
  for (double k : {0.0, 1.0, 2.5, cfg.k}) {
    JacobiReport r = homotopy_jacobi_check(string_lie2_products(k, 3));
    res.push_back(r.max());
  }
  JacobiReport pr = homotopy_jacobi_check(perturb_linfty(string_lie2_products(1.0, 3), 1e-3));
  info["perturbed_residual"] = pr.max();
  info["perturbed_fails"] = !pr.pass(0.0);
  CheckResult c = make_check("homotopy_jacobi", res, 1e-300);
  c.pass = res[0] == 0.0 && res[1] == 0.0 && res[2] == 0.0 && !pr.pass(0.0);
  c.stats = make_stats(res);
  return {c};
}

// ---------------------------------------------------------------------------
// sds
// ---------------------------------------------------------------------------
std::vector<CheckResult> run_sds_verify(const RunConfig& cfg, int solution, double h,
                                        bool literal, ojson& info) {
  SdsConfig sc;
  sc.solution = solution;
  sc.h = h;
  sc.samples = std::max(32, cfg.samples);
  sc.seed = cfg.seed;
  sc.k = cfg.k;
  sc.literal_reading = literal;
  SdsReport r = sds_verify(sc);
  ojson extra;
  extra["reading"] = r.reading;
  extra["order"] = r.order;
  extra["flatness"] = r.flatness;
  extra["laplacian"] = r.laplacian;
  extra["excluded_samples"] = r.excluded;
  CheckResult c = make_check("self_dual_string",
                             {r.residual_max, r.flatness, r.laplacian}, 1000.0 * h * h, extra);
  c.pass = r.pass;

  GaugeSlopeReport gs = gauge_slope_check(cfg.seed, cfg.h);
  ojson gx;
  gx["eps"] = gs.eps;
  gx["residuals"] = gs.residual;
  gx["slope"] = gs.slope;
  CheckResult g = make_check("gauge_first_order_slope", gs.residual, 1e9, gx);
  g.pass = gs.pass;

  info["solution"] = solution;
  info["h"] = h;
  return {c, g};
}

// ---------------------------------------------------------------------------
// report plumbing
// ---------------------------------------------------------------------------
int emit(const RunConfig& cfg, const std::string& command,
         const std::vector<CheckResult>& checks, const ojson& info, double wall_seconds) {
  bool pass = true;
  for (const auto& c : checks) pass = pass && c.pass;

  ojson rep;
  rep["schema"] = kReportSchema;
  rep["version"] = kVersion;
  rep["command"] = command;
  rep["config"] = {{"seed", cfg.seed}, {"samples", cfg.samples}, {"tol", cfg.tol},
                   {"h_fd", cfg.h},    {"k", cfg.k},             {"format", cfg.format}};
  if (!info.empty()) rep["info"] = info;
  rep["checks"] = ojson::array();
  for (const auto& c : checks) {
    ojson jc;
    jc["name"] = c.name;
    jc["max"] = c.stats.max;
    jc["mean"] = c.stats.mean;
    jc["p99"] = c.stats.p99;
    jc["n"] = c.stats.n;
    jc["pass"] = c.pass;
    if (!c.extra.empty()) jc["detail"] = c.extra;
    rep["checks"].push_back(jc);
  }
  rep["pass"] = pass;

  std::string body;
  if (cfg.format == "json") {
    body = rep.dump(2) + "\n";  // wall time deliberately excluded: byte-stable
  } else {
    std::ostringstream os;
    os << command << " (seed " << cfg.seed << ", samples " << cfg.samples << ")\n";
    for (const auto& c : checks)
      os << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  max " << c.stats.max
         << "  mean " << c.stats.mean << "  p99 " << c.stats.p99 << "\n";
    os << (pass ? "PASS" : "FAIL") << "  wall " << wall_seconds << "s\n";
    body = os.str();
  }
  if (cfg.output.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(cfg.output, std::ios::binary);
    if (!f) {
      std::cerr << "cannot open output file: " << cfg.output << "\n";
      return 2;
    }
    f << body;
  }
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"string2g: verification kernel for string 2-group structures"};
  app.set_help_flag("--help", "print help and exit");
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value config file mirroring the flags; flags win");

  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "RNG seed (mt19937_64)")->configurable(true);
  app.add_option("--samples", cfg.samples, "sample count")->check(CLI::PositiveNumber);
  app.add_option("--tol", cfg.tol, "residual tolerance")->check(CLI::PositiveNumber);
  app.add_option("--h", cfg.h, "finite-difference step")->check(CLI::PositiveNumber);
  app.add_option("--k", cfg.k, "trilinear normalization constant");
  app.add_option("--output", cfg.output, "output path (default stdout)");
  app.add_option("--format", cfg.format, "json | text")
      ->check(CLI::IsMember({"json", "text"}));

  std::string command;

  auto* cover = app.add_subcommand("cover", "simplicial cover of the group");
  cover->require_subcommand(1);
  for (const char* leaf : {"build", "inspect", "check"}) {
    auto* c = cover->add_subcommand(leaf);
    c->fallthrough();
    c->callback([&command, leaf]() { command = std::string("cover ") + leaf; });
  }
  cover->fallthrough();

  auto* sm = app.add_subcommand("sm", "double-complex cochains and cocycles");
  sm->require_subcommand(1);
  sm->fallthrough();
  auto* smc = sm->add_subcommand("check");
  smc->fallthrough();
  smc->callback([&command]() { command = "sm check"; });

  auto* tg = app.add_subcommand("twogroup", "weak 2-group laws");
  tg->require_subcommand(1);
  tg->fallthrough();
  auto* tgc = tg->add_subcommand("check");
  tgc->fallthrough();
  tgc->callback([&command]() { command = "twogroup check"; });

  std::string system = "all";
  auto* cc = app.add_subcommand("cocycle", "transition-cocycle validators");
  cc->require_subcommand(1);
  cc->fallthrough();
  auto* ccv = cc->add_subcommand("validate");
  ccv->fallthrough();
  ccv->add_option("--system", system, "ordinary | strict | weak | deligne | all")
      ->check(CLI::IsMember({"ordinary", "strict", "weak", "deligne", "all"}));
  ccv->callback([&command]() { command = "cocycle validate"; });

  auto* df = app.add_subcommand("diff", "superpoint differentiation");
  df->require_subcommand(1);
  df->fallthrough();
  auto* dfd = df->add_subcommand("demo");
  dfd->fallthrough();
  dfd->callback([&command]() { command = "diff demo"; });

  auto* li = app.add_subcommand("linfty", "2-term homotopy Lie structure");
  li->require_subcommand(1);
  li->fallthrough();
  auto* lic = li->add_subcommand("check");
  lic->fallthrough();
  lic->callback([&command]() { command = "linfty check"; });

  int solution = 1;
  double sds_h = 1e-3;
  bool literal = false;
  auto* sd = app.add_subcommand("sds", "self-dual string solutions");
  sd->require_subcommand(1);
  sd->fallthrough();
  auto* sdv = sd->add_subcommand("verify");
  sdv->fallthrough();
  sdv->add_option("--solution", solution, "1 (abelian B) or 2 (pure-gauge v)")
      ->check(CLI::IsMember({1, 2}));
  sdv->add_option("--h", sds_h, "base finite-difference step")->check(CLI::PositiveNumber);
  sdv->add_flag("--literal", literal, "use the face-value B normalization");
  sdv->callback([&command]() { command = "sds verify"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  auto t0 = std::chrono::steady_clock::now();
  std::vector<CheckResult> checks;
  ojson info = ojson::object();
  try {
    if (command == "cover build") checks = run_cover_build(cfg, info);
    else if (command == "cover inspect") checks = run_cover_inspect(cfg, info);
    else if (command == "cover check") checks = run_cover_check(cfg, info);
    else if (command == "sm check") checks = run_sm_check(cfg, info);
    else if (command == "twogroup check") checks = run_twogroup_check(cfg, info);
    else if (command == "cocycle validate") checks = run_cocycle_validate(cfg, system, info);
    else if (command == "diff demo") checks = run_diff_demo(cfg, info);
    else if (command == "linfty check") checks = run_linfty_check(cfg, info);
    else if (command == "sds verify") checks = run_sds_verify(cfg, solution, sds_h, literal, info);
    else {
      std::cerr << "unknown command\n";
      return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return emit(cfg, command, checks, info, wall);
}
