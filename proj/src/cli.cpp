#include "spincone/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <sstream>

#include "spincone/character.hpp"
#include "spincone/hilbert.hpp"
#include "spincone/homology.hpp"
#include "spincone/jsonio.hpp"
#include "spincone/partition.hpp"
#include "spincone/poset.hpp"

namespace spincone {

namespace {

Interval need_interval(const std::string& text) {
  auto iv = parse_interval(text);
  if (!iv)
    throw CLI::ValidationError("--interval",
                               "cannot parse interval '" + text + "'");
  return *iv;
}

struct Common {
  std::string format = "json";
  bool manifest = false;
  int jobs = 1;
  double budget_seconds = 0.0;
};

void add_common(CLI::App* cmd, Common* c) {
  cmd->add_option("--format", c->format, "json|csv|text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_flag("--manifest", c->manifest, "echo the run manifest");
  cmd->add_option("--jobs", c->jobs, "worker threads")->check(CLI::Range(1, 64));
  cmd->add_option("--budget-seconds", c->budget_seconds,
                  "soft time budget for scans");
}

std::string emit(json j, const Common& c, const std::vector<std::string>& argv,
                 const std::string& command, double wall_ms) {
  if (c.manifest) {
    json m;
    m["command"] = command;
    m["args"] = argv;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx", fixture_hash());
    m["fixture_hash"] = buf;
    m["wall_ms"] = wall_ms;
    j["manifest"] = m;
  }
  return j.dump(2) + "\n";
}

}  // namespace

CliResult dispatch(const std::vector<std::string>& argv) {
  CliResult res;
  CLI::App app{"exact combinatorics of the pure spinor cone and its interval algebras"};
  app.require_subcommand(1);

  // ---- classify
  auto* classify = app.add_subcommand("classify", "Gorenstein classifier");
  std::string classify_interval;
  Common classify_c;
  classify->add_option("--interval", classify_interval)->required();
  add_common(classify, &classify_c);

  // ---- hilbert
  auto* hilbert = app.add_subcommand("hilbert", "multigraded Hilbert series");
  std::string hilbert_interval, hilbert_refine = "tq";
  int hilbert_tmax = 8;
  Common hilbert_c;
  hilbert->add_option("--interval", hilbert_interval)->required();
  hilbert->add_option("--tmax", hilbert_tmax)->check(CLI::Range(0, 64));
  hilbert->add_option("--refine", hilbert_refine)
      ->check(CLI::IsMember({"t", "tq", "tqz"}));
  add_common(hilbert, &hilbert_c);

  // ---- chi
  auto* chi_cmd = app.add_subcommand("chi", "dualizing character and a-invariant");
  std::string chi_interval;
  Common chi_c;
  chi_cmd->add_option("--interval", chi_interval)->required();
  add_common(chi_cmd, &chi_c);

  // ---- duality
  auto* duality = app.add_subcommand("duality", "Koszul duality check");
  std::string duality_interval;
  int duality_tmax = 6;
  Common duality_c;
  duality->add_option("--interval", duality_interval)->required();
  duality->add_option("--tmax", duality_tmax)->check(CLI::Range(0, 16));
  add_common(duality, &duality_c);

  // ---- partition
  auto* partition = app.add_subcommand("partition", "partition function");
  std::string partition_interval;
  bool partition_renorm = false;
  Common partition_c;
  partition->add_option("--interval", partition_interval)->required();
  partition->add_flag("--renorm", partition_renorm);
  add_common(partition, &partition_c);

  // ---- qexpand
  auto* qexpand = app.add_subcommand("qexpand", "stabilized q-expansion");
  int q_min = -2, q_max = 0, tdepth = 10, nbudget = 6;
  Common qexpand_c;
  qexpand->add_option("--qmin", q_min);
  qexpand->add_option("--qmax", q_max);
  qexpand->add_option("--tdepth", tdepth)->check(CLI::Range(0, 32));
  qexpand->add_option("--nbudget", nbudget)->check(CLI::Range(2, 10));
  add_common(qexpand, &qexpand_c);

  // ---- verify
  auto* verify = app.add_subcommand("verify", "functional equations");
  std::string equation;
  int verify_n = 0;
  Common verify_c;
  verify->add_option("--equation", equation)
      ->required()
      ->check(CLI::IsMember({"star", "faf", "bv"}));
  verify->add_option("--N", verify_n)->required()->check(CLI::Range(0, 4));
  add_common(verify, &verify_c);

  // ---- betti
  auto* betti = app.add_subcommand("betti", "Koszul homology Betti table");
  std::string betti_interval;
  int betti_jmax = 8;
  Common betti_c;
  betti->add_option("--interval", betti_interval)->required();
  betti->add_option("--jmax", betti_jmax)->check(CLI::Range(0, 12));
  add_common(betti, &betti_c);

  // ---- loccoh
  auto* loccoh = app.add_subcommand("loccoh", "local cohomology weights");
  std::string loccoh_interval, loccoh_ideal = "a";
  int umax = 4, nmax = 3, tlo = -12, thi = 6;
  Common loccoh_c;
  loccoh->add_option("--interval", loccoh_interval)->required();
  loccoh->add_option("--ideal", loccoh_ideal)->check(CLI::IsMember({"a", "m"}));
  loccoh->add_option("--umax", umax)->check(CLI::Range(0, 16));
  loccoh->add_option("--nmax", nmax)->check(CLI::Range(2, 8));
  loccoh->add_option("--tlo", tlo);
  loccoh->add_option("--thi", thi);
  add_common(loccoh, &loccoh_c);

  // ---- enumerate-cap2
  auto* cap2 = app.add_subcommand("enumerate-cap2", "capacity-2 intervals");
  int lvl_min = 0, lvl_max = 0;
  Common cap2_c;
  cap2->add_option("--level-min", lvl_min);
  cap2->add_option("--level-max", lvl_max);
  add_common(cap2, &cap2_c);

  // ---- paths
  auto* paths = app.add_subcommand("paths", "quadratic dual dimensions");
  std::string paths_interval;
  int paths_dmax = 6;
  Common paths_c;
  paths->add_option("--interval", paths_interval)->required();
  paths->add_option("--dmax", paths_dmax)->check(CLI::Range(0, 16));
  add_common(paths, &paths_c);

  // ---- poset
  auto* poset = app.add_subcommand("poset", "vertex data");
  std::string vertex_text;
  Common poset_c;
  poset->add_option("--vertex", vertex_text)->required();
  add_common(poset, &poset_c);

  std::vector<const char*> cargs;
  cargs.push_back("spincone");
  for (const auto& a : argv) cargs.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::CallForHelp& e) {
    res.out = app.help();
    res.exit_code = 0;
    return res;
  } catch (const CLI::ParseError& e) {
    res.err = std::string(e.what()) + "\n\n" + app.help();
    res.exit_code = 2;
    return res;
  }

  auto start = std::chrono::steady_clock::now();
  auto wall_ms = [&start] {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
  };

  try {
    if (classify->parsed()) {
      Interval iv = need_interval(classify_interval);
      json j = interval_json(iv);
      j["schema"] = 1;
      res.out = emit(j, classify_c, argv, "classify", wall_ms());
      return res;
    }
    if (hilbert->parsed()) {
      Interval iv = need_interval(hilbert_interval);
      Refine r = hilbert_refine == "t"    ? Refine::T
                 : hilbert_refine == "tq" ? Refine::TQ
                                          : Refine::TQZ;
      GradedSeries s = hilbert_dp(iv, hilbert_tmax, r);
      if (hilbert_c.format == "csv") {
        res.out = series_csv(s);
        return res;
      }
      json j;
      j["schema"] = 1;
      j["interval"] = interval_json(iv);
      j["series"] = series_json(s);
      res.out = emit(j, hilbert_c, argv, "hilbert", wall_ms());
      return res;
    }
    if (chi_cmd->parsed()) {
      Interval iv = need_interval(chi_interval);
      Weight w = chi(iv);
      json j;
      j["schema"] = 1;
      j["interval"] = interval_json(iv);
      j["a"] = w.a;
      j["u"] = w.u;
      j["z_doubled"] = w.z;
      j["a_invariant"] = w.a;
      std::ostringstream os;
      os << "t^" << w.a << " q^" << w.u;
      j["character"] = os.str();
      res.out = emit(j, chi_c, argv, "chi", wall_ms());
      return res;
    }
    if (duality->parsed()) {
      Interval iv = need_interval(duality_interval);
      bool ok = koszul_duality_check(iv, duality_tmax);
      json j;
      j["schema"] = 1;
      j["interval"] = interval_json(iv);
      j["t_max"] = duality_tmax;
      j["holds"] = ok;
      res.out = emit(j, duality_c, argv, "duality", wall_ms());
      res.exit_code = ok ? 0 : 1;
      return res;
    }
    if (partition->parsed()) {
      Interval iv = need_interval(partition_interval);
      if (iv.lower().label != Label::L0 || iv.upper().label != Label::L1)
        throw BadIntervalForIdeal(
            "partition functions use the standard family [(0)^N:(1)^N']");
      int n_lo = iv.lower().level, n_hi = iv.upper().level;
      Rat2 z = partition_renorm ? z_renorm_standard(n_lo, n_hi)
                                : z_bare_standard(n_lo, n_hi);
      json j;
      j["schema"] = 1;
      j["interval"] = interval_json(iv);
      j["renormalized"] = partition_renorm;
      j["partition_function"] = rat2_json(z);
      res.out = emit(j, partition_c, argv, "partition", wall_ms());
      return res;
    }
    if (qexpand->parsed()) {
      std::vector<int> orders;
      for (int u = q_min; u <= q_max; ++u) orders.push_back(u);
      StabilizationReport rep = stabilization_scan(orders, tdepth, nbudget);
      json j;
      j["schema"] = 1;
      j["stabilized"] = rep.stabilized;
      j["n_at_stabilization"] = rep.n_at_stabilization;
      j["n_budget"] = rep.n_budget;
      j["t_lo"] = rep.t_lo;
      json slices;
      for (const auto& [u, coeffs] : rep.slices) {
        json arr = json::array();
        for (const auto& c : coeffs) arr.push_back(c.get_str());
        slices[std::to_string(u)] = arr;
      }
      j["slices"] = slices;
      res.out = emit(j, qexpand_c, argv, "qexpand", wall_ms());
      res.exit_code = rep.stabilized ? 0 : 1;
      return res;
    }
    if (verify->parsed()) {
      json j;
      j["schema"] = 1;
      j["equation"] = equation;
      j["N"] = verify_n;
      bool ok = false;
      if (equation == "star") {
        EquationCheck c = verify_star_duality(verify_n);
        ok = c.holds;
        j["image_is_self"] = c.image_is_self;
        if (!ok) j["defect"] = rat2_json(c.defect);
      } else if (equation == "faf") {
        EquationCheck c = verify_field_antifield(verify_n);
        ok = c.holds;
        j["image_is_self"] = c.image_is_self;
        if (!ok) j["defect"] = rat2_json(c.defect);
      } else {
        BvReport r = verify_bv_duality(verify_n);
        ok = r.holds;
        j["ratio_is_monomial"] = r.ratio_is_monomial;
        j["sign"] = r.sign;
        j["t_exp"] = r.t_exp;
        j["q_exp"] = r.q_exp;
      }
      j["holds"] = ok;
      res.out = emit(j, verify_c, argv, "verify", wall_ms());
      res.exit_code = ok ? 0 : 1;
      return res;
    }
    if (betti->parsed()) {
      Interval iv = need_interval(betti_interval);
      BettiTable bt = koszul_betti(iv, betti_jmax, betti_c.jobs);
      json j;
      j["schema"] = 1;
      j["interval"] = interval_json(iv);
      j["j_max"] = betti_jmax;
      j["betti"] = betti_json(bt);
      j["euler_consistent"] = betti_euler_check(iv, bt, betti_jmax);
      res.out = emit(j, betti_c, argv, "betti", wall_ms());
      return res;
    }
    if (loccoh->parsed()) {
      Interval iv = need_interval(loccoh_interval);
      IdealKind kind = loccoh_ideal == "a" ? IdealKind::A : IdealKind::M;
      LocalCohomologyReport rep =
          local_cohomology_weights(iv, kind, umax, nmax, tlo, thi);
      json j;
      j["schema"] = 1;
      j["interval"] = interval_json(iv);
      j["ideal"] = loccoh_ideal;
      j["n_max"] = rep.n_max;
      j["koszul_generators"] = rep.s;
      json rows = json::array();
      for (const auto& [key, dim] : rep.dims) {
        auto [i, t, u] = key;
        json row;
        row["i"] = i;
        row["t"] = t;
        row["u"] = u;
        row["dim"] = dim;
        rows.push_back(row);
      }
      j["dims"] = rows;
      json unst = json::array();
      for (const auto& [i, t, u] : rep.unstable) {
        json row;
        row["i"] = i;
        row["t"] = t;
        row["u"] = u;
        unst.push_back(row);
      }
      j["unstable"] = unst;
      res.out = emit(j, loccoh_c, argv, "loccoh", wall_ms());
      res.exit_code = rep.unstable.empty() ? 0 : 1;
      return res;
    }
    if (cap2->parsed()) {
      auto list = enumerate_cap2(lvl_min, lvl_max);
      json arr = json::array();
      for (const Interval& iv : list) arr.push_back(interval_json(iv));
      json j;
      j["schema"] = 1;
      j["count"] = static_cast<int>(list.size());
      j["intervals"] = arr;
      res.out = emit(j, cap2_c, argv, "enumerate-cap2", wall_ms());
      return res;
    }
    if (paths->parsed()) {
      Interval iv = need_interval(paths_interval);
      json j;
      j["schema"] = 1;
      j["interval"] = interval_json(iv);
      json cp = json::array(), kd = json::array();
      for (int d = 0; d <= paths_dmax; ++d) {
        cp.push_back(clutter_path_count(iv, d).get_str());
        kd.push_back(koszul_dual_dim(iv, d).get_str());
      }
      j["clutter_paths"] = cp;
      j["koszul_dual_dims"] = kd;
      res.out = emit(j, paths_c, argv, "paths", wall_ms());
      return res;
    }
    if (poset->parsed()) {
      auto v = parse_vertex(vertex_text);
      if (!v)
        throw CLI::ValidationError("--vertex",
                                   "cannot parse vertex '" + vertex_text + "'");
      json j;
      j["schema"] = 1;
      j["vertex"] = to_string(*v);
      j["rho"] = rho(*v);
      j["level"] = level_u(*v);
      Point p = f_embed(*v);
      j["f"] = {p.x, p.y};
      j["ell"] = ell(*v);
      j["sigma"] = to_string(sigma(*v));
      json cov = json::array(), cocov = json::array();
      for (Vertex w : covers_of(*v)) cov.push_back(to_string(w));
      for (Vertex w : cocovers_of(*v)) cocov.push_back(to_string(w));
      j["covers"] = cov;
      j["cocovers"] = cocov;
      json clm = json::array(), clp = json::array();
      for (Vertex w : cl_set(*v, -1)) clm.push_back(to_string(w));
      for (Vertex w : cl_set(*v, +1)) clp.push_back(to_string(w));
      j["cl_minus"] = clm;
      j["cl_plus"] = clp;
      j["in_m"] = in_m(*v);
      res.out = emit(j, poset_c, argv, "poset", wall_ms());
      return res;
    }
  } catch (const CLI::ValidationError& e) {
    res.err = std::string(e.what()) + "\n";
    res.exit_code = 2;
    return res;
  } catch (const std::exception& e) {
    res.err = std::string("error: ") + e.what() + "\n";
    res.exit_code = 1;
    return res;
  }
  res.err = "no subcommand\n";
  res.exit_code = 2;
  return res;
}

}  // namespace spincone
