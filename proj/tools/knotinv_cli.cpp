// knotinv: command-line driver. Exit codes: 0 ok, 2 input error,
// 3 numerical guard.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "knotinv/delta_rho.hpp"
#include "knotinv/errors.hpp"
#include "knotinv/generators.hpp"
#include "knotinv/knot_io.hpp"
#include "knotinv/mc_engine.hpp"
#include "knotinv/oracle.hpp"
#include "knotinv/reduction.hpp"
#include "knotinv/run_record.hpp"
#include "knotinv/smoothing.hpp"

namespace fs = std::filesystem;
using namespace knotinv;
using nlohmann::json;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitNumeric = 3;

// Sample counts are accepted in exponent form ("1e7").
std::uint64_t parse_count(const std::string& s, const char* what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || !(v >= 1.0) || v != std::floor(v) || v > 1e15) {
    throw ConfigError(std::string(what) + " must be a positive integer, got '" +
                      s + "'");
  }
  return static_cast<std::uint64_t>(v);
}

struct SamplerFlags {
  std::string n = "1e6";
  std::uint64_t seed = 1;
  double epsilon = -1.0;
  std::string normal = "diagonal";
  double threshold = 1.0 / 6.11;
  int workers = 0;
  std::string n_rho1;
  bool serial = false;

  void add(CLI::App* app) {
    app->add_option("--n", n, "total sample count (exponent form allowed)");
    app->add_option("--seed", seed, "RNG seed");
    app->add_option("--epsilon", epsilon,
                    "framing shift; default 1e-4 * min segment length, 0 "
                    "disables framing");
    app->add_option("--normal", normal, "framing normal field")
        ->check(CLI::IsMember({"diagonal", "tangent"}));
    app->add_option("--threshold", threshold, "target standard error");
    app->add_option("--workers", workers,
                    "worker threads (default: KNOTINV_WORKERS or all cores)");
    app->add_option("--n-rho1", n_rho1,
                    "samples for the triple integral (default: volume ratio)");
    app->add_flag("--serial", serial, "use the serial reference path");
  }

  SamplerConfig config() const {
    SamplerConfig c;
    c.n = parse_count(n, "--n");
    c.seed = seed;
    if (epsilon >= 0.0) c.epsilon = epsilon;
    c.normal_rule =
        normal == "tangent" ? NormalRule::kTangentNormal : NormalRule::kDiagonal;
    c.threshold_sigma = threshold;
    c.workers = workers;
    if (!n_rho1.empty()) c.n_rho1 = parse_count(n_rho1, "--n-rho1");
    c.execution = serial ? Execution::kSerial : Execution::kParallel;
    return c;
  }
};

void emit(const json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << j.dump(2) << '\n';
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

SmoothedKnot prepare(const DiscreteKnot& k, bool no_smoothing) {
  return no_smoothing ? SmoothedKnot::unsmoothed(k) : SmoothedKnot::smooth(k);
}

// Knot type from a file name such as "3_1_lattice_24.knot".
std::string type_from_name(const std::string& stem) {
  const auto pos = stem.find('_', stem.find('_') + 1);
  const std::string head = stem.substr(0, pos);
  return has_analytic_rho(head) ? head : std::string();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vassiliev degree-2 invariant of polygonal knots"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--json", out_path, "write the run record here (default stdout)");

  // compute
  auto* compute = app.add_subcommand("compute", "estimate rho for a knot file");
  std::string in_path;
  SamplerFlags sflags;
  bool no_smoothing = false;
  bool adaptive = false;
  std::string batch = "1e6";
  std::string csv_path;
  compute->add_option("input", in_path, "knot file (.knot or .json)")->required();
  sflags.add(compute);
  compute->add_flag("--no-smoothing", no_smoothing,
                    "integrate over the raw polygon");
  compute->add_flag("--adaptive", adaptive,
                    "sample in batches until the threshold is met");
  compute->add_option("--batch", batch, "batch size for --adaptive");
  compute->add_option("--csv", csv_path, "also write a one-row CSV");

  // smooth
  auto* smooth = app.add_subcommand("smooth", "plan corners and dump the curve");
  std::string table_path, dump_path;
  int per_segment = 64;
  smooth->add_option("input", in_path)->required();
  smooth->add_option("--table", table_path, "CSV of the corner plan");
  smooth->add_option("--dump", dump_path, "CSV polyline S,x,y,z,tx,ty,tz");
  smooth->add_option("--per-segment", per_segment, "dump points per segment")
      ->check(CLI::PositiveNumber);

  // reduce
  auto* reduce = app.add_subcommand("reduce", "simplify a lattice knot");
  std::string reduced_path;
  double unit = 0.0;
  reduce->add_option("input", in_path)->required();
  reduce->add_option("output", reduced_path, "reduced knot file")->required();
  reduce->add_option("--unit", unit, "lattice unit for the tadpole rule");

  // delta
  auto* delta = app.add_subcommand("delta", "estimate rho(T) - rho(R)");
  std::string ref_path, trans_path;
  long long range_begin = -1;
  long long range_count = -1;
  SamplerFlags dflags;
  delta->add_option("reference", ref_path)->required();
  delta->add_option("transformed", trans_path)->required();
  delta->add_option("--begin", range_begin, "first changed segment");
  delta->add_option("--count", range_count, "number of changed segments");
  dflags.add(delta);

  // oracle
  auto* oracle = app.add_subcommand("oracle", "grid quadrature of rho");
  int q = 1;
  int cap = 200;
  double oracle_eps = -1.0;
  oracle->add_option("input", in_path)->required();
  oracle->add_option("--q", q, "grid points per unit interval")
      ->check(CLI::PositiveNumber);
  oracle->add_option("--cap", cap, "largest allowed q * N");
  oracle->add_option("--epsilon", oracle_eps, "framing shift");
  oracle->add_flag("--no-smoothing", no_smoothing);

  // gen
  auto* gen = app.add_subcommand("gen", "write a built-in knot");
  std::string kind, gen_out, type;
  std::map<std::string, double> params;
  int sides = 64, p = 2, tq = 3;
  double radius = 1.0, side = 1.0, major = 2.0, minor = 1.0;
  gen->add_option("kind", kind)
      ->required()
      ->check(CLI::IsMember({"circle", "square", "torus", "lattice"}));
  gen->add_option("-o,--output", gen_out, "output file (default stdout)");
  gen->add_option("--sides", sides);
  gen->add_option("--radius", radius);
  gen->add_option("--side", side);
  gen->add_option("--p", p);
  gen->add_option("--q", tq);
  gen->add_option("--major", major);
  gen->add_option("--minor", minor);
  gen->add_option("--type", type, "lattice knot type: 0_1, 3_1, 4_1, 5_1");

  // table
  auto* table = app.add_subcommand(
      "table", "smoothed vs unsmoothed rho over a directory, or a ladder");
  std::string dir, ladder, table_csv;
  SamplerFlags tflags;
  table->add_option("--dir", dir, "directory of knot files");
  table->add_option("--input", in_path, "knot file for --ladder");
  table->add_option("--ladder", ladder, "comma separated sample counts");
  table->add_option("--csv", table_csv, "CSV output (default stdout)");
  tflags.add(table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  const auto t0 = std::chrono::steady_clock::now();
  try {
    RunRecord rec;
    if (*compute) {
      rec.command = "compute";
      const DiscreteKnot k = load_knot(in_path);
      rec.inputs.push_back({in_path, file_checksum(in_path)});
      SamplerConfig cfg = sflags.config();
      cfg.batch = parse_count(batch, "--batch");
      const SmoothedKnot sk = prepare(k, no_smoothing);
      const RhoEstimate r = adaptive ? run_until(sk, cfg) : rho(sk, cfg);
      rec.config = to_json(cfg);
      rec.config["smoothing"] = !no_smoothing;
      rec.config["adaptive"] = adaptive;
      rec.results = to_json(r);
      rec.results["N"] = k.size();
      if (!csv_path.empty()) {
        std::ostringstream os;
        os.precision(12);
        os << "file,N,mean,stderr,n,seed,rho1,rho2,a2\n"
           << in_path << ',' << k.size() << ',' << r.total.mean << ','
           << r.total.std_error << ',' << r.total.n_used << ',' << cfg.seed
           << ',' << r.rho1.mean << ',' << r.rho2.mean << ','
           << conway_a2(r.total.mean) << '\n';
        write_text(csv_path, os.str());
      }
    } else if (*smooth) {
      rec.command = "smooth";
      const DiscreteKnot k = load_knot(in_path);
      rec.inputs.push_back({in_path, file_checksum(in_path)});
      const SmoothedKnot sk = SmoothedKnot::smooth(k);
      rec.results["plan"] = plan_json(sk.plan());
      if (!table_path.empty()) {
        std::ostringstream os;
        os.precision(12);
        os << "corner,x,y,z,status,d,d_prime\n";
        for (std::size_t c = 0; c < k.size(); ++c) {
          const Vec3& v = k.vertex(c);
          os << c << ',' << v.x << ',' << v.y << ',' << v.z << ','
             << (sk.plan().smoothed(c) ? "SMOOTHED" : "PARALLEL_SKIP") << ','
             << sk.plan()[c].d_in << ',' << sk.plan()[c].d_out << '\n';
        }
        write_text(table_path, os.str());
      }
      if (!dump_path.empty()) {
        std::ostringstream os;
        os.precision(12);
        os << "S,x,y,z,tx,ty,tz\n";
        const std::size_t total = k.size() * static_cast<std::size_t>(per_segment);
        for (std::size_t i = 0; i <= total; ++i) {
          const double S = static_cast<double>(i) / per_segment;
          const SmoothedPoint sp = sample_smoothed(sk, S);
          os << S << ',' << sp.position.x << ',' << sp.position.y << ','
             << sp.position.z << ',' << sp.unit_tangent.x << ','
             << sp.unit_tangent.y << ',' << sp.unit_tangent.z << '\n';
        }
        write_text(dump_path, os.str());
      }
    } else if (*reduce) {
      rec.command = "reduce";
      const DiscreteKnot k = load_knot(in_path);
      rec.inputs.push_back({in_path, file_checksum(in_path)});
      ReductionOptions opts;
      if (unit > 0.0) opts.unit = unit;
      auto [reduced, report] = reduce_lattice(k, opts);
      save_knot(reduced, reduced_path);
      rec.config = {{"unit", unit > 0.0 ? json(unit) : json()},
                    {"output", reduced_path}};
      rec.results = to_json(report);
    } else if (*delta) {
      rec.command = "delta";
      const DiscreteKnot a = load_knot(ref_path);
      const DiscreteKnot b = load_knot(trans_path);
      rec.inputs.push_back({ref_path, file_checksum(ref_path)});
      rec.inputs.push_back({trans_path, file_checksum(trans_path)});
      Deformation def = make_deformation(a, b);
      if (range_begin >= 0) def.begin = static_cast<std::size_t>(range_begin);
      if (range_count >= 0) def.count = static_cast<std::size_t>(range_count);
      const SamplerConfig cfg = dflags.config();
      const DeltaEstimate d = delta_rho(def, cfg);
      rec.config = to_json(cfg);
      rec.config["declared_begin"] = def.begin;
      rec.config["declared_count"] = def.count;
      rec.results = to_json(d);
    } else if (*oracle) {
      rec.command = "oracle";
      const DiscreteKnot k = load_knot(in_path);
      rec.inputs.push_back({in_path, file_checksum(in_path)});
      QuadratureSpec spec;
      spec.q = q;
      spec.cap = cap;
      if (oracle_eps >= 0.0) spec.epsilon = oracle_eps;
      const OracleResult r = oracle_rho(prepare(k, no_smoothing), spec);
      rec.config = {{"q", q}, {"cap", cap}, {"smoothing", !no_smoothing}};
      rec.results = {{"rho1", r.rho1},
                     {"rho2", r.rho2},
                     {"rho", r.rho},
                     {"evaluations", r.evaluations},
                     {"n_flagged", r.n_flagged}};
    } else if (*gen) {
      params = {{"sides", sides}, {"radius", radius}, {"side", side},
                {"p", p},         {"q", tq},          {"major", major},
                {"minor", minor}};
      const DiscreteKnot k = generate(kind, params, type);
      if (gen_out.empty()) {
        write_knot_text(k, std::cout);
      } else {
        save_knot(k, gen_out);
      }
      return 0;
    } else if (*table) {
      rec.command = "table";
      const SamplerConfig cfg = tflags.config();
      rec.config = to_json(cfg);
      std::ostringstream os;
      os.precision(10);
      if (!ladder.empty()) {
        if (in_path.empty()) throw ConfigError("--ladder needs --input");
        std::vector<std::uint64_t> rungs;
        std::stringstream ss(ladder);
        for (std::string item; std::getline(ss, item, ',');) {
          rungs.push_back(parse_count(item, "--ladder"));
        }
        const DiscreteKnot k = load_knot(in_path);
        rec.inputs.push_back({in_path, file_checksum(in_path)});
        os << emit_convergence(SmoothedKnot::smooth(k), rungs, cfg);
      } else {
        if (dir.empty()) throw ConfigError("table needs --dir or --ladder");
        std::vector<fs::path> files;
        for (const auto& e : fs::directory_iterator(dir)) {
          const auto ext = e.path().extension();
          if (ext == ".knot" || ext == ".json") files.push_back(e.path());
        }
        std::sort(files.begin(), files.end());
        os << "file,type,N,rho_analytic,rho_sp,stderr_sp,rho_ns,stderr_ns\n";
        for (const fs::path& f : files) {
          const DiscreteKnot k = load_knot(f);
          rec.inputs.push_back({f.string(), file_checksum(f)});
          const std::string t = type_from_name(f.stem().string());
          const RhoEstimate sp = rho(SmoothedKnot::smooth(k), cfg);
          const RhoEstimate ns = rho(SmoothedKnot::unsmoothed(k), cfg);
          os << f.filename().string() << ',' << t << ',' << k.size() << ','
             << (t.empty() ? std::string() : std::to_string(analytic_rho(t)))
             << ',' << sp.total.mean << ',' << sp.total.std_error << ','
             << ns.total.mean << ',' << ns.total.std_error << '\n';
        }
      }
      rec.results["csv"] = os.str();
      if (table_csv.empty()) {
        std::cout << os.str();
      } else {
        write_text(table_csv, os.str());
      }
      if (out_path.empty()) return 0;
    }
    rec.wall_time = seconds_since(t0);
    emit(rec.json(), out_path);
    return 0;
  } catch (const NumericalGuardError& e) {
    std::cerr << "numerical guard: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const PlanningError& e) {
    std::cerr << "planning failed: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
}
