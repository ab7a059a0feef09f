#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "seqbench.h"

namespace seqbench_cli {

namespace {

std::vector<std::uint64_t> sweep_values(const std::string& sweep) {
  const auto fail = [&] {
    throw usage_error("--n-sweep expects min:max:factor with factor > 1, got '" + sweep + "'");
  };
  const std::size_t c1 = sweep.find(':');
  const std::size_t c2 = sweep.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos) fail();
  std::uint64_t lo = 0, hi = 0;
  double factor = 0.0;
  try {
    lo = std::stoull(sweep.substr(0, c1));
    hi = std::stoull(sweep.substr(c1 + 1, c2 - c1 - 1));
    factor = std::stod(sweep.substr(c2 + 1));
  } catch (const std::exception&) {
    fail();
  }
  if (lo == 0 || hi < lo || factor <= 1.0) fail();
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = lo; n <= hi;) {
    out.push_back(n);
    const std::uint64_t next = static_cast<std::uint64_t>(std::llround(double(n) * factor));
    n = std::max(n + 1, next);
  }
  return out;
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
  RunConfig cfg;
  CLI::App app{"seqbench: sequence-structure benchmark harness"};
  std::string sweep;
  double mem_limit_gb = 4.0;

  app.add_option("--bench", cfg.benches,
                 "bench ids: stroustrup stroustrup-binary fairbench fairbench-rand "
                 "addlast addfirst")
      ->required()
      ->delimiter(',');
  app.add_option("--impl", cfg.impls,
                 "structure ids: nocachelist linkedlist singlelist arraylist arrayring "
                 "arrayblock oracle")
      ->required()
      ->delimiter(',');
  app.add_option("--n", cfg.ns, "element counts, comma separated")->delimiter(',');
  app.add_option("--n-sweep", sweep, "geometric sweep min:max:factor");
  app.add_option("--seed", cfg.seed, "PRNG seed (default 1)");
  app.add_option("--repeats", cfg.repeats, "timed repeats per run, minimum kept (default 5)");
  app.add_option("--k", cfg.ks, "fairbench-rand increment bounds (default 32)")->delimiter(',');
  app.add_option("--block-capacity", cfg.block_capacity,
                 "arrayblock block capacity (default 2048)");
  auto* mem_opt =
      app.add_option("--mem-limit-gb", mem_limit_gb, "memory gate in GiB (default 4)");
  app.add_option("--out", cfg.out, "CSV output path, '-' for stdout");
  app.add_option("--emit-gnuplot", cfg.gnuplot_path, "also write a gnuplot script here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    std::ostringstream help;
    help << app.help();
    throw usage_error(help.str());
  } catch (const CLI::ParseError& e) {
    throw usage_error(e.what());
  }

  if (mem_opt->count() == 0) {
    if (const char* env = std::getenv("SEQBENCH_MEM_LIMIT_GB")) {
      try {
        mem_limit_gb = std::stod(env);
      } catch (const std::exception&) {
        throw usage_error("SEQBENCH_MEM_LIMIT_GB is not a number: " + std::string(env));
      }
    }
  }
  if (mem_limit_gb <= 0.0) throw usage_error("--mem-limit-gb must be positive");
  cfg.mem_limit_bytes = static_cast<std::uint64_t>(mem_limit_gb * double(1ull << 30));

  if (!sweep.empty()) {
    const auto vals = sweep_values(sweep);
    cfg.ns.insert(cfg.ns.end(), vals.begin(), vals.end());
  }
  std::sort(cfg.ns.begin(), cfg.ns.end());
  cfg.ns.erase(std::unique(cfg.ns.begin(), cfg.ns.end()), cfg.ns.end());
  if (cfg.ns.empty()) throw usage_error("no element counts: pass --n or --n-sweep");

  if (cfg.gnuplot_path && cfg.out == "-")
    throw usage_error("--emit-gnuplot needs --out pointing at a file");
  return cfg;
}

void validate_config(const RunConfig& cfg) {
  for (const auto& n : cfg.ns)
    if (n < 3) throw usage_error("--n values must be >= 3, got " + std::to_string(n));
  for (const auto& k : cfg.ks)
    if (k != 32 && k != 64 && k != 128)
      throw usage_error("--k values must be 32, 64 or 128, got " + std::to_string(k));
  if (cfg.repeats < 1) throw usage_error("--repeats must be >= 1");

  for (const auto& bench : cfg.benches) {
    for (const auto& impl : cfg.impls) {
      for (const auto& n : cfg.ns) {
        const sb_status st = sb_bench_admissible(bench.c_str(), impl.c_str(), n);
        if (st == SB_ERR_BAD_ARG)
          throw usage_error("unknown id in --bench/--impl: " + bench + "/" + impl);
        if (st == SB_ERR_INADMISSIBLE)
          throw usage_error("inadmissible pairing: " + bench + "/" + impl + " at n=" +
                            std::to_string(n));
      }
    }
  }
  for (const auto& impl : cfg.impls) {
    for (const auto& n : cfg.ns) {
      std::uint64_t bytes = 0;
      if (sb_model_peak_bytes(impl.c_str(), n, cfg.block_capacity, &bytes) != SB_OK)
        throw usage_error("unknown structure id: " + impl);
      if (bytes > cfg.mem_limit_bytes)
        throw usage_error("memory gate: " + impl + " at n=" + std::to_string(n) +
                          " models " + std::to_string(bytes) + " bytes, limit " +
                          std::to_string(cfg.mem_limit_bytes));
    }
  }
}

std::vector<ResultRow> run_all(const RunConfig& cfg) {
  validate_config(cfg);
  std::vector<ResultRow> rows;
  for (const auto& bench : cfg.benches) {
    const bool uses_k = bench == "fairbench-rand";
    for (const auto& impl : cfg.impls) {
      for (const auto& n : cfg.ns) {
        const std::vector<std::uint32_t> kset = uses_k ? cfg.ks : std::vector<std::uint32_t>{0};
        for (const auto& k : kset) {
          sb_bench_spec spec{};
          spec.bench_id = bench.c_str();
          spec.structure_id = impl.c_str();
          spec.n = n;
          spec.k = k;
          spec.seed = cfg.seed;
          spec.repeats = cfg.repeats;
          spec.block_capacity = cfg.block_capacity;
          sb_bench_result res{};
          const sb_status st = sb_bench_run(&spec, &res);
          if (st != SB_OK)
            throw usage_error("bench " + bench + "/" + impl + " failed: " + sb_status_str(st));
          ResultRow row;
          row.bench = bench;
          row.impl = impl;
          row.n = n;
          row.k = k;
          row.seed = cfg.seed;
          row.repeats = cfg.repeats;
          row.min_ticks = res.min_ticks;
          row.checksum = res.checksum;
          row.model_bytes = res.model_bytes;
          rows.push_back(std::move(row));
        }
      }
    }
  }
  std::sort(rows.begin(), rows.end(), [](const ResultRow& a, const ResultRow& b) {
    return std::tie(a.bench, a.impl, a.n, a.k) < std::tie(b.bench, b.impl, b.n, b.k);
  });
  return rows;
}

std::string format_csv(const std::vector<ResultRow>& rows) {
  std::ostringstream out;
  out << "bench,impl,n,k,seed,repeats,min_ticks,checksum,model_bytes\n";
  for (const auto& r : rows) {
    out << r.bench << ',' << r.impl << ',' << r.n << ',' << r.k << ',' << r.seed << ','
        << r.repeats << ',' << r.min_ticks << ',' << r.checksum << ',' << r.model_bytes << '\n';
  }
  return out.str();
}

void emit_gnuplot(const std::string& csv_path, const std::string& script_path) {
  std::ifstream csv(csv_path);
  if (!csv) throw io_error("cannot open CSV: " + csv_path);
  std::string line;
  if (!std::getline(csv, line)) throw io_error("CSV is empty: " + csv_path);

  struct Point {
    std::uint64_t n;
    std::uint64_t ticks;
    std::uint32_t k;
  };
  // bench -> curve label -> points
  std::map<std::string, std::map<std::string, std::vector<Point>>> curves;
  while (std::getline(csv, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cols;
    std::stringstream ss(line);
    std::string col;
    while (std::getline(ss, col, ',')) cols.push_back(col);
    if (cols.size() != 9) throw io_error("malformed CSV row: " + line);
    Point p{};
    p.n = std::stoull(cols[2]);
    p.k = static_cast<std::uint32_t>(std::stoul(cols[3]));
    p.ticks = std::stoull(cols[6]);
    std::string label = cols[1];
    if (cols[0] == "fairbench-rand") label += " k=" + cols[3];
    curves[cols[0]][label].push_back(p);
  }
  if (curves.empty()) throw io_error("CSV has no data rows: " + csv_path);

  const auto ident = [](std::string s) {
    for (auto& c : s)
      if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
    return s;
  };

  std::ostringstream out;
  out << "# generated by seqbench from " << csv_path << "\n";
  out << "set datafile separator \",\"\n";
  out << "set logscale x\n";
  out << "set xlabel \"n\"\n";
  out << "set ylabel \"min ticks (ns)\"\n";
  out << "set key top left\n";
  out << "set terminal pngcairo size 1000,700\n\n";
  for (auto& [bench, impls] : curves) {
    for (auto& [label, pts] : impls) {
      std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return a.n < b.n; });
      out << "$data_" << ident(bench) << "_" << ident(label) << " << EOD\n";
      for (const auto& p : pts) out << p.n << "," << p.ticks << "\n";
      out << "EOD\n";
    }
    out << "\nset output \"" << bench << ".png\"\n";
    out << "set title \"" << bench << "\"\n";
    bool first = true;
    for (auto& [label, pts] : impls) {
      out << (first ? "plot " : ", \\\n     ");
      out << "$data_" << ident(bench) << "_" << ident(label)
          << " using 1:2 with linespoints title \"" << label << "\"";
      first = false;
    }
    out << "\n\n";
  }

  std::ofstream script(script_path);
  if (!script) throw io_error("cannot write gnuplot script: " + script_path);
  script << out.str();
  if (!script.good()) throw io_error("write failed: " + script_path);
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    const bool wants_help =
        std::find_if(args.begin(), args.end(), [](const std::string& a) {
          return a == "-h" || a == "--help";
        }) != args.end();
    if (wants_help) {
      try {
        parse_args(args);
      } catch (const usage_error& e) {
        std::cout << e.what() << "\n";
      }
      return kExitOk;
    }
    const RunConfig cfg = parse_args(args);
    const std::vector<ResultRow> rows = run_all(cfg);
    const std::string csv = format_csv(rows);
    if (cfg.out == "-") {
      std::cout << csv;
      if (!std::cout.good()) throw io_error("write to stdout failed");
    } else {
      std::ofstream out(cfg.out);
      if (!out) throw io_error("cannot write CSV: " + cfg.out);
      out << csv;
      out.flush();
      if (!out.good()) throw io_error("write failed: " + cfg.out);
    }
    if (cfg.gnuplot_path) emit_gnuplot(cfg.out, *cfg.gnuplot_path);
    return kExitOk;
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
}

}  // namespace seqbench_cli
