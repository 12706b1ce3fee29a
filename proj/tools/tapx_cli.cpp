// Copyright 2026 The tapx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <tapx/tapx.h>

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

enum Exit { kOk = 0, kUsage = 1, kInfeasible = 2, kAssertion = 3, kRatio = 4, kNotCover = 5 };

struct Failure {
  int code;
  std::string msg;
};

int exit_for(tapx_status s) {
  switch (s) {
    case TAPX_OK: return kOk;
    case TAPX_ERR_INFEASIBLE: return kInfeasible;
    case TAPX_ERR_ASSERTION: return kAssertion;
    default: return kUsage;
  }
}

void check(tapx_status s) {
  if (s != TAPX_OK) throw Failure{exit_for(s), tapx_last_error()};
}

using Instance = std::unique_ptr<tapx_instance, decltype(&tapx_instance_free)>;
using Solution = std::unique_ptr<tapx_solution, decltype(&tapx_solution_free)>;

std::string take(char* s) {
  std::string out(s);
  tapx_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kUsage, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Failure{kUsage, "cannot write " + path};
}

Instance load(const std::string& path) {
  tapx_instance* p = nullptr;
  check(tapx_instance_parse(read_file(path).c_str(), &p));
  return Instance(p, tapx_instance_free);
}

Instance generate(int n, double density, uint64_t seed) {
  tapx_instance* p = nullptr;
  check(tapx_instance_generate(n, density, seed, &p));
  return Instance(p, tapx_instance_free);
}

Solution solve(const tapx_instance* inst, bool assert_on, bool trace) {
  tapx_solve_options opt;
  tapx_solve_options_default(&opt);
  opt.check = assert_on;
  opt.trace = trace;
  tapx_solution* s = nullptr;
  check(tapx_solve(inst, &opt, &s));
  return Solution(s, tapx_solution_free);
}

std::vector<int> parse_sizes(const std::string& list) {
  std::vector<int> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size() || v < 2) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw Failure{kUsage, "bad size list entry '" + item + "'"};
    }
  }
  if (out.empty()) throw Failure{kUsage, "empty size list"};
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tree augmentation: 3/2-approximation, baselines and exact oracle"};
  app.require_subcommand(1);

  int nodes = 10, count = 100, max_size = -1;
  double density = 0.3, bench_density = 0.0;
  uint64_t seed = 1;
  std::string input, out, trace_path, cover, sizes = "25,50,100,200";
  bool no_assert = false, bench_assert = false;

  auto* gen = app.add_subcommand("gen", "Generate a random feasible instance");
  gen->add_option("--nodes", nodes, "Node count")->required()->check(CLI::Range(2, 1 << 20));
  gen->add_option("--density", density, "Probability of each node pair becoming a link")
      ->required()->check(CLI::Range(1e-12, 1.0));
  gen->add_option("--seed", seed, "RNG seed")->required();
  gen->add_option("--out", out, "Output file (default stdout)");

  auto* sol = app.add_subcommand("solve", "Run the 3/2-approximation");
  sol->add_option("--input", input, "Instance file")->required();
  sol->add_option("--out", out, "Solution file (default stdout)");
  sol->add_option("--trace", trace_path, "JSON-lines audit trace file");
  sol->add_flag("--no-assert", no_assert, "Skip the per-iteration invariant suite");

  auto* ex = app.add_subcommand("exact", "Exact optimum by search over maximal links");
  ex->add_option("--input", input, "Instance file")->required();
  ex->add_option("--max-size", max_size, "Give up above this size")->check(CLI::NonNegativeNumber);

  auto* ver = app.add_subcommand("verify", "Check that a solution covers every tree edge");
  ver->add_option("--input", input, "Instance file")->required();
  ver->add_option("--cover", cover, "Solution file")->required();

  auto* rat = app.add_subcommand("ratio", "Compare solve against the exact optimum on a corpus");
  rat->add_option("--nodes", nodes, "Node count")->required()->check(CLI::Range(2, 64));
  rat->add_option("--count", count, "Instances")->required()->check(CLI::PositiveNumber);
  rat->add_option("--density", density, "Link density")->required()->check(CLI::Range(1e-12, 1.0));
  rat->add_option("--seed", seed, "Base seed; instance i uses seed + i")->required();

  auto* ben = app.add_subcommand("bench", "Runtime scaling report (CSV)");
  ben->add_option("--sizes", sizes, "Comma-separated node counts");
  ben->add_option("--seed", seed, "RNG seed")->required();
  ben->add_option("--density", bench_density,
                  "Link density (default: about three input links per node)")
      ->check(CLI::Range(1e-12, 1.0));
  ben->add_flag("--assert", bench_assert, "Run the invariant suite while timing");

  auto* ana = app.add_subcommand("anatomy", "Print leaves, stems, buds and link kinds");
  ana->add_option("--input", input, "Instance file")->required();

  auto* lp = app.add_subcommand("lp", "Export the overlap-strengthened covering LP");
  lp->add_option("--input", input, "Instance file")->required();
  lp->add_option("--out", out, "LP file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) {
      auto inst = generate(nodes, density, seed);
      char* text = nullptr;
      check(tapx_instance_format(inst.get(), &text));
      write_out(out, take(text));
    } else if (*sol) {
      auto inst = load(input);
      auto s = solve(inst.get(), !no_assert, !trace_path.empty());
      char* text = nullptr;
      check(tapx_solution_format(s.get(), &text));
      write_out(out, take(text));
      if (!trace_path.empty()) {
        check(tapx_solution_trace(s.get(), &text));
        write_out(trace_path, take(text));
      }
    } else if (*ex) {
      auto inst = load(input);
      tapx_exact_info info{};
      tapx_solution* w = nullptr;
      check(tapx_exact(inst.get(), max_size, 0, &info, &w));
      Solution witness(w, tapx_solution_free);
      if (info.exact) {
        char* text = nullptr;
        check(tapx_solution_format(witness.get(), &text));
        std::cout << take(text) << "opt " << info.size << "\n";
      } else {
        std::cout << "bracket " << info.lower << " " << info.upper << "\n";
      }
    } else if (*ver) {
      auto inst = load(input);
      int ok = 0, child = -1, parent = -1;
      check(tapx_verify(inst.get(), read_file(cover).c_str(), &ok, &child, &parent));
      if (!ok) {
        std::cout << "uncovered edge " << parent << " " << child << "\n";
        return kNotCover;
      }
      std::cout << "ok\n";
    } else if (*rat) {
      double worst = 0.0, sum = 0.0;
      uint64_t worst_seed = seed;
      int violations = 0;
      for (int i = 0; i < count; ++i) {
        uint64_t s = seed + static_cast<uint64_t>(i);
        auto inst = generate(nodes, density, s);
        auto res = solve(inst.get(), true, false);
        tapx_exact_info info{};
        check(tapx_exact(inst.get(), -1, 0, &info, nullptr));
        if (!info.exact) throw Failure{kUsage, "exact search budget exhausted, seed " + std::to_string(s)};
        int f = tapx_solution_closed_size(res.get());
        double r = static_cast<double>(f) / info.size;
        sum += r;
        if (r > worst) worst = r, worst_seed = s;
        if (2 * f > 3 * info.size) {
          ++violations;
          std::cerr << "violation seed " << s << ": " << f << " > 1.5 * " << info.size << "\n";
        }
      }
      std::printf("instances %d\nmax_ratio %.6f\nmean_ratio %.6f\nworst_seed %llu\nviolations %d\n",
                  count, worst, sum / count, static_cast<unsigned long long>(worst_seed), violations);
      if (violations > 0) return kRatio;
    } else if (*ben) {
      std::cout << "n,m_input,m_closed,iterations,greedy_count,wall_ms\n";
      for (int n : parse_sizes(sizes)) {
        double d = bench_density > 0 ? bench_density : std::min(1.0, 6.0 / (n - 1));
        auto inst = generate(n, d, seed);
        auto t0 = std::chrono::steady_clock::now();
        auto s = solve(inst.get(), bench_assert, false);
        auto t1 = std::chrono::steady_clock::now();
        tapx_stats st{};
        check(tapx_solution_stats(s.get(), &st));
        double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        std::printf("%d,%d,%d,%d,%d,%.1f\n", n, tapx_instance_input_link_count(inst.get()),
                    tapx_instance_closed_link_count(inst.get()), st.iterations, st.greedy, ms);
        std::fflush(stdout);
      }
    } else if (*ana) {
      auto inst = load(input);
      char* text = nullptr;
      check(tapx_anatomy_format(inst.get(), &text));
      std::cout << take(text);
    } else if (*lp) {
      auto inst = load(input);
      char* text = nullptr;
      check(tapx_lp_export(inst.get(), &text));
      write_out(out, take(text));
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.msg << "\n";
    return f.code;
  }
  return kOk;
}
