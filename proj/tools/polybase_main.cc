// Copyright 2026 The Polybase Authors.
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

// polybase: check submodular instances, decompose points of k B_f into few
// integer bases, and run the exhaustive oracles.

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "polybase/decomposition.h"
#include "polybase/errors.h"
#include "polybase/instance_io.h"
#include "polybase/oracle.h"
#include "polybase/polytope.h"

namespace polybase {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Options {
  std::string w;
  std::int64_t k = 0;
  bool trace = false;
  bool verify = false;
  bool dump_lp = false;
  std::int64_t k_max = 4;
  bool vertices = false;
};

int Code(ExitCode c) { return static_cast<int>(c); }

int Check(const Instance& instance, const Options&, std::ostream& out) {
  const SubmodularFn& f = instance.f;
  const SubmodularityReport report = IsSubmodular(f);
  if (report.submodular) {
    out << "submodular: yes, matroid rank: "
        << (IsMatroidRank(f) ? "yes" : "no") << ", dim B_f = " << Dimension(f)
        << "\n";
  } else {
    out << "submodular: no (violated by A = "
        << f.ground().Format(report.violation->first)
        << ", B = " << f.ground().Format(report.violation->second)
        << "), matroid rank: no\n";
  }
  out << "f(E) = " << f.Total() << "\n";
  const Box box = BoundingBox(f);
  out << "bounding box: lower = " << box.lower.ToString()
      << ", upper = " << box.upper.ToString() << "\n";
  return report.submodular ? Code(ExitCode::kOk) : Code(ExitCode::kInputFailure);
}

int DecomposeCommand(const Instance& instance, const Options& options,
                     std::ostream& out, std::ostream& err) {
  const SubmodularFn& f = instance.f;
  std::optional<IntVector> w = instance.w;
  std::optional<std::int64_t> k = instance.k;
  if (!options.w.empty()) w = ParseIntList(options.w);
  if (options.k != 0) k = options.k;
  if (!w || !k) throw UsageError("decompose needs w and k (flags or instance)");

  DecomposeOptions decompose_options;
  if (options.dump_lp) decompose_options.lp.dump = &err;
  const DecompositionResult result = Decompose(f, *w, *k, decompose_options);
  json certificate = CertificateToJson(result.decomposition, Dimension(f));
  if (options.trace) certificate["trace"] = TraceToJson(result.trace);
  int code = Code(ExitCode::kOk);
  if (options.verify) {
    const Verification v = Verify(f, result.decomposition);
    certificate["verification"] = {{"ok", v.ok}, {"failures", v.failures}};
    if (!v.ok) code = Code(ExitCode::kInvariantViolation);
  }
  out << certificate.dump(2) << "\n";
  return code;
}

int OracleCommand(const Instance& instance, const Options& options,
                  std::ostream& out) {
  const SubmodularFn& f = instance.f;
  if (!IsSubmodular(f).submodular) throw UsageError("function is not submodular");
  const oracle::CrLowerBound bound = oracle::CrExact(f, options.k_max);
  const int dim = Dimension(f);
  out << "cr ≥ " << bound.value << ", dim+1 = " << dim + 1
      << ", n = " << f.size();
  if (IsMatroidRank(f)) out << ", n+r−1 = " << f.size() + f.Total() - 1;
  out << "\n";
  out << "k_max = " << options.k_max << ", witness: k = " << bound.k
      << ", w = " << bound.w.ToString() << "\n";
  return Code(ExitCode::kOk);
}

int EnumerateCommand(const Instance& instance, const Options& options,
                     std::ostream& out) {
  const oracle::PointSet set = options.vertices
                                   ? oracle::EnumerateVertices(instance.f)
                                   : oracle::EnumerateBasePoints(instance.f);
  json points = json::array();
  for (const auto& p : set.points) points.push_back(p.values());
  out << json{{options.vertices ? "vertices" : "base_points", points}}.dump(2)
      << "\n";
  return Code(ExitCode::kOk);
}

using Command = int (*)(const Instance&, const Options&, std::ostream&,
                        std::ostream&);

int RunOne(Command command, const fs::path& path, const Options& options,
           std::ostream& out, std::ostream& err) {
  try {
    const Instance instance = LoadInstance(path);
    return command(instance, options, out, err);
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    if (!e.context().empty()) err << e.context() << "\n";
    return Code(e.code());
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return Code(e.code());
  }
}

// A directory runs every *.json inside it, in name order; --jobs spreads the
// files over threads but output stays in name order.
int Run(Command command, const std::string& target, const Options& options,
        int jobs) {
  if (!fs::is_directory(target)) {
    return RunOne(command, target, options, std::cout, std::cerr);
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(target)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<std::string> outs(files.size()), errs(files.size());
  std::vector<int> codes(files.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < files.size();) {
      std::ostringstream out, err;
      codes[i] = RunOne(command, files[i], options, out, err);
      outs[i] = out.str();
      errs[i] = err.str();
    }
  };
  std::vector<std::thread> threads;
  for (int t = 1; t < std::max(jobs, 1); ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  int code = 0;
  for (std::size_t i = 0; i < files.size(); ++i) {
    std::cout << "== " << files[i].filename().string() << "\n" << outs[i];
    std::cerr << errs[i];
    code = std::max(code, codes[i]);
  }
  return code;
}

int Main(int argc, char** argv) {
  CLI::App app{"Integer decompositions in base polytopes of submodular functions"};
  app.require_subcommand(1);
  Options options;
  int jobs = 1;
  int limit_n = 0;
  app.add_option("--jobs", jobs, "Parallel instances when given a directory")
      ->check(CLI::PositiveNumber);
  app.add_option("--limit-n", limit_n, "Ground-set size cap")
      ->check(CLI::Range(1, kMaxGroundSize));

  std::string path;
  auto add_path = [&path](CLI::App* sub) {
    sub->add_option("path", path, "Instance file or directory")->required();
  };

  CLI::App* check = app.add_subcommand("check", "Submodularity, matroid rank, box, dimension");
  add_path(check);

  CLI::App* decompose = app.add_subcommand("decompose", "Certificate for w in k B_f");
  add_path(decompose);
  decompose->add_option("--w", options.w, "Target vector, e.g. 2,2,2");
  decompose->add_option("--k", options.k, "Multiplicity")->check(CLI::PositiveNumber);
  decompose->add_flag("--trace", options.trace, "Attach the recursion trace");
  decompose->add_flag("--verify", options.verify, "Run the independent checker");
  decompose->add_flag("--dump-lp", options.dump_lp, "Dump LP systems to stderr");

  CLI::App* oracle = app.add_subcommand("oracle", "Exhaustive Caratheodory-rank lower bound");
  add_path(oracle);
  oracle->add_option("--k-max", options.k_max, "Largest k searched")
      ->check(CLI::PositiveNumber);

  CLI::App* enumerate = app.add_subcommand("enumerate", "Dump base points or vertices");
  add_path(enumerate);
  enumerate->add_flag("--vertices", options.vertices, "Greedy vertices instead of all base points");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : Code(ExitCode::kInputFailure);
  }

  try {
    if (limit_n != 0) SetGroundSetLimit(limit_n);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Code(e.code());
  }

  Command command = nullptr;
  if (*check) {
    command = [](const Instance& i, const Options& o, std::ostream& out,
                 std::ostream&) { return Check(i, o, out); };
  } else if (*decompose) {
    command = DecomposeCommand;
  } else if (*oracle) {
    command = [](const Instance& i, const Options& o, std::ostream& out,
                 std::ostream&) { return OracleCommand(i, o, out); };
  } else {
    command = [](const Instance& i, const Options& o, std::ostream& out,
                 std::ostream&) { return EnumerateCommand(i, o, out); };
  }
  return Run(command, path, options, jobs);
}

}  // namespace
}  // namespace polybase

int main(int argc, char** argv) { return polybase::Main(argc, argv); }
