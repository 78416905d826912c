#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "magic/construct.hpp"
#include "magic/errors.hpp"
#include "magic/generators.hpp"
#include "magic/graph_io.hpp"
#include "magic/json_io.hpp"
#include "magic/spectrum.hpp"

namespace fs = std::filesystem;
using namespace magic;

namespace {

enum Exit { kOk = 0, kNegative = 1, kInvalid = 2, kUndecided = 3 };

PredictOptions options_from_env() {
  PredictOptions opts;
  if (const char* env = std::getenv("MAGIC_SOLVER_BUDGET")) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(env, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || env[pos] != '\0' || v <= 0) {
      throw InvalidInput(std::string("MAGIC_SOLVER_BUDGET must be a positive integer, got '") + env + "'");
    }
    opts.budget.max_nodes = v;
  }
  return opts;
}

std::string set_string(const std::vector<Label>& v) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << '}';
  return out.str();
}

MultiGraph make_family(const std::string& family, int n, int r, std::optional<std::uint64_t> seed,
                       const std::string& parts) {
  auto need = [&](bool ok, const char* what) {
    if (!ok) throw InvalidInput("family " + family + " needs " + what);
  };
  if (family == "cycle") {
    need(n >= 3, "--n >= 3");
    return cycle_graph(n);
  }
  if (family == "complete") {
    need(n >= 1, "--n >= 1");
    return complete_graph(n);
  }
  if (family == "complete_bipartite") {
    need(n >= 1, "--n >= 1");
    return complete_bipartite_graph(n, r > 0 ? r : n);
  }
  if (family == "circulant") {
    need(n >= 3 && r >= 1 && r < n, "--n >= 3 and 1 <= --r < n");
    if (r % 2 == 1) need(n % 2 == 0, "even --n for odd --r");
    std::vector<int> jumps;
    for (int j = 1; j <= r / 2; ++j) jumps.push_back(j);
    if (r % 2 == 1) jumps.push_back(n / 2);
    if (r % 2 == 1 && r / 2 >= n / 2) throw InvalidInput("circulant: --r too large for --n");
    return circulant_graph(n, jumps);
  }
  if (family == "petersen") return petersen_graph();
  if (family == "prism") {
    need(n >= 3, "--n >= 3");
    return prism_graph(n);
  }
  if (family == "random_regular") {
    need(seed.has_value(), "--seed");
    need(n >= 1 && r >= 0, "--n and --r");
    return random_regular_graph(n, r, *seed);
  }
  if (family == "disjoint_union") {
    need(!parts.empty(), "--parts, e.g. cycle:3,cycle:4");
    std::vector<MultiGraph> graphs;
    std::stringstream ss(parts);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto colon = item.find(':');
      const std::string name = item.substr(0, colon);
      if (name == "disjoint_union") throw InvalidInput("nested disjoint_union");
      int pn = 0, pr = 0;
      if (colon != std::string::npos) {
        std::stringstream ps(item.substr(colon + 1));
        char sep = 0;
        if (!(ps >> pn)) throw InvalidInput("bad part: " + item);
        if (ps >> sep && !(sep == ':' && ps >> pr)) throw InvalidInput("bad part: " + item);
      }
      graphs.push_back(make_family(name, pn, pr, seed, ""));
    }
    return disjoint_union(graphs);
  }
  throw InvalidInput("unknown family: " + family);
}

std::pair<int, int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) throw InvalidInput("--k-range must look like A..B");
  try {
    std::size_t p1 = 0, p2 = 0;
    const std::string a = s.substr(0, dots), b = s.substr(dots + 2);
    const int lo = std::stoi(a, &p1), hi = std::stoi(b, &p2);
    if (p1 != a.size() || p2 != b.size() || lo > hi) throw InvalidInput("bad --k-range: " + s);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw InvalidInput("bad --k-range: " + s);
  }
}

void print_trace(std::ostream& out, const ConstructionTrace& trace) {
  for (const auto& step : trace.steps) {
    out << "  " << to_string(step.op) << ": " << step.rule;
    for (const auto& [key, value] : step.params) out << ' ' << key << '=' << value;
    out << '\n';
  }
}

int cmd_gen(const std::string& family, int n, int r, std::optional<std::uint64_t> seed,
            const std::string& parts, const std::string& out) {
  const MultiGraph g = make_family(family, n, r, seed, parts);
  write_graph_file(out, g);
  return kOk;
}

int cmd_label(const std::string& file, std::int64_t k, Label c, const std::string& out) {
  const MultiGraph g = read_graph_file(file);
  ConstructOptions opts;
  opts.predict = options_from_env();
  const auto result = construct(g, k, c, opts);
  std::ostream& summary = out.empty() ? std::cerr : std::cout;
  summary << "status: " << to_string(result.status) << '\n';
  print_trace(summary, result.trace);
  if (result.status == ConstructStatus::Absent) return kNegative;
  if (result.status == ConstructStatus::Undecided) return kUndecided;
  const std::string text = labeling_to_json({k, c, *result.labeling, result.trace});
  if (out.empty()) {
    std::cout << text;
  } else {
    write_text_file(out, text);
  }
  return kOk;
}

int cmd_verify(const std::string& file, const std::string& labels) {
  const MultiGraph g = read_graph_file(file);
  const LabelingFile f = read_labeling_file(labels);
  const auto sum = verify(g, f.labeling);
  if (!sum) {
    std::cout << "not magic\n";
    return kNegative;
  }
  std::cout << *sum << '\n';
  return kOk;
}

int cmd_spectrum(const std::string& file, std::int64_t k, const std::string& method) {
  const MultiGraph g = read_graph_file(file);
  const PredictOptions opts = options_from_env();
  if (k < 1) throw InvalidInput("--k must be positive");
  if (method != "predict" && k == 1) throw InvalidInput("the oracle needs k >= 2");
  std::optional<SpectrumSet> predicted, oracle;
  if (!regularity(g)) throw InvalidInput("graph is not regular");
  if (method == "predict" || method == "both") predicted = predict_spectrum(g, k, opts);
  if (method == "oracle" || method == "both") oracle = brute_force_spectrum(g, k, opts.budget);
  if (predicted) std::cout << spectrum_to_json(*predicted);
  if (oracle) std::cout << spectrum_to_json(*oracle);
  if (predicted && oracle) {
    if (predicted->residues == oracle->residues && predicted->undecided.empty()) {
      std::cout << "agree " << set_string(oracle->residues) << '\n';
      return kOk;
    }
    std::cout << "mismatch predict=" << set_string(predicted->residues)
              << " oracle=" << set_string(oracle->residues)
              << " undecided=" << set_string(predicted->undecided) << '\n';
    return predicted->undecided.empty() ? kNegative : kUndecided;
  }
  if (predicted && !predicted->undecided.empty()) return kUndecided;
  return kOk;
}

int cmd_factorize(const std::string& file, const std::string& mode, std::optional<int> h,
                  const std::string& out) {
  const MultiGraph g = read_graph_file(file);
  const PredictOptions opts = options_from_env();
  FactorDecomposition result;
  if (mode == "two-factors") {
    result = two_factorization(g);
  } else if (mode == "f-factor" || mode == "mod3") {
    std::optional<EdgeSet> factor;
    if (mode == "f-factor") {
      if (!h) throw InvalidInput("f-factor needs --h");
      factor = f_factor(g, *h, opts.factors);
    } else {
      factor = mod3_factor(g, opts.factors);
    }
    if (!factor) {
      std::cout << "factor absent\n";
      return kNegative;
    }
    const EdgeSet rest = complement_edges(g, *factor);
    result.parts = {*factor, rest};
    for (const auto& part : result.parts) {
      const auto deg = regularity(spanning_subgraph(g, part));
      result.degrees.push_back(deg ? *deg : -1);
    }
  } else {
    throw InvalidInput("unknown --mode: " + mode);
  }
  const std::string text = factors_to_json(result);
  if (out.empty()) {
    std::cout << text;
  } else {
    write_text_file(out, text);
  }
  return kOk;
}

int cmd_null_set(const std::string& file, int kmax) {
  const MultiGraph g = read_graph_file(file);
  if (kmax < 1) throw InvalidInput("--kmax must be positive");
  const NullSet ns = null_set(g, kmax, options_from_env());
  nlohmann::json j;
  j["kmax"] = kmax;
  j["members"] = ns.members;
  j["undecided"] = ns.undecided;
  std::cout << j.dump(2) << '\n';
  return ns.undecided.empty() ? kOk : kUndecided;
}

int cmd_compare(const std::string& dir, const std::string& range) {
  const auto [lo, hi] = parse_range(range);
  if (lo < 2) throw InvalidInput("--k-range must start at 2 or more");
  if (!fs::is_directory(dir)) throw InvalidInput("not a directory: " + dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  const PredictOptions opts = options_from_env();
  int mismatches = 0;
  for (const auto& path : files) {
    const MultiGraph g = read_graph_file(path.string());
    for (int k = lo; k <= hi; ++k) {
      const SpectrumSet p = predict_spectrum(g, k, opts);
      std::string verdict, oracle_text = "-";
      try {
        const SpectrumSet o = brute_force_spectrum(g, k, opts.budget);
        oracle_text = set_string(o.residues);
        if (!p.undecided.empty()) {
          verdict = "UNDECIDED";
        } else if (p.residues == o.residues) {
          verdict = "PASS";
        } else {
          verdict = "FAIL";
          ++mismatches;
        }
      } catch (const BudgetExceeded&) {
        verdict = "UNDECIDED";
      }
      std::cout << path.filename().string() << "\tk=" << k << "\tpredict=" << set_string(p.residues)
                << "\toracle=" << oracle_text << '\t' << verdict << '\n';
    }
  }
  return mismatches == 0 ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"c-sum k-magic labelings and sum spectra of regular graphs"};
  app.require_subcommand(1);

  std::string family, parts, out, file, labels, method = "both", mode, corpus, range;
  int n = 0, r = 0, kmax = 0;
  std::int64_t k = 0;
  Label c = 0;
  std::optional<std::uint64_t> seed;
  std::optional<int> h;

  auto* gen = app.add_subcommand("gen", "Generate a graph");
  gen->add_option("--family", family, "cycle|complete|complete_bipartite|circulant|petersen|prism|random_regular|disjoint_union")->required();
  gen->add_option("--n", n);
  gen->add_option("--r", r);
  gen->add_option("--seed", seed);
  gen->add_option("--parts", parts, "disjoint_union parts, e.g. cycle:3,complete:4");
  gen->add_option("-o", out)->required();

  auto* label = app.add_subcommand("label", "Construct a c-sum k-magic labeling");
  label->add_option("FILE", file)->required();
  label->add_option("--k", k)->required();
  label->add_option("--c", c)->required();
  label->add_option("-o", out);

  auto* ver = app.add_subcommand("verify", "Print the magic sum of a labeling");
  ver->add_option("FILE", file)->required();
  ver->add_option("LABELS", labels)->required();

  auto* spec = app.add_subcommand("spectrum", "Sum spectrum report");
  spec->add_option("FILE", file)->required();
  spec->add_option("--k", k)->required();
  spec->add_option("--method", method)->check(CLI::IsMember({"predict", "oracle", "both"}));

  auto* fac = app.add_subcommand("factorize", "Factor decomposition");
  fac->add_option("FILE", file)->required();
  fac->add_option("--mode", mode)->required()->check(CLI::IsMember({"two-factors", "f-factor", "mod3"}));
  fac->set_help_flag("--help", "Print this help message and exit");
  fac->add_option("--h", h);
  fac->add_option("-o", out);

  auto* ns = app.add_subcommand("null-set", "Bounded null set");
  ns->add_option("FILE", file)->required();
  ns->add_option("--kmax", kmax)->required();

  auto* cmp = app.add_subcommand("compare", "Predict versus oracle over a corpus");
  cmp->add_option("--corpus", corpus)->required();
  cmp->add_option("--k-range", range)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*gen) return cmd_gen(family, n, r, seed, parts, out);
    if (*label) return cmd_label(file, k, c, out);
    if (*ver) return cmd_verify(file, labels);
    if (*spec) return cmd_spectrum(file, k, method);
    if (*fac) return cmd_factorize(file, mode, h, out);
    if (*ns) return cmd_null_set(file, kmax);
    if (*cmp) return cmd_compare(corpus, range);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kUndecided;
  } catch (const GenerationFailure& e) {
    std::cerr << "generation failed: " << e.what() << '\n';
    return kUndecided;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInvalid;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kInvalid;
}
