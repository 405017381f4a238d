// Command-line front end: search for codes, verify code files, compute
// patching bounds, reproduce the reference tables, export DIMACS graphs.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bwcode/bounds.hpp"
#include "bwcode/code.hpp"
#include "bwcode/errors.hpp"
#include "bwcode/exact.hpp"
#include "bwcode/graph.hpp"
#include "bwcode/greedy.hpp"
#include "bwcode/word.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

#ifndef BWCODE_DEFAULT_TABLE
#define BWCODE_DEFAULT_TABLE "data/reference_tables.csv"
#endif

struct InstanceArgs {
  int n = 0;
  int d = 0;
  int w = 0;
  std::string mode = "bounded";

  bwcode::CodeParams params() const {
    bwcode::CodeParams p{n, d, w, bwcode::parse_weight_mode(mode)};
    p.validate();
    return p;
  }
};

void add_instance_options(CLI::App* cmd, InstanceArgs& args) {
  cmd->add_option("-n,--length", args.n, "word length")->required();
  cmd->add_option("-d,--distance", args.d, "minimum Hamming distance")->required();
  cmd->add_option("-w,--weight", args.w, "weight budget")->required();
  cmd->add_option("--mode", args.mode, "weight mode: bounded or constant")
      ->check(CLI::IsMember({"bounded", "constant"}))
      ->capture_default_str();
}

bwcode::ReferenceTable load_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw bwcode::IoError("cannot open reference table '" + path + "'");
  try {
    return bwcode::load_reference_table(in);
  } catch (const bwcode::ParseError& e) {
    throw bwcode::ParseError(e.line, path + ": " + e.what());
  }
}

std::string default_output_name(const bwcode::CodeParams& p) {
  std::ostringstream name;
  name << "A_" << p.n << '_' << p.d << '_' << p.w << '_' << to_string(p.mode)
       << ".txt";
  return name.str();
}

void print_run_record(const bwcode::CodeParams& p, const std::string& solver,
                      const std::string& config_echo, std::size_t size,
                      bool proven, std::uint64_t seed, bool have_seed,
                      double elapsed, const std::string& out_path) {
  std::cout << "instance: n=" << p.n << " d=" << p.d << " w=" << p.w
            << " mode=" << to_string(p.mode) << '\n';
  std::cout << "solver: " << solver << '\n';
  std::cout << "config: " << config_echo << '\n';
  std::cout << "size: " << size << '\n';
  std::cout << "proven_optimal: " << (proven ? "true" : "false") << '\n';
  if (have_seed) std::cout << "seed: " << seed << '\n';
  std::cout << "elapsed_seconds: " << elapsed << '\n';
  std::cout << "output: " << out_path << '\n';
}

int run_search(const InstanceArgs& instance, const std::string& solver,
               std::size_t restarts, double sample_fraction,
               std::size_t threshold, std::optional<std::uint64_t> seed_opt,
               std::optional<double> time_limit, unsigned threads,
               bool color_bound, std::string out_path) {
  bwcode::CodeParams params = instance.params();
  if (out_path.empty()) out_path = default_output_name(params);
  bwcode::CompatibilityGraph graph = bwcode::build_graph(params);

  bwcode::Code code{params, {}, bwcode::Provenance::exact};
  std::size_t size = 0;
  bool proven = false;
  double elapsed = 0.0;
  std::ostringstream config_echo;
  std::uint64_t seed = 0;
  bool have_seed = false;

  if (solver == "exact") {
    bwcode::ExactConfig config;
    config.time_limit_seconds = time_limit;
    config.use_color_bound = color_bound;
    bwcode::ExactResult result = bwcode::max_clique_exact(graph, config);
    for (std::size_t v : result.clique) code.words.push_back(graph.vertex(v));
    code.provenance = bwcode::Provenance::exact;
    size = result.size();
    proven = result.proven_optimal;
    elapsed = result.elapsed_seconds;
    config_echo << "color_bound=" << (color_bound ? "on" : "off");
    if (time_limit) config_echo << " time_limit=" << *time_limit << 's';
    config_echo << " nodes=" << result.nodes_explored;
  } else {
    bwcode::GreedyConfig config;
    config.restarts = restarts;
    config.sample_fraction = sample_fraction;
    config.exact_threshold = threshold;
    config.threads = threads;
    if (seed_opt) {
      seed = *seed_opt;
    } else {
      seed = std::random_device{}();
    }
    have_seed = true;
    config.master_seed = seed;
    bwcode::GreedyResult result = bwcode::greedy_restarts(graph, config);
    for (std::size_t v : result.clique) code.words.push_back(graph.vertex(v));
    code.provenance = bwcode::Provenance::greedy;
    size = result.size();
    proven = false;
    elapsed = result.elapsed_seconds;
    config_echo << "restarts=" << restarts << " sample_fraction=" << sample_fraction
                << " threshold=" << threshold << " best_restart="
                << result.best_restart_index;
  }

  std::ofstream out(out_path);
  if (!out) throw bwcode::IoError("cannot open output file '" + out_path + "'");
  bwcode::serialize_code(code, out);
  out.close();
  print_run_record(params, solver, config_echo.str(), size, proven, seed,
                   have_seed, elapsed, out_path);
  return kExitOk;
}

void print_report(const bwcode::VerificationReport& report,
                  const bwcode::CodeParams& params) {
  std::cout << "words: " << report.word_count << '\n';
  std::cout << "length check: " << (report.length_ok ? "pass" : "FAIL") << '\n';
  if (report.bad_length_word) {
    std::cout << "  offending word: " << report.bad_length_word->render() << '\n';
  }
  std::cout << "weight check: " << (report.weight_ok ? "pass" : "FAIL") << '\n';
  if (report.max_weight) {
    std::cout << "  max weight: " << *report.max_weight << " ("
              << report.heaviest_word->render() << ")\n";
  }
  if (report.weight_witness) {
    std::cout << "  offending word: " << report.weight_witness->render()
              << " (weight " << report.weight_witness->weight() << ", "
              << to_string(params.mode) << " w=" << params.w << ")\n";
  }
  std::cout << "distance check: " << (report.distance_ok ? "pass" : "FAIL") << '\n';
  if (report.min_distance) {
    std::cout << "  min distance: " << *report.min_distance << " ("
              << report.closest_pair->first.render() << ", "
              << report.closest_pair->second.render() << ")\n";
  }
  std::cout << "duplicate check: " << (report.no_duplicates ? "pass" : "FAIL")
            << '\n';
  for (const auto& word : report.duplicate_words) {
    std::cout << "  duplicated word: " << word.render() << '\n';
  }
  std::cout << "result: " << (report.pass() ? "PASS" : "FAIL") << '\n';
}

int run_verify(const std::string& path, const InstanceArgs& instance) {
  bwcode::CodeParams params = instance.params();
  std::ifstream in(path);
  if (!in) throw bwcode::IoError("cannot open code file '" + path + "'");
  bwcode::Code code = bwcode::parse_code_file(in, params);
  bwcode::VerificationReport report = bwcode::verify_code(code);
  print_report(report, params);
  return report.pass() ? kExitOk : kExitMismatch;
}

int run_bound(const InstanceArgs& instance, const std::string& table_path) {
  bwcode::CodeParams params = instance.params();
  if (params.mode != bwcode::WeightMode::bounded) {
    throw bwcode::UsageError("the patching bound applies to bounded mode");
  }
  bwcode::ReferenceTable table = load_table_file(table_path);
  bwcode::PatchBound bound =
      bwcode::patch_lower_bound(params.n, params.d, params.w, table);
  std::cout << "patch lower bound: " << bound.value << '\n';
  std::cout << "residue: " << bound.residue << " (mod " << params.d << ")\n";
  std::cout << "constituents:";
  for (std::size_t i = 0; i < bound.weights.size(); ++i) {
    std::cout << " w=" << bound.weights[i] << ":" << bound.values[i];
  }
  std::cout << '\n';
  return kExitOk;
}

struct TableRow {
  int n = 0;
  int w = 0;
  std::optional<int> constant_ref;
  int bounded_ref = 0;
  bool starred = false;
};

int run_table(int d, const std::string& table_path, std::optional<int> max_n,
              std::optional<std::string> rows_spec, const std::string& solver,
              std::optional<double> time_limit, std::size_t restarts,
              std::uint64_t seed, unsigned threads, const std::string& format) {
  bwcode::ReferenceTable table = load_table_file(table_path);

  std::vector<int> wanted_lengths;
  bool filter_lengths = false;
  if (rows_spec) {
    filter_lengths = true;
    std::stringstream ss(*rows_spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      try {
        wanted_lengths.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw bwcode::UsageError("bad --rows entry '" + item + "'");
      }
    }
  }

  std::vector<TableRow> rows;
  for (const auto& [key, entry] : table.entries()) {
    if (key.d != d || key.mode != bwcode::WeightMode::bounded) continue;
    if (max_n && key.n > *max_n) continue;
    if (filter_lengths &&
        std::find(wanted_lengths.begin(), wanted_lengths.end(), key.n) ==
            wanted_lengths.end()) {
      continue;
    }
    TableRow row;
    row.n = key.n;
    row.w = key.w;
    row.bounded_ref = entry.value;
    row.starred = entry.status == bwcode::EntryStatus::lower_bound;
    if (auto c = table.find(key.n, d, key.w, bwcode::WeightMode::constant)) {
      row.constant_ref = c->value;
    }
    rows.push_back(row);
  }

  bool markdown = format == "markdown";
  if (markdown) {
    std::cout << "| Length | Weight | Constant | Bounded (ref) | Bounded (computed) | Status |\n";
    std::cout << "|---|---|---|---|---|---|\n";
  } else {
    std::cout << "length,weight,constant_ref,bounded_ref,bounded_computed,status\n";
  }

  bool all_match = true;
  for (const TableRow& row : rows) {
    bwcode::CodeParams params{row.n, d, row.w, bwcode::WeightMode::bounded};
    std::string computed = "-";
    std::string status;
    if (row.starred && solver == "exact" && !time_limit) {
      status = "skipped(starred)";
    } else {
      std::size_t size = 0;
      bool proven = false;
      bwcode::CompatibilityGraph graph = bwcode::build_graph(params);
      if (solver == "exact") {
        bwcode::ExactConfig config;
        config.time_limit_seconds = time_limit;
        bwcode::ExactResult result = bwcode::max_clique_exact(graph, config);
        size = result.size();
        proven = result.proven_optimal;
      } else {
        bwcode::GreedyConfig config;
        config.restarts = restarts;
        config.master_seed = seed;
        config.threads = threads;
        bwcode::GreedyResult result = bwcode::greedy_restarts(graph, config);
        size = result.size();
        proven = false;
      }
      computed = std::to_string(size);
      if (row.starred) {
        status = size >= static_cast<std::size_t>(row.bounded_ref)
                     ? "ok(>=ref)"
                     : "below-ref";
      } else if (static_cast<int>(size) == row.bounded_ref && proven) {
        status = "ok";
      } else if (static_cast<int>(size) == row.bounded_ref && !proven) {
        status = "unproven";
        all_match = false;
      } else {
        status = "MISMATCH";
        all_match = false;
      }
    }
    std::string constant_text =
        row.constant_ref ? std::to_string(*row.constant_ref) : "-";
    std::string ref_text = std::to_string(row.bounded_ref);
    if (row.starred) ref_text += "*";
    if (markdown) {
      std::cout << "| " << row.n << " | " << row.w << " | " << constant_text
                << " | " << ref_text << " | " << computed << " | " << status
                << " |\n";
    } else {
      std::cout << row.n << ',' << row.w << ',' << constant_text << ','
                << ref_text << ',' << computed << ',' << status << '\n';
    }
  }
  return all_match ? kExitOk : kExitMismatch;
}

int run_export(const InstanceArgs& instance, const std::string& out_path) {
  bwcode::CodeParams params = instance.params();
  bwcode::CompatibilityGraph graph = bwcode::build_graph(params);
  if (out_path.empty() || out_path == "-") {
    bwcode::export_dimacs(graph, std::cout);
  } else {
    std::ofstream out(out_path);
    if (!out) throw bwcode::IoError("cannot open output file '" + out_path + "'");
    bwcode::export_dimacs(graph, out);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bounded-weight binary code search via maximum clique"};
  app.require_subcommand(1);

  InstanceArgs search_args;
  std::string search_solver = "exact";
  std::size_t search_restarts = 1000;
  double search_fraction = 0.1;
  std::size_t search_threshold = 100;
  std::optional<std::uint64_t> search_seed;
  std::optional<double> search_time_limit;
  unsigned search_threads = 0;
  bool search_color = false;
  std::string search_out;
  CLI::App* search = app.add_subcommand("search", "find a large code");
  add_instance_options(search, search_args);
  search->add_option("--solver", search_solver, "exact or greedy")
      ->check(CLI::IsMember({"exact", "greedy"}))
      ->capture_default_str();
  search->add_option("--restarts", search_restarts, "greedy restarts")
      ->capture_default_str();
  search->add_option("--sample-fraction", search_fraction,
                     "greedy sample fraction of the vertex count")
      ->capture_default_str();
  search->add_option("--threshold", search_threshold,
                     "available-set size that triggers the exact finish")
      ->capture_default_str();
  search->add_option("--seed", search_seed, "master seed (default: drawn from entropy)");
  search->add_option("--time-limit", search_time_limit,
                     "exact solver budget in seconds");
  search->add_option("--threads", search_threads,
                     "greedy worker threads (0 = hardware)");
  search->add_flag("--color-bound", search_color,
                   "enable the coloring bound in the exact solver");
  search->add_option("-o,--out", search_out, "output code file path");

  InstanceArgs verify_args;
  std::string verify_path;
  CLI::App* verify = app.add_subcommand("verify", "check a code file");
  verify->add_option("file", verify_path, "code file, one word per line")->required();
  add_instance_options(verify, verify_args);

  InstanceArgs bound_args;
  bound_args.mode = "bounded";
  std::string bound_table = BWCODE_DEFAULT_TABLE;
  CLI::App* bound = app.add_subcommand("bound", "patching lower bound");
  add_instance_options(bound, bound_args);
  bound->add_option("--table", bound_table, "reference table CSV")
      ->capture_default_str();

  int table_d = 0;
  std::string table_path = BWCODE_DEFAULT_TABLE;
  std::optional<int> table_max_n;
  std::optional<std::string> table_rows;
  std::string table_solver = "exact";
  std::optional<double> table_time_limit;
  std::size_t table_restarts = 1000;
  std::uint64_t table_seed = 1;
  unsigned table_threads = 0;
  std::string table_format = "csv";
  CLI::App* table_cmd = app.add_subcommand("table", "recompute a reference table block");
  table_cmd->add_option("-d,--distance", table_d, "minimum distance block")->required();
  table_cmd->add_option("--table", table_path, "reference table CSV")
      ->capture_default_str();
  table_cmd->add_option("--max-n", table_max_n, "only rows with length <= N");
  table_cmd->add_option("--rows", table_rows,
                        "comma-separated lengths to include (empty = none)");
  table_cmd->add_option("--solver", table_solver, "exact or greedy")
      ->check(CLI::IsMember({"exact", "greedy"}))
      ->capture_default_str();
  table_cmd->add_option("--time-limit", table_time_limit,
                        "per-row exact budget in seconds; also unlocks starred rows");
  table_cmd->add_option("--restarts", table_restarts, "greedy restarts")
      ->capture_default_str();
  table_cmd->add_option("--seed", table_seed, "greedy master seed")
      ->capture_default_str();
  table_cmd->add_option("--threads", table_threads, "greedy worker threads");
  table_cmd->add_option("--format", table_format, "csv or markdown")
      ->check(CLI::IsMember({"csv", "markdown"}))
      ->capture_default_str();

  InstanceArgs export_args;
  std::string export_out;
  CLI::App* export_cmd = app.add_subcommand("export-graph", "write DIMACS graph");
  add_instance_options(export_cmd, export_args);
  export_cmd->add_option("-o,--out", export_out, "output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (search->parsed()) {
      return run_search(search_args, search_solver, search_restarts,
                        search_fraction, search_threshold, search_seed,
                        search_time_limit, search_threads, search_color,
                        search_out);
    }
    if (verify->parsed()) return run_verify(verify_path, verify_args);
    if (bound->parsed()) return run_bound(bound_args, bound_table);
    if (table_cmd->parsed()) {
      return run_table(table_d, table_path, table_max_n, table_rows,
                       table_solver, table_time_limit, table_restarts,
                       table_seed, table_threads, table_format);
    }
    if (export_cmd->parsed()) return run_export(export_args, export_out);
  } catch (const bwcode::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const bwcode::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const bwcode::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const bwcode::CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const bwcode::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMismatch;
  }
  return kExitUsage;
}
