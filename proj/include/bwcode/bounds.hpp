#pragma once

#include <compare>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "bwcode/code.hpp"
#include "bwcode/errors.hpp"
#include "bwcode/exact.hpp"
#include "bwcode/graph.hpp"
#include "bwcode/word.hpp"

namespace bwcode {

enum class EntryStatus { optimal, lower_bound };

inline std::string to_string(EntryStatus s) {
  return s == EntryStatus::optimal ? "optimal" : "lower_bound";
}

inline EntryStatus parse_entry_status(const std::string& text) {
  if (text == "optimal") return EntryStatus::optimal;
  if (text == "lower_bound") return EntryStatus::lower_bound;
  throw UsageError("unknown status '" + text +
                   "' (expected 'optimal' or 'lower_bound')");
}

struct TableKey {
  int n = 0;
  int d = 0;
  int w = 0;
  WeightMode mode = WeightMode::bounded;

  friend auto operator<=>(const TableKey&, const TableKey&) = default;
};

struct TableEntry {
  int value = 0;
  EntryStatus status = EntryStatus::optimal;
  std::string source;
};

inline std::string describe(const TableKey& key) {
  return "A(" + std::to_string(key.n) + "," + std::to_string(key.d) + "," +
         std::to_string(key.w) + "," + to_string(key.mode) + ")";
}

// Best known code sizes, keyed by instance. Used as input to the patching
// bound and as the yardstick the table command reproduces.
class ReferenceTable {
 public:
  void insert(const TableKey& key, const TableEntry& entry) {
    if (!entries_.emplace(key, entry).second) {
      throw ValidationError("duplicate table entry for " + describe(key));
    }
  }

  std::optional<TableEntry> find(int n, int d, int w, WeightMode mode) const {
    auto it = entries_.find(TableKey{n, d, w, mode});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  const std::map<TableKey, TableEntry>& entries() const { return entries_; }

  void check_invariants() const {
    for (const auto& [key, entry] : entries_) {
      CodeParams params{key.n, key.d, key.w, key.mode};
      try {
        params.validate();
      } catch (const UsageError& e) {
        throw ValidationError(describe(key) + ": " + e.what());
      }
      if (entry.value < 1) {
        throw ValidationError(describe(key) + ": value must be at least 1");
      }
      if (key.mode == WeightMode::constant) {
        auto bounded = find(key.n, key.d, key.w, WeightMode::bounded);
        if (bounded && bounded->value < entry.value) {
          throw ValidationError("bounded value " + std::to_string(bounded->value) +
                                " below constant value " + std::to_string(entry.value) +
                                " at " + describe(key));
        }
      }
    }
    // Bounded values can only grow with the weight budget.
    const TableKey* prev_key = nullptr;
    const TableEntry* prev_entry = nullptr;
    for (const auto& [key, entry] : entries_) {
      if (key.mode != WeightMode::bounded) continue;
      if (prev_key && prev_key->n == key.n && prev_key->d == key.d &&
          prev_entry->value > entry.value) {
        throw ValidationError("bounded value drops from " +
                              std::to_string(prev_entry->value) + " at " +
                              describe(*prev_key) + " to " +
                              std::to_string(entry.value) + " at " + describe(key));
      }
      prev_key = &key;
      prev_entry = &entry;
    }
  }

 private:
  std::map<TableKey, TableEntry> entries_;
};

namespace detail {

inline std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(field);
      field.clear();
    } else {
      field += c;
    }
  }
  fields.push_back(field);
  for (auto& f : fields) {
    std::size_t begin = f.find_first_not_of(" \t");
    std::size_t end = f.find_last_not_of(" \t");
    f = begin == std::string::npos ? "" : f.substr(begin, end - begin + 1);
  }
  return fields;
}

inline int parse_int_field(const std::string& text, const char* name, int line) {
  try {
    std::size_t used = 0;
    int value = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw ParseError(line, std::string("bad ") + name + " field '" + text + "'");
  }
}

}  // namespace detail

// CSV rows n,d,w,mode,value,status,source. Blank lines and '#' comments are
// skipped. The loaded table must satisfy the cross-entry invariants.
inline ReferenceTable load_reference_table(std::istream& in) {
  ReferenceTable table;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    while (!line.empty() &&
           (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.pop_back();
    }
    if (line.empty() || line.front() == '#') continue;
    auto fields = detail::split_fields(line);
    if (fields.size() != 7) {
      throw ParseError(line_number, "expected 7 fields, got " +
                                        std::to_string(fields.size()));
    }
    TableKey key;
    key.n = detail::parse_int_field(fields[0], "n", line_number);
    key.d = detail::parse_int_field(fields[1], "d", line_number);
    key.w = detail::parse_int_field(fields[2], "w", line_number);
    TableEntry entry;
    try {
      key.mode = parse_weight_mode(fields[3]);
      entry.value = detail::parse_int_field(fields[4], "value", line_number);
      entry.status = parse_entry_status(fields[5]);
    } catch (const UsageError& e) {
      throw ParseError(line_number, e.what());
    }
    if (fields[6].empty()) throw ParseError(line_number, "empty source field");
    entry.source = fields[6];
    try {
      table.insert(key, entry);
    } catch (const ValidationError& e) {
      throw ParseError(line_number, e.what());
    }
  }
  if (in.bad()) throw IoError("read failure while loading reference table");
  table.check_invariants();
  return table;
}

struct BackfillPolicy {
  // Largest constant-weight instance the bound computation will solve on
  // demand when the table lacks an entry.
  std::uint64_t max_vertices = 4096;
  bool use_color_bound = true;
};

struct PatchBound {
  int value = 0;
  int residue = 0;            // winning residue class
  std::vector<int> weights;   // weights in that class, ascending
  std::vector<int> values;    // constant-weight value used per weight
};

namespace detail {

inline int constant_weight_value(int n, int d, int j, const ReferenceTable& table,
                                 const BackfillPolicy& policy,
                                 std::map<int, int>& memo) {
  if (j == 0) return 1;  // the zero word
  if (auto entry = table.find(n, d, j, WeightMode::constant)) return entry->value;
  if (auto it = memo.find(j); it != memo.end()) return it->second;
  std::uint64_t vertices = binomial(n, j);
  if (vertices > policy.max_vertices) {
    throw CapacityError("A(" + std::to_string(n) + "," + std::to_string(d) + "," +
                        std::to_string(j) + ",constant) is not in the table and needs " +
                        std::to_string(vertices) + " vertices, above the backfill cap of " +
                        std::to_string(policy.max_vertices));
  }
  CodeParams params{n, d, j, WeightMode::constant};
  ExactConfig config;
  config.use_color_bound = policy.use_color_bound;
  int value = static_cast<int>(max_clique_exact(build_graph(params), config).size());
  memo.emplace(j, value);
  return value;
}

}  // namespace detail

// Best residue-class sum: for each m in [0, d), add up the constant-weight
// values over weights congruent to m (taking the zero word for weight 0).
// Codes at weights that agree mod d automatically keep distance d from each
// other, so the winning sum is a valid lower bound for the bounded problem.
inline PatchBound patch_lower_bound(int n, int d, int w, const ReferenceTable& table,
                                    const BackfillPolicy& policy = {}) {
  CodeParams{n, d, w, WeightMode::bounded}.validate();
  std::map<int, int> memo;
  PatchBound best;
  best.value = -1;
  for (int m = 0; m < d; ++m) {
    PatchBound candidate;
    candidate.residue = m;
    candidate.value = 0;
    for (int j = m; j <= w; j += d) {
      int value = detail::constant_weight_value(n, d, j, table, policy, memo);
      candidate.weights.push_back(j);
      candidate.values.push_back(value);
      candidate.value += value;
    }
    if (candidate.value > best.value) best = std::move(candidate);
  }
  return best;
}

inline Code zero_code(int n, int d) {
  CodeParams params{n, d, 0, WeightMode::constant};
  params.validate();
  return Code{params, {Word(n, 0)}, Provenance::patched};
}

// Constant-weight code with w >= d, plus the zero word: still a code, now in
// bounded mode, one word larger.
inline Code augment_with_zero(const Code& code) {
  if (code.params.mode != WeightMode::constant) {
    throw UsageError("augmentation needs a constant-weight code");
  }
  if (code.params.w < code.params.d) {
    throw UsageError("augmentation needs w >= d, got w=" +
                     std::to_string(code.params.w) + ", d=" +
                     std::to_string(code.params.d));
  }
  if (!verify_code(code).pass()) {
    throw ValidationError("input code fails verification");
  }
  Code out;
  out.params = CodeParams{code.params.n, code.params.d, code.params.w,
                          WeightMode::bounded};
  out.words = code.words;
  out.words.emplace_back(code.params.n, 0);
  std::sort(out.words.begin(), out.words.end());
  out.provenance = Provenance::patched;
  return out;
}

// Union of constant-weight codes whose weights are distinct members of one
// residue class mod d. Cross-constituent distances are at least the weight
// gap, so the union is a bounded-weight code with no further checks needed.
inline Code patch_codes(int n, int d, int w, int residue,
                        std::span<const Code> constituents) {
  CodeParams result_params{n, d, w, WeightMode::bounded};
  result_params.validate();
  if (residue < 0 || residue >= d) {
    throw UsageError("residue " + std::to_string(residue) +
                     " out of range [0, " + std::to_string(d) + ")");
  }
  Code out{result_params, {}, Provenance::patched};
  std::set<int> seen_weights;
  for (std::size_t i = 0; i < constituents.size(); ++i) {
    const Code& constituent = constituents[i];
    std::string label = "constituent " + std::to_string(i);
    if (constituent.words.empty()) {
      throw ValidationError(label + " is empty");
    }
    int weight = constituent.words.front().weight();
    for (const Word& word : constituent.words) {
      if (word.length() != n) {
        throw ValidationError(label + ": word length " +
                              std::to_string(word.length()) + " differs from n=" +
                              std::to_string(n));
      }
      if (word.weight() != weight) {
        throw ValidationError(label + ": mixed weights " + std::to_string(weight) +
                              " and " + std::to_string(word.weight()));
      }
    }
    if (weight > w) {
      throw ValidationError(label + ": weight " + std::to_string(weight) +
                            " above the budget w=" + std::to_string(w));
    }
    if (weight % d != residue) {
      throw ValidationError(label + ": weight " + std::to_string(weight) +
                            " is not congruent to " + std::to_string(residue) +
                            " mod " + std::to_string(d));
    }
    if (!seen_weights.insert(weight).second) {
      throw ValidationError(label + ": a constituent of weight " +
                            std::to_string(weight) + " was already given");
    }
    Code check{CodeParams{n, d, weight, WeightMode::constant},
               constituent.words, constituent.provenance};
    if (!verify_code(check).pass()) {
      throw ValidationError(label + " fails verification as a constant-weight code");
    }
    out.words.insert(out.words.end(), constituent.words.begin(),
                     constituent.words.end());
  }
  std::sort(out.words.begin(), out.words.end());
  return out;
}

}  // namespace bwcode
