#pragma once

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "bwcode/errors.hpp"
#include "bwcode/word.hpp"

namespace bwcode {

enum class Provenance { exact, greedy, patched, external };

inline std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::exact: return "exact";
    case Provenance::greedy: return "greedy";
    case Provenance::patched: return "patched";
    case Provenance::external: return "external";
  }
  return "external";
}

struct Code {
  CodeParams params;
  std::vector<Word> words;
  Provenance provenance = Provenance::external;

  std::size_t size() const { return words.size(); }
};

struct VerificationReport {
  std::size_t word_count = 0;
  bool length_ok = true;
  bool weight_ok = true;
  bool distance_ok = true;
  bool no_duplicates = true;
  std::optional<Word> bad_length_word;
  std::optional<Word> weight_witness;  // first word breaking the mode's weight rule
  std::optional<int> max_weight;
  std::optional<Word> heaviest_word;
  std::optional<int> min_distance;  // absent with fewer than two words
  std::optional<std::pair<Word, Word>> closest_pair;
  std::vector<Word> duplicate_words;

  bool pass() const {
    return length_ok && weight_ok && distance_ok && no_duplicates;
  }
};

inline VerificationReport verify_code(const Code& code) {
  code.params.validate();
  VerificationReport report;
  report.word_count = code.words.size();

  for (const Word& word : code.words) {
    if (word.length() != code.params.n) {
      report.length_ok = false;
      if (!report.bad_length_word) report.bad_length_word = word;
      continue;
    }
    int wt = word.weight();
    if (!report.max_weight || wt > *report.max_weight) {
      report.max_weight = wt;
      report.heaviest_word = word;
    }
    bool weight_bad = code.params.mode == WeightMode::constant
                          ? wt != code.params.w
                          : wt > code.params.w;
    if (weight_bad && !report.weight_witness) {
      report.weight_ok = false;
      report.weight_witness = word;
    }
  }

  std::vector<Word> sorted = code.words;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] == sorted[i - 1] &&
        (report.duplicate_words.empty() || report.duplicate_words.back() != sorted[i])) {
      report.no_duplicates = false;
      report.duplicate_words.push_back(sorted[i]);
    }
  }

  if (report.length_ok && code.words.size() >= 2) {
    for (std::size_t i = 0; i < code.words.size(); ++i) {
      for (std::size_t j = i + 1; j < code.words.size(); ++j) {
        int dist = hamming_distance(code.words[i], code.words[j]);
        if (!report.min_distance || dist < *report.min_distance) {
          report.min_distance = dist;
          report.closest_pair = {code.words[i], code.words[j]};
        }
      }
    }
    if (*report.min_distance < code.params.d) report.distance_ok = false;
  }
  return report;
}

// Reads one word per line; blank lines and '#' comments are skipped. The
// stated parameters decide the expected word length. Weight and distance are
// deliberately not checked here; that is verify_code's job.
inline Code parse_code_file(std::istream& in, const CodeParams& params) {
  params.validate();
  Code code{params, {}, Provenance::external};
  std::unordered_set<std::uint64_t> seen;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    while (!line.empty() &&
           (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.pop_back();
    }
    if (line.empty() || line.front() == '#') continue;
    if (line.size() != static_cast<std::size_t>(params.n)) {
      throw ParseError(line_number,
                       "expected " + std::to_string(params.n) + " characters, got " +
                           std::to_string(line.size()));
    }
    Word word = [&] {
      try {
        return Word::parse(line);
      } catch (const UsageError& e) {
        throw ParseError(line_number, e.what());
      }
    }();
    if (!seen.insert(word.packed()).second) {
      throw ParseError(line_number, "duplicate word " + line);
    }
    code.words.push_back(word);
  }
  if (in.bad()) throw IoError("read failure while parsing code file");
  return code;
}

// Header comments with the parameters, then the words in increasing packed
// order. Reparsing yields the same word set.
inline void serialize_code(const Code& code, std::ostream& out) {
  out << "# n=" << code.params.n << '\n';
  out << "# d=" << code.params.d << '\n';
  out << "# w=" << code.params.w << '\n';
  out << "# mode=" << to_string(code.params.mode) << '\n';
  out << "# size=" << code.words.size() << '\n';
  out << "# provenance=" << to_string(code.provenance) << '\n';
  std::vector<Word> sorted = code.words;
  std::sort(sorted.begin(), sorted.end());
  for (const Word& word : sorted) out << word.render() << '\n';
  if (!out) throw IoError("failed writing code file");
}

}  // namespace bwcode
