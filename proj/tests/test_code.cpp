#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "bwcode/code.hpp"
#include "bwcode/rng.hpp"
#include "catch2/catch_amalgamated.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace bwcode;

namespace {

Code make_code(const CodeParams& params, const std::vector<std::string>& words) {
  Code code{params, {}, Provenance::external};
  for (const auto& text : words) code.words.push_back(Word::parse(text));
  return code;
}

}  // namespace

TEST_CASE("a known good code verifies clean") {
  Code code = make_code({6, 4, 3, WeightMode::bounded},
                        {"000111", "011001", "101010", "110100"});
  VerificationReport report = verify_code(code);
  CHECK(report.pass());
  CHECK(report.word_count == 4);
  CHECK(report.min_distance.value() == 4);
  CHECK(report.max_weight.value() == 3);
}

TEST_CASE("distance violations are reported with the closest pair") {
  Code code = make_code({6, 4, 3, WeightMode::bounded},
                        {"000111", "000110", "110000"});
  VerificationReport report = verify_code(code);
  CHECK_FALSE(report.pass());
  CHECK_FALSE(report.distance_ok);
  CHECK(report.min_distance.value() == 1);
  CHECK(report.closest_pair->first.render() == "000111");
  CHECK(report.closest_pair->second.render() == "000110");
  CHECK(report.weight_ok);
  CHECK(report.length_ok);
}

TEST_CASE("bounded mode rejects overweight words with a witness") {
  Code code = make_code({6, 4, 3, WeightMode::bounded}, {"011110", "100001"});
  VerificationReport report = verify_code(code);
  CHECK_FALSE(report.weight_ok);
  CHECK(report.weight_witness->render() == "011110");
  CHECK(report.max_weight.value() == 4);
  CHECK(report.heaviest_word->render() == "011110");
}

TEST_CASE("constant mode rejects words of any other weight") {
  Code code = make_code({6, 4, 3, WeightMode::constant}, {"000111", "010001"});
  VerificationReport report = verify_code(code);
  CHECK_FALSE(report.weight_ok);
  CHECK(report.weight_witness->render() == "010001");
  CHECK(report.max_weight.value() == 3);
}

TEST_CASE("duplicates fail both the duplicate and distance checks") {
  Code code = make_code({6, 4, 3, WeightMode::bounded}, {"000111", "000111"});
  VerificationReport report = verify_code(code);
  CHECK_FALSE(report.no_duplicates);
  REQUIRE(report.duplicate_words.size() == 1);
  CHECK(report.duplicate_words.front().render() == "000111");
  CHECK_FALSE(report.distance_ok);
  CHECK(report.min_distance.value() == 0);
}

TEST_CASE("length mismatches are flagged and distance is skipped") {
  Code code{{6, 4, 3, WeightMode::bounded},
            {Word::parse("000111"), Word::parse("0111")},
            Provenance::external};
  VerificationReport report = verify_code(code);
  CHECK_FALSE(report.length_ok);
  CHECK(report.bad_length_word->render() == "0111");
  CHECK_FALSE(report.min_distance.has_value());
  CHECK_FALSE(report.pass());
}

TEST_CASE("empty and singleton codes pass vacuously") {
  Code empty{{6, 4, 3, WeightMode::bounded}, {}, Provenance::external};
  CHECK(verify_code(empty).pass());
  CHECK_FALSE(verify_code(empty).min_distance.has_value());
  Code one = make_code({6, 4, 3, WeightMode::bounded}, {"000011"});
  CHECK(verify_code(one).pass());
  CHECK_FALSE(verify_code(one).min_distance.has_value());
}

TEST_CASE("min distance matches the character-level oracle") {
  RandomStream rng(17, 0);
  for (int round = 0; round < 50; ++round) {
    int n = 2 + static_cast<int>(rng.next_below(12));
    std::uint64_t pool = std::min<std::uint64_t>(12, std::uint64_t{1} << n);
    std::size_t count = 2 + rng.next_below(pool - 1);
    auto words = bwcode::testing::random_distinct_words(rng, n, count);
    Code code{{n, 1, n, WeightMode::bounded}, words, Provenance::external};
    VerificationReport report = verify_code(code);
    std::vector<std::string> rendered;
    for (const Word& w : words) rendered.push_back(w.render());
    CHECK(report.min_distance.value() ==
          oracle::brute_force_min_distance(rendered).distance);
  }
}

TEST_CASE("parsing skips comments and blank lines") {
  std::istringstream in(
      "# a comment\n"
      "\n"
      "000111\n"
      "   \n"
      "011001\n"
      "# trailing comment\n");
  Code code = parse_code_file(in, {6, 4, 3, WeightMode::bounded});
  CHECK(code.size() == 2);
  CHECK(code.words[0].render() == "000111");
  CHECK(code.provenance == Provenance::external);
}

TEST_CASE("parsing tolerates CRLF line endings") {
  std::istringstream in("000111\r\n011001\r\n");
  CHECK(parse_code_file(in, {6, 4, 3, WeightMode::bounded}).size() == 2);
}

TEST_CASE("parse errors carry line numbers") {
  std::istringstream wrong_length("000111\n0011\n");
  try {
    parse_code_file(wrong_length, {6, 4, 3, WeightMode::bounded});
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }

  std::istringstream bad_char("# header\n0001x1\n");
  try {
    parse_code_file(bad_char, {6, 4, 3, WeightMode::bounded});
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }

  std::istringstream duplicate("000111\n011001\n000111\n");
  try {
    parse_code_file(duplicate, {6, 4, 3, WeightMode::bounded});
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
    CHECK(std::string(e.what()).find("duplicate") != std::string::npos);
  }
}

TEST_CASE("serialization emits the header and sorted words") {
  Code code = make_code({6, 4, 3, WeightMode::bounded},
                        {"110100", "000111", "101010", "011001"});
  code.provenance = Provenance::exact;
  std::ostringstream out;
  serialize_code(code, out);
  CHECK(out.str() ==
        "# n=6\n"
        "# d=4\n"
        "# w=3\n"
        "# mode=bounded\n"
        "# size=4\n"
        "# provenance=exact\n"
        "000111\n"
        "011001\n"
        "101010\n"
        "110100\n");
}

TEST_CASE("serialize then parse reproduces the word set") {
  RandomStream rng(19, 0);
  for (int round = 0; round < 100; ++round) {
    int n = 1 + static_cast<int>(rng.next_below(14));
    std::size_t count = rng.next_below(
        std::min<std::uint64_t>(20, std::uint64_t{1} << n) + 1);
    auto words = bwcode::testing::random_distinct_words(rng, n, count);
    Code code{{n, 1, n, WeightMode::bounded}, words, Provenance::greedy};
    std::ostringstream out;
    serialize_code(code, out);
    std::istringstream in(out.str());
    Code reparsed = parse_code_file(in, code.params);
    std::sort(words.begin(), words.end());
    CHECK(reparsed.words == words);
  }
}

TEST_CASE("provenance names") {
  CHECK(to_string(Provenance::exact) == "exact");
  CHECK(to_string(Provenance::greedy) == "greedy");
  CHECK(to_string(Provenance::patched) == "patched");
  CHECK(to_string(Provenance::external) == "external");
}
