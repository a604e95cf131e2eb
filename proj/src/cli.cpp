#include "cobrack/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "cobrack/algebra.hpp"
#include "cobrack/coproduct.hpp"
#include "cobrack/corpus.hpp"
#include "cobrack/error.hpp"
#include "cobrack/io.hpp"
#include "cobrack/oracle.hpp"
#include "cobrack/surface_group.hpp"

namespace cobrack {
namespace {

using Json = nlohmann::ordered_json;

struct Outcome {
  int code = kExitOk;
  std::string out;
  std::string err;
};

// Runs fn(0..n-1) on all hardware threads; results keep index order.
std::vector<Outcome> parallel_map(std::size_t n, const std::function<Outcome(std::size_t)>& fn) {
  std::vector<Outcome> results(n);
  const std::size_t workers =
      std::min<std::size_t>(n, std::max(1u, std::thread::hardware_concurrency()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) results[i] = fn(i);
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (std::thread& t : pool) t.join();
  return results;
}

Outcome guarded(const std::string& where, const std::function<Outcome()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    return {kExitUsage, "", "error: " + where + e.what() + "\n"};
  } catch (const DomainError& e) {
    return {kExitUsage, "", "error: " + where + e.what() + "\n"};
  } catch (const InvariantError& e) {
    return {kExitInvariant, "", "invariant violated: " + where + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {kExitInvariant, "", "internal error: " + where + e.what() + "\n"};
  }
}

int emit(const std::vector<Outcome>& results, std::ostream& out, std::ostream& err) {
  int code = kExitOk;
  for (const Outcome& r : results) {
    out << r.out;
    err << r.err;
    code = std::max(code, r.code);
  }
  return code;
}

struct InputLine {
  std::size_t number = 0;  // 0 for --word
  std::string text;
};

std::vector<InputLine> read_batch(std::istream& in) {
  std::vector<InputLine> lines;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    lines.push_back({number, line.substr(first, last - first + 1)});
  }
  return lines;
}

std::vector<InputLine> gather_inputs(const std::string& word, const std::string& file,
                                     bool have_word) {
  if (have_word) return {{0, word}};
  if (file == "-") return read_batch(std::cin);
  std::ifstream in(file);
  if (!in) throw DomainError("cannot open word file '" + file + "'");
  return read_batch(in);
}

std::string where(const InputLine& line) {
  return line.number == 0 ? "" : "line " + std::to_string(line.number) + ": ";
}

enum class Format { Text, Json, Latex };

const std::map<std::string, Format> kFormats = {
    {"text", Format::Text}, {"json", Format::Json}, {"latex", Format::Latex}};

std::string default_mode() {
  const char* env = std::getenv("COBRACK_MODE");
  return env != nullptr && *env != '\0' ? env : "dehn";
}

NormalizationMode mode_from(const std::string& text) {
  auto mode = parse_mode(text);
  if (!mode) throw DomainError("unknown normalization mode '" + text + "' (literal or dehn)");
  return *mode;
}

std::string render(const ResultDocument& doc, Format format) {
  switch (format) {
    case Format::Json:
      return to_json(doc) + "\n";
    case Format::Latex:
      return to_latex(doc) + "\n";
    case Format::Text:
      break;
  }
  return to_text(doc);
}

// Options shared by the per-word subcommands.
struct WordOptions {
  int genus = 0;
  std::string word;
  std::string file;
  std::string mode;
  Format format = Format::Text;
  CLI::Option* word_opt = nullptr;
};

void add_word_options(CLI::App* sub, WordOptions& o, bool with_format) {
  sub->add_option("-g,--genus", o.genus, "genus of the surface")->required();
  o.word_opt = sub->add_option("-w,--word", o.word, "word such as \"c4 c6 c3 c1- c5- c4\"");
  auto* file = sub->add_option("-f,--file", o.file, "file with one word per line, - for stdin");
  o.word_opt->excludes(file);
  file->excludes(o.word_opt);
  sub->add_option("-m,--mode", o.mode, "literal or dehn (default: $COBRACK_MODE, else dehn)");
  if (with_format) {
    sub->add_option("--format", o.format, "text, json or latex")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  }
}

using SumFn = std::function<FormalSum(const Normalizer&, std::span<const Letter>)>;

int run_sum_command(const WordOptions& o, const SumFn& fn, std::ostream& out,
                    std::ostream& err) {
  const Genus g(o.genus);
  const Normalizer norm(g, mode_from(o.mode.empty() ? default_mode() : o.mode));
  const auto inputs = gather_inputs(o.word, o.file, o.word_opt->count() > 0);
  const auto results = parallel_map(inputs.size(), [&](std::size_t i) {
    return guarded(where(inputs[i]), [&] {
      const Word raw = parse_word(inputs[i].text, g);
      const Word word = cyclically_reduced_representative(raw);
      const FormalSum sum = fn(norm, word);
      const int level = word.empty() ? 0 : norm.level(word);
      return Outcome{kExitOk, render(make_document(norm, raw, word, level, sum), o.format), ""};
    });
  });
  return emit(results, out, err);
}

int run_level(const WordOptions& o, std::ostream& out, std::ostream& err) {
  const Genus g(o.genus);
  const Normalizer norm(g, mode_from(o.mode.empty() ? default_mode() : o.mode));
  const auto inputs = gather_inputs(o.word, o.file, o.word_opt->count() > 0);
  const auto results = parallel_map(inputs.size(), [&](std::size_t i) {
    return guarded(where(inputs[i]), [&] {
      const Word word = cyclically_reduced_representative(parse_word(inputs[i].text, g));
      const int level = norm.level(word);
      if (o.format != Format::Json) return Outcome{kExitOk, std::to_string(level) + "\n", ""};
      Json j;
      j["genus"] = g.value();
      j["word"] = to_string(word);
      j["mode"] = to_string(norm.mode());
      j["level"] = level;
      return Outcome{kExitOk, j.dump() + "\n", ""};
    });
  });
  return emit(results, out, err);
}

int run_normalize(const WordOptions& o, std::ostream& out, std::ostream& err) {
  const Genus g(o.genus);
  const Normalizer norm(g, mode_from(o.mode.empty() ? default_mode() : o.mode));
  const auto inputs = gather_inputs(o.word, o.file, o.word_opt->count() > 0);
  const auto results = parallel_map(inputs.size(), [&](std::size_t i) {
    return guarded(where(inputs[i]), [&] {
      const Word raw = parse_word(inputs[i].text, g);
      const std::optional<CyclicWord> key = norm.key(raw);
      const Word letters = key ? key->letters() : Word{};
      std::string text;
      switch (o.format) {
        case Format::Json: {
          Json j;
          j["genus"] = g.value();
          j["mode"] = to_string(norm.mode());
          j["key"] = to_string(letters);
          text = j.dump();
          break;
        }
        case Format::Latex:
          text = letters.empty() ? "1" : "[" + to_latex(letters) + "]";
          break;
        case Format::Text:
          text = "[" + to_string(letters) + "]";
          break;
      }
      return Outcome{kExitOk, text + "\n", ""};
    });
  });
  return emit(results, out, err);
}

int run_relator(int genus, Format format, std::ostream& out) {
  const Word r = boundary_word(Genus(genus));
  switch (format) {
    case Format::Json: {
      Json j;
      j["genus"] = genus;
      Json letters = Json::array();
      for (const Letter a : r) letters.push_back(Json::array({a.gen, a.sign}));
      j["relator"] = std::move(letters);
      out << j.dump() << "\n";
      break;
    }
    case Format::Latex:
      out << to_latex(r) << "\n";
      break;
    case Format::Text:
      out << to_string(r) << "\n";
      break;
  }
  return kExitOk;
}

struct OracleOptions {
  int genus = 0;
  std::string word;
  int random = 0;
  int max_len = 12;
  std::uint64_t seed = 7;
  std::string svg;
  std::string mode;
  std::string closing = "m-1";
  std::string schedule = "standard";
  bool verbose = false;
};

int run_oracle_check(const OracleOptions& o, bool have_word, std::ostream& out,
                     std::ostream& err) {
  const NormalizationMode mode = mode_from(o.mode.empty() ? default_mode() : o.mode);
  CaseTable table = CaseTable::standard();
  table.closing = o.closing == "m" ? ClosingRange::ThroughM : ClosingRange::ThroughMMinus1;
  const oracle::Schedule schedule =
      o.schedule == "alternate" ? oracle::Schedule::alternate() : oracle::Schedule::standard();

  std::vector<RandomCase> cases;
  if (have_word) {
    if (o.genus == 0) throw DomainError("--word needs --genus");
    const Genus g(o.genus);
    cases.push_back({g, cyclically_reduced_representative(parse_word(o.word, g))});
    if (cases.back().word.empty()) throw DomainError("the word reduces to the trivial class");
  } else {
    if (o.random <= 0) throw DomainError("oracle-check needs --word or --random N");
    std::vector<int> genera = o.genus == 0 ? std::vector<int>{2, 3, 4} : std::vector<int>{o.genus};
    cases = random_corpus(genera, o.random, o.max_len, o.seed);
  }

  std::map<int, Normalizer> norms;
  for (const RandomCase& c : cases) norms.try_emplace(c.genus.value(), c.genus, mode);

  const auto results = parallel_map(cases.size(), [&](std::size_t i) {
    const RandomCase& c = cases[i];
    const std::string label = "g=" + std::to_string(c.genus.value()) + " [" + to_string(c.word) + "]";
    return guarded(label + ": ", [&] {
      const oracle::CompareReport r =
          oracle::compare(norms.at(c.genus.value()), c.word, table, schedule);
      if (r.ok()) {
        const std::string line = "match " + label + " (" +
                                 std::to_string(r.geometric_crossings) + " crossings)\n";
        return Outcome{kExitOk, have_word || o.verbose ? line : "", ""};
      }
      return Outcome{kExitMismatch, "MISMATCH " + label + "\n" + r.diff, ""};
    });
  });
  const int code = emit(results, out, err);
  const auto matched = std::count_if(results.begin(), results.end(),
                                     [](const Outcome& r) { return r.code == kExitOk; });
  out << "checked " << cases.size() << " words: " << matched << " matched\n";

  if (!o.svg.empty()) {
    const RandomCase& c = cases.front();
    const oracle::CurveModel curve = oracle::build_curve(c.genus, c.word, schedule);
    std::ofstream file(o.svg);
    if (!file) throw DomainError("cannot write '" + o.svg + "'");
    file << oracle::curve_svg(curve, oracle::oracle_intersections(curve));
  }
  return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"String topology coproduct and Turaev cobracket of cyclic words on surfaces",
               "cobrack"};
  app.require_subcommand(1);

  WordOptions cobracket_opts, bv_opts, gen_opts, level_opts, normalize_opts;
  auto* cobracket = app.add_subcommand("cobracket", "Turaev cobracket of each word");
  add_word_options(cobracket, cobracket_opts, true);
  auto* bv = app.add_subcommand("coproduct-bv", "coproduct of the BV image of each word");
  add_word_options(bv, bv_opts, true);
  auto* gen = app.add_subcommand("coproduct-gen", "coproduct on the generator (divided by level)");
  add_word_options(gen, gen_opts, true);
  auto* level = app.add_subcommand("level", "level of each class");
  add_word_options(level, level_opts, true);
  auto* normalize = app.add_subcommand("normalize", "class key of each word");
  add_word_options(normalize, normalize_opts, true);

  int relator_genus = 0;
  Format relator_format = Format::Text;
  auto* relator = app.add_subcommand("relator", "surface relator traced from the ribbon graph");
  relator->add_option("-g,--genus", relator_genus, "genus (>= 1)")->required();
  relator->add_option("--format", relator_format, "text, json or latex")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  OracleOptions oracle_opts;
  auto* check = app.add_subcommand("oracle-check", "compare against the geometric oracle");
  check->add_option("-g,--genus", oracle_opts.genus, "genus (random runs default to 2, 3, 4)");
  auto* check_word = check->add_option("-w,--word", oracle_opts.word, "single word to check");
  auto* check_random =
      check->add_option("--random", oracle_opts.random, "number of random words per genus");
  check_word->excludes(check_random);
  check->add_option("--max-len", oracle_opts.max_len, "longest random word")
      ->check(CLI::Range(1, 64));
  check->add_option("--seed", oracle_opts.seed, "seed of the random corpus");
  check->add_option("--svg", oracle_opts.svg, "write the curve of the (first) word as SVG");
  check->add_option("-m,--mode", oracle_opts.mode, "literal or dehn");
  check->add_option("--closing", oracle_opts.closing, "k range of the closing step")
      ->check(CLI::IsMember({"m-1", "m"}));
  check->add_option("--schedule", oracle_opts.schedule, "epsilon and radius schedule")
      ->check(CLI::IsMember({"standard", "alternate"}));
  check->add_flag("-v,--verbose", oracle_opts.verbose, "print matching words too");

  std::vector<const char*> argv{"cobrack"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Outcome result = guarded("", [&]() -> Outcome {
    std::ostringstream o;
    std::ostringstream e;
    int code = kExitOk;
    auto word_required = [](const WordOptions& w, const CLI::App* sub) {
      if (w.word_opt->count() == 0 && sub->get_option("--file")->count() == 0) {
        throw DomainError("one of --word or --file is required");
      }
    };
    if (cobracket->parsed()) {
      word_required(cobracket_opts, cobracket);
      code = run_sum_command(
          cobracket_opts,
          [](const Normalizer& n, std::span<const Letter> w) { return turaev_cobracket(n, w); },
          o, e);
    } else if (bv->parsed()) {
      word_required(bv_opts, bv);
      code = run_sum_command(
          bv_opts,
          [](const Normalizer& n, std::span<const Letter> w) { return coproduct_of_bv(n, w); },
          o, e);
    } else if (gen->parsed()) {
      word_required(gen_opts, gen);
      code = run_sum_command(
          gen_opts,
          [](const Normalizer& n, std::span<const Letter> w) {
            return coproduct_on_generator(n, w);
          },
          o, e);
    } else if (level->parsed()) {
      word_required(level_opts, level);
      code = run_level(level_opts, o, e);
    } else if (normalize->parsed()) {
      word_required(normalize_opts, normalize);
      code = run_normalize(normalize_opts, o, e);
    } else if (relator->parsed()) {
      code = run_relator(relator_genus, relator_format, o);
    } else if (check->parsed()) {
      code = run_oracle_check(oracle_opts, check_word->count() > 0, o, e);
    }
    return Outcome{code, o.str(), e.str()};
  });
  out << result.out;
  err << result.err;
  return result.code;
}

}  // namespace cobrack
