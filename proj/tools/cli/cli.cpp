// Copyright 2026 The orthoseg Authors.
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

#include "cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>

#include "orthoseg/bleu.hpp"
#include "orthoseg/corpus.hpp"
#include "orthoseg/error.hpp"
#include "orthoseg/nbest.hpp"
#include "orthoseg/script.hpp"
#include "orthoseg/segment.hpp"
#include "orthoseg/similarity.hpp"
#include "orthoseg/syllabify.hpp"
#include "orthoseg/unicode.hpp"

namespace orthoseg::cli {
namespace {

// Bad flag values discovered after CLI11 parsing; reported as usage errors.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Io {
  std::string input;
  std::string output;
};

struct SegmentArgs {
  std::string unit;
  std::string marker = "_";
  std::string morph_lexicon;
  std::string script = "auto";
  std::string on_collision = "error";
  std::string vowels;
  bool split_punctuation = false;
  bool skip_errors = false;
  unsigned threads = 0;
  Io io;
};

struct DesegmentArgs {
  std::string marker = "_";
  std::string unit;
  bool skip_errors = false;
  Io io;
};

struct SyllabifyArgs {
  std::string script = "auto";
  std::string vowels;
  Io io;
};

struct ClassifyArgs {
  std::string script;
  bool table = false;
  Io io;
};

struct LcsrArgs {
  std::string a;
  std::string b;
  bool per_line = false;
};

struct CorrelateArgs {
  std::string src, tgt, hyp, ref;
};

struct ScoreArgs {
  std::string metric;
  std::string hyp;
  std::string ref;
  int max_n = 4;
  double delta = 0.6;
  std::string report;
};

struct NbestArgs {
  std::string nbest;
  std::string ref;
  std::string marker = "_";
  int max_n = 4;
  std::string output;
};

struct StatsArgs {
  std::string unit;
  std::string morph_lexicon;
  std::string script = "auto";
  Io io;
};

struct SplitArgs {
  std::string sizes;
  std::optional<std::uint64_t> seed;
  std::string out_prefix;
  std::string input;
};

void add_io(CLI::App* cmd, Io& io) {
  cmd->add_option("-i,--input", io.input, "Input file (default: standard input)");
  cmd->add_option("-o,--output", io.output, "Output file (default: standard output)");
}

class Streams {
 public:
  Streams(std::istream& in, std::ostream& out) : in_(&in), out_(&out) {}

  std::istream& input(const std::string& path) {
    if (path.empty() || path == "-") return *in_;
    auto file = std::make_unique<std::ifstream>(path, std::ios::binary);
    if (!*file) throw Error(ErrorCode::kIo, "cannot open " + path);
    owned_in_ = std::move(file);
    return *owned_in_;
  }

  std::ostream& output(const std::string& path) {
    if (path.empty() || path == "-") return *out_;
    auto file = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file) throw Error(ErrorCode::kIo, "cannot write " + path);
    owned_out_ = std::move(file);
    return *owned_out_;
  }

 private:
  std::istream* in_;
  std::ostream* out_;
  std::unique_ptr<std::istream> owned_in_;
  std::unique_ptr<std::ostream> owned_out_;
};

char32_t parse_marker(const std::string& text) {
  std::u32string cps;
  try {
    cps = decode_utf8(text);
  } catch (const Error&) {
    throw UsageError("--marker is not valid UTF-8");
  }
  if (cps.size() != 1 || is_separator_space(cps[0])) {
    throw UsageError("--marker must be exactly one non-space code point");
  }
  return cps[0];
}

UnitScheme parse_unit(const std::string& text) {
  try {
    return UnitScheme::parse(text);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::optional<ScriptId> parse_script_flag(const std::string& text, bool allow_auto) {
  if (allow_auto && text == "auto") return std::nullopt;
  const auto script = parse_script(text);
  if (!script) throw UsageError("unknown script \"" + text + "\"");
  return script;
}

SyllabifyOptions syllabify_options(const std::string& script, const std::string& vowels) {
  SyllabifyOptions options;
  options.script = parse_script_flag(script, true);
  if (!vowels.empty()) {
    try {
      options.vowels = decode_utf8(vowels);
    } catch (const Error&) {
      throw UsageError("--vowels is not valid UTF-8");
    }
  }
  return options;
}

std::optional<MorphLexicon> load_lexicon(const std::string& path) {
  if (path.empty()) return std::nullopt;
  return MorphLexicon::load_file(path);
}

std::string fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

int run_segment(const SegmentArgs& a, Streams& io, std::ostream& err) {
  const UnitScheme scheme = parse_unit(a.unit);
  TokenizeOptions options;
  options.marker = parse_marker(a.marker);
  if (a.on_collision == "replace") {
    options.on_collision = MarkerCollision::kReplace;
  } else if (a.on_collision != "error") {
    throw UsageError("--on-marker-collision must be error or replace");
  }
  options.syllabify = syllabify_options(a.script, a.vowels);
  options.split_punctuation = a.split_punctuation;
  const std::optional<MorphLexicon> lexicon = load_lexicon(a.morph_lexicon);
  if (scheme.kind() == UnitScheme::Kind::kMorph && !lexicon) {
    throw UsageError("--unit morph requires --morph-lexicon");
  }
  options.morphs = lexicon ? &*lexicon : nullptr;

  CorpusRunOptions run;
  run.skip_errors = a.skip_errors;
  run.threads = a.threads;
  std::istream& in = io.input(a.io.input);
  std::ostream& out = io.output(a.io.output);
  const CorpusRunStats stats = segment_corpus(in, out, scheme, options, run, &err);
  return stats.failed_lines == 0 ? kExitOk : kExitDataError;
}

int run_desegment(const DesegmentArgs& a, Streams& io, std::ostream& err) {
  const char32_t marker = parse_marker(a.marker);
  const bool word_scheme = !a.unit.empty() && !parse_unit(a.unit).is_subword();
  CorpusRunOptions run;
  run.skip_errors = a.skip_errors;
  std::istream& in = io.input(a.io.input);
  std::ostream& out = io.output(a.io.output);
  const CorpusRunStats stats = desegment_corpus(in, out, marker, word_scheme, run, &err);
  return stats.failed_lines == 0 ? kExitOk : kExitDataError;
}

int run_syllabify(const SyllabifyArgs& a, Streams& io) {
  const SyllabifyOptions options = syllabify_options(a.script, a.vowels);
  std::istream& in = io.input(a.io.input);
  std::ostream& out = io.output(a.io.output);
  CorpusRunOptions run;
  run.threads = 1;
  transform_corpus(
      in, out,
      [&](std::u32string_view line) {
        std::u32string joined;
        for (std::u32string_view word : split_words(line)) {
          for (const OrthoSyllable& unit : syllabify(word, options)) {
            if (!joined.empty()) joined.push_back(U' ');
            joined += unit.text;
          }
        }
        return joined;
      },
      run);
  return kExitOk;
}

void classify_line(std::ostream& out, char32_t cp, ScriptId script) {
  out << format_codepoint(cp) << '\t' << to_string(script) << '\t'
      << to_string(classify(cp, script)) << '\n';
}

int run_classify(const ClassifyArgs& a, Streams& io) {
  const ScriptId script = *parse_script_flag(a.script, false);
  std::ostream& out = io.output(a.io.output);
  if (a.table) {
    const ScriptTable& table = ScriptTable::get(script);
    for (char32_t cp = table.block_start(); cp <= table.block_end(); ++cp) {
      classify_line(out, cp, script);
    }
    return kExitOk;
  }
  for (const std::u32string& line : load_corpus(io.input(a.io.input))) {
    for (char32_t cp : line) classify_line(out, cp, script);
  }
  return kExitOk;
}

int run_lcsr(const LcsrArgs& a, std::ostream& out) {
  const Corpus lhs = load_corpus_file(a.a);
  const Corpus rhs = load_corpus_file(a.b);
  if (a.per_line) {
    for (double score : pairwise_lcsr(lhs, rhs)) out << fixed(score, 6) << '\n';
    return kExitOk;
  }
  out << "LCSR = " << fixed(corpus_lcsr(lhs, rhs), 4) << '\n';
  return kExitOk;
}

int run_correlate(const CorrelateArgs& a, std::ostream& out) {
  const Corpus src = load_corpus_file(a.src);
  const Corpus tgt = load_corpus_file(a.tgt);
  const Corpus hyp = load_corpus_file(a.hyp);
  const Corpus ref = load_corpus_file(a.ref);
  out << "PEARSON = " << fixed(similarity_correlation(src, tgt, hyp, ref), 4) << '\n';
  return kExitOk;
}

int run_score(const ScoreArgs& a, std::ostream& out) {
  if (a.max_n < 1) throw UsageError("--max-n must be >= 1");
  if (!(a.delta > 0.0 && a.delta <= 1.0)) throw UsageError("--delta must lie in (0, 1]");
  const std::vector<Sentence> hyps = tokenize_lines(load_corpus_file(a.hyp));
  const std::vector<Sentence> refs = tokenize_lines(load_corpus_file(a.ref));
  const bool fuzzy = a.metric == "lebleu";
  const BleuReport report = fuzzy ? lebleu(hyps, refs, a.delta, a.max_n) : bleu(hyps, refs, a.max_n);
  out << (fuzzy ? "LEBLEU = " : "BLEU = ") << fixed(report.score, 2) << '\n';
  if (!a.report.empty()) {
    std::ofstream file(a.report, std::ios::binary);
    if (!file) throw Error(ErrorCode::kIo, "cannot write " + a.report);
    file << format_report(a.metric, report);
  }
  return kExitOk;
}

int run_nbest(const NbestArgs& a, Streams& io) {
  const char32_t marker = parse_marker(a.marker);
  if (a.max_n < 1) throw UsageError("--max-n must be >= 1");
  const std::vector<Sentence> refs = tokenize_lines(load_corpus_file(a.ref));
  std::ifstream nbest(a.nbest, std::ios::binary);
  if (!nbest) throw Error(ErrorCode::kIo, "cannot open " + a.nbest);
  rescore_nbest(nbest, refs, marker, io.output(a.output), a.max_n);
  return kExitOk;
}

int run_stats(const StatsArgs& a, Streams& io) {
  const UnitScheme scheme = parse_unit(a.unit);
  const SyllabifyOptions options = syllabify_options(a.script, "");
  const std::optional<MorphLexicon> lexicon = load_lexicon(a.morph_lexicon);
  if (scheme.kind() == UnitScheme::Kind::kMorph && !lexicon) {
    throw UsageError("--unit morph requires --morph-lexicon");
  }
  const Corpus corpus = load_corpus(io.input(a.io.input));
  const VocabStats stats = vocab_stats(corpus, scheme, lexicon ? &*lexicon : nullptr, options);
  io.output(a.io.output) << format_vocab_stats(stats) << '\n';
  return kExitOk;
}

int run_split(const SplitArgs& a, Streams& io) {
  SplitSizes sizes;
  try {
    sizes = SplitSizes::parse(a.sizes);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const Corpus corpus = load_corpus(io.input(a.input));
  const CorpusSplit split = split_corpus(corpus, sizes, a.seed);
  write_corpus_file(a.out_prefix + ".train", split.train);
  write_corpus_file(a.out_prefix + ".tune", split.tune);
  write_corpus_file(a.out_prefix + ".test", split.test);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Orthographic-syllable segmentation and MT evaluation toolkit", "orthoseg"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  SegmentArgs segment;
  auto* seg = app.add_subcommand("segment", "Split sentences into units with word-boundary markers");
  seg->add_option("--unit", segment.unit, "word|morph|char|char-ngram=N|os")->required();
  seg->add_option("--marker", segment.marker, "Word-boundary marker (one code point)")
      ->capture_default_str();
  seg->add_option("--morph-lexicon", segment.morph_lexicon, "word TAB seg1 seg2 ... per line");
  seg->add_option("--script", segment.script, "Script name or auto")->capture_default_str();
  seg->add_option("--on-marker-collision", segment.on_collision, "error|replace")
      ->capture_default_str();
  seg->add_option("--vowels", segment.vowels, "Override the alphabetic vowel set");
  seg->add_flag("--split-punctuation", segment.split_punctuation,
                "Detach leading/trailing punctuation from words");
  seg->add_flag("--skip-errors", segment.skip_errors, "Emit empty lines for failing input lines");
  seg->add_option("--threads", segment.threads, "Worker threads (0 = all cores)");
  add_io(seg, segment.io);

  DesegmentArgs desegment;
  auto* deseg = app.add_subcommand("desegment", "Rebuild words from a marker-delimited unit stream");
  deseg->add_option("--marker", desegment.marker, "Word-boundary marker")->capture_default_str();
  deseg->add_option("--unit", desegment.unit, "Scheme of the input; word streams carry no markers");
  deseg->add_flag("--skip-errors", desegment.skip_errors, "Emit empty lines for malformed input lines");
  add_io(deseg, desegment.io);

  SyllabifyArgs syllabify_args;
  auto* syl = app.add_subcommand("syllabify", "Orthographic syllables of each input word");
  syl->add_option("--script", syllabify_args.script, "Script name or auto")->capture_default_str();
  syl->add_option("--vowels", syllabify_args.vowels, "Override the alphabetic vowel set");
  add_io(syl, syllabify_args.io);

  ClassifyArgs classify_args;
  auto* cls = app.add_subcommand("classify", "Character classes of input code points");
  cls->add_option("--script", classify_args.script, "Script name")->required();
  cls->add_flag("--table", classify_args.table, "Dump the whole block instead of reading input");
  add_io(cls, classify_args.io);

  LcsrArgs lcsr_args;
  auto* lcs = app.add_subcommand("lcsr", "Character-level LCSR between aligned files");
  lcs->add_option("--a", lcsr_args.a, "First file")->required();
  lcs->add_option("--b", lcsr_args.b, "Second file")->required();
  lcs->add_flag("--per-line", lcsr_args.per_line, "Print one score per line");

  CorrelateArgs correlate_args;
  auto* cor = app.add_subcommand("correlate", "Correlate source/target and hypothesis/reference LCSR");
  cor->add_option("--src", correlate_args.src, "Source sentences")->required();
  cor->add_option("--tgt", correlate_args.tgt, "Target sentences")->required();
  cor->add_option("--hyp", correlate_args.hyp, "Hypotheses")->required();
  cor->add_option("--ref", correlate_args.ref, "References")->required();

  ScoreArgs score_args;
  auto* score = app.add_subcommand("score", "Corpus BLEU or Le-BLEU");
  score->add_option("--metric", score_args.metric, "bleu|lebleu")
      ->required()
      ->check(CLI::IsMember({"bleu", "lebleu"}));
  score->add_option("--hyp", score_args.hyp, "Hypotheses, one tokenized sentence per line")->required();
  score->add_option("--ref", score_args.ref, "References, one tokenized sentence per line")->required();
  score->add_option("--max-n", score_args.max_n, "Highest n-gram order")->capture_default_str();
  score->add_option("--delta", score_args.delta, "Le-BLEU word similarity threshold")
      ->capture_default_str();
  score->add_option("--report", score_args.report, "Write key=value details to this file");

  NbestArgs nbest_args;
  auto* nb = app.add_subcommand("nbest-rescore", "Append word-level BLEU to sub-word n-best entries");
  nb->add_option("--nbest", nbest_args.nbest, "n-best list")->required();
  nb->add_option("--ref", nbest_args.ref, "Word-level references")->required();
  nb->add_option("--marker", nbest_args.marker, "Word-boundary marker")->capture_default_str();
  nb->add_option("--max-n", nbest_args.max_n, "Highest n-gram order")->capture_default_str();
  nb->add_option("-o,--output", nbest_args.output, "Output file (default: standard output)");

  StatsArgs stats_args;
  auto* st = app.add_subcommand("stats", "Unit vocabulary statistics of a corpus");
  st->add_option("--unit", stats_args.unit, "word|morph|char|char-ngram=N|os")->required();
  st->add_option("--morph-lexicon", stats_args.morph_lexicon, "Morph lexicon");
  st->add_option("--script", stats_args.script, "Script name or auto")->capture_default_str();
  add_io(st, stats_args.io);

  SplitArgs split_args;
  auto* sp = app.add_subcommand("split", "Split a corpus into train/tune/test files");
  sp->add_option("--sizes", split_args.sizes, "TRAIN,TUNE,TEST")->required();
  sp->add_option("--seed", split_args.seed, "Shuffle with this seed before splitting");
  sp->add_option("--out-prefix", split_args.out_prefix, "Writes PREFIX.train/.tune/.test")->required();
  sp->add_option("-i,--input", split_args.input, "Input file (default: standard input)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitUsage;
  }

  Streams io(in, out);
  try {
    if (*seg) return run_segment(segment, io, err);
    if (*deseg) return run_desegment(desegment, io, err);
    if (*syl) return run_syllabify(syllabify_args, io);
    if (*cls) return run_classify(classify_args, io);
    if (*lcs) return run_lcsr(lcsr_args, out);
    if (*cor) return run_correlate(correlate_args, out);
    if (*score) return run_score(score_args, out);
    if (*nb) return run_nbest(nbest_args, io);
    if (*st) return run_stats(stats_args, io);
    if (*sp) return run_split(split_args, io);
  } catch (const UsageError& e) {
    err << "orthoseg: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    out.flush();
    err << "orthoseg: " << e.what() << '\n';
    return kExitDataError;
  }
  return kExitUsage;
}

}  // namespace orthoseg::cli
