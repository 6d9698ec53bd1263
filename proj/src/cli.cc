//
// Copyright 2026 The Orthonoise Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "orthonoise/cli.h"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "orthonoise/augment.h"
#include "orthonoise/corpus_io.h"
#include "orthonoise/harness.h"
#include "orthonoise/metrics.h"
#include "orthonoise/noise.h"
#include "orthonoise/parallel.h"
#include "orthonoise/text_model.h"
#include "orthonoise/translator.h"
#include "orthonoise/unicode.h"

namespace orthonoise {
namespace {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

// Invalid flag values or combinations discovered after parsing.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reads config files written as a JSON object. Keys are long flag names;
// nested objects address subcommands ({"augment": {"seed": 7}}).
class JsonConfig : public CLI::Config {
 public:
  explicit JsonConfig(const CLI::App* root) : root_(root) {}

  std::string to_config(const CLI::App* app, bool default_also, bool,
                        std::string) const override {
    nlohmann::json j;
    for (const CLI::Option* opt : app->get_options({})) {
      if (opt->get_lnames().empty() || !opt->get_configurable()) continue;
      const std::string name = opt->get_lnames().front();
      if (opt->count() > 0) {
        const auto& res = opt->results();
        j[name] = res.size() == 1 ? nlohmann::json(res.front())
                                  : nlohmann::json(res);
      } else if (default_also && !opt->get_default_str().empty()) {
        j[name] = opt->get_default_str();
      }
    }
    return j.dump(2) + "\n";
  }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    nlohmann::json j;
    try {
      input >> j;
    } catch (const nlohmann::json::exception& e) {
      throw CLI::ConversionError(std::string("config file is not valid JSON: ") +
                                 e.what());
    }
    if (!j.is_object()) {
      throw CLI::ConversionError("config file must hold a JSON object");
    }
    // Flat keys belong to whichever subcommand was selected.
    std::vector<std::string> base;
    for (const CLI::App* sub : root_->get_subcommands()) {
      base.push_back(sub->get_name());
    }
    std::vector<CLI::ConfigItem> items;
    Collect(j, base, items);
    return items;
  }

 private:
  const CLI::App* root_;

  static std::string Scalar(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    return v.dump();
  }

  static void Collect(const nlohmann::json& obj,
                      const std::vector<std::string>& parents,
                      std::vector<CLI::ConfigItem>& items) {
    for (const auto& [key, value] : obj.items()) {
      if (value.is_object()) {
        // {"noise": {...}} addresses one subcommand; others are ignored.
        if (!parents.empty() && parents.front() == key) {
          Collect(value, parents, items);
        }
        continue;
      }
      CLI::ConfigItem item;
      item.parents = parents;
      item.name = key;
      if (value.is_array()) {
        for (const auto& v : value) item.inputs.push_back(Scalar(v));
      } else {
        item.inputs.push_back(Scalar(value));
      }
      items.push_back(std::move(item));
    }
  }
};

constexpr char kConfigHelp[] =
    "JSON file of flag values, flat or keyed by subcommand; command-line "
    "flags override it";
constexpr char kConfigFooter[] =
    "--config FILE  JSON file of flag values (keys are long flag names); "
    "command-line flags override it";

// CLI11 reads config files on the root app only, so --config is hoisted in
// front of the subcommand wherever it was written.
std::vector<std::string> HoistConfig(const std::vector<std::string>& args) {
  std::vector<std::string> config, rest;
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      config.push_back(args[i]);
      config.push_back(args[++i]);
    } else if (args[i].starts_with("--config=")) {
      config.push_back(args[i]);
    } else {
      rest.push_back(args[i]);
    }
  }
  config.insert(config.end(), rest.begin(), rest.end());
  return config;
}

struct CommonFlags {
  std::string profile = "en";
  std::string lexicon;
  uint64_t seed = 0;
  int jobs = 1;
};

void AddCommon(CLI::App* cmd, CommonFlags& f, bool with_lexicon = true) {
  cmd->add_option("--profile", f.profile,
                  "Language profile: a bundled tag (en, et, lt, lv) or a "
                  "profile JSON file")
      ->capture_default_str();
  if (with_lexicon) {
    cmd->add_option("--lexicon", f.lexicon,
                    "Lexicon file (word<TAB>count per line) for "
                    "sample-substitute")
        ->check(CLI::ExistingFile);
  }
  cmd->add_option("--seed", f.seed, "Seed for every random choice")
      ->capture_default_str();
  cmd->add_option("--jobs", f.jobs, "Worker threads for line-level work")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->footer(kConfigFooter);
}

LanguageProfile ResolveProfile(const std::string& spec) {
  if (fs::is_regular_file(spec)) return LoadProfile(ReadFile(spec));
  const auto tags = BundledProfileTags();
  if (std::find(tags.begin(), tags.end(), spec) != tags.end()) {
    return BundledProfile(spec);
  }
  throw ConfigError("profile '" + spec +
                    "' is neither a file nor a bundled profile tag");
}

Lexicon LoadLexiconFile(const std::string& path) {
  std::istringstream in(ReadFile(path));
  try {
    return ReadLexicon(in);
  } catch (const std::runtime_error& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

NoiseType ParseTypeFlag(const std::string& name) {
  if (auto t = ParseNoiseType(name)) return *t;
  std::string known;
  for (NoiseType t : kAllNoiseTypes) {
    if (!known.empty()) known += ", ";
    known += NoiseTypeName(t);
  }
  throw ConfigError("unknown noise type '" + name + "' (known: " + known + ")");
}

std::vector<NoiseType> ParseTypeList(const std::vector<std::string>& names) {
  std::vector<NoiseType> out;
  for (const auto& raw : names) {
    std::stringstream ss(raw);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (!part.empty()) out.push_back(ParseTypeFlag(part));
    }
  }
  return out;
}

bool Contains(const std::vector<NoiseType>& v, NoiseType t) {
  return std::find(v.begin(), v.end(), t) != v.end();
}

void WriteOutput(const std::string& path, std::string_view content,
                 std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    out.flush();
    return;
  }
  WriteFile(path, content);
}

std::string DumpJson(const ojson& j) { return j.dump(2) + "\n"; }

std::string UtcTimestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(
      std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

ojson EditJson(const EditRecord& e) {
  ojson j = {{"noise_type", NoiseTypeName(e.noise_type)}};
  j["token_index"] = e.token_index ? ojson(*e.token_index) : ojson(nullptr);
  j["char_position"] = e.char_position ? ojson(*e.char_position) : ojson(nullptr);
  j["removed"] = e.removed;
  j["inserted"] = e.inserted;
  return j;
}

// ---------------------------------------------------------------------------
// noise

struct NoiseFlags {
  CommonFlags common;
  std::string input;
  std::string output = "-";
  std::string type;
  int edits = 1;
  std::string manifest;
  std::string edit_log;
};

int RunNoise(const NoiseFlags& f, std::ostream& out) {
  const NoiseType type = ParseTypeFlag(f.type);
  if (type == NoiseType::kSampleSubstitute && f.common.lexicon.empty()) {
    throw ConfigError("--type sample-substitute requires --lexicon");
  }
  const LanguageProfile profile = ResolveProfile(f.common.profile);
  const Lexicon lexicon =
      f.common.lexicon.empty() ? Lexicon() : LoadLexiconFile(f.common.lexicon);
  const std::vector<std::string> lines = ReadLines(f.input);

  NoiseOptions options;
  options.edits_per_sentence = f.edits;
  std::vector<NoisedSentence> results(lines.size());
  ParallelFor(lines.size(), f.common.jobs, [&](size_t i) {
    results[i] = ApplyNoise(Tokenize(lines[i], profile), type, profile,
                            lexicon, LineSeed(f.common.seed, i, type), options);
  });

  std::vector<std::string> noised(lines.size());
  size_t noops = 0;
  std::string log;
  for (size_t i = 0; i < lines.size(); ++i) {
    noised[i] = results[i].noop() ? lines[i] : results[i].noised_text;
    noops += results[i].noop();
    if (!f.edit_log.empty()) {
      ojson edits = ojson::array();
      for (const auto& e : results[i].edits) edits.push_back(EditJson(e));
      log += ojson{{"line", i + 1}, {"seed", results[i].seed}, {"edits", edits}}
                 .dump() +
             "\n";
    }
  }
  WriteOutput(f.output, JoinLines(noised), out);

  std::string manifest_path = f.manifest;
  if (manifest_path.empty() && f.output != "-") {
    manifest_path = f.output + ".manifest.json";
  }
  if (!manifest_path.empty()) {
    const ojson manifest = {
        {"command", "noise"},
        {"noise_type", NoiseTypeName(type)},
        {"seed", f.common.seed},
        {"edits_per_sentence", f.edits},
        {"profile", profile.language_tag},
        {"lines", lines.size()},
        {"noop_count", noops},
        {"noop_rate", lines.empty() ? 0.0
                                    : static_cast<double>(noops) / lines.size()},
    };
    WriteFile(manifest_path, DumpJson(manifest));
  }
  if (!f.edit_log.empty()) WriteFile(f.edit_log, log);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// augment

struct AugmentFlags {
  CommonFlags common;
  std::string source;
  std::string target;
  std::string tsv;
  std::string output_source;
  std::string output_target;
  std::string output_tsv;
  std::string mode = "equal-mix";
  std::string type;
  std::vector<std::string> types;
  int edits = 1;
  uint64_t min_count = 2;
  std::string manifest;
};

int RunAugment(const AugmentFlags& f, std::ostream& out) {
  const bool use_tsv = !f.tsv.empty();
  if (use_tsv == (!f.source.empty() || !f.target.empty())) {
    throw ConfigError("give either --tsv or both --source and --target");
  }
  if (!use_tsv && (f.source.empty() || f.target.empty())) {
    throw ConfigError("--source and --target must be given together");
  }

  AugmentPlan plan;
  plan.seed = f.common.seed;
  plan.edits_per_sentence = f.edits;
  if (f.mode == "one-to-one") {
    plan.mode = AugmentMode::kOneToOne;
    if (f.type.empty()) throw ConfigError("--mode one-to-one requires --type");
    if (!f.types.empty()) throw ConfigError("--types applies to --mode equal-mix");
    plan.noise_types = {ParseTypeFlag(f.type)};
  } else if (f.mode == "equal-mix") {
    plan.mode = AugmentMode::kEqualMix;
    if (!f.type.empty()) throw ConfigError("--type applies to --mode one-to-one");
    plan.noise_types =
        f.types.empty() ? ProductiveNoiseTypes() : ParseTypeList(f.types);
  } else {
    throw ConfigError("unknown --mode '" + f.mode +
                      "' (use one-to-one or equal-mix)");
  }
  try {
    plan.Validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }

  ParallelCorpus corpus;
  if (use_tsv) {
    corpus = ParseTsv(ReadLines(f.tsv));
  } else {
    corpus.source = ReadLines(f.source);
    corpus.target = ReadLines(f.target);
    if (corpus.source.size() != corpus.target.size()) {
      throw ConfigError("misaligned corpus: " + f.source + " has " +
                        std::to_string(corpus.source.size()) + " lines, " +
                        f.target + " has " +
                        std::to_string(corpus.target.size()) + " lines");
    }
  }
  if (corpus.size() == 0) throw ConfigError("input corpus is empty");

  const LanguageProfile profile = ResolveProfile(f.common.profile);
  plan.profile_tag = profile.language_tag;
  Lexicon lexicon;
  std::string lexicon_origin = "none";
  if (!f.common.lexicon.empty()) {
    lexicon = LoadLexiconFile(f.common.lexicon);
    lexicon_origin = f.common.lexicon;
  } else if (Contains(plan.noise_types, NoiseType::kSampleSubstitute)) {
    lexicon = BuildLexicon(corpus.source, profile, f.min_count);
    lexicon_origin = "source side, min count " + std::to_string(f.min_count);
  }

  const AugmentResult result = Augment(corpus, plan, profile, lexicon, f.common.jobs);

  std::string manifest_path = f.manifest;
  if (use_tsv) {
    WriteOutput(f.output_tsv, JoinLines(ToTsv(result.corpus)), out);
    if (manifest_path.empty() && !f.output_tsv.empty() && f.output_tsv != "-") {
      manifest_path = f.output_tsv + ".manifest.json";
    }
  } else {
    if (f.output_source.empty() || f.output_target.empty()) {
      throw ConfigError("--output-source and --output-target are required");
    }
    WriteLines(f.output_source, result.corpus.source);
    WriteLines(f.output_target, result.corpus.target);
    if (manifest_path.empty()) manifest_path = f.output_source + ".manifest.json";
  }
  if (!manifest_path.empty()) {
    ojson manifest = AugmentManifest(plan, result, corpus.size());
    manifest["lexicon"] = lexicon_origin;
    WriteFile(manifest_path, DumpJson(manifest));
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// eval

struct EvalFlags {
  CommonFlags common;
  std::string input;
  std::string translator;
  std::string auth_header;
  std::vector<std::string> types;
  size_t variants = 10;
  int edits = 1;
  size_t batch_size = 256;
  std::string report;
  std::string table;
  bool bleu = false;
  std::string reference;
  std::string bleu_report;
  bool timestamp = false;
};

int RunEval(const EvalFlags& f, std::ostream& out) {
  std::vector<NoiseType> types =
      f.types.empty() ? std::vector<NoiseType>(kAllNoiseTypes.begin(),
                                               kAllNoiseTypes.end())
                      : ParseTypeList(f.types);
  if (f.bleu && f.reference.empty()) {
    throw ConfigError("--bleu requires --reference");
  }
  if (f.variants < 1) throw ConfigError("--variants must be >= 1");
  const LanguageProfile profile = ResolveProfile(f.common.profile);
  Lexicon lexicon;
  if (!f.common.lexicon.empty()) lexicon = LoadLexiconFile(f.common.lexicon);
  const std::vector<std::string> sentences = ReadLines(f.input);
  if (sentences.empty()) throw ConfigError("test set " + f.input + " is empty");

  std::unique_ptr<Translator> translator;
  try {
    translator = MakeTranslator(
        f.translator, f.auth_header.empty()
                          ? std::nullopt
                          : std::optional<std::string>(f.auth_header));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }

  EvalOptions options;
  options.variants_per_sentence = f.variants;
  options.edits_per_sentence = f.edits;
  options.batch_size = f.batch_size;
  options.jobs = f.common.jobs;
  RobustnessReport report =
      EvaluateRobustness(*translator, sentences, types, profile, lexicon,
                         f.common.seed, options);
  if (f.timestamp) report.timestamp = UtcTimestamp();

  const RobustnessReport reports[] = {report};
  const std::string table = FormatRobustnessTable(reports);
  if (!f.report.empty()) WriteFile(f.report, DumpJson(RobustnessReportJson(report)));
  if (!f.table.empty()) WriteFile(f.table, table);
  out << table;

  if (f.bleu) {
    ParallelCorpus test;
    test.source = sentences;
    test.target = ReadLines(f.reference);
    if (test.target.size() != test.source.size()) {
      throw ConfigError("misaligned test set: " + f.input + " has " +
                        std::to_string(test.source.size()) + " lines, " +
                        f.reference + " has " +
                        std::to_string(test.target.size()) + " lines");
    }
    const QualityTable quality = EvaluateQuality(
        *translator, test, types, profile, lexicon, f.common.seed, options);
    const QualityTable tables[] = {quality};
    out << "\n" << FormatQualityTable(tables);
    if (!f.bleu_report.empty()) {
      WriteFile(f.bleu_report, DumpJson(QualityTablesJson(tables)));
    }
  }
  out.flush();
  return kExitOk;
}

// ---------------------------------------------------------------------------
// ter / bleu / significance

struct PairFlags {
  std::string profile = "en";
  std::string hyp;
  std::string ref;
  std::string json;
};

std::pair<std::vector<std::string>, std::vector<std::string>> ReadAligned(
    const std::string& hyp_path, const std::string& ref_path) {
  auto hyp = ReadLines(hyp_path);
  auto ref = ReadLines(ref_path);
  if (hyp.size() != ref.size()) {
    throw ConfigError("misaligned inputs: " + hyp_path + " has " +
                      std::to_string(hyp.size()) + " lines, " + ref_path +
                      " has " + std::to_string(ref.size()) + " lines");
  }
  return {std::move(hyp), std::move(ref)};
}

int RunTer(const PairFlags& f, std::ostream& out) {
  const LanguageProfile profile = ResolveProfile(f.profile);
  const auto [hyp, ref] = ReadAligned(f.hyp, f.ref);
  double sum = 0.0;
  TerScore corpus;
  std::string text;
  ojson lines = ojson::array();
  for (size_t i = 0; i < hyp.size(); ++i) {
    const Words r = TokenSurfaces(ref[i], profile);
    if (r.empty()) {
      throw ConfigError(f.ref + ": line " + std::to_string(i + 1) +
                        " has no tokens; TER is undefined");
    }
    const TerScore s = Ter(TokenSurfaces(hyp[i], profile), r);
    text += FormatTerLine(s) + "\n";
    sum += s.score;
    corpus.edits += s.edits;
    corpus.shifts += s.shifts;
    corpus.ref_length += s.ref_length;
    lines.push_back({{"edits", s.edits},
                     {"shifts", s.shifts},
                     {"ref_length", s.ref_length},
                     {"score", s.score}});
  }
  const double mean = hyp.empty() ? 0.0 : sum / static_cast<double>(hyp.size());
  if (corpus.ref_length > 0) {
    corpus.score = static_cast<double>(corpus.edits) / corpus.ref_length;
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "MEAN %.6f\n", mean);
  text += buf;
  text += "CORPUS " + FormatTerLine(corpus).substr(4) + "\n";
  out << text;
  if (!f.json.empty()) {
    WriteFile(f.json, DumpJson({{"sentences", lines},
                                {"mean", mean},
                                {"corpus",
                                 {{"edits", corpus.edits},
                                  {"shifts", corpus.shifts},
                                  {"ref_length", corpus.ref_length},
                                  {"score", corpus.score}}}}));
  }
  return kExitOk;
}

int RunBleu(const PairFlags& f, std::ostream& out) {
  const LanguageProfile profile = ResolveProfile(f.profile);
  const auto [hyp, ref] = ReadAligned(f.hyp, f.ref);
  if (hyp.empty()) throw ConfigError("BLEU needs at least one line");
  const BleuScore s = CorpusBleu(hyp, ref, profile);
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "BLEU = %.2f %.1f/%.1f/%.1f/%.1f (BP=%.3f, hyp_len=%llu, "
                "ref_len=%llu)\n",
                100 * s.score, 100 * s.precisions[0], 100 * s.precisions[1],
                100 * s.precisions[2], 100 * s.precisions[3],
                s.brevity_penalty,
                static_cast<unsigned long long>(s.hyp_length),
                static_cast<unsigned long long>(s.ref_length));
  out << buf;
  if (!f.json.empty()) {
    WriteFile(f.json, DumpJson({{"bleu", s.score},
                                {"precisions", s.precisions},
                                {"brevity_penalty", s.brevity_penalty},
                                {"hyp_length", s.hyp_length},
                                {"ref_length", s.ref_length}}));
  }
  return kExitOk;
}

struct SignificanceFlags {
  std::string profile = "en";
  std::string hyp_a;
  std::string hyp_b;
  std::string ref;
  size_t iterations = 1000;
  uint64_t seed = 0;
  std::string json;
};

int RunSignificance(const SignificanceFlags& f, std::ostream& out) {
  const LanguageProfile profile = ResolveProfile(f.profile);
  const auto a = ReadLines(f.hyp_a);
  const auto b = ReadLines(f.hyp_b);
  const auto r = ReadLines(f.ref);
  if (a.size() != r.size() || b.size() != r.size()) {
    throw ConfigError("misaligned inputs: " + std::to_string(a.size()) + " / " +
                      std::to_string(b.size()) + " / " +
                      std::to_string(r.size()) + " lines");
  }
  SignificanceResult res;
  try {
    res = PairedBootstrap(a, b, r, f.iterations, f.seed, profile);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "metric %s\nscore_a %.6f\nscore_b %.6f\np_value %.6f\n"
                "iterations %zu\nseed %llu\nsignificant %s\n",
                res.metric.c_str(), res.score_a, res.score_b, res.p_value,
                res.iterations, static_cast<unsigned long long>(res.seed),
                res.significant() ? "yes" : "no");
  out << buf;
  if (!f.json.empty()) WriteFile(f.json, DumpJson(SignificanceJson(res)));
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Orthographic and punctuation noise for MT training data and "
               "robustness evaluation"};
  app.name(args.empty() ? "orthonoise" : fs::path(args[0]).filename().string());
  app.require_subcommand(1);
  app.config_formatter(std::make_shared<JsonConfig>(&app));
  app.set_config("--config", "", kConfigHelp);

  NoiseFlags nf;
  CLI::App* noise = app.add_subcommand("noise", "Noise every line of a file with one noise type");
  AddCommon(noise, nf.common);
  noise->add_option("--input", nf.input, "Input text, one sentence per line")
      ->required()
      ->check(CLI::ExistingFile);
  noise->add_option("--output", nf.output, "Output file ('-' for stdout)")
      ->capture_default_str();
  noise->add_option("--type", nf.type,
                    "Noise type: extra-letter, delete-letter, permute-letters, "
                    "confuse-letters, add-diacritic, sample-substitute, "
                    "remove-punct, add-comma, latinize, phonetic-latinize")
      ->required();
  noise->add_option("--edits", nf.edits, "Edits per sentence for letter-level types")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  noise->add_option("--manifest", nf.manifest,
                    "Manifest JSON path (default: <output>.manifest.json)");
  noise->add_option("--edit-log", nf.edit_log, "Write per-line edit records as JSON lines");

  AugmentFlags af;
  CLI::App* augment = app.add_subcommand("augment", "Append a noised copy of a parallel corpus");
  AddCommon(augment, af.common);
  augment->add_option("--source", af.source, "Source side, one sentence per line")
      ->check(CLI::ExistingFile);
  augment->add_option("--target", af.target, "Target side, aligned with --source")
      ->check(CLI::ExistingFile);
  augment->add_option("--tsv", af.tsv, "Single source<TAB>target file instead of two files")
      ->check(CLI::ExistingFile);
  augment->add_option("--output-source", af.output_source, "Augmented source output");
  augment->add_option("--output-target", af.output_target, "Augmented target output");
  augment->add_option("--output-tsv", af.output_tsv, "Augmented TSV output ('-' for stdout)");
  augment->add_option("--mode", af.mode, "one-to-one or equal-mix")->capture_default_str();
  augment->add_option("--type", af.type, "Noise type for one-to-one");
  augment->add_option("--types", af.types,
                      "Comma-separated noise types for equal-mix (default: the "
                      "seven productive types)")
      ->delimiter(',');
  augment->add_option("--edits", af.edits, "Edits per sentence for letter-level types")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  augment->add_option("--min-count", af.min_count,
                      "Minimum count for the lexicon built from the source side "
                      "when --lexicon is absent")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  augment->add_option("--manifest", af.manifest,
                      "Manifest JSON path (default: next to the output)");

  EvalFlags ef;
  CLI::App* eval = app.add_subcommand("eval", "Measure noise invariance (10NT-TER) and optionally BLEU");
  AddCommon(eval, ef.common);
  eval->add_option("--input", ef.input, "Test set sources, one per line")
      ->required()
      ->check(CLI::ExistingFile);
  eval->add_option("--translator", ef.translator,
                   "identity | constant:<text> | cmd:<command> | http:<url>")
      ->required();
  eval->add_option("--auth-header", ef.auth_header,
                   "Header for http translators ('Name: value' or an "
                   "Authorization value)");
  eval->add_option("--types", ef.types, "Comma-separated noise types (default: all ten)")
      ->delimiter(',');
  eval->add_option("--variants", ef.variants, "Noised variants per sentence and type")
      ->capture_default_str();
  eval->add_option("--edits", ef.edits, "Edits per sentence for letter-level types")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  eval->add_option("--batch-size", ef.batch_size, "Sentences per translator call")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  eval->add_option("--report", ef.report, "Robustness report JSON output");
  eval->add_option("--table", ef.table, "Robustness table text output");
  eval->add_flag("--bleu", ef.bleu, "Also score BLEU on clean and noised test sets");
  eval->add_option("--reference", ef.reference, "References for --bleu")
      ->check(CLI::ExistingFile);
  eval->add_option("--bleu-report", ef.bleu_report, "BLEU table JSON output");
  eval->add_flag("--timestamp", ef.timestamp,
                 "Record the wall-clock time in the report metadata");

  PairFlags tf;
  CLI::App* ter = app.add_subcommand("ter", "Sentence TER of a hypothesis file against references");
  ter->add_option("--profile", tf.profile, "Profile used for tokenization")->capture_default_str();
  ter->add_option("--hyp", tf.hyp, "Hypotheses")->required()->check(CLI::ExistingFile);
  ter->add_option("--ref", tf.ref, "References")->required()->check(CLI::ExistingFile);
  ter->add_option("--json", tf.json, "Also write scores as JSON");
  ter->footer(kConfigFooter);

  PairFlags bf;
  CLI::App* bleu = app.add_subcommand("bleu", "Corpus BLEU of a hypothesis file");
  bleu->add_option("--profile", bf.profile, "Profile used for tokenization")->capture_default_str();
  bleu->add_option("--hyp", bf.hyp, "Hypotheses")->required()->check(CLI::ExistingFile);
  bleu->add_option("--ref", bf.ref, "References")->required()->check(CLI::ExistingFile);
  bleu->add_option("--json", bf.json, "Also write the score as JSON");
  bleu->footer(kConfigFooter);

  SignificanceFlags sf;
  CLI::App* sig = app.add_subcommand("significance", "Paired bootstrap test between two systems");
  sig->add_option("--profile", sf.profile, "Profile used for tokenization")->capture_default_str();
  sig->add_option("--hyp-a", sf.hyp_a, "System A output")->required()->check(CLI::ExistingFile);
  sig->add_option("--hyp-b", sf.hyp_b, "System B output")->required()->check(CLI::ExistingFile);
  sig->add_option("--ref", sf.ref, "References")->required()->check(CLI::ExistingFile);
  sig->add_option("--iterations", sf.iterations, "Bootstrap resamples (>= 100)")
      ->capture_default_str();
  sig->add_option("--seed", sf.seed, "Resampling seed")->capture_default_str();
  sig->add_option("--json", sf.json, "Also write the result as JSON");
  sig->footer(kConfigFooter);

  try {
    std::vector<std::string> rest =
        HoistConfig({args.begin() + (args.empty() ? 0 : 1), args.end()});
    std::reverse(rest.begin(), rest.end());  // CLI11 consumes from the back
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    CLI::App* target = &app;
    for (CLI::App* sub : app.get_subcommands()) target = sub;
    out << target->help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << app.get_name() << ": " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    if (noise->parsed()) return RunNoise(nf, out);
    if (augment->parsed()) return RunAugment(af, out);
    if (eval->parsed()) return RunEval(ef, out);
    if (ter->parsed()) return RunTer(tf, out);
    if (bleu->parsed()) return RunBleu(bf, out);
    if (sig->parsed()) return RunSignificance(sf, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ProfileError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const LineError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const TranslatorError& e) {
    err << "translator error: " << e.what() << "\n";
    return kExitTranslator;
  } catch (const Utf8Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitConfig;
}

}  // namespace orthonoise
