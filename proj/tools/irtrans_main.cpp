// irtrans: command-line front end for the IR-assisted translation toolkit.
#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "irtrans/error.hpp"
#include "irtrans/eval/embeddings.hpp"
#include "irtrans/eval/harness.hpp"
#include "irtrans/frontends/frontend.hpp"
#include "irtrans/irnorm/normalize.hpp"
#include "irtrans/nn/checkpoint.hpp"
#include "irtrans/tokenizer/bpe.hpp"
#include "irtrans/trainer/trainer.hpp"
#include "irtrans/translator/translator.hpp"
#include "irtrans/util/config_file.hpp"
#include "irtrans/util/files.hpp"

using namespace irtrans;

namespace {

struct Globals {
  std::string config_path;
  std::size_t jobs = 1;
  std::optional<std::uint64_t> seed;
};

util::ConfigFile load_config(const Globals& g) {
  return g.config_path.empty() ? util::ConfigFile{} : util::ConfigFile::load(g.config_path);
}

// "-" or empty reads stdin.
std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  return util::read_file(path);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    util::write_file(path, text);
  }
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  for (char c : s + ",") {
    if (c == ',') {
      auto t = util::trim(item);
      if (!t.empty()) out.emplace_back(t);
      item.clear();
    } else {
      item += c;
    }
  }
  return out;
}

translator::DecodeOptions decode_options(int beam, int max_new) {
  translator::DecodeOptions o;
  o.beam_size = beam;
  o.max_new_tokens = max_new;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"IR-assisted neural code translation toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--config", g.config_path, "INI configuration file; flags override its values")
      ->check(CLI::ExistingFile);
  app.add_option("--jobs", g.jobs, "Upper bound for every worker pool")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for every random choice (training, initialization)");
  app.set_version_flag("--version",
                       std::string("irtrans ") + IRTRANS_VERSION + " (checkpoint format " +
                           std::to_string(nn::kCheckpointVersion) + ")");

  // normalize
  auto* norm_cmd = app.add_subcommand("normalize", "Normalize LLVM IR text");
  std::string norm_in, norm_out, demangler;
  bool no_demangle = false;
  norm_cmd->add_option("input", norm_in, "IR file, or - for stdin");
  norm_cmd->add_option("-o,--output", norm_out, "Output file (default stdout)");
  norm_cmd->add_flag("--no-demangle", no_demangle, "Keep mangled symbol names");
  norm_cmd->add_option("--demangler", demangler, "External demangler command with a {symbol} placeholder");

  // build-corpus
  auto* corpus_cmd = app.add_subcommand("build-corpus", "Extract functions and compile them to normalized IR");
  std::vector<std::string> corpus_inputs;
  std::string corpus_langs = "cpp,rust", corpus_out, corpus_vocab;
  std::size_t corpus_max_tokens = 0;
  corpus_cmd->add_option("inputs", corpus_inputs, "Source files or directories")->required();
  corpus_cmd->add_option("--languages", corpus_langs, "Comma-separated language tags");
  corpus_cmd->add_option("--out", corpus_out, "Output directory for shards")->required();
  corpus_cmd->add_option("--max-tokens", corpus_max_tokens, "Skip functions longer than this (needs --vocab)");
  corpus_cmd->add_option("--vocab", corpus_vocab, "Vocabulary used to count tokens")->check(CLI::ExistingFile);

  // train-vocab
  auto* vocab_cmd = app.add_subcommand("train-vocab", "Learn a shared byte-level merge vocabulary");
  std::string vocab_corpus, vocab_out;
  std::size_t vocab_size = 2048;
  bool no_byte_fallback = false;
  vocab_cmd->add_option("--corpus", vocab_corpus, "Corpus directory")->required()->check(CLI::ExistingDirectory);
  vocab_cmd->add_option("--size", vocab_size, "Target vocabulary size");
  vocab_cmd->add_option("--out", vocab_out, "Vocabulary file")->required();
  vocab_cmd->add_flag("--no-byte-fallback", no_byte_fallback, "Only keep bytes seen in the corpus");

  // train
  auto* train_cmd = app.add_subcommand("train", "Train a model");
  std::string train_corpus, train_vocab, train_langs, train_out, train_resume, train_objectives;
  std::optional<std::uint64_t> train_steps;
  train_cmd->add_option("--corpus", train_corpus, "Corpus directory ([data] corpus)");
  train_cmd->add_option("--vocab", train_vocab, "Vocabulary file ([data] vocab)");
  train_cmd->add_option("--languages", train_langs, "Comma-separated language tags ([data] languages)");
  train_cmd->add_option("--out", train_out, "Output directory for checkpoints and the log")->required();
  train_cmd->add_option("--resume", train_resume, "Checkpoint to resume from")->check(CLI::ExistingFile);
  train_cmd->add_option("--objectives", train_objectives, "Comma-separated objectives, e.g. MLM,AE,BT");
  train_cmd->add_option("--steps", train_steps, "Number of updates");

  // translate / decompile / pivot share the model and decoding flags.
  std::string model_path, input_path, output_path, src_lang, tgt_lang;
  int beam = 1, max_new = 255;
  auto add_decode = [&](CLI::App* cmd) {
    cmd->add_option("--model", model_path, "Checkpoint")->required()->check(CLI::ExistingFile);
    cmd->add_option("--input", input_path, "Input file, or - for stdin");
    cmd->add_option("-o,--output", output_path, "Output file (default stdout)");
    cmd->add_option("--beam", beam, "Beam size (1 is greedy)")->check(CLI::PositiveNumber);
    cmd->add_option("--max-new-tokens", max_new, "Generation bound")->check(CLI::PositiveNumber);
  };
  auto* translate_cmd = app.add_subcommand("translate", "Translate a function directly");
  add_decode(translate_cmd);
  translate_cmd->add_option("--src", src_lang, "Source language")->required();
  translate_cmd->add_option("--tgt", tgt_lang, "Target language")->required();

  auto* decompile_cmd = app.add_subcommand("decompile", "Generate source code from LLVM IR");
  add_decode(decompile_cmd);
  std::string decoder_mode = "shared", dialect;
  decompile_cmd->add_option("--tgt", tgt_lang, "Target language")->required();
  decompile_cmd->add_option("--decoder", decoder_mode, "shared or separate");
  decompile_cmd->add_option("--dialect", dialect, "IR dialect tag (default ir-<tgt>)");

  auto* pivot_cmd = app.add_subcommand("pivot", "Translate by compiling to IR and decompiling");
  add_decode(pivot_cmd);
  pivot_cmd->add_option("--src", src_lang, "Source language")->required();
  pivot_cmd->add_option("--tgt", tgt_lang, "Target language")->required();

  // evaluate
  auto* eval_cmd = app.add_subcommand("evaluate", "Computational accuracy on an evaluation set");
  std::string eval_model, eval_set, eval_dirs, eval_json;
  std::size_t eval_k = 1;
  bool eval_references = false, eval_no_validate = false;
  eval_cmd->add_option("--model", eval_model, "Checkpoint")->check(CLI::ExistingFile);
  eval_cmd->add_option("--set", eval_set, "Evaluation set directory")->required();
  eval_cmd->add_option("--directions", eval_dirs, "Comma-separated src-tgt pairs")->required();
  eval_cmd->add_option("--beam", beam, "Beam size")->check(CLI::PositiveNumber);
  eval_cmd->add_option("--k", eval_k, "Candidates per case (top-k beam hypotheses)")->check(CLI::PositiveNumber);
  eval_cmd->add_option("--max-new-tokens", max_new, "Generation bound")->check(CLI::PositiveNumber);
  eval_cmd->add_option("--json", eval_json, "Also write the JSON report here");
  eval_cmd->add_flag("--references", eval_references, "Grade the reference solutions instead of a model");
  eval_cmd->add_flag("--no-validate", eval_no_validate, "Skip checking references against their tests");

  // embed-report
  auto* embed_cmd = app.add_subcommand("embed-report", "Nearest tokens by embedding cosine similarity");
  std::string embed_token;
  std::size_t embed_k = 10;
  embed_cmd->add_option("--model", model_path, "Checkpoint")->required()->check(CLI::ExistingFile);
  embed_cmd->add_option("--token", embed_token, "Token text")->required();
  embed_cmd->add_option("--k", embed_k, "Number of neighbors")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    if (argc <= 1) std::cerr << app.help();
    return 2;
  }

  try {
    auto config = load_config(g);
    auto norm = irnorm::normalization_config_from(config);

    if (*norm_cmd) {
      if (no_demangle) norm.demangle = false;
      if (!demangler.empty()) norm.demangler_command = demangler;
      std::vector<irnorm::DemangleFailure> failures;
      write_output(norm_out, irnorm::normalize(read_input(norm_in), norm, &failures));
      for (const auto& f : failures) std::cerr << "warning: could not demangle " << f.symbol << ": " << f.reason << "\n";
    } else if (*corpus_cmd) {
      auto fe = frontends::FrontendConfig::from_config(config, frontends::FrontendConfig::defaults());
      frontends::CorpusOptions opt;
      opt.out_dir = corpus_out;
      opt.jobs = g.jobs;
      std::optional<tokenizer::Vocab> vocab;
      if (corpus_max_tokens > 0) {
        if (corpus_vocab.empty()) throw Error(ErrorCode::kInvalidArgument, "--max-tokens needs --vocab");
        vocab = tokenizer::Vocab::load(corpus_vocab);
        opt.max_tokens = corpus_max_tokens;
        opt.token_count = [&](std::string_view s) { return tokenizer::encode_ids(s, *vocab).size(); };
      }
      std::vector<std::filesystem::path> inputs(corpus_inputs.begin(), corpus_inputs.end());
      auto summary = frontends::build_corpus(inputs, split_list(corpus_langs), fe, norm, opt);
      for (const auto& s : summary.shards) {
        std::cout << s.language << ": " << s.monolingual << " functions, " << s.parallel << " with IR ("
                  << s.compile_error << " compile errors, " << s.timeout << " timeouts, " << s.skipped_too_long
                  << " too long)\n";
      }
    } else if (*vocab_cmd) {
      auto texts = tokenizer::corpus_texts(vocab_corpus);
      auto vocab = tokenizer::train_vocab(texts, vocab_size, !no_byte_fallback);
      vocab.save(vocab_out);
      std::cout << "vocabulary of " << vocab.size() << " tokens (hash " << vocab.hash() << ") written to " << vocab_out
                << "\n";
    } else if (*train_cmd) {
      auto cfg = trainer::train_config_from(config);
      auto model_cfg = trainer::model_config_from(config);
      if (g.seed) {
        cfg.seed = *g.seed;
        model_cfg.seed = *g.seed;
      }
      if (train_steps) cfg.steps = *train_steps;
      if (!train_objectives.empty()) {
        cfg.objectives.clear();
        for (const auto& name : split_list(train_objectives)) cfg.objectives.push_back(objectives::parse_objective(name));
      }
      auto corpus = train_corpus.empty() ? config.get_or("data.corpus", "") : train_corpus;
      auto vocab_path = train_vocab.empty() ? config.get_or("data.vocab", "") : train_vocab;
      auto langs = split_list(train_langs.empty() ? config.get_or("data.languages", "") : train_langs);
      if (corpus.empty() || vocab_path.empty() || langs.empty()) {
        throw Error(ErrorCode::kInvalidArgument, "train needs a corpus, a vocabulary and languages");
      }
      auto data = trainer::TrainData::load(corpus, langs, tokenizer::Vocab::load(vocab_path));
      trainer::TrainOptions opt;
      opt.out_dir = train_out;
      if (!train_resume.empty()) opt.resume_from = train_resume;
      std::uint64_t every = std::max<std::uint64_t>(1, cfg.steps / 20);
      opt.on_step = [&](const trainer::TrainLogEntry& e) {
        if (e.step % every == 0 || e.step == cfg.steps) {
          std::cerr << "step " << e.step << " " << e.objective << " loss " << e.loss << " lr " << e.lr << "\n";
        }
      };
      auto res = trainer::train(data, cfg, model_cfg, opt);
      std::cout << "trained to step " << res.checkpoint.step << "; checkpoint " << (std::filesystem::path(train_out) / "last.ckpt").string() << "\n";
    } else if (*translate_cmd) {
      auto model = translator::Model::load(model_path);
      write_output(output_path,
                   translator::translate(model, read_input(input_path), src_lang, tgt_lang, decode_options(beam, max_new)));
    } else if (*decompile_cmd) {
      auto model = translator::Model::load(model_path);
      write_output(output_path, translator::decompile(model, read_input(input_path), tgt_lang,
                                                      translator::parse_decoder_mode(decoder_mode), dialect, norm,
                                                      decode_options(beam, max_new)));
    } else if (*pivot_cmd) {
      auto model = translator::Model::load(model_path);
      auto fe = frontends::FrontendConfig::from_config(config, frontends::FrontendConfig::defaults());
      write_output(output_path, translator::pivot_translate(model, read_input(input_path), src_lang, tgt_lang, fe,
                                                            norm, decode_options(beam, max_new)));
    } else if (*eval_cmd) {
      auto hcfg = eval::HarnessConfig::from_config(config, eval::HarnessConfig::defaults());
      hcfg.jobs = g.jobs;
      auto set = eval::EvalSet::load(eval_set);
      if (!eval_no_validate) eval::validate_eval_set(set, hcfg);
      std::vector<std::pair<std::string, std::string>> directions;
      for (const auto& d : split_list(eval_dirs)) directions.push_back(eval::parse_direction(d));

      std::optional<translator::Model> model;
      eval::CandidateFn candidates;
      eval::TokenizeFn tokenize;
      if (eval_references) {
        candidates = [&](const eval::EvalCase& c, std::string_view tgt, std::size_t) {
          const auto* t = set.find(c.problem_id, tgt);
          return std::vector<std::string>{t ? t->reference : ""};
        };
        tokenize = [](std::string_view s) { return tokenizer::encode_ids(s, tokenizer::Vocab()); };
      } else {
        if (eval_model.empty()) throw Error(ErrorCode::kInvalidArgument, "evaluate needs --model or --references");
        model.emplace(translator::Model::load(eval_model));
        auto opt = decode_options(beam, max_new);
        candidates = [&, opt](const eval::EvalCase& c, std::string_view tgt, std::size_t k) {
          return translator::translate_candidates(*model, c.reference, c.language, tgt, k, opt);
        };
        tokenize = [&](std::string_view s) { return tokenizer::encode_ids(s, model->vocab()); };
      }
      auto report = eval::evaluate(set, directions, candidates, tokenize, eval_k, hcfg);
      std::cout << report.to_table();
      if (!eval_json.empty()) util::write_file(eval_json, report.to_json() + "\n");
    } else if (*embed_cmd) {
      auto model = translator::Model::load(model_path);
      int rank = 1;
      for (const auto& n : eval::embedding_report(model, embed_token, embed_k)) {
        std::printf("%3d  %-20s %.4f\n", rank++, n.token.c_str(), n.similarity);
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
