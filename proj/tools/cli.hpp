#pragma once

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pmatch/experiment.hpp"
#include "pmatch/general_matcher.hpp"
#include "pmatch/oracle.hpp"
#include "pmatch/single_mismatch.hpp"

namespace pmatch::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "@path" reads a file; anything else is the literal string.
inline std::string load_source(const std::string& source) {
  if (source.empty() || source.front() != '@') return source;
  std::ifstream in(source.substr(1), std::ios::binary);
  if (!in) throw IoError("cannot read " + source.substr(1));
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  if (!text.empty() && text.back() == '\n') text.pop_back();
  if (!text.empty() && text.back() == '\r') text.pop_back();
  return text;
}

/// Strings over one alphabet, either one symbol per byte or one per
/// whitespace-separated token.
struct Corpus {
  std::shared_ptr<const Alphabet> alphabet;
  std::vector<PString> strings;
};

inline Corpus make_corpus(const std::vector<std::string>& raw, const std::string& statics, const std::string& mode) {
  Corpus corpus;
  if (mode == "bytes") {
    std::vector<std::string_view> views(raw.begin(), raw.end());
    corpus.alphabet = std::make_shared<const Alphabet>(Alphabet::from_bytes(statics, views));
    for (const auto& s : raw) corpus.strings.push_back(PString::from_bytes(corpus.alphabet, s));
    return corpus;
  }
  if (mode != "tokens") throw InputError("unknown --symbols mode '" + mode + "'");
  std::map<std::string, Symbol> ids;
  std::vector<Symbol> static_ids;
  std::vector<Symbol> param_ids;
  std::istringstream static_stream(statics);
  for (std::string tok; static_stream >> tok;) {
    if (ids.count(tok) != 0) throw InputError("duplicate static token '" + tok + "'");
    ids.emplace(tok, static_cast<Symbol>(ids.size()));
    static_ids.push_back(ids[tok]);
  }
  std::vector<std::vector<Symbol>> sequences;
  for (const auto& s : raw) {
    std::istringstream in(s);
    auto& seq = sequences.emplace_back();
    for (std::string tok; in >> tok;) {
      auto [it, inserted] = ids.emplace(tok, static_cast<Symbol>(ids.size()));
      if (inserted) param_ids.push_back(it->second);
      seq.push_back(it->second);
    }
  }
  corpus.alphabet = std::make_shared<const Alphabet>(static_ids, param_ids);
  for (auto& seq : sequences) corpus.strings.emplace_back(corpus.alphabet, std::move(seq));
  return corpus;
}

inline std::string render_codes(const EncodedString& enc) {
  std::string line;
  for (std::size_t i = 0; i < enc.size(); ++i) {
    if (i > 0) line += ' ';
    const Code c = enc.codes[i];
    line += enc.is_static_code(c) ? "S" + std::to_string(c - enc.static_base) : std::to_string(c);
  }
  return line;
}

inline std::optional<std::uint64_t> opt_u64(const CLI::Option* opt, std::uint64_t value) {
  return opt->count() > 0 ? std::optional<std::uint64_t>(value) : std::nullopt;
}

inline std::vector<std::size_t> parse_list(const std::string& csv) {
  std::vector<std::size_t> out;
  std::istringstream in(csv);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) out.push_back(static_cast<std::size_t>(std::stoull(item)));
  }
  return out;
}

inline void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  out << contents;
  if (!out) throw IoError("write failed for " + path);
}

/// Runs the command line; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parameterized string matching with mismatches"};
  app.require_subcommand(1);

  // encode
  std::vector<std::string> encode_inputs;
  std::string statics;
  std::string symbols_mode = "bytes";
  auto* encode_cmd = app.add_subcommand("encode", "Print prev-occurrence encodings, one line per input");
  encode_cmd->add_option("inputs", encode_inputs, "Strings or @files")->required();
  encode_cmd->add_option("--static", statics, "Static symbols (characters, or tokens in token mode)");
  encode_cmd->add_option("--symbols", symbols_mode, "bytes | tokens")->check(CLI::IsMember({"bytes", "tokens"}));

  // match
  std::string text_src;
  std::string pattern_src;
  std::size_t k = 0;
  std::string algorithm = "general";
  std::string report = "positions";
  std::uint64_t mod1 = 0;
  std::uint64_t mod2 = 0;
  std::uint64_t base = 0;
  std::uint64_t seed = 1;
  std::size_t threads = 1;
  auto* match_cmd = app.add_subcommand("match", "Report windows of the text that p-match the pattern");
  match_cmd->add_option("--text", text_src, "Text string or @file")->required();
  match_cmd->add_option("--pattern", pattern_src, "Pattern string or @file")->required();
  match_cmd->add_option("--k", k, "Mismatch tolerance");
  match_cmd->add_option("--algorithm", algorithm)->check(CLI::IsMember({"general", "single", "oracle"}));
  match_cmd->add_option("--report", report)->check(CLI::IsMember({"positions", "counts"}));
  match_cmd->add_option("--static", statics);
  match_cmd->add_option("--symbols", symbols_mode)->check(CLI::IsMember({"bytes", "tokens"}));
  auto* match_mod1 = match_cmd->add_option("--mod1", mod1, "First hash modulus (single)");
  auto* match_mod2 = match_cmd->add_option("--mod2", mod2, "Second hash modulus (single)");
  auto* match_base = match_cmd->add_option("--base", base, "Hash base (single)");
  match_cmd->add_option("--seed", seed, "Seed for the hash base");
  match_cmd->add_option("--threads", threads, "Worker threads for the general matcher");

  // collisions
  experiment::ExperimentSpec spec;
  std::uint64_t exp_mod1 = 0;
  std::uint64_t exp_mod2 = 0;
  std::uint64_t exp_base = 0;
  auto* coll_cmd = app.add_subcommand("collisions", "Count runs where hashing disagrees with the general matcher");
  coll_cmd->add_option("--runs", spec.runs);
  coll_cmd->add_option("--n", spec.n);
  coll_cmd->add_option("--m", spec.m);
  coll_cmd->add_option("--alphabet", spec.alphabet);
  coll_cmd->add_option("--mod1", exp_mod1)->required();
  auto* coll_mod2 = coll_cmd->add_option("--mod2", exp_mod2);
  auto* coll_base = coll_cmd->add_option("--base", exp_base);
  coll_cmd->add_option("--seed", spec.seed);
  coll_cmd->add_option("--threads", spec.threads);

  // gen
  std::size_t gen_n = 0;
  std::size_t gen_m = 10;
  std::string gen_alphabet = "abcdefghijklmnopqrstuvwxyz";
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  std::string gen_pattern_out;
  auto* gen_cmd = app.add_subcommand("gen", "Write a seeded random text (and pattern) file");
  gen_cmd->add_option("--n", gen_n, "Text length")->required();
  gen_cmd->add_option("--m", gen_m, "Pattern length");
  gen_cmd->add_option("--alphabet", gen_alphabet);
  gen_cmd->add_option("--seed", gen_seed);
  gen_cmd->add_option("--out", gen_out, "Text output path")->required();
  gen_cmd->add_option("--pattern-out", gen_pattern_out, "Pattern output path");

  // bench
  std::string bench_sizes = "1000,10000,100000";
  std::size_t bench_m = 10;
  std::size_t bench_sigma = 26;
  std::size_t bench_k = 1;
  std::string bench_algorithms = "general,single";
  std::uint64_t bench_seed = 1;
  std::size_t bench_threads = 1;
  auto* bench_cmd = app.add_subcommand("bench", "Time the matchers over a size sweep (CSV)");
  bench_cmd->add_option("--sizes", bench_sizes, "Comma-separated text lengths");
  bench_cmd->add_option("--m", bench_m);
  bench_cmd->add_option("--sigma", bench_sigma)->check(CLI::Range(1, 94));
  bench_cmd->add_option("--k", bench_k);
  bench_cmd->add_option("--algorithms", bench_algorithms);
  bench_cmd->add_option("--seed", bench_seed);
  bench_cmd->add_option("--threads", bench_threads);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*encode_cmd) {
      std::vector<std::string> raw;
      for (const auto& src : encode_inputs) raw.push_back(load_source(src));
      const Corpus corpus = make_corpus(raw, statics, symbols_mode);
      for (const auto& s : corpus.strings) out << render_codes(encode(s)) << '\n';
      return kExitOk;
    }

    if (*match_cmd) {
      const Corpus corpus = make_corpus({load_source(text_src), load_source(pattern_src)}, statics, symbols_mode);
      const PString& t = corpus.strings[0];
      const PString& p = corpus.strings[1];
      if (p.size() > t.size()) throw InputError("pattern is longer than the text");
      if (k > p.size()) throw InputError("--k exceeds the pattern length");
      const bool counts = report == "counts";
      if (algorithm == "single") {
        if (k != 1) throw InputError("--algorithm single requires --k 1");
        const std::uint64_t max_code = single_max_code(*corpus.alphabet, p.size());
        HashConfig cfg;
        if (match_mod1->count() > 0) {
          cfg.mod1 = mod1;
          cfg.mod2 = opt_u64(match_mod2, mod2);
          cfg.base = match_base->count() > 0 ? base : HashConfig::derive_base(seed, max_code, cfg.mod1, cfg.mod2);
        } else {
          cfg = HashConfig::defaults(seed, max_code);
          if (match_mod2->count() > 0) cfg.mod2 = mod2;
          if (match_base->count() > 0) cfg.base = base;
        }
        cfg.validate(max_code);
        const auto verdicts = match_single(t, p, cfg);
        for (std::size_t w = 0; w < verdicts.size(); ++w) {
          if (counts) {
            out << (w + 1) << '\t' << (verdicts[w] ? "true" : "false") << '\n';
          } else if (verdicts[w]) {
            out << (w + 1) << '\n';
          }
        }
        return kExitOk;
      }
      std::vector<std::size_t> profile;
      if (algorithm == "oracle") {
        profile = oracle::profile(t, p);
      } else {
        GeneralOptions opt;
        opt.threads = threads;
        const auto raw_profile = mismatch_profile(t, p, opt);
        profile.assign(raw_profile.begin(), raw_profile.end());
      }
      for (std::size_t w = 0; w < profile.size(); ++w) {
        if (counts) {
          out << (w + 1) << '\t' << profile[w] << '\n';
        } else if (profile[w] <= k) {
          out << (w + 1) << '\n';
        }
      }
      return kExitOk;
    }

    if (*coll_cmd) {
      const HashConfig cfg = experiment::experiment_config(exp_mod1, opt_u64(coll_mod2, exp_mod2),
                                                           opt_u64(coll_base, exp_base), spec.seed, spec.m);
      const auto incorrect = experiment::count_incorrect_runs(spec, std::span(&cfg, 1));
      out << "incorrect=" << incorrect[0] << " runs=" << spec.runs << " base=" << cfg.base << '\n';
      return kExitOk;
    }

    if (*gen_cmd) {
      if (gen_alphabet.empty()) throw InputError("--alphabet must not be empty");
      experiment::Generator gen(gen_seed);
      const std::string text = gen.string_over(gen_n, gen_alphabet);
      const std::string pattern = gen.string_over(gen_m, gen_alphabet);
      write_file(gen_out, text);
      if (!gen_pattern_out.empty()) write_file(gen_pattern_out, pattern);
      return kExitOk;
    }

    if (*bench_cmd) {
      static constexpr std::string_view kPrintable =
          "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789!#$%&()*+,-./:;<=>?@[]^_{|}~\"'`\\";
      const std::string alphabet_chars(kPrintable.substr(0, bench_sigma));
      std::vector<Symbol> ids(alphabet_chars.begin(), alphabet_chars.end());
      const auto alphabet = std::make_shared<const Alphabet>(std::vector<Symbol>{}, ids);
      std::vector<std::string> algorithms;
      std::istringstream alg_stream(bench_algorithms);
      for (std::string a; std::getline(alg_stream, a, ',');) {
        if (a != "general" && a != "single") throw InputError("unknown algorithm '" + a + "' in --algorithms");
        algorithms.push_back(a);
      }
      out << "algorithm,n,m,sigma,k,millis\n";
      for (std::size_t n : parse_list(bench_sizes)) {
        if (bench_m > n) throw InputError("--m exceeds a sweep size");
        experiment::Generator gen(bench_seed ^ n);
        const PString t = PString::from_bytes(alphabet, gen.string_over(n, alphabet_chars));
        const PString p = PString::from_bytes(alphabet, gen.string_over(bench_m, alphabet_chars));
        for (const auto& a : algorithms) {
          const auto start = std::chrono::steady_clock::now();
          if (a == "general") {
            GeneralOptions opt;
            opt.threads = bench_threads;
            (void)match_k({t, p, bench_k}, opt);
          } else {
            (void)match_single(t, p, HashConfig::defaults(bench_seed, single_max_code(*alphabet, bench_m)));
          }
          const auto millis =
              std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
          out << a << ',' << n << ',' << bench_m << ',' << bench_sigma << ',' << (a == "single" ? 1 : bench_k) << ','
              << millis << '\n';
        }
      }
      return kExitOk;
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace pmatch::cli
