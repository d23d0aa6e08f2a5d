// twa: command-line front end for automata with translucent words.
//
// Exit codes: 0 success / accepted / agreement, 1 rejected / mismatch,
// 2 usage, I/O or validation error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "twa/twa.hh"

namespace {

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;

struct UsageError : twa::Error {
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

twa::Automaton load(const std::string& path) {
  try {
    return twa::parse_automaton(read_file(path));
  } catch (const twa::ParseError& e) {
    for (const auto& d : e.diagnostics())
      std::cerr << path << ":" << d.line << ": " << d.message << "\n";
    throw UsageError(path + ": invalid automaton");
  }
}

std::size_t budget_from(std::size_t flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("TWA_BUDGET")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end == env || *end != '\0' || v <= 0) throw UsageError("TWA_BUDGET must be a positive integer");
    return static_cast<std::size_t>(v);
  }
  return twa::kDefaultBudget;
}

std::string spell_or_lambda(const twa::Alphabet& sigma, const twa::Word& w) {
  return w.empty() ? std::string("λ") : sigma.spell(w);
}

twa::Word parse_input(const twa::Automaton& a, const std::string& text, bool tokens) {
  if (text.empty() || text == "λ") return {};
  return a.alphabet().parse_word(text, tokens);
}

int cmd_validate(const std::string& file) {
  load(file);
  std::cout << "valid\n";
  return kOk;
}

int cmd_run(const std::string& file, const std::string& word, bool trace, bool tokens) {
  const twa::Automaton a = load(file);
  const twa::Word input = parse_input(a, word, tokens);
  twa::RunResult result;
  if (twa::classify(a).deterministic) {
    result = twa::run_deterministic(a, input);
  } else {
    twa::SearchResult search = twa::run_nondeterministic(a, input);
    if (search.accepted) {
      result.verdict = twa::Verdict::Accepted;
      result.trace = std::move(*search.witness);
    } else {
      result.verdict = twa::Verdict::Rejected;
      result.reason = twa::RejectReason::Exhausted;
    }
  }
  std::cout << (trace ? twa::format_run(a, result) : twa::format_verdict(result) + "\n");
  return result.accepted() ? kOk : kNo;
}

int cmd_enumerate(const std::string& file, std::size_t max_len, std::size_t budget) {
  const twa::Automaton a = load(file);
  for (const auto& w : twa::enumerate_accepted(a, max_len, budget_from(budget)))
    std::cout << spell_or_lambda(a.alphabet(), w) << "\n";
  return kOk;
}

int cmd_compare(const std::string& file, const std::string& predicate, std::size_t max_len,
                std::size_t budget) {
  const twa::Automaton a = load(file);
  const auto pred = twa::over_alphabet(a.alphabet(), twa::predicate_by_name(predicate));
  const auto report = twa::compare_language(a, pred, max_len, budget_from(budget));
  std::cout << "checked " << report.total_checked << " words up to length " << report.max_len
            << ": " << report.false_accepts.size() << " false accepts, "
            << report.false_rejects.size() << " false rejects\n";
  for (const auto& w : report.false_accepts)
    std::cout << "false accept: " << spell_or_lambda(a.alphabet(), w) << "\n";
  for (const auto& w : report.false_rejects)
    std::cout << "false reject: " << spell_or_lambda(a.alphabet(), w) << "\n";
  return report.agrees() ? kOk : kNo;
}

int cmd_classify(const std::string& file) {
  const auto r = twa::classify(load(file));
  std::cout << (r.deterministic ? "deterministic" : "nondeterministic") << ' '
            << (r.repetitive ? "repetitive" : "non-repetitive") << " k=" << r.k << " ell=" << r.ell
            << "\n";
  return kOk;
}

int cmd_example(const std::string& name) {
  std::cout << twa::serialize(twa::example_by_name(name));
  return kOk;
}

int cmd_pcp_compile(const std::string& file, bool bounded) {
  const auto inst = twa::parse_pairs(read_file(file));
  std::cout << twa::serialize(bounded ? twa::compile_pcp_bounded(inst) : twa::compile_pcp(inst));
  return kOk;
}

int cmd_pcp_witness(const std::string& file, const std::string& indices) {
  const auto inst = twa::parse_pairs(read_file(file));
  std::vector<std::size_t> solution;
  std::istringstream in(indices);
  for (std::string part; std::getline(in, part, ',');) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size()) throw UsageError("bad index '" + part + "'");
    solution.push_back(v);
  }
  const auto w = twa::canonical_witness(inst, solution);
  const twa::ReductionAlphabet omega(inst.size(), false);
  std::cout << omega.alphabet.spell(w.word) << "\n";
  std::cout << "f = " << w.f_image << "\ng = " << w.g_image << "\n"
            << (w.is_solution ? "solution" : "not a solution") << "\n";
  return w.is_solution ? kOk : kNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite automata with translucent words"};
  app.require_subcommand(1);

  std::string file, word, predicate, name, indices;
  std::size_t max_len = 0, budget = 0;
  bool trace = false, tokens = false, bounded = false;

  auto* validate = app.add_subcommand("validate", "Parse and validate an automaton file");
  validate->add_option("file", file)->required();

  auto* run = app.add_subcommand("run", "Run an automaton on a word");
  run->add_option("file", file)->required();
  run->add_option("word", word, "Input word (contiguous, or '.'-joined tokens)")->required();
  run->add_flag("--trace", trace, "Print every computation step");
  run->add_flag("--tokens", tokens, "Read the word as '.'-joined tokens");

  auto* enumerate = app.add_subcommand("enumerate", "List accepted words up to a length");
  enumerate->add_option("file", file)->required();
  enumerate->add_option("--max-len", max_len)->required();
  enumerate->add_option("--budget", budget, "Maximum number of membership tests");

  auto* compare = app.add_subcommand("compare", "Compare an automaton with a reference language");
  compare->add_option("file", file)->required();
  compare->add_option("--predicate", predicate)->required()->check(
      CLI::IsMember(twa::predicate_names()));
  compare->add_option("--max-len", max_len)->required();
  compare->add_option("--budget", budget, "Maximum number of membership tests");

  auto* classify = app.add_subcommand("classify", "Print determinism, repetitiveness, k and ell");
  classify->add_option("file", file)->required();

  auto* example = app.add_subcommand("example", "Print a built-in automaton");
  example->add_option("name", name)->required()->check(CLI::IsMember(twa::example_names()));

  auto* pcp = app.add_subcommand("pcp", "Post Correspondence Problem reduction");
  pcp->require_subcommand(1);
  auto* pcp_compile = pcp->add_subcommand("compile", "Compile a pairs file into an automaton");
  pcp_compile->add_option("pairs-file", file)->required();
  pcp_compile->add_flag("--bounded", bounded, "Add the {c,d} suffix states");
  auto* pcp_witness = pcp->add_subcommand("witness", "Print the canonical witness of a solution");
  pcp_witness->add_option("pairs-file", file)->required();
  pcp_witness->add_option("indices", indices, "1-based pair indices, comma separated")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) return cmd_validate(file);
    if (*run) return cmd_run(file, word, trace, tokens);
    if (*enumerate) return cmd_enumerate(file, max_len, budget);
    if (*compare) return cmd_compare(file, predicate, max_len, budget);
    if (*classify) return cmd_classify(file);
    if (*example) return cmd_example(name);
    if (*pcp_compile) return cmd_pcp_compile(file, bounded);
    if (*pcp_witness) return cmd_pcp_witness(file, indices);
  } catch (const twa::Error& e) {
    std::cerr << "twa: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
