#include "twa/reductions.hh"

#include <sstream>

namespace twa {

namespace {

bool is_ab_word(std::string_view w) {
  return !w.empty() && w.find_first_not_of("ab") == std::string_view::npos;
}

std::string prefix_state(char kind, std::size_t i, std::string_view y) {
  std::string id(1, kind);
  id += '.' + std::to_string(i) + '.';
  id += y.empty() ? std::string("-") : std::string(y);
  return id;
}

std::string x_token(std::size_t i) { return "x" + std::to_string(i); }

AutomatonBuilder pcp_builder(const PcpInstance& inst, bool bounded) {
  inst.check();
  const std::size_t m = inst.size();
  AutomatonBuilder b(ReductionAlphabet(m, bounded).alphabet.names());

  std::vector<std::string> sigma;
  for (std::size_t i = 1; i <= m; ++i) sigma.push_back(x_token(i));
  auto with_sigma = [&](std::vector<std::string> extra) {
    std::vector<std::string> words = sigma;
    words.insert(words.end(), extra.begin(), extra.end());
    return words;
  };

  b.states({"q0", "q1", "q2"});
  std::vector<std::string> q0_words = with_sigma({"a.a'", "b.b'"});
  if (bounded) {
    q0_words.emplace_back("c");
    q0_words.emplace_back("d");
  }
  b.initial("q0").translucent("q0", q0_words).go_to("q0", {"q1"});

  for (std::size_t i = 1; i <= m; ++i) {
    const std::string& u = inst.pairs[i - 1].first;
    const std::string& v = inst.pairs[i - 1].second;
    b.delta("q1", x_token(i), prefix_state('p', i, ""));
    b.delta("q2", x_token(i), prefix_state('p', i, ""));
    for (std::size_t j = 0; j < u.size(); ++j) {
      const std::string here = prefix_state('p', i, u.substr(0, j));
      const std::string next =
          j + 1 < u.size() ? prefix_state('p', i, u.substr(0, j + 1)) : prefix_state('q', i, "");
      b.state(here).translucent(here, with_sigma({"a'", "b'"})).delta(here, std::string(1, u[j]), next);
    }
    for (std::size_t j = 0; j < v.size(); ++j) {
      const std::string here = prefix_state('q', i, v.substr(0, j));
      const std::string next =
          j + 1 < v.size() ? prefix_state('q', i, v.substr(0, j + 1)) : std::string("q2");
      b.state(here).translucent(here, with_sigma({"a", "b"})).delta(here, std::string(1, v[j]) + "'", next);
    }
  }

  if (bounded) {
    b.state("q3");
    for (const char* z : {"c", "d"}) b.delta("q2", z, "q3").delta("q3", z, "q3");
    b.go_to("q2", {"q3"}).accept("q3");
  } else {
    b.accept("q2");
  }
  return b;
}

}  // namespace

void PcpInstance::check() const {
  if (pairs.empty()) throw InvalidInstance("PCP instance has no pairs");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (!is_ab_word(pairs[i].first) || !is_ab_word(pairs[i].second))
      throw InvalidInstance("pair " + std::to_string(i + 1) +
                            " must consist of two non-empty words over {a,b}");
  }
}

std::string PcpInstance::image_f(std::span<const std::size_t> solution) const {
  std::string out;
  for (std::size_t i : solution) out += pairs.at(i - 1).first;
  return out;
}

std::string PcpInstance::image_g(std::span<const std::size_t> solution) const {
  std::string out;
  for (std::size_t i : solution) out += pairs.at(i - 1).second;
  return out;
}

PcpInstance parse_pairs(std::string_view text) {
  PcpInstance inst;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> f;
    for (std::string tok; fields >> tok;) f.push_back(tok);
    if (f.empty()) continue;
    if (f.size() != 3 || f[0] != "pair")
      throw InvalidInstance("line " + std::to_string(line_no) + ": expected 'pair <f-word> <g-word>'");
    if (!is_ab_word(f[1]) || !is_ab_word(f[2]))
      throw InvalidInstance("line " + std::to_string(line_no) + ": words must be non-empty over {a,b}");
    inst.pairs.emplace_back(f[1], f[2]);
  }
  inst.check();
  return inst;
}

ReductionAlphabet::ReductionAlphabet(std::size_t m, bool bounded) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= m; ++i) names.push_back(x_token(i));
  for (const char* t : {"a", "b", "a'", "b'"}) names.emplace_back(t);
  if (bounded) {
    names.emplace_back("c");
    names.emplace_back("d");
  }
  alphabet = Alphabet(std::move(names));
  for (std::size_t i = 1; i <= m; ++i) sigma.push_back(*alphabet.find(x_token(i)));
  a = *alphabet.find("a");
  b = *alphabet.find("b");
  a_prime = *alphabet.find("a'");
  b_prime = *alphabet.find("b'");
  if (bounded) gamma = {*alphabet.find("c"), *alphabet.find("d")};
}

Automaton compile_pcp(const PcpInstance& instance) { return pcp_builder(instance, false).build(); }

Automaton compile_pcp_bounded(const PcpInstance& instance) {
  return pcp_builder(instance, true).build();
}

std::vector<std::string> psi2(std::string_view letters) {
  std::vector<std::string> out;
  out.reserve(2 * letters.size());
  for (char c : letters) {
    if (c != 'a' && c != 'b') throw InvalidLetter(std::string("psi2 is defined on {a,b}, got '") + c + "'");
    out.emplace_back(1, c);
    out.push_back(std::string(1, c) + "'");
  }
  return out;
}

Witness canonical_witness(const PcpInstance& instance, std::span<const std::size_t> solution) {
  instance.check();
  if (solution.empty()) throw EmptySolution("a PCP solution is a non-empty index sequence");
  for (std::size_t i : solution) {
    if (i < 1 || i > instance.size())
      throw IndexOutOfRange("pair index " + std::to_string(i) + " outside 1.." +
                            std::to_string(instance.size()));
  }
  Witness w;
  w.f_image = instance.image_f(solution);
  w.g_image = instance.image_g(solution);
  w.is_solution = w.f_image == w.g_image;

  std::vector<std::string> names;
  for (std::size_t i : solution) names.push_back(x_token(i));
  for (auto& t : psi2(w.f_image)) names.push_back(std::move(t));
  w.word = ReductionAlphabet(instance.size(), false).alphabet.encode(names);
  return w;
}

}  // namespace twa
