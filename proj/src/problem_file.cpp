#include "monobar/problem_file.hpp"

#include <sstream>

#include "monobar/error.hpp"

namespace monobar {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream ss(line.substr(0, line.find('#')));
  for (std::string t; ss >> t;) tokens.push_back(t);
  return tokens;
}

std::size_t parse_count(const std::string& token, std::size_t line_no) {
  std::size_t pos = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(token, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != token.size() || token.empty() || token[0] == '-')
    throw InputError("line " + std::to_string(line_no) + ": expected a number, got '" + token + "'");
  return static_cast<std::size_t>(value);
}

} // namespace

ProblemFile parse_problem(std::istream& in) {
  ProblemFile out;
  std::vector<std::vector<std::string>> relation_tokens;
  std::vector<std::size_t> relation_lines;
  std::optional<std::vector<std::string>> word_tokens;
  std::size_t word_line = 0;
  std::optional<std::size_t> ground;
  std::vector<PointMask> rels;
  bool tree_section = false;
  std::vector<RootedTree::Node> nodes;
  std::vector<std::vector<std::string>> treerels;

  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string& key = tokens[0];
    const std::vector<std::string> args(tokens.begin() + 1, tokens.end());
    auto fail = [&](const std::string& what) {
      throw InputError("line " + std::to_string(line_no) + ": " + what);
    };

    if (key == "alphabet") {
      if (out.alphabet) fail("alphabet declared twice");
      if (args.empty()) fail("alphabet needs at least one token");
      out.alphabet = Alphabet(args);
    } else if (key == "relation") {
      relation_tokens.push_back(args);
      relation_lines.push_back(line_no);
    } else if (key == "word") {
      if (word_tokens) fail("word declared twice");
      word_tokens = args;
      word_line = line_no;
    } else if (key == "ground") {
      if (ground) fail("ground declared twice");
      if (args.size() != 1) fail("ground takes one number");
      ground = parse_count(args[0], line_no);
    } else if (key == "rel") {
      if (!ground) fail("rel before ground");
      std::vector<std::size_t> pts;
      for (const auto& a : args) {
        const std::size_t p = parse_count(a, line_no);
        if (p == 0 || p > *ground) fail("point " + a + " outside the ground set");
        pts.push_back(p);
      }
      if (pts.empty()) fail("rel needs at least one point");
      rels.push_back(mask_of(pts));
    } else if (key == "tree") {
      if (tree_section) fail("tree declared twice");
      if (!args.empty()) fail("tree takes no arguments");
      tree_section = true;
    } else if (key == "node") {
      if (!tree_section) fail("node outside a tree section");
      if (args.size() != 5 || args[1] != "arity" || args[3] != "parent")
        fail("expected: node <id> arity <k> parent <id|root>");
      RootedTree::Node node{args[0], parse_count(args[2], line_no), std::nullopt};
      if (args[4] != "root") node.parent = args[4];
      nodes.push_back(std::move(node));
    } else if (key == "treerel") {
      if (!tree_section) fail("treerel outside a tree section");
      treerels.push_back(args);
    } else {
      fail("unknown directive '" + key + "'");
    }
  }

  const bool has_algebra = out.alphabet || !relation_tokens.empty() || word_tokens;
  const int kinds = int(has_algebra) + int(ground.has_value()) + int(tree_section);
  if (kinds == 0) throw InputError("empty problem file");
  if (kinds > 1) throw InputError("problem file mixes several kinds of problem");

  if (tree_section) {
    out.kind = ProblemFile::Kind::Tree;
    out.tree = RootedTree(std::move(nodes));
    for (const auto& rel : treerels) {
      std::vector<std::size_t> idx;
      for (const auto& id : rel) {
        auto v = out.tree->find(id);
        if (!v) throw InputError("treerel names unknown node '" + id + "'");
        idx.push_back(*v);
      }
      out.tree_relations.push_back(std::move(idx));
    }
    return out;
  }
  if (ground) {
    out.kind = ProblemFile::Kind::System;
    out.system = SetSystem(*ground, std::move(rels));
    return out;
  }

  if (!out.alphabet) throw InputError("alphabet missing");
  auto to_word = [&](const std::vector<std::string>& toks, std::size_t line_no) {
    Word w;
    for (const auto& t : toks) {
      auto l = out.alphabet->find(t);
      if (!l)
        throw InputError("line " + std::to_string(line_no) + ": token '" + t + "' not in alphabet");
      w.letters.push_back(*l);
    }
    return w;
  };
  std::vector<Word> words;
  for (std::size_t i = 0; i < relation_tokens.size(); ++i)
    words.push_back(to_word(relation_tokens[i], relation_lines[i]));
  out.relations = reduce_antichain(std::move(words));
  if (word_tokens) {
    out.word = to_word(*word_tokens, word_line);
    out.kind = ProblemFile::Kind::Word;
  } else {
    out.kind = ProblemFile::Kind::Algebra;
  }
  return out;
}

ProblemFile parse_problem_text(const std::string& text) {
  std::istringstream in(text);
  return parse_problem(in);
}

std::string format_word_problem(const Alphabet& alphabet, const RelationSet& relations,
                                const std::optional<Word>& word) {
  std::string out = "alphabet";
  for (Letter l = 0; l < alphabet.size(); ++l) out += " " + alphabet.token(l);
  out += "\n";
  for (const auto& r : relations.words()) out += "relation " + r.render(alphabet, " ") + "\n";
  if (word) out += "word " + word->render(alphabet, " ") + "\n";
  return out;
}

std::string format_system_problem(const SetSystem& s) {
  std::string out = "ground " + std::to_string(s.ground_size()) + "\n";
  for (PointMask r : s.relations()) {
    out += "rel";
    for (std::size_t p : mask_points(r)) out += " " + std::to_string(p);
    out += "\n";
  }
  return out;
}

} // namespace monobar
