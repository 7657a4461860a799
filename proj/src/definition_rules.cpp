#include "vocab_lint/definition_rules.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_map>

#include "vocab_lint/text.hpp"

namespace vocab_lint {
namespace {

bool is_article(const std::string& t) { return t == "a" || t == "an"; }
bool is_connective(const std::string& t) { return t == "that" || t == "which"; }

// Number of leading tokens covering "[article] subject is a|an", or 0.
std::size_t copula_end(const std::vector<std::string>& tokens) {
  std::size_t start = (!tokens.empty() && is_article(tokens[0])) ? 1 : 0;
  for (std::size_t j = start + 1; j + 1 < tokens.size(); ++j) {
    if (tokens[j] == "is" && is_article(tokens[j + 1])) return j + 2;
  }
  return 0;
}

std::string cycle_text(const Vocabulary& vocab, const std::vector<std::size_t>& cycle) {
  std::string out;
  for (auto node : cycle) out += "\"" + vocab.terms()[node].label + "\" -> ";
  return out + "\"" + vocab.terms()[cycle.front()].label + "\"";
}

// Tarjan's algorithm, ignoring self-loops. Returns a component id per node.
std::vector<std::size_t> strongly_connected(const DefinitionGraph& g) {
  const std::size_t n = g.size();
  const std::size_t unset = n;
  std::vector<std::size_t> index(n, unset), low(n, 0), comp(n, unset);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::size_t counter = 0;
  std::size_t comp_count = 0;

  // Iterative DFS frames: (node, next successor position).
  std::vector<std::pair<std::size_t, std::size_t>> frames;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != unset) continue;
    frames.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      const auto& succ = g.successors(v);
      if (pos < succ.size()) {
        std::size_t w = succ[pos++];
        if (w == v) continue;
        if (index[w] == unset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = comp_count;
        } while (w != v);
        ++comp_count;
      }
      std::size_t done = v;
      frames.pop_back();
      if (!frames.empty()) {
        auto parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
    }
  }
  return comp;
}

}  // namespace

std::string first_sentence(const std::string& text) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '.') continue;
    // "e.g." and friends do not end a sentence
    auto word_start = text.find_last_of(" \t(", i);
    word_start = word_start == std::string::npos ? 0 : word_start + 1;
    std::string word = text.substr(word_start, i - word_start);
    for (auto& ch : word) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (word == "e.g" || word == "i.e" || word == "cf" || word == "vs" || word == "approx") {
      continue;
    }
    if (i + 1 == text.size() || text[i + 1] == ' ' || text[i + 1] == '\t' ||
        text[i + 1] == '\n' || text[i + 1] == '\r') {
      return text.substr(0, i);
    }
  }
  return text;
}

std::optional<GenusDifferentia> match_genus_differentia(const std::string& definition_text) {
  auto tokens = label_tokens(first_sentence(definition_text));
  auto genus_begin = copula_end(tokens);
  if (genus_begin == 0) return std::nullopt;
  std::size_t subject_begin = is_article(tokens[0]) ? 1 : 0;
  for (std::size_t c = genus_begin + 1; c + 1 < tokens.size(); ++c) {
    if (!is_connective(tokens[c])) continue;
    GenusDifferentia gd;
    gd.subject.assign(tokens.begin() + subject_begin, tokens.begin() + genus_begin - 2);
    gd.genus.assign(tokens.begin() + genus_begin, tokens.begin() + c);
    gd.differentia.assign(tokens.begin() + c + 1, tokens.end());
    return gd;
  }
  return std::nullopt;
}

std::vector<std::string> mention_tokens(const Definition& definition) {
  auto tokens = label_tokens(definition.text);
  if (match_genus_differentia(definition.text)) {
    tokens.erase(tokens.begin(), tokens.begin() + copula_end(tokens));
  }
  return tokens;
}

DefinitionGraph::DefinitionGraph(const Vocabulary& vocab) {
  const auto& terms = vocab.terms();
  keys_.reserve(terms.size());
  std::map<std::string, int> key_uses;
  for (const auto& t : terms) {
    auto key = term_key(t);
    if (key_uses[key]++ > 0 && t.location) {
      key += "@" + t.location->file + ":" + std::to_string(t.location->line);
    }
    keys_.push_back(std::move(key));
  }

  std::unordered_map<std::string, std::vector<std::pair<std::vector<std::string>, std::size_t>>>
      by_first;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    auto tokens = label_tokens(terms[i].label);
    if (tokens.empty()) continue;
    auto first = tokens.front();
    by_first[first].push_back({std::move(tokens), i});
  }

  edges_.resize(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (!terms[i].definition) continue;
    auto tokens = mention_tokens(*terms[i].definition);
    auto& out = edges_[i];
    for (std::size_t p = 0; p < tokens.size(); ++p) {
      auto it = by_first.find(tokens[p]);
      if (it == by_first.end()) continue;
      for (const auto& [label, node] : it->second) {
        if (p + label.size() <= tokens.size() &&
            std::equal(label.begin(), label.end(), tokens.begin() + p)) {
          out.push_back(node);
        }
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
}

bool DefinitionGraph::has_edge(std::size_t from, std::size_t to) const {
  return std::binary_search(edges_[from].begin(), edges_[from].end(), to);
}

std::vector<std::vector<std::size_t>> find_simple_cycles(const DefinitionGraph& graph,
                                                         std::size_t limit) {
  const std::size_t n = graph.size();
  std::vector<std::vector<std::size_t>> cycles;
  if (n == 0 || limit == 0) return cycles;

  // Work in key order so the output does not depend on term order.
  std::vector<std::size_t> by_rank(n);
  std::iota(by_rank.begin(), by_rank.end(), std::size_t{0});
  std::sort(by_rank.begin(), by_rank.end(),
            [&](std::size_t a, std::size_t b) { return graph.key(a) < graph.key(b); });
  std::vector<std::size_t> rank(n);
  for (std::size_t r = 0; r < n; ++r) rank[by_rank[r]] = r;

  auto comp = strongly_connected(graph);
  std::vector<std::size_t> comp_size(n, 0);
  for (auto c : comp) ++comp_size[c];

  std::vector<std::vector<std::size_t>> adj(n);  // rank space, sorted
  for (std::size_t v = 0; v < n; ++v) {
    for (auto w : graph.successors(v)) {
      if (w != v && comp[w] == comp[v]) adj[rank[v]].push_back(rank[w]);
    }
    std::sort(adj[rank[v]].begin(), adj[rank[v]].end());
  }
  std::vector<std::size_t> comp_of_rank(n);
  for (std::size_t v = 0; v < n; ++v) comp_of_rank[rank[v]] = comp[v];

  std::vector<bool> blocked(n, false), in_scope(n, false);
  std::vector<std::vector<std::size_t>> block_map(n);
  std::vector<std::size_t> path;

  std::function<void(std::size_t)> unblock = [&](std::size_t u) {
    blocked[u] = false;
    auto waiting = std::move(block_map[u]);
    block_map[u].clear();
    for (auto w : waiting) {
      if (blocked[w]) unblock(w);
    }
  };

  std::size_t start = 0;
  std::function<bool(std::size_t)> circuit = [&](std::size_t v) -> bool {
    bool found = false;
    path.push_back(v);
    blocked[v] = true;
    for (auto w : adj[v]) {
      if (cycles.size() >= limit) break;
      if (!in_scope[w]) continue;
      if (w == start) {
        std::vector<std::size_t> cycle;
        for (auto r : path) cycle.push_back(by_rank[r]);
        cycles.push_back(std::move(cycle));
        found = true;
      } else if (!blocked[w]) {
        if (circuit(w)) found = true;
      }
    }
    if (found) {
      unblock(v);
    } else {
      for (auto w : adj[v]) {
        if (!in_scope[w]) continue;
        auto& waiting = block_map[w];
        if (std::find(waiting.begin(), waiting.end(), v) == waiting.end()) waiting.push_back(v);
      }
    }
    path.pop_back();
    return found;
  };

  for (start = 0; start < n && cycles.size() < limit; ++start) {
    if (comp_size[comp[by_rank[start]]] < 2) continue;
    // Scope: nodes of the same component with rank >= start that lie on a
    // path from start back to start (forward and backward reachable).
    std::vector<bool> fwd(n, false), bwd(n, false);
    std::vector<std::size_t> todo{start};
    fwd[start] = true;
    auto same = [&](std::size_t r) {
      return r >= start && comp_of_rank[r] == comp_of_rank[start];
    };
    while (!todo.empty()) {
      auto v = todo.back();
      todo.pop_back();
      for (auto w : adj[v]) {
        if (same(w) && !fwd[w]) {
          fwd[w] = true;
          todo.push_back(w);
        }
      }
    }
    // Backward search over the reverse of the in-scope subgraph.
    std::vector<std::size_t> members;
    for (std::size_t r = start; r < n; ++r) {
      if (fwd[r]) members.push_back(r);
    }
    std::unordered_map<std::size_t, std::vector<std::size_t>> rev;
    for (auto v : members) {
      for (auto w : adj[v]) {
        if (fwd[w]) rev[w].push_back(v);
      }
    }
    todo = {start};
    bwd[start] = true;
    while (!todo.empty()) {
      auto v = todo.back();
      todo.pop_back();
      for (auto w : rev[v]) {
        if (!bwd[w]) {
          bwd[w] = true;
          todo.push_back(w);
        }
      }
    }
    bool any = false;
    for (auto v : members) {
      in_scope[v] = fwd[v] && bwd[v];
      any = any || (in_scope[v] && v != start);
      blocked[v] = false;
      block_map[v].clear();
    }
    if (any) circuit(start);
    for (auto v : members) in_scope[v] = false;
  }
  return cycles;
}

std::vector<Finding> check_definition_present(const Term& term) {
  if (term.obsolete) return {};
  if (!term.definition) {
    return {make_finding("R07-MISSING-DEF", Severity::warning, term,
                         "term has no definition")};
  }
  if (term.definition->sources.empty()) {
    return {make_finding("R07-MISSING-SOURCE", Severity::info, term,
                         "definition cites no source; provide sources for definitions")};
  }
  return {};
}

std::vector<Finding> check_genus_differentia(const Term& term, const Vocabulary& vocab) {
  if (!term.definition) return {};
  auto gd = match_genus_differentia(term.definition->text);
  if (!gd) {
    return {make_finding("R07-FORM", Severity::info, term,
                         "definition does not follow the form \"A <term> is a <parent class> "
                         "that <distinguishing characteristics>\"")};
  }
  if (term.parents.empty()) return {};
  std::vector<std::string> parent_labels;
  for (const auto& p : term.parents) {
    if (const Term* parent = vocab.find(p)) {
      auto tokens = label_tokens(parent->label);
      if (contains_token_run(gd->genus, tokens)) return {};
      parent_labels.push_back("\"" + parent->label + "\"");
    }
  }
  // Parents outside the vocabulary have no label to compare against.
  if (parent_labels.empty()) return {};
  return {make_finding("R07-GENUS-MISMATCH", Severity::info, term,
                       "definition genus \"" + join(gd->genus, " ") +
                           "\" does not name a declared parent (" + join(parent_labels, ", ") +
                           "); start the definition by stating the parent class")};
}

std::vector<Finding> check_definition_uniqueness(const Vocabulary& vocab) {
  std::map<std::string, std::vector<const Term*>> groups;
  for (const auto& t : vocab.terms()) {
    if (t.obsolete || !t.definition) continue;
    auto key = normalize_label(t.definition->text);
    if (!key.empty()) groups[key].push_back(&t);
  }
  std::vector<Finding> out;
  for (auto& [text, members] : groups) {
    if (members.size() < 2) continue;
    std::sort(members.begin(), members.end(), [](const Term* a, const Term* b) {
      return std::make_tuple(normalize_label(a->label), term_key(*a)) <
             std::make_tuple(normalize_label(b->label), term_key(*b));
    });
    Finding f;
    f.rule_id = "R07-DUPLICATE-DEF";
    f.severity = Severity::warning;
    f.subject_label = members.front()->label;
    std::vector<std::string> labels;
    for (const Term* m : members) {
      labels.push_back("\"" + m->label + "\"");
      if (m->iri) f.subject_iris.push_back(*m->iri);
      if (m->location && (!f.location || *m->location < *f.location)) f.location = m->location;
    }
    f.message = std::to_string(members.size()) + " terms share one definition (" +
                join(labels, ", ") +
                "); they should be combined via synonymy or given distinct definitions";
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<Finding> detect_circular_definitions(const Vocabulary& vocab) {
  DefinitionGraph graph(vocab);
  const auto& terms = vocab.terms();
  std::vector<Finding> out;
  for (std::size_t i = 0; i < graph.size(); ++i) {
    if (graph.has_edge(i, i)) {
      out.push_back(make_finding("R07-SELF-REF", Severity::warning, terms[i],
                                 "definition uses the term's own label \"" + terms[i].label +
                                     "\""));
    }
  }
  for (const auto& cycle : find_simple_cycles(graph, kMaxReportedCycles)) {
    const Term& first = terms[cycle.front()];
    Finding f;
    f.rule_id = "R07-CIRCULAR";
    f.severity = Severity::warning;
    f.subject_label = first.label;
    f.location = first.location;
    for (auto node : cycle) {
      if (terms[node].iri) f.subject_iris.push_back(*terms[node].iri);
    }
    f.message = "definitions are circular: " + cycle_text(vocab, cycle);
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace vocab_lint
