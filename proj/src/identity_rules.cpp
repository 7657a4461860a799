#include "vocab_lint/identity_rules.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <set>
#include <tuple>

#include "vocab_lint/text.hpp"

namespace vocab_lint {
namespace {

bool key_less(const Term* a, const Term* b) {
  return std::make_tuple(term_key(*a), a->location) < std::make_tuple(term_key(*b), b->location);
}

// Multi-subject finding over `members`, anchored at the earliest location.
Finding group_finding(std::string rule_id, Severity severity, std::vector<const Term*> members,
                      std::string message) {
  std::sort(members.begin(), members.end(), key_less);
  Finding f;
  f.rule_id = std::move(rule_id);
  f.severity = severity;
  f.subject_label = members.front()->label;
  for (const Term* m : members) {
    if (m->iri) f.subject_iris.push_back(*m->iri);
    if (m->location && (!f.location || *m->location < *f.location)) f.location = m->location;
  }
  f.message = std::move(message);
  return f;
}

std::string label_list(const std::vector<const Term*>& members) {
  std::vector<std::string> parts;
  for (const Term* m : members) {
    parts.push_back("\"" + m->label + "\" (" + term_key(*m) + ")");
  }
  std::sort(parts.begin(), parts.end());
  return join(parts, ", ");
}

}  // namespace

PrefixMap load_prefix_map(std::string_view text) {
  PrefixMap map;
  std::set<std::string> seen;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty() || trim(line).front() == '#') continue;
    std::vector<std::string> cells;
    std::size_t cpos = 0;
    while (true) {
      auto tab = line.find('\t', cpos);
      cells.emplace_back(trim(line.substr(cpos, tab == std::string_view::npos ? line.npos
                                                                              : tab - cpos)));
      if (tab == std::string_view::npos) break;
      cpos = tab + 1;
    }
    auto where = "prefix map line " + std::to_string(line_no);
    if (cells.size() != 3 || (cells[2] != "obo" && cells[2] != "external")) {
      throw VocabError(ErrorKind::invalid_config,
                       where + ": expected PREFIX<TAB>IRI-base<TAB>obo|external");
    }
    if (!seen.insert(cells[0]).second) {
      throw VocabError(ErrorKind::invalid_config, where + ": duplicate prefix '" + cells[0] + "'");
    }
    map.add(cells[0], {cells[1], cells[2] == "obo"});
  }
  return map;
}

std::vector<Finding> check_iri(const Term& term, const PrefixMap& prefixes) {
  if (!term.iri) {
    return {make_finding("R06-MISSING-IRI", Severity::warning, term,
                         "term has no IRI; assign a unique, resolvable identifier")};
  }
  const Iri& iri = *term.iri;
  if (!iri.is_absolute()) {
    if (prefixes.can_expand(iri)) return {};
    auto prefix = iri.curie_prefix();
    return {make_finding("R06-BAD-IRI", Severity::error, term,
                         "identifier \"" + iri.value() + "\" is neither an absolute IRI nor a CURIE " +
                             (prefix.empty() ? std::string("with a prefix")
                                             : "with a registered prefix (\"" +
                                                   std::string(prefix) + "\" is unknown)"))};
  }
  static const std::regex kOboLocal(R"(^([A-Za-z][A-Za-z0-9]*)_([^/#]+)$)");
  const auto& value = iri.value();
  auto cut = value.find_last_of("/#");
  std::string segment = cut == std::string::npos ? value : value.substr(cut + 1);
  std::smatch m;
  if (!std::regex_match(segment, m, kOboLocal)) return {};
  const auto* entry = prefixes.find(m[1].str());
  if (!entry || !entry->obo) return {};
  auto purl = std::string(kOboPurlBase) + segment;
  if (value == purl) return {};
  auto f = make_finding("R06-NONPURL", Severity::info, term,
                        "IRI \"" + value + "\" for the OBO namespace " + m[1].str() +
                            " is not in persistent URL form");
  f.suggestion = purl;
  return {std::move(f)};
}

std::vector<Finding> check_iri_uniqueness(const Vocabulary& vocab) {
  std::map<std::string, std::vector<const Term*>> bearers;
  for (const auto& t : vocab.terms()) {
    if (t.iri) bearers[vocab.expand(*t.iri)].push_back(&t);
  }
  std::vector<Finding> out;
  for (const auto& [expanded, members] : bearers) {
    if (members.size() < 2) continue;
    out.push_back(group_finding("R06-DUP-IRI", Severity::error, members,
                                "IRI " + expanded + " is borne by " +
                                    std::to_string(members.size()) +
                                    " terms: " + label_list(members)));
  }
  return out;
}

std::vector<Finding> check_label_collisions(const Vocabulary& vocab) {
  std::vector<Finding> out;
  for (const auto& [label, indices] : vocab.by_label()) {
    if (label.empty()) continue;
    std::vector<const Term*> members;
    std::set<std::string> iris;
    for (auto idx : indices) {
      const Term& t = vocab.terms()[idx];
      if (t.obsolete) continue;
      members.push_back(&t);
      if (t.iri) iris.insert(vocab.expand(*t.iri));
    }
    if (members.size() < 2 || iris.size() < 2) continue;
    out.push_back(group_finding("C-SEMANTIC-NOISE", Severity::warning, members,
                                "label \"" + label + "\" names " +
                                    std::to_string(members.size()) +
                                    " different terms: " + label_list(members) +
                                    "; disambiguate the labels and rely on definitions and IRIs"));
  }
  return out;
}

std::vector<Finding> check_synonym_collisions(const Vocabulary& vocab) {
  const auto& terms = vocab.terms();
  // phrase -> (term index, phrase is the label)
  std::map<std::string, std::vector<std::pair<std::size_t, bool>>> phrases;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].obsolete) continue;
    auto label = normalize_label(terms[i].label);
    if (!label.empty()) phrases[label].push_back({i, true});
    for (const auto& syn : terms[i].synonyms) {
      auto n = normalize_label(syn.text);
      if (!n.empty()) phrases[n].push_back({i, false});
    }
  }
  struct Clash {
    std::set<std::size_t> synonym_bearers;
    std::set<std::size_t> label_bearers;
  };
  // (lesser term, greater term, phrase)
  std::map<std::tuple<std::string, std::string, std::string>, std::pair<std::size_t, std::size_t>>
      pairs;
  std::map<std::tuple<std::string, std::string, std::string>, Clash> clashes;
  for (const auto& [phrase, uses] : phrases) {
    for (const auto& [t, t_is_label] : uses) {
      if (t_is_label) continue;
      for (const auto& [u, u_is_label] : uses) {
        if (u == t) continue;
        auto kt = term_key(terms[t]);
        auto ku = term_key(terms[u]);
        bool t_first = std::tie(kt, terms[t].location) < std::tie(ku, terms[u].location);
        auto key = t_first ? std::make_tuple(kt, ku, phrase) : std::make_tuple(ku, kt, phrase);
        pairs[key] = t_first ? std::make_pair(t, u) : std::make_pair(u, t);
        auto& clash = clashes[key];
        clash.synonym_bearers.insert(t);
        if (u_is_label) clash.label_bearers.insert(u);
      }
    }
  }
  std::vector<Finding> out;
  for (const auto& [key, clash] : clashes) {
    auto [first, second] = pairs[key];
    const auto& phrase = std::get<2>(key);
    // Anchor on the synonym bearer; when both carry it as a synonym, the lesser key.
    std::size_t bearer = clash.synonym_bearers.count(first) ? first : second;
    std::size_t other = bearer == first ? second : first;
    const Term& b = terms[bearer];
    const Term& o = terms[other];
    auto f = make_finding("C-SYNONYM-CLASH", Severity::info, b,
                          "synonym \"" + phrase + "\" of \"" + b.label + "\" (" + term_key(b) +
                              ") is also " +
                              (clash.label_bearers.count(other) ? "the label" : "a synonym") +
                              " of \"" + o.label + "\" (" + term_key(o) +
                              "); users will pick between two terms for one meaning");
    if (o.iri) f.subject_iris.push_back(*o.iri);
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<Finding> check_deprecation(const Vocabulary& vocab) {
  std::vector<Finding> out;
  for (const auto& t : vocab.terms()) {
    if (t.obsolete) {
      auto tokens = label_tokens(t.label);
      if (tokens.empty() || tokens.front() != "obsolete") {
        auto f = make_finding("R08-LABEL", Severity::warning, t,
                              "obsolete term's label does not start with \"obsolete\"");
        f.suggestion = "obsolete " + t.label;
        out.push_back(std::move(f));
      }
      if (!t.replaced_by) {
        out.push_back(make_finding("R08-NO-REPLACEMENT", Severity::info, t,
                                   "obsolete term names no replacement term"));
      }
    }
    if (t.replaced_by) {
      if (!t.obsolete) {
        out.push_back(make_finding("R08-LIVE-REPLACED", Severity::warning, t,
                                   "term declares a replacement (" + t.replaced_by->value() +
                                       ") but is not marked obsolete"));
      }
      const Term* target = vocab.find(*t.replaced_by);
      if (!target) {
        out.push_back(make_finding("R08-DANGLING", Severity::error, t,
                                   "replacement " + t.replaced_by->value() +
                                       " is not defined in the vocabulary"));
      } else {
        const Iri& from = t.iri ? *t.iri : *t.replaced_by;
        try {
          auto final_iri = resolve_replacement(vocab, from);
          if (target->obsolete) {
            auto f = make_finding("R08-CHAIN", Severity::info, t,
                                  "replacement " + t.replaced_by->value() +
                                      " is itself obsolete; the chain resolves to " +
                                      final_iri.value());
            f.suggestion = final_iri.value();
            out.push_back(std::move(f));
          }
        } catch (const VocabError& e) {
          if (e.kind() == ErrorKind::replacement_cycle) {
            out.push_back(make_finding("R08-CYCLE", Severity::error, t,
                                       std::string("replacement chain is cyclic: ") + e.what()));
          } else if (target->obsolete) {
            out.push_back(make_finding("R08-CHAIN", Severity::info, t,
                                       "replacement " + t.replaced_by->value() +
                                           " is itself obsolete and its chain is broken: " +
                                           e.what()));
          }
        }
      }
    }
    if (!t.obsolete) {
      for (const auto& p : t.parents) {
        const Term* parent = vocab.find(p);
        if (!parent || !parent->obsolete) continue;
        auto f = make_finding("R08-OBSOLETE-PARENT", Severity::warning, t,
                              "parent " + p.value() + " (\"" + parent->label + "\") is obsolete");
        if (parent->iri && parent->replaced_by) {
          try {
            f.suggestion = resolve_replacement(vocab, *parent->iri).value();
          } catch (const VocabError&) {
          }
        }
        out.push_back(std::move(f));
      }
    }
  }
  return out;
}

}  // namespace vocab_lint
