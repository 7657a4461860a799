#include "vocab_lint/lexical_rules.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <unordered_map>

#include "vocab_lint/text.hpp"

namespace vocab_lint {
namespace {

template <typename Container>
void add_all(std::set<std::string>& into, const Container& raw) {
  for (const auto& entry : raw) into.insert(normalize_label(entry));
}

bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool looks_like_abbreviation(std::string_view token) {
  if (token.size() < 2 || token.size() > 5) return false;
  bool letter = false;
  for (char c : token) {
    if (is_upper(c)) {
      letter = true;
    } else if (!is_digit(c)) {
      return false;
    }
  }
  return letter;
}

bool is_numeric(std::string_view token) {
  return !token.empty() && std::all_of(token.begin(), token.end(), is_digit);
}

// Removes "(...)" groups, including nested ones.
std::string strip_parentheticals(std::string_view raw) {
  std::string out;
  int depth = 0;
  for (char c : raw) {
    if (c == '(') {
      ++depth;
      out.push_back(' ');
    } else if (c == ')' && depth > 0) {
      --depth;
    } else if (depth == 0) {
      out.push_back(c);
    }
  }
  return out;
}

// Whitespace-separated words with surrounding punctuation removed; internal
// punctuation such as the hyphens in "SARS-CoV-2" is kept.
std::vector<std::string> whitespace_words(std::string_view raw) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    std::size_t b = 0;
    std::size_t e = cur.size();
    while (b < e && std::ispunct(static_cast<unsigned char>(cur[b]))) ++b;
    while (e > b && std::ispunct(static_cast<unsigned char>(cur[e - 1]))) --e;
    if (e > b) out.push_back(cur.substr(b, e - b));
    cur.clear();
  };
  for (char c : raw) {
    if (c == ' ' || c == '\t') {
      flush();
    } else {
      cur.push_back(c);
    }
  }
  flush();
  return out;
}

std::vector<std::string> matched_phrases(std::span<const std::string> tokens,
                                         const std::set<std::string>& phrases) {
  std::vector<std::string> hits;
  for (const auto& phrase : phrases) {
    auto needle = tokenize(phrase);
    if (contains_token_run(tokens, needle)) hits.push_back(phrase);
  }
  return hits;
}

std::string quoted_list(std::span<const std::string> items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += "\"" + items[i] + "\"";
  }
  return out;
}

bool is_conjunction(std::string_view token) { return token == "and" || token == "or"; }

}  // namespace

Lexicons Lexicons::defaults() {
  Lexicons lex;
  add_all(lex.negative_determiners,
          std::vector<std::string>{"no", "not", "neither", "none", "except", "without"});
  add_all(lex.negative_prefix_allowlist,
          std::vector<std::string>{"inorganic", "nonlinear", "nonlinear transformation",
                                   "non-linear transformation", "non-parametric test",
                                   "nonparametric test"});
  add_all(lex.accepted_abbreviation_words,
          std::vector<std::string>{"laser", "maser", "radar", "scuba", "sonar", "taser"});
  add_all(lex.proper_noun_allowlist, std::vector<std::string>{"Fisheries and Oceans Canada"});
  add_all(lex.plural_by_nature,
          std::vector<std::string>{"goggles", "glasses", "scissors", "trousers", "pants",
                                   "pliers", "tongs", "tweezers", "binoculars", "clothes",
                                   "species", "series", "means", "news", "feces", "faeces",
                                   "measles", "mumps", "rabies", "diabetes", "herpes",
                                   "genomics", "metagenomics", "proteomics", "metabolomics",
                                   "statistics", "economics", "physics", "mathematics",
                                   "ethics"});
  lex.colloquial_map = {
      {"belly", "abdomen"},
      {"tummy", "abdomen"},
      {"wet cough", "productive cough"},
      {"dry cough", "nonproductive cough"},
      {"runny nose", "rhinorrhea"},
      {"heart attack", "myocardial infarction"},
  };
  add_all(lex.timeline_phrases, std::vector<std::string>{"most recent", "previous", "last",
                                                         "current", "latest", "recent",
                                                         "to date"});
  return lex;
}

const std::vector<std::string>& Lexicons::names() {
  static const std::vector<std::string> kNames = {
      "negative_determiners", "negative_prefix_allowlist", "accepted_abbreviation_words",
      "proper_noun_allowlist", "plural_by_nature", "colloquial_map", "timeline_phrases"};
  return kNames;
}

void Lexicons::extend(std::string_view name, std::string_view file_text) {
  std::set<std::string>* target = nullptr;
  if (name == "negative_determiners") target = &negative_determiners;
  else if (name == "negative_prefix_allowlist") target = &negative_prefix_allowlist;
  else if (name == "accepted_abbreviation_words") target = &accepted_abbreviation_words;
  else if (name == "proper_noun_allowlist") target = &proper_noun_allowlist;
  else if (name == "plural_by_nature") target = &plural_by_nature;
  else if (name == "timeline_phrases") target = &timeline_phrases;
  else if (name != "colloquial_map") {
    throw VocabError(ErrorKind::invalid_config, "unknown lexicon '" + std::string(name) + "'");
  }

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= file_text.size()) {
    auto end = file_text.find('\n', pos);
    if (end == std::string_view::npos) end = file_text.size();
    auto line = trim(file_text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    bool remove = line.front() == '!';
    if (remove) line = trim(line.substr(1));
    if (target) {
      auto entry = normalize_label(line);
      if (entry.empty()) continue;
      if (remove) {
        target->erase(entry);
      } else {
        target->insert(entry);
      }
      continue;
    }
    auto arrow = line.find("->");
    if (remove) {
      auto key = normalize_label(arrow == std::string_view::npos ? line : line.substr(0, arrow));
      colloquial_map.erase(key);
      continue;
    }
    if (arrow == std::string_view::npos) {
      throw VocabError(ErrorKind::invalid_config, "colloquial_map line " +
                                                      std::to_string(line_no) +
                                                      " lacks 'colloquial -> preferred'");
    }
    auto key = normalize_label(line.substr(0, arrow));
    auto preferred = std::string(trim(line.substr(arrow + 2)));
    if (key.empty() || preferred.empty()) {
      throw VocabError(ErrorKind::invalid_config,
                       "colloquial_map line " + std::to_string(line_no) + " has an empty side");
    }
    auto [it, inserted] = colloquial_map.emplace(key, preferred);
    if (!inserted && it->second != preferred) {
      throw VocabError(ErrorKind::invalid_config,
                       "colloquial phrase '" + key + "' mapped to two preferred phrases");
    }
  }
}

void Lexicons::validate() const {
  for (const auto& [colloquial, preferred] : colloquial_map) {
    if (colloquial_map.count(normalize_label(preferred))) {
      throw VocabError(ErrorKind::invalid_config, "preferred phrase '" + preferred + "' for '" +
                                                      colloquial +
                                                      "' is itself listed as colloquial");
    }
  }
}

void ComplexityConfig::validate() const {
  if (concept_bomb_token_threshold < 2 || word_bomb_min_group < 2) {
    throw VocabError(ErrorKind::invalid_config, "complexity thresholds must be at least 2");
  }
}

std::vector<Finding> check_abbreviation(const Term& term, const Lexicons& lex) {
  std::vector<Finding> out;
  static const std::regex kExpansion(R"(^\s*(\S.*?)\s*\(\s*([A-Z0-9]{2,5})\s*\)\s*$)");
  std::smatch m;
  if (std::regex_match(term.label, m, kExpansion) && looks_like_abbreviation(m[2].str())) {
    auto f = make_finding("R05-EXPANSION-STYLE", Severity::info, term,
                          "label appends the abbreviation \"" + m[2].str() +
                              "\" to the expanded form; keep the expanded form as the label "
                              "and record the abbreviation as a synonym");
    f.suggestion = "label \"" + m[1].str() + "\" with abbreviation synonym \"" + m[2].str() + "\"";
    out.push_back(std::move(f));
  }
  std::vector<std::string> abbreviations;
  for (const auto& word : whitespace_words(strip_parentheticals(term.label))) {
    if (looks_like_abbreviation(word) && !lex.accepted_abbreviation_words.count(ascii_lower(word))) {
      abbreviations.push_back(word);
    }
  }
  if (!abbreviations.empty()) {
    out.push_back(make_finding("R05-ABBREV", Severity::warning, term,
                               "label uses the abbreviation " + quoted_list(abbreviations) +
                                   "; use the full expanded terminology and keep the "
                                   "abbreviation as a synonym"));
  }
  return out;
}

std::vector<Finding> check_negative_phrasing(const Term& term, const Lexicons& lex) {
  auto tokens = label_tokens(term.label);
  std::vector<std::string> determiners;
  for (const auto& t : tokens) {
    if (lex.negative_determiners.count(t)) determiners.push_back(t);
  }
  if (!determiners.empty()) {
    return {make_finding("R02-NEGATIVE", Severity::warning, term,
                         "label describes what something is not (" + quoted_list(determiners) +
                             "); name what is present and express absence through queries")};
  }
  std::vector<std::vector<std::string>> allowed;
  for (const auto& entry : lex.negative_prefix_allowlist) allowed.push_back(tokenize(entry));
  std::vector<std::string> prefixed;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!tokens[i].starts_with("non")) continue;
    bool exempt = false;
    for (const auto& phrase : allowed) {
      for (std::size_t at = find_token_run(tokens, phrase); at < tokens.size();
           at = find_token_run(tokens, phrase, at + 1)) {
        if (at <= i && i < at + phrase.size()) exempt = true;
      }
    }
    if (!exempt) prefixed.push_back(tokens[i]);
  }
  if (prefixed.empty()) return {};
  return {make_finding("R02-NEGATIVE", Severity::info, term,
                       "label uses the negating prefix \"non\" in " + quoted_list(prefixed) +
                           "; prefer a positive concept unless the negated form is "
                           "established terminology")};
}

std::vector<Finding> check_conjunction(const Term& term, const Lexicons& lex) {
  auto tokens = label_tokens(term.label);
  if (std::none_of(tokens.begin(), tokens.end(), [](const auto& t) { return is_conjunction(t); })) {
    return {};
  }
  if (lex.proper_noun_allowlist.count(normalize_label(term.label))) return {};
  auto raw = raw_tokens(term.label);
  bool proper = raw.size() == tokens.size();
  bool disjunction = false;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!is_conjunction(tokens[i])) continue;
    disjunction = disjunction || tokens[i] == "or";
    bool neighbours_capitalized = i > 0 && i + 1 < tokens.size() && i + 1 < raw.size() &&
                                  is_upper(raw[i - 1].front()) && is_upper(raw[i + 1].front());
    proper = proper && neighbours_capitalized;
  }
  if (proper) return {};
  Finding f;
  if (disjunction) {
    f = make_finding("R02-CONJUNCTION", Severity::warning, term,
                     "label combines alternatives with \"or\"; use a broader label that "
                     "encompasses the alternatives");
    f.suggestion = "a single broader term covering every alternative";
  } else {
    f = make_finding("R02-CONJUNCTION", Severity::warning, term,
                     "label joins concepts with \"and\"; use a single-concept label");
  }
  return {std::move(f)};
}

std::vector<Finding> check_plural(const Term& term, const Lexicons& lex) {
  auto tokens = label_tokens(term.label);
  if (tokens.empty()) return {};
  const auto& last = tokens.back();
  if (last.size() < 3 || !last.ends_with('s')) return {};
  if (last.ends_with("ss") || last.ends_with("us") || last.ends_with("is")) return {};
  if (lex.plural_by_nature.count(last)) return {};
  return {make_finding("R02-PLURAL", Severity::info, term,
                       "label ends in the plural form \"" + last +
                           "\"; use the singular unless the concept is plural by nature")};
}

std::vector<Finding> check_colloquial(const Term& term, const Lexicons& lex) {
  if (auto it = lex.colloquial_map.find(normalize_label(term.label));
      it != lex.colloquial_map.end()) {
    auto f = make_finding("R03-COLLOQUIAL", Severity::warning, term,
                          "label \"" + term.label + "\" is colloquial; use \"" + it->second +
                              "\" and keep the lay phrase as a synonym");
    f.suggestion = it->second;
    return {std::move(f)};
  }
  for (const auto& syn : term.synonyms) {
    if (auto it = lex.colloquial_map.find(normalize_label(syn.text));
        it != lex.colloquial_map.end()) {
      auto f = make_finding("R03-COLLOQUIAL", Severity::info, term,
                            "synonym \"" + syn.text + "\" is colloquial for \"" + it->second +
                                "\"");
      f.suggestion = it->second;
      return {std::move(f)};
    }
  }
  return {};
}

std::vector<Finding> check_timeline(const Term& term, const Lexicons& lex) {
  auto tokens = label_tokens(term.label);
  auto hits = matched_phrases(tokens, lex.timeline_phrases);
  if (hits.empty()) return {};
  return {make_finding("C-TIMELINE", Severity::warning, term,
                       "label is anchored to a relative point in time (" + quoted_list(hits) +
                           "); record an absolute date or event instead")};
}

std::vector<Finding> check_concept_bomb(const Term& term, const ComplexityConfig& cfg,
                                        const Lexicons& lex) {
  auto tokens = label_tokens(term.label);
  bool too_long = std::cmp_greater_equal(tokens.size(), cfg.concept_bomb_token_threshold);
  bool temporal_quantity = std::any_of(tokens.begin(), tokens.end(), is_numeric) &&
                           !matched_phrases(tokens, lex.timeline_phrases).empty();
  if (!too_long && !temporal_quantity) return {};
  std::string why = too_long ? std::to_string(tokens.size()) + " words"
                             : std::string("a relative time window with a quantity");
  return {make_finding("C-CONCEPT-BOMB", Severity::warning, term,
                       "label packs several concepts (" + why +
                           "); consider separation into individual fields")};
}

std::vector<Finding> detect_word_bombs(const Vocabulary& vocab, const ComplexityConfig& cfg) {
  struct Member {
    std::vector<std::string> tokens;
    std::string normalized;
    const Term* term;
  };
  std::map<std::string, std::vector<Member>> groups;
  for (const auto& term : vocab.terms()) {
    if (term.obsolete) continue;
    auto tokens = label_tokens(term.label);
    if (tokens.empty()) continue;
    auto head = tokens.back();
    groups[head].push_back({tokens, join(tokens, " "), &term});
  }
  const auto min_group = static_cast<std::size_t>(cfg.word_bomb_min_group);
  std::vector<Finding> out;
  for (auto& [head, members] : groups) {
    if (members.size() < min_group) continue;
    std::sort(members.begin(), members.end(), [](const Member& a, const Member& b) {
      return std::tie(a.normalized, a.term->location) < std::tie(b.normalized, b.term->location);
    });
    bool has_conjunction = std::any_of(members.begin(), members.end(), [](const Member& m) {
      return std::any_of(m.tokens.begin(), m.tokens.end(),
                         [](const auto& t) { return is_conjunction(t); });
    });
    bool extension_family = false;
    for (const auto& base : members) {
      std::size_t extensions = 0;
      for (const auto& m : members) {
        if (m.tokens.size() > base.tokens.size() &&
            std::equal(base.tokens.rbegin(), base.tokens.rend(), m.tokens.rbegin())) {
          ++extensions;
        }
      }
      if (extensions >= min_group) {
        extension_family = true;
        break;
      }
    }
    if (!has_conjunction && !extension_family) continue;
    Finding f;
    f.rule_id = "C-WORD-BOMB";
    f.severity = Severity::info;
    f.subject_label = head;
    std::vector<std::string> labels;
    for (const auto& m : members) {
      labels.push_back(m.term->label);
      if (m.term->iri) f.subject_iris.push_back(*m.term->iri);
      if (m.term->location && (!f.location || *m.term->location < *f.location)) {
        f.location = m.term->location;
      }
    }
    f.message = std::to_string(members.size()) + " labels combine modifiers with the head noun \"" +
                head + "\" (" + quoted_list(labels) +
                "); model the modifiers as separate fields or a hierarchy";
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<Finding> check_redundant_narrowing(const Vocabulary& vocab) {
  const auto& terms = vocab.terms();
  // Normalized labels of each term's declared parents.
  auto parent_labels = [&](const Term& t) {
    std::set<std::string> labels;
    for (const auto& p : t.parents) {
      if (const Term* parent = vocab.find(p)) labels.insert(normalize_label(parent->label));
    }
    return labels;
  };
  std::vector<Finding> out;
  for (const auto& a : terms) {
    if (a.obsolete) continue;
    auto tokens = label_tokens(a.label);
    std::set<std::string> a_parents;
    bool parents_ready = false;
    for (std::size_t k = 1; k < tokens.size(); ++k) {
      auto suffix = join(std::span(tokens).subspan(k), " ");
      const auto& candidates = vocab.with_label(suffix);
      bool live = false;
      bool related = false;
      for (auto idx : candidates) {
        const Term& b = terms[idx];
        if (b.obsolete) continue;
        live = true;
        // B declaring A as its parent counts as an explicit relation too.
        if (a.iri) {
          auto a_expanded = vocab.expand(*a.iri);
          for (const auto& p : b.parents) related = related || vocab.expand(p) == a_expanded;
        }
      }
      if (!live || related) continue;
      if (!parents_ready) {
        a_parents = parent_labels(a);
        parents_ready = true;
      }
      if (a_parents.count(suffix)) continue;
      const Term& b = terms[candidates.front()];
      auto f = make_finding("R04-NARROW", Severity::info, a,
                            "label narrows the existing term \"" + b.label +
                                "\" without declaring it as a parent; reuse it unless the "
                                "extra detail is required");
      f.suggestion = b.label;
      out.push_back(std::move(f));
    }
  }
  return out;
}

std::vector<Finding> check_tag_style(std::span<const std::string> tag_values,
                                     const Lexicons& lex) {
  static const std::set<std::string> kBooleans = {"true", "false", "yes", "no", "y", "n"};
  std::vector<Finding> out;
  for (const auto& value : tag_values) {
    auto tokens = label_tokens(value);
    Finding f;
    f.subject_label = value;
    if (kBooleans.count(join(tokens, " "))) {
      f.rule_id = "R09-BOOLEAN";
      f.severity = Severity::warning;
      f.message = "tag value \"" + value +
                  "\" is a boolean answer; tag the state that is present instead of the "
                  "answer to a question";
    } else if (!tokens.empty() && lex.negative_determiners.count(tokens.front())) {
      f.rule_id = "R09-NEGATIVE-TAG";
      f.severity = Severity::info;
      f.message = "tag value \"" + value +
                  "\" records an absence; tag what is present rather than what is not";
    } else {
      continue;
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<Finding> run_label_checks(const Term& term, const Lexicons& lex,
                                      const ComplexityConfig& cfg) {
  std::vector<Finding> out;
  auto append = [&](std::vector<Finding> more) {
    for (auto& f : more) out.push_back(std::move(f));
  };
  append(check_negative_phrasing(term, lex));
  append(check_conjunction(term, lex));
  append(check_plural(term, lex));
  append(check_colloquial(term, lex));
  append(check_abbreviation(term, lex));
  append(check_concept_bomb(term, cfg, lex));
  append(check_timeline(term, lex));
  return out;
}

}  // namespace vocab_lint
