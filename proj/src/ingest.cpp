#include "vocab_lint/ingest.hpp"

#include <map>
#include <set>
#include <variant>

#include "vocab_lint/text.hpp"

namespace vocab_lint {
namespace {

struct Line {
  int number;
  std::string_view text;
};

std::vector<Line> split_lines(std::string_view input) {
  if (input.substr(0, 3) == "\xEF\xBB\xBF") input.remove_prefix(3);
  std::vector<Line> lines;
  int number = 1;
  std::size_t pos = 0;
  while (pos < input.size()) {
    auto end = input.find('\n', pos);
    if (end == std::string_view::npos) end = input.size();
    auto text = input.substr(pos, end - pos);
    if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
    lines.push_back({number++, text});
    pos = end + 1;
  }
  return lines;
}

// Drops an OBO trailing "! comment" and "{qualifier}" block from a value.
std::string_view strip_trailers(std::string_view value) {
  auto bang = value.find(" !");
  if (bang != std::string_view::npos) value = value.substr(0, bang);
  if (!value.empty() && value.front() == '!') value = {};
  value = trim(value);
  if (!value.empty() && value.back() == '}') {
    auto open = value.rfind('{');
    if (open != std::string_view::npos) value = trim(value.substr(0, open));
  }
  return value;
}

struct Quoted {
  std::string text;
  std::string_view rest;
};

enum class QuoteError { not_quoted, unclosed };

// Reads a leading "..." string. Only \" and \\ are unescaped; any other
// backslash sequence is kept verbatim.
std::variant<Quoted, QuoteError> read_quoted(std::string_view value) {
  if (value.empty() || value.front() != '"') return QuoteError::not_quoted;
  Quoted out;
  for (std::size_t i = 1; i < value.size(); ++i) {
    char c = value[i];
    if (c == '\\' && i + 1 < value.size()) {
      char next = value[i + 1];
      if (next != '"' && next != '\\') out.text.push_back('\\');
      out.text.push_back(next);
      ++i;
    } else if (c == '"') {
      out.rest = trim(value.substr(i + 1));
      return out;
    } else {
      out.text.push_back(c);
    }
  }
  return QuoteError::unclosed;
}

// Contents of a trailing "[a, b]" list; commas inside quotes do not split.
std::vector<std::string> read_bracket_list(std::string_view rest) {
  std::vector<std::string> items;
  auto open = rest.find('[');
  if (open == std::string_view::npos) return items;
  auto close = rest.rfind(']');
  if (close == std::string_view::npos || close < open) close = rest.size();
  auto body = rest.substr(open + 1, close - open - 1);
  std::string current;
  bool in_quote = false;
  for (char c : body) {
    if (c == '"') in_quote = !in_quote;
    if (c == ',' && !in_quote) {
      auto item = trim(current);
      if (!item.empty()) items.emplace_back(item);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  auto item = trim(current);
  if (!item.empty()) items.emplace_back(item);
  return items;
}

std::string escape_quoted(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::optional<SynonymScope> parse_scope(std::string_view word) {
  if (word == "EXACT") return SynonymScope::exact;
  if (word == "BROAD") return SynonymScope::broad;
  if (word == "NARROW") return SynonymScope::narrow;
  if (word == "RELATED") return SynonymScope::related;
  return std::nullopt;
}

bool is_abbreviation_marker(std::string_view word) {
  return ascii_lower(word) == "abbreviation";
}

class OboParser {
 public:
  OboParser(const std::string& file) : file_(file) {}

  ParseResult run(std::string_view input) {
    for (const Line& line : split_lines(input)) handle(line);
    finish_stanza();
    return {Vocabulary(std::move(terms_), std::move(prefixes_)), std::move(diagnostics_)};
  }

 private:
  enum class Mode { header, term, skipped };

  struct Stanza {
    Term term;
    int line = 1;
    bool broken = false;
    bool has_name = false;
  };

  void diag(DiagnosticSeverity sev, std::string message, int line) {
    diagnostics_.push_back({sev, std::move(message), {file_, line}});
  }

  // Stanza-level diagnostics are anchored at the stanza header line.
  void stanza_diag(DiagnosticSeverity sev, const std::string& message, int tag_line) {
    diag(sev, message + " (line " + std::to_string(tag_line) + ")", stanza_->line);
  }

  void handle(const Line& line) {
    auto text = trim(line.text);
    if (text.empty() || text.front() == '!') return;
    if (text.front() == '[') {
      finish_stanza();
      if (text == "[Term]") {
        stanza_.emplace();
        stanza_->line = line.number;
        stanza_->term.location = SourceLocation{file_, line.number};
        mode_ = Mode::term;
      } else {
        mode_ = Mode::skipped;
        diag(DiagnosticSeverity::warning,
             "unsupported stanza type " + std::string(text) + " skipped", line.number);
      }
      return;
    }
    if (mode_ == Mode::skipped) return;
    auto colon = text.find(':');
    if (colon == std::string_view::npos) {
      auto msg = "line without 'tag: value' shape: '" + std::string(text) + "'";
      if (mode_ == Mode::term) {
        stanza_diag(DiagnosticSeverity::warning, msg, line.number);
      } else {
        diag(DiagnosticSeverity::warning, msg, line.number);
      }
      return;
    }
    auto tag = trim(text.substr(0, colon));
    auto value = trim(text.substr(colon + 1));
    if (mode_ == Mode::header) {
      header_tag(tag, value, line.number);
    } else {
      term_tag(tag, value, line.number);
    }
  }

  void header_tag(std::string_view tag, std::string_view value, int line) {
    if (tag != "idspace") return;
    auto words = tokenize_ws(value);
    if (words.size() < 2) {
      diag(DiagnosticSeverity::warning, "idspace needs a prefix and a base IRI", line);
      return;
    }
    try {
      bool obo = words[1].starts_with("http://purl.obolibrary.org/obo/");
      prefixes_.add(words[0], {words[1], obo});
    } catch (const VocabError& e) {
      diag(DiagnosticSeverity::warning, e.what(), line);
    }
  }

  static std::vector<std::string> tokenize_ws(std::string_view value) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : value) {
      if (c == ' ' || c == '\t') {
        if (!cur.empty()) out.push_back(std::move(cur));
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
  }

  std::optional<Iri> read_iri(std::string_view tag, std::string_view value, int line) {
    auto cleaned = strip_trailers(value);
    auto iri = Iri::parse(cleaned);
    if (!iri) {
      stanza_diag(DiagnosticSeverity::error,
                  "invalid identifier in " + std::string(tag) + ": '" + std::string(value) + "'",
                  line);
    }
    return iri;
  }

  void term_tag(std::string_view tag, std::string_view value, int line) {
    Term& term = stanza_->term;
    if (tag == "id") {
      if (term.iri) {
        stanza_diag(DiagnosticSeverity::warning, "repeated id tag ignored", line);
        return;
      }
      term.iri = read_iri(tag, value, line);
    } else if (tag == "name") {
      if (stanza_->has_name) {
        stanza_diag(DiagnosticSeverity::warning, "repeated name tag ignored", line);
        return;
      }
      term.label = std::string(value);
      stanza_->has_name = !term.label.empty();
    } else if (tag == "def") {
      auto parsed = read_quoted(value);
      if (auto* err = std::get_if<QuoteError>(&parsed)) {
        quote_problem(*err, tag, line);
        return;
      }
      auto& q = std::get<Quoted>(parsed);
      if (q.text.empty()) {
        stanza_diag(DiagnosticSeverity::warning, "empty definition ignored", line);
        return;
      }
      term.definition = Definition{std::move(q.text), read_bracket_list(q.rest)};
    } else if (tag == "synonym") {
      auto parsed = read_quoted(value);
      if (auto* err = std::get_if<QuoteError>(&parsed)) {
        quote_problem(*err, tag, line);
        return;
      }
      auto& q = std::get<Quoted>(parsed);
      if (q.text.empty()) {
        stanza_diag(DiagnosticSeverity::warning, "empty synonym ignored", line);
        return;
      }
      Synonym syn{std::move(q.text), SynonymScope::related, false};
      auto head = q.rest.substr(0, q.rest.find('['));
      auto words = tokenize_ws(head);
      if (!words.empty()) {
        if (auto scope = parse_scope(words[0])) {
          syn.scope = *scope;
        } else {
          stanza_diag(DiagnosticSeverity::warning,
                      "unknown synonym scope '" + words[0] + "', using RELATED", line);
        }
        for (std::size_t i = 1; i < words.size(); ++i) {
          if (is_abbreviation_marker(words[i])) syn.is_abbreviation = true;
        }
      }
      for (const auto& item : read_bracket_list(q.rest)) {
        if (is_abbreviation_marker(item)) syn.is_abbreviation = true;
      }
      term.synonyms.push_back(std::move(syn));
    } else if (tag == "is_a") {
      if (auto iri = read_iri(tag, value, line)) term.parents.push_back(std::move(*iri));
    } else if (tag == "is_obsolete") {
      auto v = ascii_lower(value);
      if (v == "true") {
        term.obsolete = true;
      } else if (v == "false") {
        term.obsolete = false;
      } else {
        stanza_diag(DiagnosticSeverity::warning,
                    "is_obsolete expects true or false, got '" + std::string(value) + "'", line);
      }
    } else if (tag == "replaced_by") {
      if (term.replaced_by) {
        stanza_diag(DiagnosticSeverity::warning, "repeated replaced_by tag ignored", line);
        return;
      }
      term.replaced_by = read_iri(tag, value, line);
    } else {
      term.annotations.emplace(std::string(tag), std::string(value));
    }
  }

  void quote_problem(QuoteError err, std::string_view tag, int line) {
    if (err == QuoteError::unclosed) {
      stanza_diag(DiagnosticSeverity::error,
                  "unclosed quote in " + std::string(tag) + "; stanza skipped", line);
      stanza_->broken = true;
    } else {
      stanza_diag(DiagnosticSeverity::error,
                  std::string(tag) + " value must start with a quoted string", line);
    }
  }

  void finish_stanza() {
    if (!stanza_) return;
    Stanza s = std::move(*stanza_);
    stanza_.reset();
    if (s.broken) return;
    if (!s.has_name) {
      diag(DiagnosticSeverity::error, "stanza has no name; skipped", s.line);
      return;
    }
    if (!s.term.iri) {
      diag(DiagnosticSeverity::warning, "stanza has no id", s.line);
    } else if (!seen_ids_.insert(s.term.iri->value()).second) {
      diag(DiagnosticSeverity::error, "duplicate id '" + s.term.iri->value() + "'", s.line);
    }
    terms_.push_back(std::move(s.term));
  }

  const std::string& file_;
  Mode mode_ = Mode::header;
  std::optional<Stanza> stanza_;
  std::vector<Term> terms_;
  std::vector<ParseDiagnostic> diagnostics_;
  PrefixMap prefixes_;
  std::set<std::string> seen_ids_;
};

std::vector<std::string> split_cell_list(std::string_view cell) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= cell.size()) {
    auto bar = cell.find('|', pos);
    if (bar == std::string_view::npos) bar = cell.size();
    auto item = trim(cell.substr(pos, bar - pos));
    if (!item.empty()) out.emplace_back(item);
    pos = bar + 1;
  }
  return out;
}

std::vector<std::string_view> split_tabs(std::string_view row) {
  std::vector<std::string_view> cells;
  std::size_t pos = 0;
  while (true) {
    auto tab = row.find('\t', pos);
    if (tab == std::string_view::npos) {
      cells.push_back(row.substr(pos));
      break;
    }
    cells.push_back(row.substr(pos, tab - pos));
    pos = tab + 1;
  }
  return cells;
}

}  // namespace

ColumnMap ColumnMap::defaults() {
  ColumnMap map;
  map.iri_col = "iri";
  map.definition_col = "definition";
  map.def_source_col = "definition_source";
  map.parent_col = "parent";
  map.synonyms_col = "synonyms";
  map.obsolete_col = "obsolete";
  map.replaced_by_col = "replaced_by";
  map.tags_col = "tags";
  return map;
}

ParseResult parse_obo(std::string_view input, const std::string& file_name) {
  return OboParser(file_name).run(input);
}

ParseResult parse_term_table(std::string_view input, const std::string& file_name,
                             const ColumnMap& columns) {
  auto lines = split_lines(input);
  if (lines.empty()) {
    throw VocabError(ErrorKind::parse_fatal, file_name + ": missing header row");
  }
  std::vector<ParseDiagnostic> diags;
  auto header = split_tabs(lines.front().text);
  std::map<std::string, std::size_t, std::less<>> index;
  for (std::size_t i = 0; i < header.size(); ++i) {
    auto name = std::string(trim(header[i]));
    if (!index.emplace(name, i).second) {
      diags.push_back({DiagnosticSeverity::warning, "duplicate column '" + name + "'",
                       {file_name, 1}});
    }
  }
  auto column = [&](const std::optional<std::string>& name) -> std::optional<std::size_t> {
    if (!name) return std::nullopt;
    auto it = index.find(*name);
    if (it == index.end()) return std::nullopt;
    return it->second;
  };
  auto label_idx = column(columns.label_col);
  if (!label_idx) {
    throw VocabError(ErrorKind::parse_fatal,
                     file_name + ": required label column '" + columns.label_col + "' not found");
  }
  auto iri_idx = column(columns.iri_col);
  auto def_idx = column(columns.definition_col);
  auto src_idx = column(columns.def_source_col);
  auto parent_idx = column(columns.parent_col);
  auto syn_idx = column(columns.synonyms_col);
  auto obs_idx = column(columns.obsolete_col);
  auto repl_idx = column(columns.replaced_by_col);
  auto tags_idx = column(columns.tags_col);
  std::set<std::size_t> mapped;
  for (auto idx : {label_idx, iri_idx, def_idx, src_idx, parent_idx, syn_idx, obs_idx, repl_idx,
                   tags_idx}) {
    if (idx) mapped.insert(*idx);
  }

  std::vector<Term> terms;
  std::set<std::string> seen_ids;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    if (trim(line.text).empty()) continue;
    auto cells = split_tabs(line.text);
    SourceLocation loc{file_name, line.number};
    auto cell = [&](std::optional<std::size_t> idx) -> std::string_view {
      if (!idx || *idx >= cells.size()) return {};
      return trim(cells[*idx]);
    };
    if (cells.size() > header.size()) {
      diags.push_back({DiagnosticSeverity::warning, "row has more cells than the header", loc});
    }
    Term term;
    term.location = loc;
    term.label = std::string(cell(label_idx));
    if (term.label.empty()) {
      diags.push_back({DiagnosticSeverity::error, "row has an empty label; skipped", loc});
      continue;
    }
    if (auto v = cell(iri_idx); !v.empty()) {
      term.iri = Iri::parse(v);
      if (!term.iri) {
        diags.push_back({DiagnosticSeverity::error,
                         "invalid identifier '" + std::string(v) + "'", loc});
      } else if (!seen_ids.insert(term.iri->value()).second) {
        diags.push_back({DiagnosticSeverity::error,
                         "duplicate id '" + term.iri->value() + "'", loc});
      }
    }
    if (auto v = cell(def_idx); !v.empty()) {
      term.definition = Definition{std::string(v), split_cell_list(cell(src_idx))};
    }
    for (const auto& p : split_cell_list(cell(parent_idx))) {
      if (auto iri = Iri::parse(p)) {
        term.parents.push_back(std::move(*iri));
      } else {
        diags.push_back({DiagnosticSeverity::error, "invalid parent identifier '" + p + "'", loc});
      }
    }
    for (auto& s : split_cell_list(cell(syn_idx))) {
      term.synonyms.push_back({std::move(s), SynonymScope::exact, false});
    }
    if (auto v = cell(obs_idx); !v.empty()) {
      auto lower = ascii_lower(v);
      if (lower == "true") {
        term.obsolete = true;
      } else if (lower != "false") {
        diags.push_back({DiagnosticSeverity::warning,
                         "obsolete expects true or false, got '" + std::string(v) + "'", loc});
      }
    }
    if (auto v = cell(repl_idx); !v.empty()) {
      term.replaced_by = Iri::parse(v);
      if (!term.replaced_by) {
        diags.push_back({DiagnosticSeverity::error,
                         "invalid replaced_by identifier '" + std::string(v) + "'", loc});
      }
    }
    for (auto& tag : split_cell_list(cell(tags_idx))) term.annotations.emplace("tag", tag);
    for (std::size_t i = 0; i < header.size() && i < cells.size(); ++i) {
      if (mapped.count(i)) continue;
      auto v = trim(cells[i]);
      if (!v.empty()) term.annotations.emplace(std::string(trim(header[i])), std::string(v));
    }
    terms.push_back(std::move(term));
  }
  return {Vocabulary(std::move(terms)), std::move(diags)};
}

std::string write_obo_term(const Term& term) {
  std::string out = "[Term]\n";
  if (term.iri) out += "id: " + term.iri->value() + "\n";
  out += "name: " + term.label + "\n";
  if (term.definition) {
    out += "def: " + escape_quoted(term.definition->text) + " [" +
           join(term.definition->sources, ", ") + "]\n";
  }
  for (const auto& syn : term.synonyms) {
    out += "synonym: " + escape_quoted(syn.text) + " " + std::string(to_string(syn.scope)) +
           (syn.is_abbreviation ? " [ABBREVIATION]\n" : " []\n");
  }
  for (const auto& parent : term.parents) out += "is_a: " + parent.value() + "\n";
  if (term.obsolete) out += "is_obsolete: true\n";
  if (term.replaced_by) out += "replaced_by: " + term.replaced_by->value() + "\n";
  for (const auto& [key, value] : term.annotations) out += key + ": " + value + "\n";
  return out;
}

std::string write_obo(const Vocabulary& vocab) {
  std::string out = "format-version: 1.4\n";
  for (const auto& [prefix, entry] : vocab.prefix_map().entries()) {
    out += "idspace: " + prefix + " " + entry.base + "\n";
  }
  for (const auto& term : vocab.terms()) out += "\n" + write_obo_term(term);
  return out;
}

}  // namespace vocab_lint
