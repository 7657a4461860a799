#pragma once

// Synthetic vocabulary with planted defects. Clean terms are built from
// random consonant-vowel words so that no lexical check can fire on them;
// every planted defect records the (rule_id, subject_label) it must yield.

#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace synthetic {

struct Expected {
  std::string rule_id;
  std::string subject;

  auto operator<=>(const Expected&) const = default;
};

struct Stanza {
  std::optional<std::string> id;
  std::string label;
  std::optional<std::string> def;
  std::string def_source = "PMID:1000";
  std::vector<std::string> parents;
  bool obsolete = false;
  std::optional<std::string> replaced_by;
  std::vector<std::string> tags;
  std::vector<std::string> exact_synonyms;
  std::string raw;  // verbatim stanza body, used for malformed input
};

class Generator {
 public:
  explicit Generator(unsigned seed) : rng_(seed) {}

  std::string word() {
    static const std::string cons = "bdfgklmprtvz";
    static const std::string vow = "aeiou";
    while (true) {
      std::string w;
      for (int i = 0; i < 3; ++i) {
        w += cons[pick(cons.size())];
        w += vow[pick(vow.size())];
      }
      if (used_.insert(w).second) return w;
    }
  }

  std::string iri() { return "VLX:" + std::to_string(1000000 + next_id_++); }

  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

 private:
  std::mt19937 rng_;
  std::set<std::string> used_;
  int next_id_ = 0;
};

struct Corpus {
  std::vector<Stanza> stanzas;
  std::vector<Expected> expected;

  std::string obo() const {
    std::string out = "format-version: 1.2\nidspace: VLX https://example.org/vlx/VLX_\n\n";
    for (const auto& s : stanzas) {
      out += "[Term]\n";
      if (!s.raw.empty()) {
        out += s.raw + "\n";
        continue;
      }
      if (s.id) out += "id: " + *s.id + "\n";
      out += "name: " + s.label + "\n";
      if (s.def) {
        out += "def: \"" + *s.def + "\" [" + s.def_source + "]\n";
      }
      for (const auto& syn : s.exact_synonyms) out += "synonym: \"" + syn + "\" EXACT []\n";
      for (const auto& p : s.parents) out += "is_a: " + p + "\n";
      for (const auto& t : s.tags) out += "tag: " + t + "\n";
      if (s.obsolete) out += "is_obsolete: true\n";
      if (s.replaced_by) out += "replaced_by: " + *s.replaced_by + "\n";
      out += "\n";
    }
    return out;
  }
};

// `total` stanzas, of which roughly 250 carry planted defects.
inline Corpus make_corpus(std::size_t total, unsigned seed = 7) {
  Generator g(seed);
  Corpus c;
  auto expect = [&](std::string rule, std::string subject) {
    c.expected.push_back({std::move(rule), std::move(subject)});
  };
  // Root-style clean stanza for an arbitrary label.
  auto clean = [&](std::string label) {
    Stanza s;
    s.id = g.iri();
    s.label = label;
    s.def = "A " + label + " is a " + g.word() + " that has trait " + g.word() + ".";
    return s;
  };
  auto two = [&] { return g.word() + " " + g.word(); };

  constexpr int kEach = 5;
  for (int rep = 0; rep < kEach; ++rep) {
    auto add = [&](Stanza s) { c.stanzas.push_back(std::move(s)); };

    add(clean("not " + two()));
    expect("R02-NEGATIVE", c.stanzas.back().label);
    add(clean("non" + g.word() + " " + g.word()));
    expect("R02-NEGATIVE", c.stanzas.back().label);
    add(clean(g.word() + " or " + g.word()));
    expect("R02-CONJUNCTION", c.stanzas.back().label);
    add(clean(g.word() + " " + g.word() + "ts"));
    expect("R02-PLURAL", c.stanzas.back().label);
    add(clean("latest " + two()));
    expect("C-TIMELINE", c.stanzas.back().label);
    {
      std::string label;
      for (int i = 0; i < 8; ++i) label += (i ? " " : "") + g.word();
      add(clean(label));
      expect("C-CONCEPT-BOMB", label);
    }
    {
      std::string abbr = g.word().substr(0, 4);
      for (auto& ch : abbr) ch = static_cast<char>(ch - 'a' + 'A');
      add(clean(g.word() + " " + abbr));
      expect("R05-ABBREV", c.stanzas.back().label);
    }
    {
      std::string abbr = g.word().substr(0, 4);
      for (auto& ch : abbr) ch = static_cast<char>(ch - 'a' + 'A');
      add(clean(two() + " (" + abbr + ")"));
      expect("R05-EXPANSION-STYLE", c.stanzas.back().label);
    }
    {
      auto base = clean(two());
      auto longer = clean(g.word() + " " + base.label);
      expect("R04-NARROW", longer.label);
      add(base);
      add(longer);
    }
    {
      // Extension family: base head plus five modifier labels under it.
      auto head = g.word();
      auto base = clean(head);
      add(base);
      for (int i = 0; i < 5; ++i) {
        Stanza m = clean(g.word() + " " + head);
        m.parents = {*base.id};
        m.def = "A " + m.label + " is a " + head + " that has trait " + g.word() + ".";
        add(m);
      }
      expect("C-WORD-BOMB", head);
    }
    {
      auto s = clean(two());
      std::string tag = rep % 2 ? "yes" : "false";
      s.tags = {tag, "no " + g.word()};
      expect("R09-BOOLEAN", tag);
      expect("R09-NEGATIVE-TAG", s.tags[1]);
      add(s);
    }
    {
      auto s = clean(two());
      s.id.reset();
      expect("R06-MISSING-IRI", s.label);
      expect("PARSE", "");
      add(s);
    }
    {
      auto s = clean(two());
      s.id = "ZZQ:" + std::to_string(rep);
      expect("R06-BAD-IRI", s.label);
      add(s);
    }
    {
      auto s = clean(two());
      s.id = "http://www.example.org/go/GO_" + std::to_string(9000000 + rep);
      expect("R06-NONPURL", s.label);
      add(s);
    }
    {
      auto a = clean(two());
      auto b = clean(two());
      b.id = a.id;
      expect("R06-DUP-IRI", a.label);
      expect("PARSE", "");
      add(a);
      add(b);
    }
    {
      auto s = clean(two());
      s.def.reset();
      expect("R07-MISSING-DEF", s.label);
      add(s);
    }
    {
      auto s = clean(two());
      s.def_source = "";
      expect("R07-MISSING-SOURCE", s.label);
      add(s);
    }
    {
      auto s = clean(two());
      s.def = "Used to record " + g.word() + " values.";
      expect("R07-FORM", s.label);
      add(s);
    }
    {
      auto parent = clean(two());
      auto s = clean(two());
      s.parents = {*parent.id};
      expect("R07-GENUS-MISMATCH", s.label);
      add(parent);
      add(s);
    }
    {
      auto a = clean(two());
      auto b = clean(two());
      b.def = a.def;
      expect("R07-DUPLICATE-DEF", std::min(a.label, b.label));
      add(a);
      add(b);
    }
    {
      auto s = clean(two());
      s.def = "A " + s.label + " is a " + g.word() + " that resembles another " + s.label + ".";
      expect("R07-SELF-REF", s.label);
      add(s);
    }
    {
      auto a = clean(two());
      auto b = clean(two());
      a.def = "A " + a.label + " is a " + g.word() + " that follows a " + b.label + ".";
      b.def = "A " + b.label + " is a " + g.word() + " that precedes a " + a.label + ".";
      // Subject is the member with the least IRI.
      expect("R07-CIRCULAR", *a.id < *b.id ? a.label : b.label);
      add(a);
      add(b);
    }
    {
      auto target = clean(two());
      Stanza s;
      s.id = g.iri();
      s.label = two();
      s.obsolete = true;
      s.replaced_by = target.id;
      expect("R08-LABEL", s.label);
      add(target);
      add(s);
    }
    {
      Stanza s;
      s.id = g.iri();
      s.label = "obsolete " + two();
      s.obsolete = true;
      expect("R08-NO-REPLACEMENT", s.label);
      add(s);
    }
    {
      Stanza s;
      s.id = g.iri();
      s.label = "obsolete " + two();
      s.obsolete = true;
      s.replaced_by = "VLX:9" + std::to_string(900000 + rep);
      expect("R08-DANGLING", s.label);
      add(s);
    }
    {
      auto live = clean(two());
      Stanza mid;
      mid.id = g.iri();
      mid.label = "obsolete " + two();
      mid.obsolete = true;
      mid.replaced_by = live.id;
      Stanza first;
      first.id = g.iri();
      first.label = "obsolete " + two();
      first.obsolete = true;
      first.replaced_by = mid.id;
      expect("R08-CHAIN", first.label);
      add(live);
      add(mid);
      add(first);
    }
    {
      auto target = clean(two());
      auto s = clean(two());
      s.replaced_by = target.id;
      expect("R08-LIVE-REPLACED", s.label);
      add(target);
      add(s);
    }
    {
      auto live = clean(two());
      Stanza old;
      old.id = g.iri();
      old.label = "obsolete " + two();
      old.obsolete = true;
      old.replaced_by = live.id;
      auto child = clean(two());
      child.parents = {*old.id};
      child.def = "A " + child.label + " is a " + old.label + " that has trait " + g.word() + ".";
      expect("R08-OBSOLETE-PARENT", child.label);
      add(live);
      add(old);
      add(child);
    }
    {
      Stanza a, b;
      a.id = g.iri();
      b.id = g.iri();
      a.label = "obsolete " + two();
      b.label = "obsolete " + two();
      a.obsolete = b.obsolete = true;
      a.replaced_by = b.id;
      b.replaced_by = a.id;
      expect("R08-CYCLE", a.label);
      expect("R08-CYCLE", b.label);
      add(a);
      add(b);
    }
    {
      auto label = two();
      add(clean(label));
      add(clean(label));
      expect("C-SEMANTIC-NOISE", label);
    }
    {
      auto a = clean(two());
      auto b = clean(two());
      a.exact_synonyms = {b.label};
      expect("C-SYNONYM-CLASH", a.label);
      add(a);
      add(b);
    }
    {
      Stanza broken;
      broken.raw = "id: " + g.iri() + "\nname: " + two() + "\ndef: \"unterminated [PMID:1]\n";
      expect("PARSE", "");
      add(broken);
    }
  }
  for (const auto& [lay, preferred] :
       std::vector<std::pair<std::string, std::string>>{{"belly", "abdomen"},
                                                        {"runny nose", "rhinorrhea"},
                                                        {"heart attack", "myocardial infarction"}}) {
    c.stanzas.push_back(clean(lay));
    c.expected.push_back({"R03-COLLOQUIAL", lay});
  }

  // Clean bulk: two-word labels under a shared pool of head nouns, each
  // pointing at an earlier clean term as parent.
  std::vector<std::string> heads;
  for (int i = 0; i < 1500; ++i) heads.push_back(g.word());
  std::vector<std::pair<std::string, std::string>> clean_terms;  // (iri, label)
  while (c.stanzas.size() < total) {
    Stanza s;
    s.id = g.iri();
    s.label = g.word() + " " + heads[g.pick(heads.size())];
    s.def_source = "PMID:" + std::to_string(2000000 + c.stanzas.size());
    if (clean_terms.size() < 50 || g.pick(10) == 0) {
      s.def = "A " + s.label + " is a " + g.word() + " that has trait " + g.word() + ".";
    } else {
      const auto& [piri, plabel] = clean_terms[g.pick(clean_terms.size())];
      s.parents = {piri};
      s.def = "A " + s.label + " is a " + plabel + " that has trait " + g.word() + ".";
    }
    clean_terms.push_back({*s.id, s.label});
    c.stanzas.push_back(std::move(s));
  }
  return c;
}

}  // namespace synthetic
