#pragma once

// Exhaustive suggestion scorer: every query is compared with every indexed
// phrase of every reference term, using a full-matrix edit distance.

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

struct RefPhrase {
  std::string text;
  int kind;  // 0 label, 1 exact synonym, 2 other synonym
};

struct RefTerm {
  std::string iri;  // already expanded
  std::vector<RefPhrase> phrases;
  std::size_t sources = 1;
};

struct Scored {
  std::string iri;
  double score;
  int match_kind;  // 0..2 exact kinds, 3 overlap, 4 fuzzy
  std::string phrase;
  std::size_t reuse;
};

// Lowercase; every ASCII non-alphanumeric byte separates words.
inline std::vector<std::string> words(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (unsigned char c : s) {
    if (c < 0x80 && !std::isalnum(c)) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(static_cast<char>(c < 0x80 ? std::tolower(c) : c));
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

inline std::string norm(const std::string& s) {
  std::string out;
  for (const auto& w : words(s)) out += (out.empty() ? "" : " ") + w;
  return out;
}

// Code points of ASCII-or-UTF-8 text; the generators only emit valid UTF-8.
inline std::u32string code_points(const std::string& s) {
  std::u32string out;
  for (std::size_t i = 0; i < s.size();) {
    unsigned char c = s[i];
    int len = c < 0x80 ? 1 : c < 0xE0 ? 2 : c < 0xF0 ? 3 : 4;
    char32_t cp = len == 1 ? c : len == 2 ? c & 0x1F : len == 3 ? c & 0x0F : c & 0x07;
    for (int k = 1; k < len; ++k) cp = (cp << 6) | (static_cast<unsigned char>(s[i + k]) & 0x3F);
    out.push_back(cp);
    i += len;
  }
  return out;
}

inline std::size_t levenshtein(const std::u32string& a, const std::u32string& b) {
  std::vector<std::vector<std::size_t>> d(a.size() + 1, std::vector<std::size_t>(b.size() + 1));
  for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1,
                          d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
    }
  }
  return d[a.size()][b.size()];
}

inline std::vector<Scored> rank(const std::vector<RefTerm>& terms, const std::string& query,
                                std::size_t k) {
  const std::string q = norm(query);
  const auto qw = words(q);
  const std::set<std::string> qset(qw.begin(), qw.end());
  const auto q32 = code_points(q);
  std::vector<Scored> all;
  for (const auto& t : terms) {
    bool have = false;
    Scored best{t.iri, 0.0, 5, "", t.sources};
    auto offer = [&](double score, int kind, const std::string& phrase) {
      if (!have || score > best.score ||
          (score == best.score &&
           (kind < best.match_kind || (kind == best.match_kind && phrase < best.phrase)))) {
        best.score = score;
        best.match_kind = kind;
        best.phrase = phrase;
        have = true;
      }
    };
    for (const auto& p : t.phrases) {
      const std::string ph = norm(p.text);
      if (ph.empty()) continue;
      if (ph == q) {
        offer(p.kind == 0 ? 1.0 : p.kind == 1 ? 0.9 : 0.8, p.kind, ph);
        continue;
      }
      auto pw = words(ph);
      std::set<std::string> pset(pw.begin(), pw.end());
      std::size_t inter = 0;
      for (const auto& w : pset) inter += qset.count(w);
      if (inter > 0) {
        std::size_t uni = qset.size() + pset.size() - inter;
        offer(0.7 * (static_cast<double>(inter) / static_cast<double>(uni)), 3, ph);
      }
      auto p32 = code_points(ph);
      std::size_t longest = std::max(q32.size(), p32.size());
      std::size_t d = levenshtein(q32, p32);
      double nd = static_cast<double>(d) / static_cast<double>(longest);
      if (nd <= 0.25) offer(0.6 * (1.0 - nd), 4, ph);
    }
    if (have) all.push_back(best);
  }
  std::sort(all.begin(), all.end(), [](const Scored& a, const Scored& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.reuse != b.reuse) return a.reuse > b.reuse;
    return a.iri < b.iri;
  });
  if (all.size() > k) all.resize(k);
  return all;
}

}  // namespace oracle
