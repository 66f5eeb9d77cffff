#include "braidtk/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace braidtk {

Permutation::Permutation(int n) {
  if (n < 1) throw std::invalid_argument("permutation size must be positive");
  image.resize(n);
  std::iota(image.begin(), image.end(), 1);
}

Permutation::Permutation(std::vector<int> img) : image(std::move(img)) {
  const int n = size();
  if (n < 1) throw std::invalid_argument("empty permutation image");
  std::vector<char> seen(n + 1, 0);
  for (int v : image) {
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("image is not a permutation of 1..n");
    seen[v] = 1;
  }
}

bool Permutation::is_identity() const {
  for (int j = 1; j <= size(); ++j)
    if (image[j - 1] != j) return false;
  return true;
}

Permutation Permutation::then(const Permutation& q) const {
  if (size() != q.size()) throw std::invalid_argument("size mismatch in composition");
  Permutation r;
  r.image.resize(size());
  for (int j = 1; j <= size(); ++j) r.image[j - 1] = q(image[j - 1]);
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.image.resize(size());
  for (int j = 1; j <= size(); ++j) r.image[image[j - 1] - 1] = j;
  return r;
}

int Permutation::inversions() const {
  int c = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (image[i] > image[j]) ++c;
  return c;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(size() + 1, 0);
  for (int j = 1; j <= size(); ++j) {
    if (seen[j]) continue;
    std::vector<int> cyc;
    int c = j;
    while (!seen[c]) {
      seen[c] = 1;
      cyc.push_back(c);
      c = image[c - 1];
    }
    if (cyc.size() > 1) out.push_back(std::move(cyc));
  }
  return out;
}

int Permutation::cycle_count() const {
  int fixed = 0;
  for (int j = 1; j <= size(); ++j)
    if (image[j - 1] == j) ++fixed;
  return fixed + static_cast<int>(cycles().size());
}

bool Permutation::is_n_cycle() const {
  auto cs = cycles();
  return cs.size() == 1 && static_cast<int>(cs[0].size()) == size();
}

std::string Permutation::cycle_str() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream out;
  const bool packed = size() <= 9;
  for (const auto& cyc : cs) {
    out << '(';
    for (size_t i = 0; i < cyc.size(); ++i) {
      if (i && !packed) out << ' ';
      out << cyc[i];
    }
    out << ')';
  }
  return out.str();
}

Permutation reversal_permutation(int n) {
  Permutation p;
  p.image.resize(n);
  for (int j = 1; j <= n; ++j) p.image[j - 1] = n + 1 - j;
  return p;
}

BraidWord::BraidWord(int n, std::vector<int> ls) : strands(n), letters(std::move(ls)) {
  if (n < 1) throw std::invalid_argument("strand count must be positive");
  for (int k : letters)
    if (k == 0 || std::abs(k) >= n) throw std::invalid_argument("generator index out of range");
}

bool BraidWord::positive() const {
  return std::all_of(letters.begin(), letters.end(), [](int k) { return k > 0; });
}

BraidWord BraidWord::inverse() const {
  BraidWord r;
  r.strands = strands;
  r.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) r.letters.push_back(-*it);
  return r;
}

BraidWord BraidWord::operator*(const BraidWord& o) const {
  if (strands != o.strands) throw std::invalid_argument("strand count mismatch");
  BraidWord r = *this;
  r.letters.insert(r.letters.end(), o.letters.begin(), o.letters.end());
  return r;
}

Permutation word_to_permutation(const BraidWord& w) {
  // who[p] = string currently at position p+1
  std::vector<int> who(w.strands);
  std::iota(who.begin(), who.end(), 1);
  for (int letter : w.letters) {
    const int k = std::abs(letter);
    std::swap(who[k - 1], who[k]);
  }
  Permutation p;
  p.image.resize(w.strands);
  for (int pos = 0; pos < w.strands; ++pos) p.image[who[pos] - 1] = pos + 1;
  return p;
}

BraidWord permutation_to_braid(const Permutation& p) {
  std::vector<int> img = p.image;
  const int n = static_cast<int>(img.size());
  std::vector<int> letters;
  for (;;) {
    int i = 0;
    while (i + 1 < n && img[i] < img[i + 1]) ++i;
    if (i + 1 >= n) break;
    letters.push_back(i + 1);
    std::swap(img[i], img[i + 1]);
  }
  return BraidWord(n, std::move(letters));
}

bool is_permutation_braid(const BraidWord& w) {
  return w.positive() && w.length() == word_to_permutation(w).inversions();
}

int writhe(const BraidWord& w) {
  int s = 0;
  for (int k : w.letters) s += (k > 0) ? 1 : -1;
  return s;
}

int closure_component_count(const BraidWord& w) {
  return word_to_permutation(w).cycle_count();
}

BraidWord braid_power(const BraidWord& w, int m) {
  BraidWord base = (m < 0) ? w.inverse() : w;
  BraidWord r(w.strands, {});
  for (int i = 0; i < std::abs(m); ++i) r = r * base;
  return r;
}

BraidWord conjugated(const BraidWord& w, const BraidWord& u) {
  return u.inverse() * w * u;
}

BraidWord delete_strands(const BraidWord& w, const std::set<int>& keep) {
  if (keep.empty()) throw std::invalid_argument("keep set is empty");
  for (int s : keep)
    if (s < 1 || s > w.strands) throw std::invalid_argument("keep set out of range");
  std::vector<int> who(w.strands);
  std::iota(who.begin(), who.end(), 1);
  std::vector<int> out;
  for (int letter : w.letters) {
    const int k = std::abs(letter);
    const bool ka = keep.count(who[k - 1]) > 0, kb = keep.count(who[k]) > 0;
    if (ka && kb) {
      int r = 1;
      for (int p = 0; p < k - 1; ++p)
        if (keep.count(who[p])) ++r;
      out.push_back(letter > 0 ? r : -r);
    }
    std::swap(who[k - 1], who[k]);
  }
  return BraidWord(static_cast<int>(keep.size()), std::move(out));
}

std::vector<EnumeratedBraid> enumerate_ncycle_braids(int n, int max_n) {
  if (n < 2 || n > max_n) throw std::out_of_range("strand count out of range");
  std::vector<int> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 2);
  std::vector<EnumeratedBraid> out;
  do {
    std::vector<int> img(n);
    int prev = 1;
    for (int v : rest) {
      img[prev - 1] = v;
      prev = v;
    }
    img[prev - 1] = 1;
    Permutation p(std::move(img));
    BraidWord w = permutation_to_braid(p);
    out.push_back({std::move(p), std::move(w), 0});
    out.back().crossings = out.back().word.length();
  } while (std::next_permutation(rest.begin(), rest.end()));
  std::sort(out.begin(), out.end(), [](const EnumeratedBraid& a, const EnumeratedBraid& b) {
    if (a.crossings != b.crossings) return a.crossings < b.crossings;
    return a.perm.image < b.perm.image;
  });
  return out;
}

namespace {

struct Token {
  std::string text;
  size_t pos;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    out.push_back({std::string(text.substr(i, j - i)), i});
    i = j;
  }
  return out;
}

int parse_int(const std::string& s, size_t pos, const char* what) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw ParseError(std::string("expected ") + what + ", got '" + s + "'", pos);
  return v;
}

}  // namespace

BraidWord parse_braid_word(std::string_view text, std::optional<int> strands) {
  auto tokens = tokenize(text);
  std::optional<int> header;
  size_t start = 0;
  if (!tokens.empty() && tokens[0].text.starts_with("n=")) {
    header = parse_int(tokens[0].text.substr(2), tokens[0].pos + 2, "strand count");
    if (*header < 1) throw ParseError("strand count must be positive", tokens[0].pos);
    start = 1;
  }
  std::vector<int> letters;
  int max_abs = 0;
  for (size_t i = start; i < tokens.size(); ++i) {
    int k = parse_int(tokens[i].text, tokens[i].pos, "generator index");
    if (k == 0) throw ParseError("generator index must be nonzero", tokens[i].pos);
    max_abs = std::max(max_abs, std::abs(k));
    letters.push_back(k);
  }
  if (header && strands && *header != *strands)
    throw ParseError("strand count disagrees with n= header", tokens[0].pos);
  int n;
  if (header)
    n = *header;
  else if (strands)
    n = *strands;
  else if (max_abs > 0)
    n = max_abs + 1;
  else
    throw ParseError("cannot infer strand count of an empty word", 0);
  for (size_t i = start; i < tokens.size(); ++i)
    if (std::abs(letters[i - start]) >= n)
      throw ParseError("generator index out of range for " + std::to_string(n) + " strings",
                       tokens[i].pos);
  return BraidWord(n, std::move(letters));
}

std::string word_to_string(const BraidWord& w, bool with_header) {
  std::ostringstream out;
  if (with_header) out << "n=" << w.strands;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (with_header || i) out << ' ';
    out << w.letters[i];
  }
  return out.str();
}

namespace {

Permutation perm_from_cycles(std::string_view text, std::optional<int> n) {
  std::vector<std::vector<int>> groups;
  int max_seen = 0;
  size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') throw ParseError("expected '('", i);
    size_t close = text.find(')', i);
    if (close == std::string_view::npos) throw ParseError("unterminated cycle", i);
    std::string inner(text.substr(i + 1, close - i - 1));
    std::vector<int> cyc;
    const bool separated =
        inner.find_first_of(" ,\t") != std::string::npos;
    if (separated) {
      for (auto& ch : inner)
        if (ch == ',') ch = ' ';
      for (const auto& tok : tokenize(inner)) {
        int v = parse_int(tok.text, i + 1 + tok.pos, "cycle entry");
        if (v < 1) throw ParseError("cycle entries must be positive", i + 1 + tok.pos);
        cyc.push_back(v);
      }
    } else {
      for (size_t k = 0; k < inner.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(inner[k])) || inner[k] == '0')
          throw ParseError("expected digit 1-9 in packed cycle", i + 1 + k);
        cyc.push_back(inner[k] - '0');
      }
    }
    for (int v : cyc) max_seen = std::max(max_seen, v);
    if (!cyc.empty()) groups.push_back(std::move(cyc));
    i = close + 1;
  }
  if (!n && max_seen == 0) throw ParseError("cannot infer permutation size", 0);
  const int size = n ? *n : max_seen;
  if (max_seen > size) throw ParseError("cycle entry exceeds permutation size", 0);
  std::vector<int> img(size);
  std::iota(img.begin(), img.end(), 1);
  std::vector<char> used(size + 1, 0);
  for (const auto& cyc : groups) {
    for (int v : cyc) {
      if (used[v]) throw ParseError("repeated entry in cycle notation", 0);
      used[v] = 1;
    }
    for (size_t k = 0; k < cyc.size(); ++k) img[cyc[k] - 1] = cyc[(k + 1) % cyc.size()];
  }
  return Permutation(std::move(img));
}

}  // namespace

Permutation parse_permutation(std::string_view text, std::optional<int> n) {
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError("empty permutation", 0);
  if (text[first] == '(') return perm_from_cycles(text, n);
  std::vector<int> img;
  for (const auto& tok : tokenize(text)) img.push_back(parse_int(tok.text, tok.pos, "image entry"));
  if (n && static_cast<int>(img.size()) != *n)
    throw ParseError("image length disagrees with n", 0);
  try {
    return Permutation(std::move(img));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

nlohmann::json word_to_json(const BraidWord& w) { return word_to_string(w); }

BraidWord word_from_json(const nlohmann::json& j) {
  return parse_braid_word(j.get<std::string>());
}

}  // namespace braidtk
