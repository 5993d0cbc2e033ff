#include "xdeg/presentation.hpp"

#include <cctype>
#include <sstream>

#include "xdeg/error.hpp"

namespace xdeg {

Word word_inverse(const Word& w) {
  Word r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(-*it);
  return r;
}

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (int letter : w) {
    if (letter == 0) fail(errc::bad_input, "zero letter in word");
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

Word cyclic_reduce(Word w) {
  w = free_reduce(std::move(w));
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(w.begin() + lo, w.begin() + hi);
}

std::string Presentation::gen_name(int i) const {
  if (i >= 0 && i < (int)names.size() && !names[i].empty()) return names[i];
  return "g" + std::to_string(i + 1);
}

void Presentation::check() const {
  if (ngens < 0) fail(errc::bad_input, "negative generator count");
  for (const Word& r : relators)
    for (int letter : r) {
      int idx = letter > 0 ? letter : -letter;
      if (idx < 1 || idx > ngens)
        fail(errc::bad_input, "relator letter out of range: " + std::to_string(letter));
    }
}

std::string word_text(const Word& w, const Presentation& p) {
  if (w.empty()) return "1";
  std::ostringstream os;
  // Run-length collapse of repeated letters keeps the text compact.
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    long long count = (long long)(j - i);
    int letter = w[i];
    if (!first) os << "*";
    first = false;
    os << p.gen_name((letter > 0 ? letter : -letter) - 1);
    long long e = letter > 0 ? count : -count;
    if (e != 1) os << "^" << e;
    i = j;
  }
  return os.str();
}

namespace {

struct Lexer {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
};

bool is_name_char(char c) { return std::isalnum((unsigned char)c) || c == '_' || c == '.'; }

struct RelatorParser {
  Lexer lx;
  std::vector<std::string>& names;
  bool allow_new_names;

  int gen_index(const std::string& name) {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return (int)i;
    if (!allow_new_names) fail(errc::bad_input, "unknown generator: " + name);
    names.push_back(name);
    return (int)names.size() - 1;
  }

  long long parse_int() {
    lx.skip_ws();
    std::size_t start = lx.pos;
    if (lx.pos < lx.s.size() && (lx.s[lx.pos] == '-' || lx.s[lx.pos] == '+')) ++lx.pos;
    std::size_t digits = lx.pos;
    while (lx.pos < lx.s.size() && std::isdigit((unsigned char)lx.s[lx.pos])) ++lx.pos;
    if (lx.pos == digits) fail(errc::bad_input, "expected integer exponent");
    return std::stoll(lx.s.substr(start, lx.pos - start));
  }

  Word parse_atom() {
    char c = lx.peek();
    if (c == '(') {
      ++lx.pos;
      Word w = parse_word();
      if (lx.peek() != ')') fail(errc::bad_input, "missing ')'");
      ++lx.pos;
      return w;
    }
    if (!std::isalpha((unsigned char)c) && c != '_')
      fail(errc::bad_input, "expected generator name in word");
    std::size_t start = lx.pos;
    while (lx.pos < lx.s.size() && is_name_char(lx.s[lx.pos])) ++lx.pos;
    std::string name = lx.s.substr(start, lx.pos - start);
    return Word{gen_index(name) + 1};
  }

  Word parse_factor() {
    Word base = parse_atom();
    if (lx.peek() == '^') {
      ++lx.pos;
      long long e = parse_int();
      Word out;
      Word unit = e >= 0 ? base : word_inverse(base);
      long long reps = e >= 0 ? e : -e;
      for (long long k = 0; k < reps; ++k) out.insert(out.end(), unit.begin(), unit.end());
      return out;
    }
    return base;
  }

  Word parse_word() {
    if (lx.peek() == '1') {
      // Bare 1 denotes the empty word; it must stand alone in its factor.
      std::size_t save = lx.pos;
      ++lx.pos;
      if (lx.done() || lx.peek() == ')' || lx.peek() == '*') {
        Word w;
        if (lx.peek() == '*') {
          ++lx.pos;
          w = parse_word();
        }
        return w;
      }
      lx.pos = save;
    }
    Word w = parse_factor();
    while (lx.peek() == '*') {
      ++lx.pos;
      Word next = parse_factor();
      w.insert(w.end(), next.begin(), next.end());
    }
    return w;
  }
};

}  // namespace

Presentation presentation_from_text(const std::string& text) {
  Presentation p;
  bool saw_header = false;
  std::vector<std::string> lines;
  {
    std::string cur;
    for (char c : text) {
      if (c == '\n' || c == ';') {
        lines.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    lines.push_back(cur);
  }
  std::vector<std::string> body;
  for (std::string& line : lines) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    std::size_t b = line.find_last_not_of(" \t\r");
    body.push_back(line.substr(a, b - a + 1));
  }
  std::size_t start = 0;
  if (!body.empty() && body[0].rfind("gens:", 0) == 0) {
    saw_header = true;
    std::istringstream is(body[0].substr(5));
    std::string name;
    while (is >> name) {
      for (char c : name)
        if (!is_name_char(c)) fail(errc::bad_input, "bad generator name: " + name);
      p.names.push_back(name);
    }
    if (p.names.empty()) fail(errc::bad_input, "empty generator header");
    start = 1;
  }
  for (std::size_t i = start; i < body.size(); ++i) {
    RelatorParser rp{Lexer{body[i]}, p.names, !saw_header};
    Word w = rp.parse_word();
    if (!rp.lx.done()) fail(errc::bad_input, "trailing text in relator: " + body[i]);
    p.relators.push_back(free_reduce(std::move(w)));
  }
  p.ngens = (int)p.names.size();
  if (p.ngens == 0) fail(errc::bad_input, "presentation has no generators");
  p.check();
  return p;
}

std::string presentation_text(const Presentation& p) {
  std::ostringstream os;
  os << "gens:";
  for (int i = 0; i < p.ngens; ++i) os << " " << p.gen_name(i);
  os << "\n";
  for (const Word& r : p.relators) os << word_text(r, p) << "\n";
  return os.str();
}

}  // namespace xdeg
