#include "grp/presentation.hpp"

#include <cctype>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

#include "grp/errors.hpp"
#include "grp/intmatrix.hpp"

namespace grp {

Presentation::Presentation(std::vector<std::string> gens, std::vector<Word> rels)
    : generators(std::move(gens)), relators(std::move(rels)) {
  if (generators.empty()) throw Error("presentation needs at least one generator");
  std::set<std::string> seen;
  for (const auto& g : generators) {
    if (g.empty()) throw Error("empty generator name");
    if (!seen.insert(g).second) throw Error("duplicate generator name: " + g);
  }
  for (auto& r : relators) {
    if (!is_reduced(r)) throw Error("relator is not freely reduced");
    if (r.max_generator() >= static_cast<int>(generators.size()))
      throw Error("relator references unknown generator index");
  }
}

namespace {

enum class Tok { Ident, Int, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  long value = 0;
  std::size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }

  const Token& peek() const { return cur_; }

  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    cur_.pos = i_;
    if (i_ >= s_.size()) {
      cur_ = {Tok::End, "", 0, i_};
      return;
    }
    char c = s_[i_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
        ++j;
      cur_ = {Tok::Ident, s_.substr(i_, j - i_), 0, i_};
      i_ = j;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      std::string digits = s_.substr(i_, j - i_);
      errno = 0;
      long v = std::strtol(digits.c_str(), nullptr, 10);
      if (errno != 0) throw ParseError("integer out of range", i_);
      cur_ = {Tok::Int, digits, v, i_};
      i_ = j;
      return;
    }
    static const std::string punct = "<>|,^()*=-";
    if (punct.find(c) != std::string::npos) {
      cur_ = {Tok::Punct, std::string(1, c), 0, i_};
      ++i_;
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", i_);
  }

  const std::string& s_;
  Token cur_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  Parser(const std::string& text, std::vector<std::string> gens)
      : lex_(text), generators_(std::move(gens)) {
    for (std::size_t i = 0; i < generators_.size(); ++i)
      index_[generators_[i]] = static_cast<int>(i);
  }

  explicit Parser(const std::string& text) : lex_(text) {}

  Presentation presentation() {
    expect_punct("<");
    std::vector<std::string> gens;
    gens.push_back(ident());
    while (at_punct(",")) {
      lex_.take();
      gens.push_back(ident());
    }
    generators_ = gens;
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      if (index_.count(generators_[i]))
        throw ParseError("duplicate generator name: " + generators_[i],
                         lex_.peek().pos);
      index_[generators_[i]] = static_cast<int>(i);
    }
    expect_punct("|");
    std::vector<Word> rels;
    if (!at_punct(">")) {
      rels.push_back(relation());
      while (at_punct(",")) {
        lex_.take();
        rels.push_back(relation());
      }
    }
    expect_punct(">");
    end();
    return Presentation(std::move(gens), std::move(rels));
  }

  Word single_word() {
    Word w = word();
    end();
    return w;
  }

 private:
  bool at_punct(const char* p) const {
    return lex_.peek().kind == Tok::Punct && lex_.peek().text == p;
  }

  void expect_punct(const char* p) {
    if (!at_punct(p))
      throw ParseError(std::string("expected '") + p + "'", lex_.peek().pos);
    lex_.take();
  }

  std::string ident() {
    if (lex_.peek().kind != Tok::Ident)
      throw ParseError("expected generator name", lex_.peek().pos);
    return lex_.take().text;
  }

  void end() {
    if (lex_.peek().kind != Tok::End)
      throw ParseError("trailing input", lex_.peek().pos);
  }

  bool at_word_end() const {
    if (lex_.peek().kind == Tok::End) return true;
    if (lex_.peek().kind != Tok::Punct) return false;
    const std::string& t = lex_.peek().text;
    return t == "," || t == "=" || t == ">" || t == ")";
  }

  Word relation() {
    Word lhs = word();
    if (at_punct("=")) {
      lex_.take();
      Word rhs = word();
      return free_reduce(lhs * rhs.inverse());
    }
    return free_reduce(lhs);
  }

  Word word() {
    if (lex_.peek().kind == Tok::Int) {
      Token t = lex_.take();
      if (t.value != 1) throw ParseError("expected '1' or a factor", t.pos);
      if (!at_word_end()) throw ParseError("unexpected input after '1'", lex_.peek().pos);
      return Word{};
    }
    Word w = factor();
    for (;;) {
      if (at_punct("*")) {
        lex_.take();
        w = w * factor();
        continue;
      }
      if (lex_.peek().kind == Tok::Ident || at_punct("(")) {
        w = w * factor();
        continue;
      }
      break;
    }
    if (!at_word_end())
      throw ParseError("unexpected input in word", lex_.peek().pos);
    return w;
  }

  Word factor() {
    if (at_punct("(")) {
      lex_.take();
      Word inner = word();
      expect_punct(")");
      return inner.pow(maybe_exponent());
    }
    if (lex_.peek().kind != Tok::Ident)
      throw ParseError("expected generator name or '('", lex_.peek().pos);
    Token t = lex_.take();
    auto it = index_.find(t.text);
    if (it == index_.end())
      throw ParseError("unknown generator: " + t.text, t.pos);
    Word g({Letter{it->second, 1}});
    return g.pow(maybe_exponent());
  }

  int maybe_exponent() {
    if (!at_punct("^")) return 1;
    lex_.take();
    int sign = 1;
    if (at_punct("-")) {
      lex_.take();
      sign = -1;
    }
    if (lex_.peek().kind != Tok::Int)
      throw ParseError("expected integer exponent", lex_.peek().pos);
    Token t = lex_.take();
    return sign * static_cast<int>(t.value);
  }

  Lexer lex_;
  std::vector<std::string> generators_;
  std::map<std::string, int> index_;
};

}  // namespace

Presentation parse_presentation(const std::string& text) {
  Parser p(text);
  return p.presentation();
}

Word parse_word(const std::vector<std::string>& generators,
                const std::string& text) {
  Parser p(text, generators);
  return p.single_word();
}

std::string word_to_text(const std::vector<std::string>& generators,
                         const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    long run = static_cast<long>(j - i);
    const Letter& l = w[i];
    if (l.gen < 0 || l.gen >= static_cast<int>(generators.size()))
      throw Error("word references unknown generator index");
    if (!first) os << ' ';
    first = false;
    os << generators[l.gen];
    long e = l.sign * run;
    if (e != 1) os << '^' << e;
    i = j;
  }
  return os.str();
}

std::string to_text(const Presentation& p) {
  std::ostringstream os;
  os << "< ";
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (i) os << ", ";
    os << p.generators[i];
  }
  os << " |";
  for (std::size_t k = 0; k < p.relators.size(); ++k) {
    os << (k ? ", " : " ") << word_to_text(p.generators, p.relators[k]);
  }
  os << " >";
  return os.str();
}

int deficiency(const Presentation& p) {
  return static_cast<int>(p.generators.size()) -
         static_cast<int>(p.relators.size());
}

namespace {

// Does r (assumed cyclically reduced) literally read x_i^{-1} w x_j w^{-1}?
bool wirtinger_shape(const Word& r) {
  const std::size_t m = r.size();
  if (m == 0) return true;
  if (m % 2 != 0) return false;
  const std::size_t half = m / 2 - 1;  // |w|
  if (r[0].sign != -1) return false;
  if (r[half + 1].sign != 1) return false;
  for (std::size_t t = 0; t < half; ++t) {
    if (!(r[half + 2 + t] == inverse(r[half - t]))) return false;
  }
  return true;
}

Word rotate(const Word& r, std::size_t k) {
  std::vector<Letter> out;
  out.reserve(r.size());
  for (std::size_t t = 0; t < r.size(); ++t)
    out.push_back(r[(t + k) % r.size()]);
  return Word(std::move(out));
}

}  // namespace

bool is_wirtinger(const Presentation& p) {
  for (const Word& rel : p.relators) {
    Word core = cyclic_reduce(rel).core;
    if (core.empty()) continue;
    bool ok = false;
    for (int orient = 0; orient < 2 && !ok; ++orient) {
      Word base = orient ? core.inverse() : core;
      for (std::size_t k = 0; k < base.size(); ++k) {
        if (wirtinger_shape(rotate(base, k))) {
          ok = true;
          break;
        }
      }
    }
    if (!ok) return false;
  }
  return true;
}

IntMatrix exponent_matrix(const Presentation& p) {
  IntMatrix m(p.relators.size(), p.generators.size());
  for (std::size_t k = 0; k < p.relators.size(); ++k)
    for (std::size_t i = 0; i < p.generators.size(); ++i)
      m.at(k, i) = exponent_sum(p.relators[k], static_cast<int>(i));
  return m;
}

Presentation add_relators(const Presentation& p, const std::vector<Word>& extra) {
  std::vector<Word> rels = p.relators;
  for (const Word& w : extra) {
    Word r = free_reduce(w);
    if (r.max_generator() >= static_cast<int>(p.generators.size()))
      throw Error("relator references unknown generator index");
    rels.push_back(std::move(r));
  }
  return Presentation(p.generators, std::move(rels));
}

}  // namespace grp
