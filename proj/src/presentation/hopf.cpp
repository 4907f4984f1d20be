#include "fiberlab/presentation/hopf.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include "fiberlab/error.hpp"

namespace fiberlab {

int HopfPresentation::generator_index(const std::string& name) const {
  for (size_t i = 0; i < generators.size(); ++i)
    if (generators[i] == name) return static_cast<int>(i);
  return -1;
}

int HopfPresentation::basis_index(const Word& w) const {
  for (size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == w) return static_cast<int>(i);
  return -1;
}

TensorPoly HopfPresentation::tensor_normal_form(const TensorPoly& t) const {
  TensorPoly out;
  for (const auto& [wp, c] : t.terms()) {
    const NCPoly left = normal_form(wp.first);
    const NCPoly right = normal_form(wp.second);
    for (const auto& [l, cl] : left.terms()) {
      const CPoly cl2 = cl.embed(tensor_shape, 0);
      for (const auto& [r, cr] : right.terms()) {
        out.add({l, r}, c * cl2 * cr.embed(tensor_shape, central->size()));
      }
    }
  }
  return out;
}

CPoly HopfPresentation::central_coproduct(const CPoly& c) const {
  const size_t n = central->size();
  std::vector<CPoly> images;
  for (size_t i = 0; i < n; ++i) {
    const auto& s = central->symbols[i];
    const CPoly left = CPoly::symbol(tensor_shape, static_cast<int>(i));
    const CPoly right = CPoly::symbol(tensor_shape, static_cast<int>(n + i));
    switch (s.kind) {
      case CentralKind::GroupLikeTorsion:
      case CentralKind::GroupLikeFree: images.push_back(left * right); break;
      case CentralKind::PrimitiveFree: images.push_back(left + right); break;
      case CentralKind::Generic:
        throw Error(ErrorKind::MissingCoalgebraData, "symbol " + s.name + " has no coproduct");
    }
  }
  return c.substitute(tensor_shape, images);
}

CPoly HopfPresentation::central_antipode(const CPoly& c) const {
  std::vector<CPoly> images;
  for (size_t i = 0; i < central->size(); ++i) {
    const auto& s = central->symbols[i];
    switch (s.kind) {
      case CentralKind::GroupLikeTorsion:
      case CentralKind::GroupLikeFree: images.push_back(CPoly::symbol(central, int(i), -1)); break;
      case CentralKind::PrimitiveFree: images.push_back(-CPoly::symbol(central, int(i))); break;
      case CentralKind::Generic:
        throw Error(ErrorKind::MissingCoalgebraData, "symbol " + s.name + " has no antipode");
    }
  }
  return c.substitute(central, images);
}

Scalar HopfPresentation::central_counit(const CPoly& c) const {
  std::vector<Scalar> values;
  for (const auto& s : central->symbols) {
    if (s.kind == CentralKind::Generic)
      throw Error(ErrorKind::MissingCoalgebraData, "symbol " + s.name + " has no counit");
    values.push_back(s.kind == CentralKind::PrimitiveFree ? Scalar(0) : Scalar(1));
  }
  return c.evaluate(values);
}

TensorPoly HopfPresentation::coproduct_of(const NCPoly& p) const {
  TensorPoly total;
  for (const auto& [w, c] : p.terms()) {
    TensorPoly acc({Word{}, Word{}}, CPoly(tensor_shape, Scalar(1)));
    for (int g : w) acc = tensor_normal_form(acc * coproduct.at(g));
    total += acc.scaled(central_coproduct(c));
  }
  return total;
}

NCPoly HopfPresentation::antipode_of(const NCPoly& p) const {
  NCPoly total;
  for (const auto& [w, c] : p.terms()) {
    NCPoly acc = word_poly({});
    for (auto it = w.rbegin(); it != w.rend(); ++it) acc = normal_form(acc * antipode.at(*it));
    total += acc.scaled(central_antipode(c));
  }
  return normal_form(total);
}

Scalar HopfPresentation::counit_of(const NCPoly& p) const {
  Scalar total;
  for (const auto& [w, c] : p.terms()) {
    Scalar t = central_counit(c);
    for (int g : w) t *= counit.at(g);
    total += t;
  }
  return total;
}

std::vector<CPoly> HopfPresentation::coordinates(const NCPoly& normalized) const {
  std::vector<CPoly> v(basis.size(), CPoly(central, Scalar()));
  for (const auto& [w, c] : normalized.terms()) {
    const int idx = basis_index(w);
    if (idx < 0) {
      throw ParseError(ErrorKind::BasisNotClosed, basis_pos.line, basis_pos.column,
                       "normal form word " + format(w) + " is not a basis word");
    }
    v[idx] += c;
  }
  return v;
}

namespace {

// ---------------------------------------------------------------- lexing

enum class Tk { Ident, Int, Slash, Star, Plus, Minus, LParen, RParen, Comma, Caret, Arrow, Tensor, Equals, End };

struct Token {
  Tk kind = Tk::End;
  std::string text;
  int line = 0;
  int col = 0;
};

struct Chunk {
  std::string text;
  int line = 0;
  int col = 1;  // column of text[0]
};

std::vector<Token> lex(const Chunk& chunk, bool tensor_mode, bool dash_idents) {
  std::vector<Token> out;
  const std::string& s = chunk.text;
  size_t i = 0;
  auto col = [&](size_t pos) { return chunk.col + static_cast<int>(pos); };
  while (i < s.size()) {
    const char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    Token t;
    t.line = chunk.line;
    t.col = col(i);
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' ||
                              (dash_idents && s[j] == '-' && j + 1 < s.size() &&
                               std::isalpha(static_cast<unsigned char>(s[j + 1])))))
        ++j;
      t.kind = Tk::Ident;
      t.text = s.substr(i, j - i);
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      t.kind = Tk::Int;
      t.text = s.substr(i, j - i);
      i = j;
    } else if (ch == '-' && i + 1 < s.size() && s[i + 1] == '>') {
      t.kind = Tk::Arrow;
      t.text = "->";
      i += 2;
    } else if (tensor_mode && s.compare(i, 3, "(x)") == 0) {
      t.kind = Tk::Tensor;
      t.text = "(x)";
      i += 3;
    } else {
      static const std::string singles = "/*+-(),^=";
      static const Tk kinds[] = {Tk::Slash, Tk::Star, Tk::Plus, Tk::Minus, Tk::LParen,
                                 Tk::RParen, Tk::Comma, Tk::Caret, Tk::Equals};
      const auto pos = singles.find(ch);
      if (pos == std::string::npos) {
        throw ParseError(ErrorKind::SyntaxError, t.line, t.col, std::string("unexpected character '") + ch + "'");
      }
      t.kind = kinds[pos];
      t.text = std::string(1, ch);
      ++i;
    }
    out.push_back(t);
  }
  Token end;
  end.kind = Tk::End;
  end.line = chunk.line;
  end.col = col(s.size());
  out.push_back(end);
  return out;
}

// --------------------------------------------------------------- parsing

class ExprParser {
 public:
  ExprParser(std::vector<Token> toks, const HopfPresentation& ctx) : toks_(std::move(toks)), ctx_(ctx) {}

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool accept(Tk k) {
    if (peek().kind == k) {
      ++pos_;
      return true;
    }
    return false;
  }
  const Token& expect(Tk k, const std::string& what) {
    if (peek().kind != k) fail(peek(), "expected " + what);
    return next();
  }
  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw ParseError(ErrorKind::SyntaxError, t.line, t.col,
                     msg + (t.kind == Tk::End ? " at end of entry" : " near '" + t.text + "'"));
  }
  bool at_end() const { return peek().kind == Tk::End; }
  void expect_end() {
    if (!at_end()) fail(peek(), "unexpected trailing input");
  }

  NCPoly expr() {
    NCPoly total;
    bool negative = false;
    if (accept(Tk::Minus)) negative = true;
    else accept(Tk::Plus);
    while (true) {
      NCPoly t = term();
      total += negative ? t.scaled(CPoly(-1)) : t;
      if (accept(Tk::Plus)) negative = false;
      else if (accept(Tk::Minus)) negative = true;
      else break;
    }
    return total;
  }

  TensorPoly tensor_expr() {
    TensorPoly total;
    bool negative = false;
    if (accept(Tk::Minus)) negative = true;
    else accept(Tk::Plus);
    while (true) {
      const NCPoly left = term();
      expect(Tk::Tensor, "'(x)'");
      const NCPoly right = term();
      for (const auto& [l, cl] : left.terms()) {
        for (const auto& [r, cr] : right.terms()) {
          CPoly c = cl.embed(ctx_.tensor_shape, 0) * cr.embed(ctx_.tensor_shape, ctx_.central->size());
          total.add({l, r}, negative ? -c : c);
        }
      }
      if (accept(Tk::Plus)) negative = false;
      else if (accept(Tk::Minus)) negative = true;
      else break;
    }
    return total;
  }

  NCPoly term() {
    NCPoly acc = unit();
    bool any = false;
    while (true) {
      const Tk k = peek().kind;
      if (k == Tk::Star) {
        next();
        acc = acc * factor();
        any = true;
      } else if (k == Tk::Ident || k == Tk::Int || k == Tk::LParen) {
        acc = acc * factor();
        any = true;
      } else {
        break;
      }
    }
    if (!any) fail(peek(), "expected a term");
    return acc;
  }

  Scalar scalar_literal() {
    const Token& t = peek();
    if (t.kind == Tk::Int) {
      next();
      Rational q(t.text);
      if (accept(Tk::Slash)) {
        const Token& d = expect(Tk::Int, "denominator");
        const Rational den(d.text);
        if (den == 0) throw ParseError(ErrorKind::SyntaxError, d.line, d.col, "zero denominator");
        q /= den;
      }
      q.canonicalize();
      return Scalar(q);
    }
    // zeta(N,k)
    next();
    expect(Tk::LParen, "'('");
    const Token& n = expect(Tk::Int, "root-of-unity order");
    expect(Tk::Comma, "','");
    bool neg = accept(Tk::Minus);
    const Token& k = expect(Tk::Int, "exponent");
    expect(Tk::RParen, "')'");
    const int order = std::stoi(n.text);
    if (order < 1) throw ParseError(ErrorKind::SyntaxError, n.line, n.col, "root-of-unity order must be positive");
    const long e = std::stol(k.text);
    return Scalar::root_of_unity(order, neg ? -e : e);
  }

  int exponent() {
    const bool neg = accept(Tk::Minus);
    const Token& t = expect(Tk::Int, "exponent");
    const int e = std::stoi(t.text);
    return neg ? -e : e;
  }

  NCPoly factor() {
    const Token t = peek();
    NCPoly base;
    bool is_word = false;
    int gen = -1;
    int csym = -1;
    if (t.kind == Tk::Int || (t.kind == Tk::Ident && t.text == "zeta")) {
      base = NCPoly(Word{}, CPoly(scalar_literal()));
    } else if (t.kind == Tk::LParen) {
      next();
      base = expr();
      expect(Tk::RParen, "')'");
    } else if (t.kind == Tk::Ident) {
      next();
      gen = ctx_.generator_index(t.text);
      csym = ctx_.central ? ctx_.central->index_of(t.text) : -1;
      if (gen >= 0) {
        base = word_poly({gen});
        is_word = true;
      } else if (csym >= 0) {
        base = NCPoly(Word{}, CPoly::symbol(ctx_.central, csym));
      } else {
        throw ParseError(ErrorKind::UnknownSymbol, t.line, t.col, "unknown symbol '" + t.text + "'");
      }
    } else {
      fail(t, "expected a factor");
    }
    if (!accept(Tk::Caret)) return base;
    const Token& et = peek();
    const int e = exponent();
    if (csym >= 0) return NCPoly(Word{}, CPoly::symbol(ctx_.central, csym, e));
    if (e < 0) throw ParseError(ErrorKind::SyntaxError, et.line, et.col, "negative power of a non-central factor");
    if (is_word) return word_poly(Word(static_cast<size_t>(e), gen));
    NCPoly r = unit();
    for (int i = 0; i < e; ++i) r = r * base;
    return r;
  }

  static NCPoly unit() { return word_poly({}); }

 private:
  std::vector<Token> toks_;
  size_t pos_ = 0;
  const HopfPresentation& ctx_;
};

// ---------------------------------------------------------- file layout

struct Section {
  std::string name;
  SourcePos pos;
  std::vector<Chunk> chunks;
};

std::map<std::string, Section> split_sections(const std::string& text) {
  static const std::vector<std::string> known = {"generators", "rules", "central", "coproduct",
                                                 "counit",     "antipode", "basis"};
  std::map<std::string, Section> sections;
  Section* current = nullptr;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    if (line[start] == '[') {
      const size_t close = line.find(']', start);
      if (close == std::string::npos)
        throw ParseError(ErrorKind::SyntaxError, lineno, int(start) + 1, "unterminated section header");
      const std::string name = line.substr(start + 1, close - start - 1);
      if (std::find(known.begin(), known.end(), name) == known.end())
        throw ParseError(ErrorKind::SyntaxError, lineno, int(start) + 1, "unknown section [" + name + "]");
      if (sections.count(name))
        throw ParseError(ErrorKind::SyntaxError, lineno, int(start) + 1, "duplicate section [" + name + "]");
      current = &sections[name];
      current->name = name;
      current->pos = {lineno, int(start) + 1};
      const std::string rest = line.substr(close + 1);
      if (rest.find_first_not_of(" \t") != std::string::npos) current->chunks.push_back({rest, lineno, int(close) + 2});
      continue;
    }
    if (!current) throw ParseError(ErrorKind::SyntaxError, lineno, int(start) + 1, "content before any section");
    current->chunks.push_back({line, lineno, 1});
  }
  return sections;
}

// Splits chunks at any of the separator characters, dropping blank pieces.
std::vector<Chunk> entries(const Section& s, const std::string& separators) {
  std::vector<Chunk> out;
  for (const auto& c : s.chunks) {
    size_t begin = 0;
    for (size_t i = 0; i <= c.text.size(); ++i) {
      if (i == c.text.size() || separators.find(c.text[i]) != std::string::npos) {
        const std::string piece = c.text.substr(begin, i - begin);
        if (piece.find_first_not_of(" \t") != std::string::npos)
          out.push_back({piece, c.line, c.col + static_cast<int>(begin)});
        begin = i + 1;
      }
    }
  }
  return out;
}

const Section& require(const std::map<std::string, Section>& secs, const std::string& name, ErrorKind kind) {
  auto it = secs.find(name);
  if (it == secs.end()) throw ParseError(kind, 1, 1, "missing [" + name + "] section");
  return it->second;
}

Word as_word(const NCPoly& p, const Token& where, const std::string& what) {
  if (p.size() != 1 || p.terms().begin()->second != CPoly(1)) {
    throw ParseError(ErrorKind::SyntaxError, where.line, where.col, what + " must be a single word");
  }
  return p.terms().begin()->first;
}

bool contains_subword(const Word& hay, const Word& needle) {
  if (needle.size() > hay.size()) return false;
  return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) != hay.end();
}

[[noreturn]] void inconsistent(const SourcePos& p, const std::string& msg) {
  throw ParseError(ErrorKind::HopfMapInconsistent, p.line, p.column, msg);
}

void validate(HopfPresentation& pres, const std::vector<SourcePos>& gen_pos_antipode, const std::vector<SourcePos>& gen_pos_counit,
              const SourcePos& central_pos) {
  const auto& names = pres.generators;
  // Central symbols: defining word reduces to the symbol, is central, and
  // carries the Hopf data implied by its kind.
  for (size_t i = 0; i < pres.central->size(); ++i) {
    const auto& sym = pres.central->symbols[i];
    const NCPoly w = word_poly(sym.defining_word);
    const NCPoly expected(Word{}, CPoly::symbol(pres.central, int(i)));
    if (pres.normal_form(w) != expected)
      inconsistent(central_pos, "defining word " + pres.format(sym.defining_word) + " of " + sym.name +
                                    " reduces to " + pres.format(pres.normal_form(w)));
    for (size_t g = 0; g < names.size(); ++g) {
      const NCPoly gw = word_poly({int(g)});
      if (pres.normal_form(w * gw) != pres.normal_form(gw * w))
        inconsistent(central_pos, sym.name + " does not commute with " + names[g]);
    }
    if (sym.kind == CentralKind::GroupLikeTorsion) {
      NCPoly p = word_poly({});
      for (int k = 0; k < sym.order; ++k) p = pres.normal_form(p * w);
      if (p != word_poly({})) inconsistent(central_pos, sym.name + "^" + std::to_string(sym.order) + " is not 1");
    }
    const TensorPoly dw = pres.coproduct_of(w);
    const TensorPoly dz(WordPair{}, pres.central_coproduct(expected.terms().begin()->second));
    if (dw != dz)
      inconsistent(central_pos, "coproduct of " + sym.name + " is " + pres.format(dw) + ", not as declared");
    if (pres.counit_of(w) != pres.central_counit(expected.terms().begin()->second))
      inconsistent(central_pos, "counit of " + sym.name + " disagrees with its kind");
    if (pres.antipode_of(w) != NCPoly(Word{}, pres.central_antipode(expected.terms().begin()->second)))
      inconsistent(central_pos, "antipode of " + sym.name + " disagrees with its kind");
  }

  // Hopf maps respect every rule.
  const auto& rules = pres.rewriting.rules();
  for (size_t r = 0; r < rules.size(); ++r) {
    const NCPoly lhs = word_poly(rules[r].lhs);
    const NCPoly& rhs = rules[r].rhs;
    const std::string rule_text = pres.format(rules[r].lhs) + " -> " + pres.format(rhs);
    if (pres.counit_of(lhs) != pres.counit_of(rhs)) inconsistent(pres.rule_positions[r], "counit breaks rule " + rule_text);
    const TensorPoly dl = pres.coproduct_of(lhs), dr = pres.coproduct_of(rhs);
    if (dl != dr) {
      inconsistent(pres.rule_positions[r], "coproduct breaks rule " + rule_text + ": " + pres.format(dl - dr));
    }
    if (pres.antipode_of(lhs) != pres.antipode_of(rhs))
      inconsistent(pres.rule_positions[r], "antipode breaks rule " + rule_text);
  }

  // Counit and antipode axioms on generators.
  for (size_t g = 0; g < names.size(); ++g) {
    const TensorPoly d = pres.coproduct_of(word_poly({int(g)}));
    NCPoly left_id, right_id, s_left, s_right;
    for (const auto& [wp, c] : d.terms()) {
      // Split the doubled coefficient into its legs term by term.
      for (const auto& [e, s] : c.terms()) {
        const size_t n = pres.central->size();
        CPoly::Exponents el(e.begin(), e.begin() + n), er(e.begin() + n, e.end());
        const CPoly cl = CPoly::monomial(pres.central, el, Scalar(1));
        const CPoly cr = CPoly::monomial(pres.central, er, s);
        const NCPoly a = NCPoly(wp.first, cl), b = NCPoly(wp.second, cr);
        left_id += b.scaled(CPoly(pres.counit_of(a)));
        right_id += a.scaled(CPoly(pres.counit_of(b)));
        s_left += pres.antipode_of(a) * b;
        s_right += a * pres.antipode_of(b);
      }
    }
    const NCPoly gen = pres.normal_form(word_poly({int(g)}));
    const NCPoly eps = NCPoly(Word{}, CPoly(pres.counit[g]));
    if (pres.normal_form(left_id) != gen || pres.normal_form(right_id) != gen)
      inconsistent(gen_pos_counit[g], "counit axiom fails on " + names[g]);
    if (pres.normal_form(s_left) != eps || pres.normal_form(s_right) != eps)
      inconsistent(gen_pos_antipode[g], "antipode axiom fails on " + names[g]);
  }

  // Basis closure: generators and pairwise products lie in the C-span.
  for (size_t g = 0; g < names.size(); ++g) pres.coordinates(pres.normal_form(word_poly({int(g)})));
  for (size_t i = 0; i < pres.basis.size(); ++i) {
    if (!pres.rewriting.is_normal(pres.basis[i]))
      throw ParseError(ErrorKind::BasisNotClosed, pres.basis_pos.line, pres.basis_pos.column,
                       "basis word " + pres.format(pres.basis[i]) + " is not in normal form");
    for (size_t j = 0; j < pres.basis.size(); ++j) {
      const NCPoly prod = pres.normal_form(concat(pres.basis[i], pres.basis[j]));
      for (const auto& [w, c] : prod.terms()) {
        if (pres.basis_index(w) < 0) {
          throw ParseError(ErrorKind::BasisNotClosed, pres.basis_pos.line, pres.basis_pos.column,
                           "product " + pres.format(pres.basis[i]) + " * " + pres.format(pres.basis[j]) +
                               " contains non-basis word " + pres.format(w));
        }
      }
    }
  }
  if (pres.basis_index({}) < 0)
    throw ParseError(ErrorKind::BasisNotClosed, pres.basis_pos.line, pres.basis_pos.column, "basis lacks the unit word 1");
}

}  // namespace

HopfPresentation parse_presentation(const std::string& text) {
  const auto secs = split_sections(text);
  HopfPresentation pres;

  // Generators.
  const Section& gsec = require(secs, "generators", ErrorKind::SyntaxError);
  for (const auto& c : gsec.chunks) {
    for (const auto& t : lex(c, false, false)) {
      if (t.kind == Tk::End || t.kind == Tk::Comma) continue;
      if (t.kind != Tk::Ident || t.text == "zeta")
        throw ParseError(ErrorKind::SyntaxError, t.line, t.col, "expected a generator name");
      if (pres.generator_index(t.text) >= 0)
        throw ParseError(ErrorKind::SyntaxError, t.line, t.col, "duplicate generator " + t.text);
      pres.generators.push_back(t.text);
    }
  }
  if (pres.generators.empty()) throw ParseError(ErrorKind::SyntaxError, gsec.pos.line, gsec.pos.column, "no generators");

  // Central symbols; defining words are attached once rules are known.
  auto shape = std::make_shared<CentralShape>();
  struct PendingDef {
    size_t symbol;
    std::optional<Chunk> word;
    SourcePos pos;
  };
  std::vector<PendingDef> defs;
  SourcePos central_pos{1, 1};
  if (auto it = secs.find("central"); it != secs.end()) {
    central_pos = it->second.pos;
    for (const auto& e : entries(it->second, ";")) {
      const auto eq = e.text.find('=');
      Chunk head{e.text.substr(0, eq), e.line, e.col};
      auto toks = lex(head, false, true);
      if (toks.size() < 3 || toks[0].kind != Tk::Ident || toks[1].kind != Tk::Ident)
        throw ParseError(ErrorKind::SyntaxError, e.line, e.col, "expected '<symbol> <kind> [order] [= word]'");
      CentralSymbol sym;
      sym.name = toks[0].text;
      if (pres.generator_index(sym.name) >= 0 || shape->index_of(sym.name) >= 0 || sym.name == "zeta")
        throw ParseError(ErrorKind::SyntaxError, toks[0].line, toks[0].col, "central symbol name " + sym.name + " is taken");
      const std::string& kind = toks[1].text;
      size_t used = 2;
      if (kind == "primitive-free") {
        sym.kind = CentralKind::PrimitiveFree;
      } else if (kind == "group-like-free") {
        sym.kind = CentralKind::GroupLikeFree;
      } else if (kind == "group-like-torsion") {
        sym.kind = CentralKind::GroupLikeTorsion;
        if (toks[2].kind != Tk::Int)
          throw ParseError(ErrorKind::SyntaxError, toks[2].line, toks[2].col, "torsion order expected");
        sym.order = std::stoi(toks[2].text);
        if (sym.order < 1) throw ParseError(ErrorKind::SyntaxError, toks[2].line, toks[2].col, "torsion order must be positive");
        used = 3;
      } else {
        throw ParseError(ErrorKind::SyntaxError, toks[1].line, toks[1].col, "unknown central kind '" + kind + "'");
      }
      if (toks[used].kind != Tk::End)
        throw ParseError(ErrorKind::SyntaxError, toks[used].line, toks[used].col, "unexpected token in central entry");
      PendingDef d{shape->size(), std::nullopt, {e.line, e.col}};
      if (eq != std::string::npos) d.word = Chunk{e.text.substr(eq + 1), e.line, e.col + int(eq) + 1};
      defs.push_back(d);
      shape->symbols.push_back(sym);
    }
  }
  pres.central = shape;
  pres.tensor_shape = doubled_shape(shape);

  // Rules.
  const Section& rsec = require(secs, "rules", ErrorKind::SyntaxError);
  std::vector<RewriteRule> rules;
  for (const auto& e : entries(rsec, ";")) {
    ExprParser p(lex(e, false, false), pres);
    const Token first = p.peek();
    const NCPoly lhs = p.expr();
    p.expect(Tk::Arrow, "'->'");
    const NCPoly rhs = p.expr();
    p.expect_end();
    const Word l = as_word(lhs, first, "rule left-hand side");
    if (l.empty()) throw ParseError(ErrorKind::SyntaxError, first.line, first.col, "rule left-hand side is empty");
    for (const auto& [w, c] : rhs.terms())
      if (contains_subword(w, l))
        throw ParseError(ErrorKind::SyntaxError, first.line, first.col, "rule left-hand side reappears on the right");
    rules.push_back({l, rhs});
    pres.rule_positions.push_back({e.line, e.col});
  }
  pres.rewriting = RewriteSystem(rules);

  // Defining words of central symbols.
  for (auto& d : defs) {
    CentralSymbol& sym = shape->symbols[d.symbol];
    if (d.word) {
      ExprParser p(lex(*d.word, false, false), pres);
      const Token first = p.peek();
      const NCPoly w = p.expr();
      p.expect_end();
      sym.defining_word = as_word(w, first, "defining word");
    } else {
      const NCPoly target(Word{}, CPoly::symbol(shape, int(d.symbol)));
      bool found = false;
      for (const auto& r : rules) {
        if (r.rhs == target) {
          sym.defining_word = r.lhs;
          found = true;
          break;
        }
      }
      if (!found)
        throw ParseError(ErrorKind::HopfMapInconsistent, d.pos.line, d.pos.column,
                         "no rule defines " + sym.name + "; give '= word'");
    }
  }

  // Hopf maps.
  const size_t ng = pres.generators.size();
  auto parse_map_section = [&](const std::string& name, bool tensor, auto&& store) {
    const Section& sec = require(secs, name, ErrorKind::HopfMapInconsistent);
    std::vector<bool> seen(ng, false);
    std::vector<SourcePos> pos(ng, sec.pos);
    for (const auto& e : entries(sec, ";")) {
      ExprParser p(lex(e, tensor, false), pres);
      const Token& g = p.expect(Tk::Ident, "generator name");
      const int gi = pres.generator_index(g.text);
      if (gi < 0) throw ParseError(ErrorKind::UnknownSymbol, g.line, g.col, "unknown generator '" + g.text + "'");
      if (seen[gi]) throw ParseError(ErrorKind::SyntaxError, g.line, g.col, "generator " + g.text + " given twice");
      seen[gi] = true;
      pos[gi] = {e.line, e.col};
      p.expect(Tk::Arrow, "'->'");
      store(gi, p, e);
      p.expect_end();
    }
    for (size_t g = 0; g < ng; ++g)
      if (!seen[g])
        throw ParseError(ErrorKind::HopfMapInconsistent, sec.pos.line, sec.pos.column,
                         "[" + name + "] has no entry for " + pres.generators[g]);
    return pos;
  };
  pres.coproduct.resize(ng);
  pres.counit.resize(ng);
  pres.antipode.resize(ng);
  parse_map_section("coproduct", true, [&](int g, ExprParser& p, const Chunk&) {
    pres.coproduct[g] = p.tensor_expr();
  });
  const auto cou_pos = parse_map_section("counit", false, [&](int g, ExprParser& p, const Chunk& e) {
    const NCPoly v = p.expr();
    if (v.is_zero()) {
      pres.counit[g] = Scalar();
      return;
    }
    if (v.size() != 1 || !v.terms().begin()->first.empty() || !v.terms().begin()->second.is_constant())
      throw ParseError(ErrorKind::SyntaxError, e.line, e.col, "counit value must be a scalar");
    pres.counit[g] = v.terms().begin()->second.as_constant();
  });
  const auto ant_pos = parse_map_section("antipode", false, [&](int g, ExprParser& p, const Chunk&) {
    pres.antipode[g] = p.expr();
  });

  // Basis.
  const Section& bsec = require(secs, "basis", ErrorKind::SyntaxError);
  pres.basis_pos = bsec.pos;
  for (const auto& e : entries(bsec, ",;")) {
    ExprParser p(lex(e, false, false), pres);
    const Token first = p.peek();
    const NCPoly w = p.expr();
    p.expect_end();
    const Word bw = as_word(w, first, "basis entry");
    if (pres.basis_index(bw) >= 0)
      throw ParseError(ErrorKind::SyntaxError, first.line, first.col, "duplicate basis word " + pres.format(bw));
    pres.basis.push_back(bw);
  }

  validate(pres, ant_pos, cou_pos, central_pos);
  return pres;
}

HopfPresentation load_presentation(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

}  // namespace fiberlab
