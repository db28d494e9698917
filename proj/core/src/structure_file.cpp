#include "alia/structure_file.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace alia {

namespace {

struct Token {
  enum Kind { Number, Name, Symbol, End } kind;
  std::string text;
  int col;
};

std::vector<Token> lex_line(const std::string& line, int lineno) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    char ch = line[i];
    if (ch == '#') break;
    if (std::isspace(static_cast<unsigned char>(ch))) { ++i; continue; }
    int col = int(i) + 1;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      out.push_back({Token::Number, line.substr(i, j - i), col});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      size_t j = i;
      while (j < line.size() &&
             (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_'))
        ++j;
      out.push_back({Token::Name, line.substr(i, j - i), col});
      i = j;
    } else if (ch == '<' && i + 1 < line.size() && line[i + 1] == '-') {
      out.push_back({Token::Symbol, "<-", col});
      i += 2;
    } else if (std::string("*/+-(),=").find(ch) != std::string::npos) {
      out.push_back({Token::Symbol, std::string(1, ch), col});
      ++i;
    } else {
      throw ParseError(Err::Syntax, std::string("unexpected character '") + ch + "'", lineno, col);
    }
  }
  out.push_back({Token::End, "", int(line.size()) + 1});
  return out;
}

class LineParser {
public:
  LineParser(const std::vector<Token>& toks, int lineno) : toks_(toks), lineno_(lineno) {}

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool at_end() const { return peek().kind == Token::End; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(Err::Syntax, msg, lineno_, peek().col);
  }

  void expect_symbol(const std::string& s) {
    if (peek().kind != Token::Symbol || peek().text != s) fail("expected '" + s + "'");
    next();
  }

  int expect_number() {
    if (peek().kind != Token::Number) fail("expected a number");
    return std::stoi(next().text);
  }

  std::string expect_name() {
    if (peek().kind != Token::Name) fail("expected a name");
    return next().text;
  }

  int lineno() const { return lineno_; }

private:
  const std::vector<Token>& toks_;
  size_t pos_ = 0;
  int lineno_;
};

// One '*'-separated atom of an entry: a rational, a parameter name, or a
// parenthesized index group.
struct Atom {
  enum Kind { Rational, Param, Pair, MapPair, Index } kind;
  Rat value;
  std::string name;
  int i = -1, j = -1;
  int col = 0;
};

Atom parse_atom(LineParser& p, bool negate) {
  Atom a;
  a.col = p.peek().col;
  if (p.peek().kind == Token::Number) {
    long num = p.expect_number();
    if (p.peek().kind == Token::Symbol && p.peek().text == "/") {
      p.next();
      long den = p.expect_number();
      if (den == 0) p.fail("zero denominator");
      a.kind = Atom::Rational;
      a.value = Rat(negate ? -num : num, den);
    } else {
      a.kind = Atom::Index;  // may be reinterpreted as a rational coefficient
      a.i = int(num);
      a.value = Rat(negate ? -num : num);
    }
    return a;
  }
  if (p.peek().kind == Token::Name) {
    a.kind = Atom::Param;
    a.name = p.expect_name();
    if (negate) a.value = Rat(-1); else a.value = Rat(1);
    return a;
  }
  if (p.peek().kind == Token::Symbol && p.peek().text == "(") {
    p.next();
    int i = p.expect_number();
    if (p.peek().kind == Token::Symbol && p.peek().text == "<-") {
      p.next();
      int j = p.expect_number();
      p.expect_symbol(")");
      a.kind = Atom::MapPair;
      a.i = i;
      a.j = j;
    } else {
      p.expect_symbol(",");
      int j = p.expect_number();
      p.expect_symbol(")");
      a.kind = Atom::Pair;
      a.i = i;
      a.j = j;
    }
    if (negate) p.fail("a sign must precede the coefficient, not the target");
    return a;
  }
  p.fail("expected a coefficient or target");
}

enum class SectionKind { Bracket, Comul, Map, Tensor, Form };

// ENTRY := [sign] ATOM ('*' ATOM)*; the final atom is the target, everything
// before it multiplies into the coefficient.
ParsedFile::Entry parse_entry(LineParser& p, SectionKind kind, int dim,
                              const std::vector<std::string>& declared, int fixed_i, int fixed_j) {
  bool neg = false;
  if (p.peek().kind == Token::Symbol && (p.peek().text == "-" || p.peek().text == "+")) {
    neg = p.peek().text == "-";
    p.next();
  }
  std::vector<Atom> atoms;
  atoms.push_back(parse_atom(p, neg));
  while (p.peek().kind == Token::Symbol && p.peek().text == "*") {
    p.next();
    atoms.push_back(parse_atom(p, false));
  }
  if (atoms.size() < 2) p.fail("entry must be coefficient*target");

  Monomial coeff;
  coeff.constant = Rat(1);
  for (size_t t = 0; t + 1 < atoms.size(); ++t) {
    const Atom& a = atoms[t];
    switch (a.kind) {
      case Atom::Rational:
      case Atom::Index:
        coeff.constant *= a.value;
        break;
      case Atom::Param:
        if (std::find(declared.begin(), declared.end(), a.name) == declared.end())
          throw ParseError(Err::Syntax, "undeclared parameter '" + a.name + "'", p.lineno(),
                           a.col);
        coeff.params.push_back(a.name);
        if (!a.value.is_one()) coeff.constant *= a.value;  // sign carried on first factor
        break;
      default:
        throw ParseError(Err::Syntax, "coefficient factors must be rationals or parameters",
                         p.lineno(), a.col);
    }
  }

  const Atom& target = atoms.back();
  auto check_index = [&](int v, int col) {
    if (v < 1 || v > dim)
      throw ParseError(Err::IndexOutOfRange,
                       "index " + std::to_string(v) + " outside 1.." + std::to_string(dim),
                       p.lineno(), col);
    return v - 1;
  };

  ParsedFile::Entry e;
  e.coeff = std::move(coeff);
  e.idx = {-1, -1, -1};
  switch (kind) {
    case SectionKind::Bracket:
      if (target.kind != Atom::Index) p.fail("bracket target must be a basis index");
      e.idx = {fixed_i, fixed_j, check_index(target.i, target.col)};
      break;
    case SectionKind::Comul:
      if (target.kind != Atom::Pair) p.fail("comul target must be (j,k)");
      e.idx = {fixed_i, check_index(target.i, target.col), check_index(target.j, target.col)};
      break;
    case SectionKind::Map:
      if (target.kind != Atom::MapPair) p.fail("map target must be (i<-j)");
      e.idx = {check_index(target.i, target.col), check_index(target.j, target.col), -1};
      break;
    case SectionKind::Tensor:
    case SectionKind::Form:
      if (target.kind != Atom::Pair) p.fail("target must be (i,j)");
      e.idx = {check_index(target.i, target.col), check_index(target.j, target.col), -1};
      break;
  }
  return e;
}

void parse_entry_list(LineParser& p, SectionKind kind, ParsedFile& f,
                      std::vector<ParsedFile::Entry>& into, int fixed_i, int fixed_j) {
  into.push_back(parse_entry(p, kind, f.dim, f.params, fixed_i, fixed_j));
  while (!p.at_end()) {
    if (p.peek().kind == Token::Symbol && p.peek().text == "+") {
      p.next();
      into.push_back(parse_entry(p, kind, f.dim, f.params, fixed_i, fixed_j));
    } else if (p.peek().kind == Token::Symbol && p.peek().text == "-") {
      // leave the sign for the entry parser
      into.push_back(parse_entry(p, kind, f.dim, f.params, fixed_i, fixed_j));
    } else {
      p.fail("expected '+' between entries");
    }
  }
}

}  // namespace

ParsedFile parse_raw(const std::string& text) {
  ParsedFile f;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_dim = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<Token> toks = lex_line(line, lineno);
    LineParser p(toks, lineno);
    if (p.at_end()) continue;
    std::string head = p.expect_name();
    if (head == "dim") {
      if (have_dim) p.fail("duplicate dim declaration");
      f.dim = p.expect_number();
      if (f.dim < 0) p.fail("dim must be nonnegative");
      have_dim = true;
      if (!p.at_end()) p.fail("trailing tokens after dim");
      continue;
    }
    if (!have_dim) p.fail("dim must be declared first");
    if (head == "param") {
      std::string name = p.expect_name();
      if (std::find(f.params.begin(), f.params.end(), name) != f.params.end())
        p.fail("duplicate parameter '" + name + "'");
      f.params.push_back(name);
      if (!p.at_end()) p.fail("trailing tokens after param");
    } else if (head == "bracket") {
      f.has_bracket = true;
      if (p.at_end()) continue;  // bare declaration: all-zero bracket
      int i = p.expect_number(), j = p.expect_number();
      if (i < 1 || i > f.dim || j < 1 || j > f.dim)
        throw ParseError(Err::IndexOutOfRange, "bracket index outside 1..dim", lineno, 1);
      p.expect_symbol("=");
      parse_entry_list(p, SectionKind::Bracket, f, f.bracket, i - 1, j - 1);
    } else if (head == "comul") {
      f.has_comul = true;
      if (p.at_end()) continue;  // bare declaration: all-zero comultiplication
      int i = p.expect_number();
      if (i < 1 || i > f.dim)
        throw ParseError(Err::IndexOutOfRange, "comul index outside 1..dim", lineno, 1);
      p.expect_symbol("=");
      parse_entry_list(p, SectionKind::Comul, f, f.comul, i - 1, -1);
    } else if (head == "map" || head == "tensor" || head == "form") {
      std::string name = p.expect_name();
      SectionKind k = head == "map" ? SectionKind::Map
                      : head == "tensor" ? SectionKind::Tensor
                                         : SectionKind::Form;
      auto& table = head == "map" ? f.maps : head == "tensor" ? f.tensors : f.forms;
      auto& entries = table[name];  // bare declaration keeps an all-zero section
      if (p.at_end()) continue;
      p.expect_symbol("=");
      parse_entry_list(p, k, f, entries, -1, -1);
    } else {
      p.fail("unknown section '" + head + "'");
    }
  }
  return f;
}

namespace {

Rat monomial_value(const Monomial& m, const ParamBindings& bindings) {
  Rat v = m.constant;
  for (const auto& p : m.params) {
    auto it = bindings.find(p);
    if (it == bindings.end()) throw AliaError(Err::UnboundParam, p);
    v *= it->second;
  }
  return v;
}

}  // namespace

StructureBundle resolve(const ParsedFile& f, const ParamBindings& bindings) {
  StructureBundle b;
  b.dim = f.dim;
  if (f.has_bracket) {
    Algebra a(f.dim);
    for (const auto& e : f.bracket)
      a.c.at(e.idx[0], e.idx[1], e.idx[2]) += monomial_value(e.coeff, bindings);
    b.bracket = std::move(a);
  }
  if (f.has_comul) {
    Coalgebra c(f.dim);
    for (const auto& e : f.comul)
      c.d.at(e.idx[0], e.idx[1], e.idx[2]) += monomial_value(e.coeff, bindings);
    b.comul = std::move(c);
  }
  for (const auto& [name, entries] : f.maps) {
    LinearMap m(f.dim);
    for (const auto& e : entries) m.m.at(e.idx[0], e.idx[1]) += monomial_value(e.coeff, bindings);
    b.maps[name] = std::move(m);
  }
  for (const auto& [name, entries] : f.tensors) {
    TwoTensor t(f.dim);
    for (const auto& e : entries) t.t.at(e.idx[0], e.idx[1]) += monomial_value(e.coeff, bindings);
    b.tensors[name] = std::move(t);
  }
  for (const auto& [name, entries] : f.forms) {
    BilinearForm w(f.dim);
    for (const auto& e : entries) w.w.at(e.idx[0], e.idx[1]) += monomial_value(e.coeff, bindings);
    b.forms[name] = std::move(w);
  }
  return b;
}

StructureBundle parse_structure(const std::string& text, const ParamBindings& bindings) {
  return resolve(parse_raw(text), bindings);
}

std::string emit_structure(const StructureBundle& b) {
  std::ostringstream out;
  out << "dim " << b.dim << "\n";
  int n = b.dim;
  if (b.bracket) {
    bool any_row = false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        bool any = false;
        std::ostringstream row;
        for (int k = 0; k < n; ++k) {
          const Rat& c = b.bracket->c.at(i, j, k);
          if (c.is_zero()) continue;
          if (any) row << " + ";
          row << c.str() << "*" << (k + 1);
          any = true;
        }
        if (any) {
          out << "bracket " << (i + 1) << " " << (j + 1) << " = " << row.str() << "\n";
          any_row = true;
        }
      }
    if (!any_row) out << "bracket\n";
  }
  if (b.comul) {
    bool any_row = false;
    for (int i = 0; i < n; ++i) {
      bool any = false;
      std::ostringstream row;
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          const Rat& c = b.comul->d.at(i, j, k);
          if (c.is_zero()) continue;
          if (any) row << " + ";
          row << c.str() << "*(" << (j + 1) << "," << (k + 1) << ")";
          any = true;
        }
      if (any) {
        out << "comul " << (i + 1) << " = " << row.str() << "\n";
        any_row = true;
      }
    }
    if (!any_row) out << "comul\n";
  }
  for (const auto& [name, m] : b.maps) {
    bool any = false;
    std::ostringstream row;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Rat& c = m.m.at(i, j);
        if (c.is_zero()) continue;
        if (any) row << " + ";
        row << c.str() << "*(" << (i + 1) << "<-" << (j + 1) << ")";
        any = true;
      }
    if (any)
      out << "map " << name << " = " << row.str() << "\n";
    else
      out << "map " << name << "\n";
  }
  auto emit_pairs = [&](const char* section, const std::string& name, const Mat& m) {
    bool any = false;
    std::ostringstream row;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Rat& c = m.at(i, j);
        if (c.is_zero()) continue;
        if (any) row << " + ";
        row << c.str() << "*(" << (i + 1) << "," << (j + 1) << ")";
        any = true;
      }
    if (any)
      out << section << " " << name << " = " << row.str() << "\n";
    else
      out << section << " " << name << "\n";
  };
  for (const auto& [name, t] : b.tensors) emit_pairs("tensor", name, t.t);
  for (const auto& [name, w] : b.forms) emit_pairs("form", name, w.w);
  return out.str();
}

}  // namespace alia
