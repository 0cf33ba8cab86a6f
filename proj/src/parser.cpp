#include "formalpde/parser.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

namespace formalpde {

namespace {

struct RawJet {
  std::size_t line, column;
  unsigned unknown;  // 1-based as written
  std::vector<unsigned> vars;
};

struct RawTerm {
  Rational coef;
  RawJet jet;
};

struct RawEquation {
  std::size_t line, column;
  std::string source;
  std::vector<RawTerm> terms;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip();
    return pos_ >= text_.size();
  }

  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string identifier() {
    skip();
    std::size_t start = pos_;
    if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_]))) fail("expected a name");
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      advance();
    return std::string(text_.substr(start, pos_ - start));
  }

  Integer integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) advance();
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  unsigned small_integer() {
    std::size_t l = line_, c = column_;
    Integer v = integer();
    if (v > 1000000) throw ParseError("integer too large", l, c);
    return static_cast<unsigned>(v.get_ui());
  }

  [[noreturn]] void fail(const std::string& msg) {
    skip();
    std::string found = pos_ < text_.size() ? std::string("'") + text_[pos_] + "'" : "end of input";
    throw ParseError(msg + ", found " + found, line_, column_);
  }

  std::size_t line() {
    skip();
    return line_;
  }
  std::size_t column() {
    skip();
    return column_;
  }
  std::size_t offset() {
    skip();
    return pos_;
  }
  std::string_view slice(std::size_t a, std::size_t b) const { return text_.substr(a, b - a); }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else if ((static_cast<unsigned char>(text_[pos_]) & 0xC0) != 0x80) {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0, line_ = 1, column_ = 1;
};

RawJet parse_jet(Lexer& lx) {
  RawJet j;
  j.line = lx.line();
  j.column = lx.column();
  std::string name = lx.identifier();
  std::size_t d = name.size();
  while (d > 0 && std::isdigit(static_cast<unsigned char>(name[d - 1]))) --d;
  j.unknown = d < name.size() ? static_cast<unsigned>(std::stoul(name.substr(d))) : 1;
  if (d == 0) throw ParseError("jet name must start with a letter", j.line, j.column);
  lx.expect('[');
  if (!lx.accept(']')) {
    do {
      std::size_t l = lx.line(), c = lx.column();
      unsigned v = lx.small_integer();
      if (v == 0) throw ParseError("variable index out of range: 0", l, c);
      j.vars.push_back(v);
    } while (lx.accept(','));
    lx.expect(']');
  }
  return j;
}

RawTerm parse_term(Lexer& lx) {
  RawTerm t;
  t.coef = 1;
  if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
    Integer num = lx.integer();
    Integer den = 1;
    if (lx.accept('/')) {
      std::size_t l = lx.line(), c = lx.column();
      den = lx.integer();
      if (den == 0) throw ParseError("zero denominator", l, c);
    }
    t.coef = Rational(num, den);
    t.coef.canonicalize();
    lx.expect('*');
  }
  t.jet = parse_jet(lx);
  return t;
}

}  // namespace

SystemDocument parse(std::string_view text) {
  Lexer lx(text);
  std::optional<unsigned> n, m;
  std::vector<RawEquation> raw;
  while (!lx.at_end()) {
    std::size_t l = lx.line(), c = lx.column();
    std::string kw = lx.identifier();
    if (kw == "vars" || kw == "unknowns") {
      lx.expect('=');
      unsigned v = lx.small_integer();
      auto& slot = kw == "vars" ? n : m;
      if (slot && *slot != v) throw ParseError("conflicting '" + kw + "' declarations", l, c);
      slot = v;
    } else if (kw == "eq") {
      lx.expect(':');
      RawEquation eq;
      eq.line = l;
      eq.column = c;
      std::size_t start = lx.offset();
      bool negative = false;
      if (lx.accept('-')) negative = true;
      else lx.accept('+');
      while (true) {
        RawTerm t = parse_term(lx);
        if (negative) t.coef = -t.coef;
        eq.terms.push_back(std::move(t));
        if (lx.accept('+')) negative = false;
        else if (lx.accept('-')) negative = true;
        else break;
      }
      std::size_t end = lx.offset();
      if (lx.accept('=')) {
        std::size_t zl = lx.line(), zc = lx.column();
        Integer z = lx.integer();
        if (z != 0) throw ParseError("right-hand side must be 0", zl, zc);
      }
      std::string src(lx.slice(start, end));
      while (!src.empty() && std::isspace(static_cast<unsigned char>(src.back()))) src.pop_back();
      eq.source = src;
      raw.push_back(std::move(eq));
    } else {
      throw ParseError("unknown statement '" + kw + "'", l, c);
    }
    lx.accept(';');
  }

  SystemDocument doc;
  doc.m = m.value_or(1);
  if (!n) {
    unsigned inferred = 0;
    for (const auto& e : raw)
      for (const auto& t : e.terms)
        for (unsigned v : t.jet.vars) inferred = std::max(inferred, v);
    n = inferred;
  }
  doc.n = *n;
  std::vector<Equation> eqs;
  for (const auto& e : raw) {
    JetTerms<Rational> terms;
    for (const auto& t : e.terms) {
      if (t.jet.unknown < 1 || t.jet.unknown > doc.m)
        throw ParseError("unknown index out of range: " + std::to_string(t.jet.unknown), t.jet.line, t.jet.column);
      std::vector<unsigned> mu(doc.n, 0);
      for (unsigned v : t.jet.vars) {
        if (v > doc.n)
          throw ParseError("variable index out of range: " + std::to_string(v), t.jet.line, t.jet.column);
        ++mu[v - 1];
      }
      Jet j{t.jet.unknown - 1, MultiIndex(mu)};
      auto [it, inserted] = terms.emplace(j, t.coef);
      if (!inserted) it->second += t.coef;
    }
    Equation eq(std::move(terms));
    if (eq.empty()) throw ParseError("equation has no nonzero coefficients", e.line, e.column);
    eqs.push_back(std::move(eq));
    doc.equation_sources.push_back(e.source);
  }
  doc.system = LinearSystem(doc.n, doc.m, std::move(eqs));
  return doc;
}

std::string render_jet(const Jet& j, unsigned m) {
  std::string s = m == 1 ? "y" : "y" + std::to_string(j.unknown + 1);
  s += "[";
  bool first = true;
  for (std::size_t i = 0; i < j.index.size(); ++i)
    for (unsigned k = 0; k < j.index[i]; ++k) {
      if (!first) s += ",";
      first = false;
      s += std::to_string(i + 1);
    }
  return s + "]";
}

std::string render(const LinearSystem& sys) {
  std::ostringstream out;
  out << "vars=" << sys.n() << "; unknowns=" << sys.m() << ";\n";
  for (const auto& eq : sys.equations()) {
    out << "eq: ";
    bool first = true;
    for (const auto& [j, c] : eq.terms()) {
      Rational mag = abs(c);
      if (first) out << (sgn(c) < 0 ? "-" : "");
      else out << (sgn(c) < 0 ? " - " : " + ");
      first = false;
      if (mag != 1) out << mag.get_str() << "*";
      out << render_jet(j, sys.m());
    }
    out << " = 0;\n";
  }
  return out.str();
}

template <class F>
std::string render_expression(const BasicEquation<F>& eq, unsigned m, unsigned first_variable) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [j, c] : eq.terms()) {
    std::string cs = to_string(c);
    bool neg = !cs.empty() && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos;
    if (neg) cs = cs.substr(1);
    if (first) out << (neg ? "-" : "");
    else out << (neg ? " - " : " + ");
    first = false;
    if (cs != "1") {
      bool plain = std::all_of(cs.begin(), cs.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) || ch == '/'; });
      out << (plain ? cs : "(" + cs + ")") << "*";
    }
    out << jet_name(j, m, first_variable);
  }
  return out.str();
}

template std::string render_expression(const BasicEquation<Rational>&, unsigned, unsigned);
template std::string render_expression(const BasicEquation<ParamScalar>&, unsigned, unsigned);

}  // namespace formalpde
