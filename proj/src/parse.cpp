#include "fplevel/parse.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace fplevel {

namespace {

struct Token {
  enum Kind { Int, Var, Plus, Minus, Star, Caret, LParen, RParen, End } kind;
  std::uint64_t value = 0;  // Int
  std::uint32_t var = 0;    // Var index
  bool alias = false;       // Var came from x/y/z/w
  std::size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
    std::size_t pos = i_;
    if (i_ >= text_.size()) return {Token::End, 0, 0, false, pos};
    char c = text_[i_];
    switch (c) {
      case '+': ++i_; return {Token::Plus, 0, 0, false, pos};
      case '-': ++i_; return {Token::Minus, 0, 0, false, pos};
      case '*': ++i_; return {Token::Star, 0, 0, false, pos};
      case '^': ++i_; return {Token::Caret, 0, 0, false, pos};
      case '(': ++i_; return {Token::LParen, 0, 0, false, pos};
      case ')': ++i_; return {Token::RParen, 0, 0, false, pos};
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t v = 0;
      while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
        v = v * 10 + static_cast<std::uint64_t>(text_[i_] - '0');
        if (v > (1ull << 62)) throw ParseError(Errc::SyntaxError, "integer literal too large", pos);
        ++i_;
      }
      return {Token::Int, v, 0, false, pos};
    }
    if (c == 'x' && i_ + 1 < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[i_ + 1]))) {
      ++i_;
      std::uint32_t idx = 0;
      if (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
        idx = static_cast<std::uint32_t>(text_[i_] - '0');
        ++i_;
      }
      if (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_])))
        throw ParseError(Errc::UnknownVariable, "variables are x0 through x9", pos);
      return {Token::Var, 0, idx, false, pos};
    }
    if (c == 'x' || c == 'y' || c == 'z' || c == 'w') {
      ++i_;
      std::uint32_t idx = c == 'x' ? 0 : c == 'y' ? 1 : c == 'z' ? 2 : 3;
      return {Token::Var, 0, idx, true, pos};
    }
    throw ParseError(Errc::SyntaxError, std::string("unexpected character '") + c + "'", pos);
  }

 private:
  const std::string& text_;
  std::size_t i_ = 0;
};

class PolyParser {
 public:
  PolyParser(const std::string& text, PrimeField field, std::optional<std::uint32_t> nvars)
      : field_(field), declared_(nvars), lex_(text) {
    advance();
  }

  Polynomial run() {
    // two passes are avoided by parsing into exponent maps first
    auto expr = parse_expr();
    expect(Token::End, "trailing input");
    std::uint32_t nv = declared_ ? *declared_ : max_index_ + 1;
    if (declared_ && max_index_ >= *declared_)
      throw ParseError(Errc::UnknownVariable, "variable index exceeds declared count", 0);
    if (!saw_var_) nv = declared_ ? *declared_ : 1;
    std::vector<Polynomial::Term> terms;
    for (auto& [exps, c] : expr) {
      std::vector<std::uint32_t> e(exps);
      e.resize(nv, 0);
      terms.push_back({Monomial(std::move(e)), c});
    }
    return Polynomial(field_, nv, std::move(terms));
  }

 private:
  // sparse terms with exponent vectors sized to max seen so far
  using Terms = std::vector<std::pair<std::vector<std::uint32_t>, std::uint32_t>>;

  PrimeField field_;
  std::optional<std::uint32_t> declared_;
  Lexer lex_;
  Token cur_;
  std::uint32_t max_index_ = 0;
  bool saw_var_ = false;
  bool saw_alias_ = false;
  bool saw_indexed_ = false;

  void advance() { cur_ = lex_.next(); }

  void expect(Token::Kind k, const char* what) {
    if (cur_.kind != k) throw ParseError(Errc::SyntaxError, what, cur_.pos);
  }

  static Terms constant_terms(std::uint32_t c) {
    Terms t;
    if (c != 0) t.push_back({{}, c});
    return t;
  }

  Terms add(const Terms& a, const Terms& b, bool negate_b) {
    Terms out = a;
    for (auto [e, c] : b) out.push_back({std::move(e), negate_b ? field_.neg(c) : c});
    return normalize(std::move(out));
  }

  Terms mul(const Terms& a, const Terms& b) {
    Terms out;
    for (const auto& [ea, ca] : a)
      for (const auto& [eb, cb] : b) {
        std::vector<std::uint32_t> e(std::max(ea.size(), eb.size()), 0);
        for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
        for (std::size_t i = 0; i < eb.size(); ++i) {
          std::uint64_t s = std::uint64_t{e[i]} + eb[i];
          if (s > kMaxExponent) fail(Errc::DegreeOverflow, "exponent exceeds guard");
          e[i] = static_cast<std::uint32_t>(s);
        }
        out.push_back({std::move(e), field_.mul(ca, cb)});
      }
    return normalize(std::move(out));
  }

  Terms normalize(Terms&& t) {
    // merge duplicates; quadratic is fine at expression size
    Terms out;
    for (auto& [e, c] : t) {
      bool merged = false;
      for (auto& [oe, oc] : out)
        if (oe == e) {
          oc = field_.add(oc, c);
          merged = true;
          break;
        }
      if (!merged) out.push_back({std::move(e), c});
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const auto& p) { return p.second == 0; }),
              out.end());
    return out;
  }

  Terms pow(const Terms& base, std::uint64_t m) {
    Terms acc = constant_terms(1);
    Terms b = base;
    while (m) {
      if (m & 1) acc = mul(acc, b);
      m >>= 1;
      if (m) b = mul(b, b);
    }
    return acc;
  }

  Terms parse_expr() {
    bool neg = false;
    if (cur_.kind == Token::Minus) {
      neg = true;
      advance();
    } else if (cur_.kind == Token::Plus) {
      advance();
    }
    Terms acc = parse_term();
    if (neg)
      for (auto& [e, c] : acc) c = field_.neg(c);
    while (cur_.kind == Token::Plus || cur_.kind == Token::Minus) {
      bool sub = cur_.kind == Token::Minus;
      advance();
      acc = add(acc, parse_term(), sub);
    }
    return acc;
  }

  Terms parse_term() {
    Terms acc = parse_factor();
    while (cur_.kind == Token::Star) {
      advance();
      acc = mul(acc, parse_factor());
    }
    // juxtaposition (e.g. "2x") is rejected: anything that could start a
    // factor here is a syntax error rather than an implicit product
    if (cur_.kind == Token::Int || cur_.kind == Token::Var || cur_.kind == Token::LParen)
      throw ParseError(Errc::SyntaxError, "implicit multiplication is not allowed", cur_.pos);
    return acc;
  }

  Terms parse_factor() {
    Terms base = parse_base();
    if (cur_.kind == Token::Caret) {
      advance();
      bool neg = false;
      if (cur_.kind == Token::Minus) {
        neg = true;
        advance();
      }
      expect(Token::Int, "exponent expected");
      if (neg) throw ParseError(Errc::NegativeExponent, "negative exponent", cur_.pos);
      if (cur_.value > kMaxExponent)
        throw ParseError(Errc::SyntaxError, "exponent exceeds guard", cur_.pos);
      std::uint64_t m = cur_.value;
      advance();
      return pow(base, m);
    }
    return base;
  }

  Terms parse_base() {
    switch (cur_.kind) {
      case Token::Int: {
        std::uint32_t c = field_.reduce(cur_.value);
        advance();
        return constant_terms(c);
      }
      case Token::Var: {
        if (cur_.alias)
          saw_alias_ = true;
        else
          saw_indexed_ = true;
        if (saw_alias_ && saw_indexed_)
          throw ParseError(Errc::SyntaxError, "mixing x,y,z,w with x0..x9 names", cur_.pos);
        std::uint32_t idx = cur_.var;
        saw_var_ = true;
        max_index_ = std::max(max_index_, idx);
        advance();
        std::vector<std::uint32_t> e(idx + 1, 0);
        e[idx] = 1;
        Terms t;
        t.push_back({std::move(e), 1});
        return t;
      }
      case Token::LParen: {
        advance();
        Terms inner = parse_expr();
        expect(Token::RParen, "')' expected");
        advance();
        return inner;
      }
      default:
        throw ParseError(Errc::SyntaxError, "term expected", cur_.pos);
    }
  }
};

std::string core_text(const OpCore& core) {
  std::ostringstream os;
  if (const auto* d = std::get_if<DProductCore>(&core)) {
    os << "D[";
    for (std::uint32_t i = 0; i < d->t.nvars(); ++i) os << (i ? "," : "") << d->t[i];
    os << "]";
  } else {
    const auto& proj = std::get<ProjectionCore>(core);
    os << "P[" << proj.e << ";";
    for (std::uint32_t i = 0; i < proj.mu.nvars(); ++i) os << (i ? "," : "") << proj.mu[i];
    os << "]";
  }
  return os.str();
}

}  // namespace

Polynomial parse_poly(const std::string& text, PrimeField field,
                      std::optional<std::uint32_t> nvars) {
  return PolyParser(text, field, nvars).run();
}

std::string to_text(const DiffOp& op) {
  std::ostringstream os;
  os << "level " << op.level() << " vars " << op.nvars() << "\n";
  for (const auto& term : op.terms())
    os << "(" << to_string(term.post) << ") * " << core_text(term.core) << " * ("
       << to_string(term.pre) << ")\n";
  return os.str();
}

DiffOp diffop_from_text(const std::string& text, PrimeField field) {
  std::istringstream in(text);
  std::string word;
  std::uint32_t level = 0, nvars = 0;
  if (!(in >> word) || word != "level" || !(in >> level) || !(in >> word) || word != "vars" ||
      !(in >> nvars) || level < 1 || nvars < 1)
    fail(Errc::SyntaxError, "operator text must start with 'level E vars N'");
  std::string rest;
  std::getline(in, rest);  // discard remainder of header line

  auto parse_indices = [&](const std::string& s, std::size_t lo, std::size_t hi) {
    std::vector<std::uint32_t> vals;
    std::string cur;
    for (std::size_t i = lo; i <= hi; ++i) {
      if (i == hi || s[i] == ',') {
        if (cur.empty()) fail(Errc::SyntaxError, "empty index in operator core");
        vals.push_back(static_cast<std::uint32_t>(std::stoul(cur)));
        cur.clear();
      } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
        cur += s[i];
      } else {
        fail(Errc::SyntaxError, "malformed operator core");
      }
    }
    return vals;
  };

  std::vector<OpTerm> terms;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    // shape: (post) * CORE * (pre)
    std::size_t p1 = line.find('(');
    std::size_t p2 = line.find(')', p1);
    std::size_t p3 = line.rfind('(');
    std::size_t p4 = line.rfind(')');
    if (p1 == std::string::npos || p2 == std::string::npos || p3 == std::string::npos ||
        p4 == std::string::npos || p3 <= p2 || p4 <= p3)
      fail(Errc::SyntaxError, "operator term must be '(post) * CORE * (pre)'");
    Polynomial post = parse_poly(line.substr(p1 + 1, p2 - p1 - 1), field, nvars);
    Polynomial pre = parse_poly(line.substr(p3 + 1, p4 - p3 - 1), field, nvars);
    std::string mid = line.substr(p2 + 1, p3 - p2 - 1);
    std::size_t b1 = mid.find('[');
    std::size_t b2 = mid.find(']');
    std::size_t kind = mid.find_first_of("DP");
    if (b1 == std::string::npos || b2 == std::string::npos || kind == std::string::npos)
      fail(Errc::SyntaxError, "operator core must be D[...] or P[e;...]");
    OpCore core = DProductCore{Monomial(std::vector<std::uint32_t>(nvars, 0))};
    if (mid[kind] == 'D') {
      auto idx = parse_indices(mid, b1 + 1, b2);
      if (idx.size() != nvars) fail(Errc::SyntaxError, "D-product index count mismatch");
      core = DProductCore{Monomial(std::move(idx))};
    } else {
      std::size_t semi = mid.find(';');
      if (semi == std::string::npos || semi < b1 || semi > b2)
        fail(Errc::SyntaxError, "projection core must be P[e;...]");
      auto ev = parse_indices(mid, b1 + 1, semi);
      auto idx = parse_indices(mid, semi + 1, b2);
      if (ev.size() != 1 || idx.size() != nvars)
        fail(Errc::SyntaxError, "projection core must be P[e;m0,...,mn]");
      core = ProjectionCore{ev[0], Monomial(std::move(idx))};
    }
    terms.push_back({std::move(post), std::move(core), std::move(pre)});
  }
  return DiffOp(field, nvars, level, std::move(terms));
}

}  // namespace fplevel
