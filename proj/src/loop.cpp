#include <llterm/loop.hpp>

#include <llterm/algebraic.hpp>

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace llterm {

std::string kind_name(ReductionCertificate::Kind k) {
  switch (k) {
    case ReductionCertificate::Kind::Homogenize: return "homogenize";
    case ReductionCertificate::Kind::SplitRow: return "split_row";
    case ReductionCertificate::Kind::Depower: return "depower";
  }
  return "?";
}

bool LoopProgram::homogeneous() const {
  for (const auto& v : a)
    if (v != 0) return false;
  for (const auto& v : c)
    if (v != 0) return false;
  return true;
}

void LoopProgram::validate() const {
  if (dim == 0) throw std::invalid_argument("loop dimension must be positive");
  if (A.rows() != dim || A.cols() != dim) throw std::invalid_argument("update matrix must be dim x dim");
  if (a.size() != dim) throw std::invalid_argument("update offset must have dim entries");
  if (B.cols() != dim) throw std::invalid_argument("guard matrix must have dim columns");
  if (c.size() != B.rows()) throw std::invalid_argument("guard rhs must have one entry per guard row");
  if (!vars.empty() && vars.size() != dim) throw std::invalid_argument("variable list does not match dim");
}

LoopParseError::LoopParseError(const std::string& msg, int l, int col)
    : std::runtime_error(std::to_string(l) + ":" + std::to_string(col) + ": " + msg), line(l), column(col) {}

namespace {

struct Token {
  enum Kind { Ident, Number, Sym, End } kind;
  std::string text;
  int line, col;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto adv = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      adv(1);
      continue;
    }
    if (ch == '#') {
      while (i < s.size() && s[i] != '\n') adv(1);
      continue;
    }
    int l = line, c = col;
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '\'')) ++j;
      out.push_back({Token::Ident, s.substr(i, j - i), l, c});
      adv(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j < s.size() && (s[j] == '.' || s[j] == '/'))
        throw LoopParseError("non-integer literal", l, c);
      out.push_back({Token::Number, s.substr(i, j - i), l, c});
      adv(j - i);
      continue;
    }
    static const char* two[] = {":=", ">=", "<=", "==", "!="};
    bool matched = false;
    for (const char* t : two)
      if (s.compare(i, 2, t) == 0) {
        out.push_back({Token::Sym, t, l, c});
        adv(2);
        matched = true;
        break;
      }
    if (matched) continue;
    if (std::string("+-*,;()><=").find(ch) != std::string::npos) {
      out.push_back({Token::Sym, std::string(1, ch), l, c});
      adv(1);
      continue;
    }
    throw LoopParseError(std::string("unexpected character '") + ch + "'", l, c);
  }
  out.push_back({Token::End, "", line, col});
  return out;
}

struct Affine {
  IntVector coef;
  Integer constant = 0;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> t) : t_(std::move(t)) {}

  LoopProgram parse() {
    LoopProgram p;
    expect_ident("vars");
    while (peek().kind == Token::Ident && peek().text != "while") {
      const Token& v = next();
      if (index_.count(v.text)) throw err("duplicate variable '" + v.text + "'", v);
      if (v.text == "vars" || v.text == "do" || v.text == "and") throw err("reserved word as variable", v);
      index_[v.text] = p.vars.size();
      p.vars.push_back(v.text);
      if (is_sym(",")) next();
    }
    if (p.vars.empty()) throw err("expected at least one variable", peek());
    if (is_sym(";")) next();
    p.dim = p.vars.size();
    expect_ident("while");
    std::vector<IntVector> rows;
    IntVector rhs;
    for (;;) {
      Affine lhs = affine();
      const Token& op = peek();
      if (op.kind == Token::Sym && op.text == ">") throw err("strict guard '>' unsupported; write '>= c+1'", op);
      if (!(op.kind == Token::Sym && op.text == ">=")) throw err("expected '>='", op);
      next();
      Affine r = affine();
      IntVector row(p.dim);
      for (std::size_t j = 0; j < p.dim; ++j) row[j] = lhs.coef[j] - r.coef[j];
      rows.push_back(row);
      rhs.push_back(r.constant - lhs.constant);
      if (peek().kind == Token::Ident && peek().text == "and") {
        next();
        continue;
      }
      break;
    }
    expect_ident("do");
    p.A = IntMatrix::identity(p.dim);
    p.a.assign(p.dim, Integer(0));
    std::vector<bool> assigned(p.dim, false);
    for (;;) {
      const Token& v = next();
      if (v.kind != Token::Ident || !index_.count(v.text)) throw err("expected assigned variable", v);
      std::size_t k = index_[v.text];
      if (assigned[k]) throw err("variable '" + v.text + "' assigned twice", v);
      assigned[k] = true;
      if (!is_sym(":=")) throw err("expected ':='", peek());
      next();
      Affine e = affine();
      for (std::size_t j = 0; j < p.dim; ++j) p.A(k, j) = e.coef[j];
      p.a[k] = e.constant;
      if (is_sym(",")) {
        next();
        continue;
      }
      break;
    }
    if (is_sym(";")) next();
    if (peek().kind != Token::End) throw err("trailing input", peek());
    p.B = IntMatrix(rows.size(), p.dim);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < p.dim; ++j) p.B(i, j) = rows[i][j];
    p.c = rhs;
    return p;
  }

 private:
  const Token& peek() const { return t_[pos_]; }
  const Token& next() { return t_[pos_ < t_.size() - 1 ? pos_++ : pos_]; }
  bool is_sym(const char* s) const { return peek().kind == Token::Sym && peek().text == s; }
  LoopParseError err(const std::string& m, const Token& t) const { return LoopParseError(m, t.line, t.col); }
  void expect_ident(const char* w) {
    if (peek().kind != Token::Ident || peek().text != w) throw err(std::string("expected '") + w + "'", peek());
    next();
  }

  Affine affine() {
    Affine e;
    e.coef.assign(index_.size(), Integer(0));
    bool first = true;
    for (;;) {
      int sign = 1;
      if (is_sym("+") || is_sym("-")) {
        sign = next().text == "-" ? -1 : 1;
      } else if (!first) {
        break;
      }
      first = false;
      term(e, sign);
    }
    return e;
  }

  void term(Affine& e, int sign) {
    const Token& t = peek();
    if (t.kind == Token::Number) {
      next();
      Integer k(t.text);
      if (is_sym("*")) next();
      if (peek().kind == Token::Ident && index_.count(peek().text)) {
        e.coef[index_[next().text]] += sign * k;
      } else {
        e.constant += sign * k;
      }
      return;
    }
    if (t.kind == Token::Ident) {
      auto it = index_.find(t.text);
      if (it == index_.end()) throw err("undeclared variable '" + t.text + "'", t);
      next();
      Integer k = 1;
      if (is_sym("*")) {
        next();
        const Token& n = next();
        if (n.kind != Token::Number) throw err("expected integer coefficient", n);
        k = Integer(n.text);
      }
      e.coef[it->second] += sign * k;
      return;
    }
    throw err("expected a term", t);
  }

  std::vector<Token> t_;
  std::size_t pos_ = 0;
  std::map<std::string, std::size_t> index_;
};

Integer json_int(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument("bad integer string");
    return v;
  }
  throw std::invalid_argument("expected an integer entry");
}

IntVector json_vec(const nlohmann::json& j) {
  IntVector v;
  for (const auto& e : j) v.push_back(json_int(e));
  return v;
}

IntMatrix json_mat(const nlohmann::json& j, std::size_t cols) {
  IntMatrix m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j[i].size() != cols) throw std::invalid_argument("matrix row has wrong length");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = json_int(j[i][k]);
  }
  return m;
}

std::string lin_text(const IntVector& coef, const std::vector<std::string>& vars, const Integer& constant) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < coef.size(); ++j) {
    if (coef[j] == 0) continue;
    Integer a = abs(coef[j]);
    os << (first ? (coef[j] < 0 ? "-" : "") : (coef[j] < 0 ? " - " : " + "));
    if (a != 1) os << a.get_str() << "*";
    os << vars[j];
    first = false;
  }
  if (constant != 0 || first) {
    if (first)
      os << constant.get_str();
    else
      os << (constant < 0 ? " - " : " + ") << Integer(abs(constant)).get_str();
  }
  return os.str();
}

std::vector<std::string> default_vars(std::size_t d) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < d; ++i) v.push_back("x" + std::to_string(i + 1));
  return v;
}

}  // namespace

LoopProgram parse_loop(const std::string& text) {
  Parser p(lex(text));
  LoopProgram prog = p.parse();
  prog.validate();
  return prog;
}

LoopProgram parse_loop_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw LoopParseError(std::string("invalid JSON: ") + e.what(), 1, static_cast<int>(e.byte));
  }
  try {
    LoopProgram p;
    p.dim = j.at("dim").get<std::size_t>();
    p.A = json_mat(j.at("A"), p.dim);
    p.B = json_mat(j.at("B"), p.dim);
    p.c = json_vec(j.at("c"));
    p.a = j.contains("a") ? json_vec(j.at("a")) : IntVector(p.dim, Integer(0));
    p.vars = j.contains("vars") ? j.at("vars").get<std::vector<std::string>>() : default_vars(p.dim);
    p.validate();
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw LoopParseError(std::string("bad loop document: ") + e.what(), 1, 1);
  } catch (const std::invalid_argument& e) {
    throw LoopParseError(e.what(), 1, 1);
  }
}

LoopProgram parse_loop_any(const std::string& text) {
  std::size_t k = text.find_first_not_of(" \t\r\n");
  if (k != std::string::npos && text[k] == '{') return parse_loop_json(text);
  return parse_loop(text);
}

LoopProgram load_loop_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_loop_any(ss.str());
}

std::string to_loop_text(const LoopProgram& p) {
  std::vector<std::string> vars = p.vars.empty() ? default_vars(p.dim) : p.vars;
  std::ostringstream os;
  os << "vars";
  for (const auto& v : vars) os << " " << v;
  os << ";\nwhile ";
  for (std::size_t i = 0; i < p.B.rows(); ++i) {
    if (i) os << " and ";
    os << lin_text(p.B.row(i), vars, 0) << " >= " << p.c[i].get_str();
  }
  os << "\ndo ";
  bool first = true;
  for (std::size_t k = 0; k < p.dim; ++k) {
    IntVector row = p.A.row(k);
    bool identity = p.a[k] == 0;
    for (std::size_t j = 0; j < p.dim && identity; ++j) identity = row[j] == (j == k ? 1 : 0);
    if (identity) continue;
    if (!first) os << ", ";
    os << vars[k] << " := " << lin_text(row, vars, p.a[k]);
    first = false;
  }
  if (first) os << vars[0] << " := " << vars[0];
  os << "\n";
  return os.str();
}

std::string to_loop_json(const LoopProgram& p) {
  auto vec = [](const IntVector& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : v) a.push_back(x.fits_slong_p() ? nlohmann::json(x.get_si()) : nlohmann::json(x.get_str()));
    return a;
  };
  auto mat = [&](const IntMatrix& m) {
    nlohmann::json a = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vec(m.row(i)));
    return a;
  };
  nlohmann::json j{{"dim", p.dim}, {"B", mat(p.B)}, {"c", vec(p.c)}, {"A", mat(p.A)}, {"a", vec(p.a)}};
  if (!p.vars.empty()) j["vars"] = p.vars;
  return j.dump();
}

std::pair<LoopProgram, ReductionCertificate> homogenize(const LoopProgram& p) {
  const std::size_t d = p.dim;
  LoopProgram h;
  h.dim = d + 1;
  h.A = IntMatrix(d + 1, d + 1);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) h.A(i, j) = p.A(i, j);
    h.A(i, d) = p.a[i];
  }
  h.A(d, d) = 1;
  h.a.assign(d + 1, Integer(0));
  h.B = IntMatrix(p.B.rows(), d + 1);
  for (std::size_t i = 0; i < p.B.rows(); ++i) {
    for (std::size_t j = 0; j < d; ++j) h.B(i, j) = p.B(i, j);
    h.B(i, d) = -p.c[i];
  }
  h.c.assign(p.B.rows(), Integer(0));
  h.vars = p.vars.empty() ? default_vars(d) : p.vars;
  h.vars.push_back("_one");
  ReductionCertificate cert{ReductionCertificate::Kind::Homogenize, 0,
                            "W = { u : (u, 1) in W' } (slice at last coordinate 1)"};
  h.provenance = p.provenance;
  h.provenance.push_back(cert);
  return {h, cert};
}

std::vector<LoopProgram> split_rows(const LoopProgram& p) {
  if (!p.homogeneous()) throw std::invalid_argument("split_rows expects a homogeneous program");
  std::vector<LoopProgram> out;
  for (std::size_t r = 0; r < p.B.rows(); ++r) {
    LoopProgram q = p;
    q.B = IntMatrix(1, p.dim);
    for (std::size_t j = 0; j < p.dim; ++j) q.B(0, j) = p.B(r, j);
    q.c = {Integer(0)};
    q.provenance.push_back({ReductionCertificate::Kind::SplitRow, r, "W = intersection of the row witness sets"});
    out.push_back(std::move(q));
  }
  return out;
}

unsigned long compute_L(const IntMatrix& A) {
  std::vector<AlgebraicNumber> eig;
  for (auto& r : isolate_roots(char_poly(A)))
    if (!r.root.is_zero()) eig.push_back(r.root);
  unsigned long L = 1;
  for (std::size_t i = 0; i < eig.size(); ++i)
    for (std::size_t j = i + 1; j < eig.size(); ++j) {
      // only equal moduli can have a root-of-unity quotient
      Ball mi = eig[i].enclose(40).abs2(), mj = eig[j].enclose(40).abs2();
      if (!mi.overlaps(mj)) continue;
      if (auto r = is_root_of_unity(alg_div(eig[i], eig[j]))) L = std::lcm(L, *r);
    }
  return L;
}

std::pair<LoopProgram, ReductionCertificate> depower(const LoopProgram& p, unsigned long L) {
  if (L == 0) throw std::invalid_argument("depower: L must be positive");
  LoopProgram q = p;
  q.A = p.A.pow(L);
  ReductionCertificate cert{ReductionCertificate::Kind::Depower, L,
                            "W = intersection over 0 <= i < " + std::to_string(L) + " of { u : A^i u in W' }"};
  q.provenance.push_back(cert);
  return {q, cert};
}

}  // namespace llterm
