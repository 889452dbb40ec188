#include "qcprof/qasm.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <sstream>

namespace qcprof {

namespace {

struct Token {
  enum class Kind { ident, number, punct, str, eof };
  Kind kind = Kind::eof;
  std::string text;
  double value = 0.0;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(current_.line, current_.col, msg);
  }

 private:
  void advance() {
    skip_ws_and_comments();
    current_.line = line_;
    current_.col = col_;
    if (pos_ >= text_.size()) {
      current_.kind = Token::Kind::eof;
      current_.text.clear();
      return;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string ident;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ident += text_[pos_];
        bump();
      }
      current_.kind = Token::Kind::ident;
      current_.text = std::move(ident);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && pos_ + 1 < text_.size() &&
         std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.' ||
              text_[pos_] == 'e' || text_[pos_] == 'E' ||
              ((text_[pos_] == '+' || text_[pos_] == '-') && pos_ > start &&
               (text_[pos_ - 1] == 'e' || text_[pos_ - 1] == 'E')))) {
        bump();
      }
      current_.kind = Token::Kind::number;
      current_.text = text_.substr(start, pos_ - start);
      current_.value = std::stod(current_.text);
      return;
    }
    if (c == '"') {
      bump();
      std::string s;
      while (pos_ < text_.size() && text_[pos_] != '"') {
        s += text_[pos_];
        bump();
      }
      if (pos_ >= text_.size()) throw ParseError(line_, col_, "unterminated string");
      bump();
      current_.kind = Token::Kind::str;
      current_.text = std::move(s);
      return;
    }
    if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      current_.kind = Token::Kind::punct;
      current_.text = "->";
      bump();
      bump();
      return;
    }
    current_.kind = Token::Kind::punct;
    current_.text = std::string(1, c);
    bump();
  }

  void skip_ws_and_comments() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') bump();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token current_;
};

struct Register {
  int offset = 0;
  int size = 0;
};

class Parser {
 public:
  Parser(const std::string& text, const ParseOptions& opts) : lex_(text), opts_(opts) {}

  ParseResult run() {
    while (lex_.peek().kind != Token::Kind::eof) statement();
    return {std::move(circuit_), std::move(meta_)};
  }

 private:
  void statement() {
    const Token& t = lex_.peek();
    if (t.kind != Token::Kind::ident)
      lex_.fail("expected statement, got '" + t.text + "'");
    if (t.text == "OPENQASM") {
      lex_.next();
      expect_number();
      expect_punct(";");
    } else if (t.text == "include") {
      lex_.next();
      if (lex_.peek().kind != Token::Kind::str) lex_.fail("expected include path string");
      lex_.next();
      expect_punct(";");
    } else if (t.text == "qreg" || t.text == "creg") {
      declaration(t.text == "qreg");
    } else if (t.text == "measure") {
      measure();
    } else if (t.text == "barrier") {
      barrier();
    } else if (t.text == "reset") {
      reset();
    } else if (t.text == "gate" || t.text == "opaque" || t.text == "if") {
      lex_.fail("unsupported statement '" + t.text + "'");
    } else {
      gate_application();
    }
  }

  void declaration(bool quantum) {
    lex_.next();
    Token name = expect_ident();
    expect_punct("[");
    Token size = expect_number();
    expect_punct("]");
    expect_punct(";");
    int n = static_cast<int>(size.value);
    if (n < 1 || size.value != n)
      throw ParseError(size.line, size.col, "register size must be a positive integer");
    auto& regs = quantum ? qregs_ : cregs_;
    if (regs.count(name.text))
      throw ParseError(name.line, name.col, "register '" + name.text + "' redeclared");
    if (quantum) {
      regs[name.text] = {circuit_.n_qubits, n};
      circuit_.n_qubits += n;
    } else {
      regs[name.text] = {0, n};
    }
  }

  // reg[idx] resolves to one qubit; a bare reg stands for all of its qubits.
  struct Operand {
    std::vector<int> qubits;
    bool broadcast = false;
    int line = 1;
    int col = 1;
  };

  Operand quantum_operand() {
    Token name = expect_ident();
    auto it = qregs_.find(name.text);
    if (it == qregs_.end())
      throw ParseError(name.line, name.col, "unknown quantum register '" + name.text + "'");
    Operand op;
    op.line = name.line;
    op.col = name.col;
    if (lex_.peek().kind == Token::Kind::punct && lex_.peek().text == "[") {
      lex_.next();
      Token idx = expect_number();
      expect_punct("]");
      int i = static_cast<int>(idx.value);
      if (i < 0 || i >= it->second.size || idx.value != i)
        throw ParseError(idx.line, idx.col,
                         "qubit index " + idx.text + " out of range for '" + name.text + "'");
      op.qubits = {it->second.offset + i};
    } else {
      op.broadcast = true;
      op.qubits.resize(it->second.size);
      for (int i = 0; i < it->second.size; ++i) op.qubits[i] = it->second.offset + i;
    }
    return op;
  }

  void skip_classical_operand() {
    Token name = expect_ident();
    if (!cregs_.count(name.text))
      throw ParseError(name.line, name.col, "unknown classical register '" + name.text + "'");
    if (lex_.peek().kind == Token::Kind::punct && lex_.peek().text == "[") {
      lex_.next();
      expect_number();
      expect_punct("]");
    }
  }

  void measure() {
    lex_.next();
    quantum_operand();
    expect_punct("->");
    skip_classical_operand();
    expect_punct(";");
    ++meta_.measurements_stripped;
  }

  void barrier() {
    lex_.next();
    quantum_operand();
    while (lex_.peek().kind == Token::Kind::punct && lex_.peek().text == ",") {
      lex_.next();
      quantum_operand();
    }
    expect_punct(";");
    ++meta_.barriers_stripped;
  }

  void reset() {
    lex_.next();
    quantum_operand();
    expect_punct(";");
    ++meta_.resets_stripped;
  }

  void gate_application() {
    Token name = lex_.next();
    std::vector<double> params;
    if (lex_.peek().kind == Token::Kind::punct && lex_.peek().text == "(") {
      lex_.next();
      if (!(lex_.peek().kind == Token::Kind::punct && lex_.peek().text == ")")) {
        params.push_back(expression());
        while (lex_.peek().kind == Token::Kind::punct && lex_.peek().text == ",") {
          lex_.next();
          params.push_back(expression());
        }
      }
      expect_punct(")");
    }
    std::vector<Operand> operands;
    operands.push_back(quantum_operand());
    while (lex_.peek().kind == Token::Kind::punct && lex_.peek().text == ",") {
      lex_.next();
      operands.push_back(quantum_operand());
    }
    expect_punct(";");
    emit(name, params, operands);
  }

  void emit(const Token& name, const std::vector<double>& params,
            const std::vector<Operand>& operands) {
    if (operands.size() == 1) {
      // 1-qubit gates broadcast over a bare register.
      for (int q : operands[0].qubits) append_gate(name, {name.text, {q}, params});
      return;
    }
    if (operands.size() == 2) {
      const Operand& a = operands[0];
      const Operand& b = operands[1];
      if (a.broadcast || b.broadcast) {
        if (!(a.broadcast && b.broadcast && a.qubits.size() == b.qubits.size()))
          throw ParseError(name.line, name.col,
                           "register broadcast on a two-qubit gate needs two registers of equal size");
        for (std::size_t i = 0; i < a.qubits.size(); ++i)
          append_gate(name, {name.text, {a.qubits[i], b.qubits[i]}, params});
        return;
      }
      append_gate(name, {name.text, {a.qubits[0], b.qubits[0]}, params});
      return;
    }
    // Arity >= 3: fixed decomposition rules only.
    if (name.text == "ccx" && operands.size() == 3) {
      if (!opts_.decompose_multi_qubit)
        throw ParseError(name.line, name.col, "3-qubit gate 'ccx' with decomposition disabled");
      for (const auto& op : operands)
        if (op.broadcast)
          throw ParseError(name.line, name.col, "register broadcast unsupported for 'ccx'");
      int a = operands[0].qubits[0], b = operands[1].qubits[0], cq = operands[2].qubits[0];
      append_toffoli(name, a, b, cq);
      meta_.decompositions.push_back("ccx -> 15 gates at line " + std::to_string(name.line));
      return;
    }
    throw ParseError(name.line, name.col,
                     "gate '" + name.text + "' of arity " + std::to_string(operands.size()) +
                         " has no decomposition rule");
  }

  void append_gate(const Token& where, Gate g) {
    if (g.qubits.size() == 2 && g.qubits[0] == g.qubits[1])
      throw ParseError(where.line, where.col, "duplicate qubit operand in gate '" + g.name + "'");
    circuit_.gates.push_back(std::move(g));
  }

  void append_toffoli(const Token& where, int a, int b, int c) {
    if (a == b || a == c || b == c)
      throw ParseError(where.line, where.col, "duplicate qubit operand in gate 'ccx'");
    auto g1 = [&](const char* n, int q) { circuit_.gates.push_back({n, {q}, {}}); };
    auto g2 = [&](const char* n, int p, int q) { circuit_.gates.push_back({n, {p, q}, {}}); };
    g1("h", c);
    g2("cx", b, c);
    g1("tdg", c);
    g2("cx", a, c);
    g1("t", c);
    g2("cx", b, c);
    g1("tdg", c);
    g2("cx", a, c);
    g1("t", b);
    g1("t", c);
    g1("h", c);
    g2("cx", a, b);
    g1("t", a);
    g1("tdg", b);
    g2("cx", a, b);
  }

  // expr := term (('+'|'-') term)*
  // term := factor (('*'|'/') factor)*
  // factor := '-' factor | number | 'pi' | '(' expr ')'
  double expression() {
    double v = term();
    while (lex_.peek().kind == Token::Kind::punct &&
           (lex_.peek().text == "+" || lex_.peek().text == "-")) {
      std::string op = lex_.next().text;
      double rhs = term();
      v = op == "+" ? v + rhs : v - rhs;
    }
    return v;
  }

  double term() {
    double v = factor();
    while (lex_.peek().kind == Token::Kind::punct &&
           (lex_.peek().text == "*" || lex_.peek().text == "/")) {
      std::string op = lex_.next().text;
      double rhs = factor();
      v = op == "*" ? v * rhs : v / rhs;
    }
    return v;
  }

  double factor() {
    const Token& t = lex_.peek();
    if (t.kind == Token::Kind::punct && t.text == "-") {
      lex_.next();
      return -factor();
    }
    if (t.kind == Token::Kind::punct && t.text == "(") {
      lex_.next();
      double v = expression();
      expect_punct(")");
      return v;
    }
    if (t.kind == Token::Kind::number) return lex_.next().value;
    if (t.kind == Token::Kind::ident && t.text == "pi") {
      lex_.next();
      return std::numbers::pi;
    }
    lex_.fail("expected parameter expression, got '" + t.text + "'");
  }

  Token expect_ident() {
    if (lex_.peek().kind != Token::Kind::ident)
      lex_.fail("expected identifier, got '" + lex_.peek().text + "'");
    return lex_.next();
  }

  Token expect_number() {
    if (lex_.peek().kind != Token::Kind::number)
      lex_.fail("expected number, got '" + lex_.peek().text + "'");
    return lex_.next();
  }

  void expect_punct(const std::string& p) {
    if (!(lex_.peek().kind == Token::Kind::punct && lex_.peek().text == p))
      lex_.fail("expected '" + p + "', got '" + lex_.peek().text + "'");
    lex_.next();
  }

  Lexer lex_;
  ParseOptions opts_;
  Circuit circuit_;
  ParseMetadata meta_;
  std::map<std::string, Register> qregs_;
  std::map<std::string, Register> cregs_;
};

}  // namespace

ParseResult parse_qasm(const std::string& text, const ParseOptions& opts) {
  return Parser(text, opts).run();
}

std::string serialize_qasm(const Circuit& c) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  out << "qreg q[" << c.n_qubits << "];\n";
  char buf[64];
  for (const auto& g : c.gates) {
    out << g.name;
    if (!g.params.empty()) {
      out << '(';
      for (std::size_t i = 0; i < g.params.size(); ++i) {
        if (i > 0) out << ',';
        std::snprintf(buf, sizeof(buf), "%.17g", g.params[i]);
        out << buf;
      }
      out << ')';
    }
    out << ' ';
    for (std::size_t i = 0; i < g.qubits.size(); ++i) {
      if (i > 0) out << ',';
      out << "q[" << g.qubits[i] << ']';
    }
    out << ";\n";
  }
  return out.str();
}

}  // namespace qcprof
