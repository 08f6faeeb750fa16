// Copyright 2026 The qcomb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcomb/qasm.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "qcomb/errors.hpp"

namespace qcomb {

namespace {

enum class TokenKind { Identifier, Number, String, Symbol, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t i = 0;
  const auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < text.size(); ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };

  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    Token tok;
    tok.line = line;
    tok.column = column;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      tok.kind = TokenKind::Identifier;
      tok.text = std::string(text.substr(i, j - i));
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t j = i;
      while (j < text.size() && (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '.')) ++j;
      if (j < text.size() && (text[j] == 'e' || text[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < text.size() && (text[k] == '+' || text[k] == '-')) ++k;
        if (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) {
          j = k;
          while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        }
      }
      tok.kind = TokenKind::Number;
      tok.text = std::string(text.substr(i, j - i));
      advance(j - i);
    } else if (c == '"') {
      std::size_t j = i + 1;
      while (j < text.size() && text[j] != '"' && text[j] != '\n') ++j;
      if (j >= text.size() || text[j] != '"') throw ParseError("unterminated string", line, column);
      tok.kind = TokenKind::String;
      tok.text = std::string(text.substr(i + 1, j - i - 1));
      advance(j - i + 1);
    } else if (std::string_view("()[],;*/+-=").find(c) != std::string_view::npos) {
      tok.kind = TokenKind::Symbol;
      tok.text = std::string(1, c);
      advance(1);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, column);
    }
    tokens.push_back(std::move(tok));
  }
  Token end;
  end.line = line;
  end.column = column;
  tokens.push_back(end);
  return tokens;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  bool at_end() const { return peek().kind == TokenKind::End; }

  bool accept(std::string_view symbol) {
    if (peek().kind == TokenKind::Symbol && peek().text == symbol) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(std::string_view symbol) {
    if (!accept(symbol)) fail("expected '" + std::string(symbol) + "'");
  }

  [[noreturn]] void fail(const std::string& message) const {
    const Token& t = peek();
    const std::string found = t.kind == TokenKind::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(message + ", found " + found, t.line, t.column);
  }

  std::string identifier() {
    if (peek().kind != TokenKind::Identifier) fail("expected identifier");
    return next().text;
  }

  std::size_t integer() {
    if (peek().kind != TokenKind::Number) fail("expected integer");
    const Token& t = peek();
    std::size_t value = 0;
    const auto* first = t.text.data();
    const auto* last = t.text.data() + t.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) fail("expected integer");
    ++pos_;
    return value;
  }

  // expr := term (('+'|'-') term)*
  double expression() {
    double value = term();
    for (;;) {
      if (accept("+")) {
        value += term();
      } else if (accept("-")) {
        value -= term();
      } else {
        return value;
      }
    }
  }

 private:
  double term() {
    double value = factor();
    for (;;) {
      if (accept("*")) {
        value *= factor();
      } else if (accept("/")) {
        value /= factor();
      } else {
        return value;
      }
    }
  }

  double factor() {
    if (accept("-")) return -factor();
    if (accept("+")) return factor();
    if (accept("(")) {
      const double value = expression();
      expect(")");
      return value;
    }
    const Token& t = peek();
    if (t.kind == TokenKind::Identifier && t.text == "pi") {
      ++pos_;
      return std::numbers::pi;
    }
    if (t.kind == TokenKind::Number) {
      double value = 0;
      const auto* first = t.text.data();
      const auto* last = t.text.data() + t.text.size();
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc() || ptr != last) fail("malformed number");
      ++pos_;
      return value;
    }
    fail("expected angle expression");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

struct Register {
  std::string name;
  std::size_t size = 0;
};

Qubit qubit_operand(Parser& p, const Register& reg) {
  const Token name_tok = p.peek();
  const std::string name = p.identifier();
  if (name != reg.name) {
    throw ParseError("unknown register '" + name + "'", name_tok.line, name_tok.column);
  }
  p.expect("[");
  const Token index_tok = p.peek();
  const std::size_t index = p.integer();
  if (index >= reg.size) {
    throw ParseError("qubit index " + std::to_string(index) + " out of range for register of size " +
                         std::to_string(reg.size),
                     index_tok.line, index_tok.column);
  }
  p.expect("]");
  return index;
}

std::vector<double> parameter_list(Parser& p) {
  std::vector<double> params;
  if (!p.accept("(")) return params;
  if (p.accept(")")) return params;
  do {
    params.push_back(p.expression());
  } while (p.accept(","));
  p.expect(")");
  return params;
}

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
  Parser p(tokenize(text));
  std::optional<Register> reg;
  Circuit circuit;

  while (!p.at_end()) {
    const Token head = p.peek();
    const std::string keyword = p.identifier();

    if (keyword == "OPENQASM") {
      if (p.peek().kind != TokenKind::Number) p.fail("expected version number");
      p.next();
      p.expect(";");
      continue;
    }
    if (keyword == "include") {
      if (p.peek().kind != TokenKind::String) p.fail("expected file name");
      p.next();
      p.expect(";");
      continue;
    }
    if (keyword == "qreg") {
      if (reg) throw ParseError("only one qreg declaration is supported", head.line, head.column);
      Register r;
      r.name = p.identifier();
      p.expect("[");
      r.size = p.integer();
      p.expect("]");
      p.expect(";");
      circuit = Circuit(r.size);
      reg = r;
      continue;
    }
    if (keyword == "creg" || keyword == "measure" || keyword == "barrier" || keyword == "reset" ||
        keyword == "gate" || keyword == "if") {
      throw ParseError("unsupported statement '" + keyword + "'", head.line, head.column);
    }
    if (!reg) throw ParseError("gate before qreg declaration", head.line, head.column);

    std::vector<double> params = parameter_list(p);
    std::vector<Qubit> operands;
    operands.push_back(qubit_operand(p, *reg));
    while (p.accept(",")) operands.push_back(qubit_operand(p, *reg));
    p.expect(";");

    if (keyword == "cx" || keyword == "CX") {
      if (operands.size() != 2 || !params.empty()) {
        throw ParseError("cx takes exactly two qubits and no angles", head.line, head.column);
      }
      if (operands[0] == operands[1]) {
        throw ParseError("cx control and target must differ", head.line, head.column);
      }
      circuit.cx(operands[0], operands[1]);
    } else if (operands.size() == 1) {
      circuit.gate(keyword, operands[0], std::move(params));
    } else {
      throw ParseError("unknown multi-qubit gate '" + keyword + "'", head.line, head.column);
    }
  }
  if (!reg) throw ParseError("missing qreg declaration", 1, 1);
  return circuit;
}

std::string format_params(const std::vector<double>& params) {
  if (params.empty()) return {};
  std::string out = "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i > 0) out += ',';
    out += format_double(params[i]);
  }
  out += ')';
  return out;
}

std::string write_circuit(const Circuit& c) {
  std::string out = "qreg q[" + std::to_string(c.n_qubits()) + "];\n";
  for (const auto& g : c.gates()) {
    if (const auto* cx = std::get_if<Cnot>(&g)) {
      out += "cx q[" + std::to_string(cx->control) + "],q[" + std::to_string(cx->target) + "];\n";
    } else {
      const auto& sq = std::get<SingleQubitGate>(g);
      out += sq.label + format_params(sq.params) + " q[" + std::to_string(sq.qubit) + "];\n";
    }
  }
  return out;
}

SingleQubitGate parse_gate_spec(std::string_view text) {
  Parser p(tokenize(text));
  SingleQubitGate gate;
  gate.label = p.identifier();
  gate.params = parameter_list(p);
  if (!p.at_end()) p.fail("unexpected trailing input");
  return gate;
}

}  // namespace qcomb
