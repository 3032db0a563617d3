#include "sperner/expr.hpp"

#include <algorithm>
#include <cctype>

#include "sperner/error.hpp"

namespace sperner {

Expr Expr::constant(Rational value) {
  Expr e;
  e.kind_ = Kind::constant;
  e.value_ = std::move(value);
  return e;
}

Expr Expr::variable(int index) {
  Expr e;
  e.kind_ = Kind::variable;
  e.var_ = index;
  return e;
}

Expr Expr::node(Kind kind, std::vector<Expr> args) {
  Expr e;
  e.kind_ = kind;
  e.args_ = std::move(args);
  return e;
}

Rational Expr::evaluate(std::span<const Rational> vars) const {
  switch (kind_) {
    case Kind::constant:
      return value_;
    case Kind::variable:
      if (var_ < 1 || static_cast<std::size_t>(var_) > vars.size()) {
        throw InvalidInput("variable x" + std::to_string(var_) + " has no value");
      }
      return vars[var_ - 1];
    case Kind::add:
      return args_[0].evaluate(vars) + args_[1].evaluate(vars);
    case Kind::sub:
      return args_[0].evaluate(vars) - args_[1].evaluate(vars);
    case Kind::mul:
      return args_[0].evaluate(vars) * args_[1].evaluate(vars);
    case Kind::div: {
      Rational den = args_[1].evaluate(vars);
      if (sgn(den) == 0) throw InvalidInput("division by zero in " + to_string());
      return args_[0].evaluate(vars) / den;
    }
    case Kind::neg:
      return -args_[0].evaluate(vars);
    case Kind::abs:
      return abs(args_[0].evaluate(vars));
    case Kind::min:
    case Kind::max: {
      Rational best = args_[0].evaluate(vars);
      for (std::size_t i = 1; i < args_.size(); ++i) {
        Rational v = args_[i].evaluate(vars);
        if (kind_ == Kind::min ? v < best : v > best) best = std::move(v);
      }
      return best;
    }
  }
  return {};
}

int Expr::max_variable() const {
  int m = kind_ == Kind::variable ? var_ : 0;
  for (const auto& a : args_) m = std::max(m, a.max_variable());
  return m;
}

std::string Expr::to_string() const {
  auto binary = [&](const char* op) {
    return "(" + args_[0].to_string() + " " + op + " " + args_[1].to_string() + ")";
  };
  auto call = [&](const char* name) {
    std::string s = std::string(name) + "(";
    for (std::size_t i = 0; i < args_.size(); ++i) {
      if (i) s += ", ";
      s += args_[i].to_string();
    }
    return s + ")";
  };
  switch (kind_) {
    case Kind::constant:
      return sgn(value_) < 0 ? "(" + sperner::to_string(value_) + ")" : sperner::to_string(value_);
    case Kind::variable:
      return "x" + std::to_string(var_);
    case Kind::add:
      return binary("+");
    case Kind::sub:
      return binary("-");
    case Kind::mul:
      return binary("*");
    case Kind::div:
      return binary("/");
    case Kind::neg:
      return "(-" + args_[0].to_string() + ")";
    case Kind::min:
      return call("min");
    case Kind::max:
      return call("max");
    case Kind::abs:
      return call("abs");
  }
  return {};
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t base, int num_vars)
      : text_(text), base_(base), num_vars_(num_vars) {}

  Expr parse() {
    Expr e = expr();
    skip();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
    throw ParseError(what + " at position " + std::to_string(base_ + at), base_ + at);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Expr expr() {
    Expr lhs = term();
    while (true) {
      if (accept('+')) {
        lhs = Expr::node(Expr::Kind::add, {std::move(lhs), term()});
      } else if (accept('-')) {
        lhs = Expr::node(Expr::Kind::sub, {std::move(lhs), term()});
      } else {
        return lhs;
      }
    }
  }

  Expr term() {
    Expr lhs = factor();
    while (true) {
      if (accept('*')) {
        lhs = Expr::node(Expr::Kind::mul, {std::move(lhs), factor()});
      } else if (accept('/')) {
        lhs = Expr::node(Expr::Kind::div, {std::move(lhs), factor()});
      } else {
        return lhs;
      }
    }
  }

  Expr factor() {
    skip();
    if (pos_ >= text_.size()) fail("expected an operand");
    const char c = text_[pos_];
    if (c == '-') {
      ++pos_;
      return Expr::node(Expr::Kind::neg, {factor()});
    }
    if (c == '(') {
      ++pos_;
      Expr inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Expr::constant(Rational(mpz_class(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      if (name == "min" || name == "max" || name == "abs") return call(name, start);
      if (name.size() > 1 && name[0] == 'x' &&
          std::all_of(name.begin() + 1, name.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }) &&
          name[1] != '0') {
        if (name.size() > 6) fail_at("unknown variable '" + name + "'", start);
        const int index = std::stoi(name.substr(1));
        if (num_vars_ > 0 && index > num_vars_) {
          fail_at("unknown variable '" + name + "' (only x1..x" + std::to_string(num_vars_) + ")", start);
        }
        return Expr::variable(index);
      }
      fail_at("unknown name '" + name + "'", start);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Expr call(const std::string& name, std::size_t start) {
    expect('(');
    std::vector<Expr> args{expr()};
    while (accept(',')) args.push_back(expr());
    expect(')');
    if (name == "abs") {
      if (args.size() != 1) fail_at("abs takes exactly one argument", start);
      return Expr::node(Expr::Kind::abs, std::move(args));
    }
    if (args.size() < 2) fail_at(name + " takes at least two arguments", start);
    return Expr::node(name == "min" ? Expr::Kind::min : Expr::Kind::max, std::move(args));
  }

  std::string_view text_;
  std::size_t base_;
  int num_vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view text, int num_vars) { return Parser(text, 0, num_vars).parse(); }

std::vector<Expr> parse_expr_list(std::string_view text, int num_vars) {
  std::vector<Expr> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(';', start);
    const auto piece = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    out.push_back(Parser(piece, start, num_vars).parse());
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

}  // namespace sperner
