#include "matchgadget/formula.hpp"

#include <algorithm>
#include <cctype>

#include "matchgadget/error.hpp"

namespace matchgadget {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula parse() {
    Formula f = formula();
    skip_space();
    if (pos_ < text_.size()) {
      if (text_[pos_] == ')' || text_[pos_] == ']') fail_unbalanced("unmatched closing bracket");
      fail("trailing input");
    }
    return f;
  }

 private:
  Formula formula() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char ch = text_[pos_];
    switch (ch) {
      case 'T': ++pos_; return Formula::truth();
      case 'F': ++pos_; return Formula::falsity();
      case '!': ++pos_; return Formula::negate(formula());
      case '@': return atom();
      case '(': return parenthesized();
      case 'E': return existential();
      case ')':
      case ']': fail_unbalanced("unexpected closing bracket");
      default: fail(std::string("unexpected character '") + ch + "'");
    }
  }

  Formula atom() {
    ++pos_;
    std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      ++pos_;
      if (value > 1'000'000) fail("atom index too large");
    }
    if (pos_ == start) fail("expected digits after '@'");
    return Formula::variable(value);
  }

  Formula parenthesized() {
    std::size_t open = pos_++;
    Formula lhs = formula();
    skip_space();
    Formula::Kind kind;
    if (consume("&")) {
      kind = Formula::Kind::And;
    } else if (consume("|")) {
      kind = Formula::Kind::Or;
    } else if (consume("->")) {
      kind = Formula::Kind::Implies;
    } else {
      if (pos_ >= text_.size()) fail_unbalanced("'(' at offset " + std::to_string(open) + " is never closed");
      fail("expected '&', '|' or '->'");
    }
    Formula rhs = formula();
    skip_space();
    if (!consume(")")) {
      if (pos_ >= text_.size()) fail_unbalanced("'(' at offset " + std::to_string(open) + " is never closed");
      fail("expected ')'");
    }
    return Formula::binary(kind, std::move(lhs), std::move(rhs));
  }

  Formula existential() {
    std::size_t open = pos_;
    ++pos_;
    if (!consume("[")) fail("expected '[' after 'E'");
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ']') fail("existential list is empty");
    std::vector<Formula> list;
    list.push_back(formula());
    for (;;) {
      skip_space();
      if (consume(",")) {
        list.push_back(formula());
      } else if (consume("]")) {
        break;
      } else if (pos_ >= text_.size()) {
        fail_unbalanced("'E[' at offset " + std::to_string(open) + " is never closed");
      } else {
        fail("expected ',' or ']'");
      }
    }
    return Formula::exists(std::move(list));
  }

  bool consume(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) {
    throw Error(ErrorCode::SyntaxError, why + " at offset " + std::to_string(pos_));
  }
  [[noreturn]] void fail_unbalanced(const std::string& why) {
    throw Error(ErrorCode::UnbalancedParens, why + " (offset " + std::to_string(pos_) + ")");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void render(const Formula& f, std::string& out) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::True: out += 'T'; return;
    case K::Atom: out += '@' + std::to_string(f.atom); return;
    case K::Not:
      if (f.children[0].kind == K::True) {
        out += 'F';
        return;
      }
      out += '!';
      render(f.children[0], out);
      return;
    case K::And:
    case K::Or:
    case K::Implies:
    case K::AndNot: {
      out += '(';
      render(f.kind == K::AndNot ? Formula::negate(f.children[0]) : f.children[0], out);
      out += f.kind == K::Or ? "|" : f.kind == K::Implies ? "->" : "&";
      render(f.children[1], out);
      out += ')';
      return;
    }
    case K::Exists:
      out += "E[";
      for (std::size_t i = 0; i < f.children.size(); ++i) {
        if (i) out += ',';
        render(f.children[i], out);
      }
      out += ']';
      return;
  }
}

}  // namespace

std::size_t Formula::depth() const {
  std::size_t d = 0;
  for (const Formula& c : children) d = std::max(d, c.depth());
  return children.empty() ? 0 : d + 1;
}

std::size_t Formula::atom_span() const {
  std::size_t span = kind == Kind::Atom ? atom + 1 : 0;
  for (const Formula& c : children) span = std::max(span, c.atom_span());
  return span;
}

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Formula& f) {
  std::string out;
  render(f, out);
  return out;
}

}  // namespace matchgadget
