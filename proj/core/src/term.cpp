#include "pointlike/term.hpp"

#include <unordered_map>
#include <unordered_set>

#include "pointlike/errors.hpp"

namespace pointlike {

Term make_letter(std::string symbol) {
  if (symbol.empty()) {
    throw Error("letter symbol must be nonempty");
  }
  auto node = std::make_shared<TermNode>();
  node->kind = TermNode::Kind::letter;
  node->letter = std::move(symbol);
  return node;
}

Term make_concat(Term left, Term right) {
  if (!left || !right) {
    throw Error("concat of a null term");
  }
  auto node = std::make_shared<TermNode>();
  node->kind = TermNode::Kind::concat;
  node->left = std::move(left);
  node->right = std::move(right);
  return node;
}

Term make_power(Term base, ProfiniteExponent exp) {
  if (!base) {
    throw Error("power of a null term");
  }
  if (exp.is_finite() && exp.value() == 1) {
    throw Error("power with finite exponent 1 is forbidden");
  }
  auto node = std::make_shared<TermNode>();
  node->kind = TermNode::Kind::power;
  node->base = std::move(base);
  node->exp = exp;
  return node;
}

Term make_concat_all(std::vector<Term> const& factors) {
  if (factors.empty()) {
    throw Error("concat of an empty sequence");
  }
  Term acc = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) {
    acc = make_concat(acc, factors[i]);
  }
  return acc;
}

Term omega_power(Term base) {
  return make_power(std::move(base), ProfiniteExponent::omega());
}

namespace {

void collect_content(TermNode const* node, std::unordered_set<TermNode const*>& seen,
                     std::set<std::string>& out) {
  if (!node || !seen.insert(node).second) {
    return;
  }
  switch (node->kind) {
    case TermNode::Kind::letter:
      out.insert(node->letter);
      break;
    case TermNode::Kind::concat:
      collect_content(node->left.get(), seen, out);
      collect_content(node->right.get(), seen, out);
      break;
    case TermNode::Kind::power:
      collect_content(node->base.get(), seen, out);
      break;
  }
}

}  // namespace

std::set<std::string> content(Term const& t) {
  std::set<std::string> out;
  std::unordered_set<TermNode const*> seen;
  collect_content(t.get(), seen, out);
  return out;
}

bool term_equal(Term const& a, Term const& b) {
  if (a.get() == b.get()) {
    return true;
  }
  if (!a || !b || a->kind != b->kind) {
    return false;
  }
  switch (a->kind) {
    case TermNode::Kind::letter:
      return a->letter == b->letter;
    case TermNode::Kind::concat:
      return term_equal(a->left, b->left) && term_equal(a->right, b->right);
    case TermNode::Kind::power:
      return a->exp == b->exp && term_equal(a->base, b->base);
  }
  return false;
}

namespace {

std::size_t size_memo(TermNode const* node,
                      std::unordered_map<TermNode const*, std::size_t>& memo) {
  auto it = memo.find(node);
  if (it != memo.end()) {
    return it->second;
  }
  std::size_t result = 1;
  if (node->kind == TermNode::Kind::concat) {
    result += size_memo(node->left.get(), memo) + size_memo(node->right.get(), memo);
  } else if (node->kind == TermNode::Kind::power) {
    result += size_memo(node->base.get(), memo);
  }
  memo.emplace(node, result);
  return result;
}

}  // namespace

std::size_t term_size(Term const& t) {
  if (!t) {
    return 0;
  }
  std::unordered_map<TermNode const*, std::size_t> memo;
  return size_memo(t.get(), memo);
}

namespace {

constexpr std::size_t kWordExpansionCap = 1 << 20;

bool expand_word(TermNode const* node, std::vector<std::string>& out) {
  switch (node->kind) {
    case TermNode::Kind::letter:
      if (out.size() >= kWordExpansionCap) {
        throw Error("finite word expansion exceeds the size cap");
      }
      out.push_back(node->letter);
      return true;
    case TermNode::Kind::concat:
      return expand_word(node->left.get(), out) && expand_word(node->right.get(), out);
    case TermNode::Kind::power: {
      if (!node->exp.is_finite()) {
        return false;
      }
      std::vector<std::string> base;
      if (!expand_word(node->base.get(), base)) {
        return false;
      }
      for (std::uint64_t i = 0; i < node->exp.value(); ++i) {
        if (out.size() + base.size() > kWordExpansionCap) {
          throw Error("finite word expansion exceeds the size cap");
        }
        out.insert(out.end(), base.begin(), base.end());
      }
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::string>> finite_word(Term const& t) {
  std::vector<std::string> out;
  if (!t || !expand_word(t.get(), out)) {
    return std::nullopt;
  }
  return out;
}

bool is_omega_term(Term const& t) {
  if (!t) {
    return true;
  }
  switch (t->kind) {
    case TermNode::Kind::letter:
      return true;
    case TermNode::Kind::concat:
      return is_omega_term(t->left) && is_omega_term(t->right);
    case TermNode::Kind::power:
      return (t->exp.kind() == ExpKind::omega || t->exp.is_finite())
             && is_omega_term(t->base);
  }
  return false;
}

namespace {

unsigned eval_node(FiniteSemigroup const& S, LetterAssignment const& assign,
                   TermNode const* node, PrimeSet const& pi,
                   std::unordered_map<TermNode const*, unsigned>& memo) {
  auto it = memo.find(node);
  if (it != memo.end()) {
    return it->second;
  }
  unsigned result = 0;
  switch (node->kind) {
    case TermNode::Kind::letter: {
      bool found = false;
      for (auto const& [symbol, elem] : assign) {
        if (symbol == node->letter) {
          result = elem;
          found = true;
          break;
        }
      }
      if (!found) {
        throw UnknownLetter(node->letter);
      }
      break;
    }
    case TermNode::Kind::concat: {
      unsigned l = eval_node(S, assign, node->left.get(), pi, memo);
      unsigned r = eval_node(S, assign, node->right.get(), pi, memo);
      result = S.product(l, r);
      break;
    }
    case TermNode::Kind::power: {
      unsigned base = eval_node(S, assign, node->base.get(), pi, memo);
      result = power(S, base, node->exp, pi);
      break;
    }
  }
  memo.emplace(node, result);
  return result;
}

}  // namespace

unsigned eval_term(FiniteSemigroup const& S, LetterAssignment const& assign,
                   Term const& t, PrimeSet const& pi) {
  if (!t) {
    throw Error("cannot evaluate a null term");
  }
  std::unordered_map<TermNode const*, unsigned> memo;
  return eval_node(S, assign, t.get(), pi, memo);
}

unsigned eval_term(Presentation const& P, Term const& t, PrimeSet const& pi) {
  LetterAssignment assign;
  for (unsigned a = 0; a < P.alphabet().size(); ++a) {
    assign.emplace_back(P.alphabet()[a], P.letter_image(a));
  }
  return eval_term(P.semigroup(), assign, t, pi);
}

// --- parsing ------------------------------------------------------------

namespace {

struct Token {
  enum class Kind { open, close, atom };
  Kind kind;
  std::string text;
  std::size_t position;
};

std::vector<Token> tokenize(std::string const& text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
    } else if (c == '(') {
      tokens.push_back({Token::Kind::open, "(", i});
      ++i;
    } else if (c == ')') {
      tokens.push_back({Token::Kind::close, ")", i});
      ++i;
    } else {
      std::size_t start = i;
      while (i < text.size() && text[i] != '(' && text[i] != ')' && text[i] != ' '
             && text[i] != '\t' && text[i] != '\n' && text[i] != '\r') {
        ++i;
      }
      tokens.push_back({Token::Kind::atom, text.substr(start, i - start), start});
    }
  }
  return tokens;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Term parse() {
    Term t = parse_term();
    if (pos_ != tokens_.size()) {
      throw SyntaxError("trailing input after term", tokens_[pos_].position);
    }
    return t;
  }

 private:
  Token const& peek() {
    if (pos_ >= tokens_.size()) {
      throw SyntaxError("unexpected end of input", tokens_.empty() ? 0 : tokens_.back().position + 1);
    }
    return tokens_[pos_];
  }
  Token const& next() {
    Token const& t = peek();
    ++pos_;
    return t;
  }

  Term parse_term() {
    Token const& t = next();
    if (t.kind == Token::Kind::close) {
      throw SyntaxError("unexpected ')'", t.position);
    }
    if (t.kind == Token::Kind::atom) {
      if (t.text == "*" || t.text == "pow") {
        throw SyntaxError("'" + t.text + "' is not a letter", t.position);
      }
      return make_letter(t.text);
    }
    Token const& head = next();
    if (head.kind != Token::Kind::atom) {
      throw SyntaxError("expected '*' or 'pow' after '('", head.position);
    }
    if (head.text == "*") {
      std::vector<Term> factors;
      while (peek().kind != Token::Kind::close) {
        factors.push_back(parse_term());
      }
      std::size_t close_pos = next().position;
      if (factors.size() < 2) {
        throw SyntaxError("'*' needs at least two factors", close_pos);
      }
      return make_concat_all(factors);
    }
    if (head.text == "pow") {
      Term base = parse_term();
      Token const& exp_tok = next();
      if (exp_tok.kind != Token::Kind::atom) {
        throw SyntaxError("expected an exponent", exp_tok.position);
      }
      ProfiniteExponent exp = ProfiniteExponent::omega();
      try {
        exp = parse_exponent(exp_tok.text);
      } catch (SyntaxError const& e) {
        throw SyntaxError(e.what(), exp_tok.position);
      }
      if (exp.is_finite() && exp.value() == 1) {
        throw SyntaxError("power with finite exponent 1 is forbidden",
                          exp_tok.position);
      }
      Token const& close = next();
      if (close.kind != Token::Kind::close) {
        throw SyntaxError("expected ')'", close.position);
      }
      return make_power(std::move(base), exp);
    }
    throw SyntaxError("unknown operator '" + head.text + "'", head.position);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

void format_node(TermNode const* node, std::string& out) {
  switch (node->kind) {
    case TermNode::Kind::letter:
      out += node->letter;
      break;
    case TermNode::Kind::concat: {
      // flatten the left spine only, so that parse(format(t)) == t
      std::vector<TermNode const*> items;
      TermNode const* cur = node;
      while (cur->kind == TermNode::Kind::concat) {
        items.push_back(cur->right.get());
        cur = cur->left.get();
      }
      items.push_back(cur);
      out += "(*";
      for (auto it = items.rbegin(); it != items.rend(); ++it) {
        out += ' ';
        format_node(*it, out);
      }
      out += ')';
      break;
    }
    case TermNode::Kind::power:
      out += "(pow ";
      format_node(node->base.get(), out);
      out += ' ';
      out += format_exponent(node->exp);
      out += ')';
      break;
  }
}

}  // namespace

Term parse_term(std::string const& text) {
  std::vector<Token> tokens = tokenize(text);
  if (tokens.empty()) {
    throw SyntaxError("empty input", 0);
  }
  return Parser(std::move(tokens)).parse();
}

std::string format_term(Term const& t) {
  if (!t) {
    throw Error("cannot format a null term");
  }
  std::string out;
  format_node(t.get(), out);
  return out;
}

}  // namespace pointlike
