#include "negset/session/parser.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace negset::session {

namespace {

constexpr std::array<std::string_view, 16> kReserved = {
    "universe", "agent", "strong", "weak",  "dominance", "policy", "let",   "eval",
    "assert_disc", "expect", "odot", "oplus", "union", "inter", "minus", "not"};

std::optional<SetOp> set_op(std::string_view word) {
  if (word == "odot") return SetOp::odot;
  if (word == "oplus") return SetOp::oplus;
  if (word == "union") return SetOp::union_;
  if (word == "inter") return SetOp::inter;
  return std::nullopt;
}

struct PendingRelation {
  NamePair pair;
  int line;
  int column;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  SessionScript run() {
    while (!at(TokenKind::end)) {
      if (accept(TokenKind::newline)) continue;
      line();
    }
    if (!universe_) {
      const auto& t = peek();
      throw SessionError(ErrorCode::ValidationError, t.line, t.column, "missing universe declaration");
    }
    ContradictionSpec spec = build_contradictions();
    validate_policy();
    return SessionScript{universe_,  std::move(agents_),   strip(strong_), strip(weak_),
                         strip(dominance_), std::move(spec), policy_,         std::move(statements_)};
  }

 private:
  // --- token helpers -----------------------------------------------------
  const Token& peek() const { return tokens_[pos_]; }
  bool at(TokenKind kind) const { return peek().kind == kind; }
  bool at_word(std::string_view text) const { return at(TokenKind::word) && peek().text == text; }

  bool accept(TokenKind kind) {
    if (!at(kind)) return false;
    ++pos_;
    return true;
  }

  const Token& expect(TokenKind kind, std::string_view what) {
    if (!at(kind)) {
      const auto& t = peek();
      std::string found = t.kind == TokenKind::word ? "'" + t.text + "'" : std::string(describe(t.kind));
      throw SessionError(ErrorCode::ParseError, t.line, t.column,
                         "expected " + std::string(what) + ", found " + found);
    }
    return tokens_[pos_++];
  }

  [[noreturn]] void invalid(const Token& at, const std::string& message) const {
    throw SessionError(ErrorCode::ValidationError, at.line, at.column, message);
  }

  void end_of_line() { expect(TokenKind::newline, "end of line"); }

  // --- statements ----------------------------------------------------------
  void line() {
    const Token& head = expect(TokenKind::word, "a declaration or statement keyword");
    const std::string& kw = head.text;

    if (kw == "universe") return universe_decl(head);
    if (!universe_) invalid(head, "the universe must be declared before '" + kw + "'");

    bool is_decl = kw == "agent" || kw == "strong" || kw == "weak" || kw == "dominance" || kw == "policy";
    if (is_decl && !statements_.empty()) {
      invalid(head, "declaration '" + kw + "' after the first statement");
    }

    if (kw == "agent") return agent_decl();
    if (kw == "strong") return relation_decl(strong_);
    if (kw == "weak") return relation_decl(weak_);
    if (kw == "dominance") return dominance_decl();
    if (kw == "policy") return policy_decl(head);
    if (kw == "let") return let_stmt();
    if (kw == "eval") return simple_stmt(StatementKind::eval);
    if (kw == "assert_disc") return simple_stmt(StatementKind::assert_disc);
    if (kw == "expect") return expect_stmt();
    throw SessionError(ErrorCode::ParseError, head.line, head.column, "unknown keyword '" + kw + "'");
  }

  void universe_decl(const Token& head) {
    if (universe_) invalid(head, "universe declared twice");
    std::vector<std::string> names;
    std::set<std::string> seen;
    while (at(TokenKind::word)) {
      const Token& t = tokens_[pos_++];
      if (!seen.insert(t.text).second) invalid(t, "duplicate object '" + t.text + "'");
      names.push_back(t.text);
    }
    if (names.empty()) invalid(head, "universe needs at least one object");
    end_of_line();
    universe_ = make_universe(std::move(names));
  }

  std::string fresh_name(const Token& t) {
    if (is_reserved(t.text)) invalid(t, "'" + t.text + "' is a reserved word");
    if (names_.count(t.text)) invalid(t, "name '" + t.text + "' is already defined");
    return t.text;
  }

  void agent_decl() {
    const Token& name_tok = expect(TokenKind::word, "an agent name");
    std::string name = fresh_name(name_tok);
    expect(TokenKind::equals, "'='");
    NegotiationSet value = negset_literal();
    end_of_line();
    agents_.push_back(AgentDecl{name, std::move(value)});
    names_.emplace(name, NameKind::agent);
  }

  const Token& object(std::string_view what) {
    const Token& t = expect(TokenKind::word, what);
    if (!universe_->index_of(t.text)) invalid(t, "unknown object '" + t.text + "'");
    return t;
  }

  void relation_decl(std::vector<PendingRelation>& into) {
    const Token& x = object("an object");
    const Token& y = object("an object");
    end_of_line();
    if (x.text == y.text) invalid(x, "object '" + x.text + "' cannot contradict itself");
    auto same_pair = [&](const PendingRelation& r) {
      return (r.pair.first == x.text && r.pair.second == y.text) ||
             (r.pair.first == y.text && r.pair.second == x.text);
    };
    const auto& other = &into == &strong_ ? weak_ : strong_;
    if (std::any_of(other.begin(), other.end(), same_pair)) {
      invalid(x, "pair (" + x.text + "," + y.text + ") is declared both strong and weak");
    }
    into.push_back({{x.text, y.text}, x.line, x.column});
  }

  void dominance_decl() {
    const Token& x = object("an object");
    expect(TokenKind::greater, "'>'");
    const Token& y = object("an object");
    end_of_line();
    dominance_.push_back({{x.text, y.text}, x.line, x.column});
  }

  void policy_decl(const Token& head) {
    if (policy_line_) invalid(head, "policy declared twice");
    policy_line_ = head;
    const Token& kind = expect(TokenKind::word, "a policy name");
    if (kind.text == "strict") {
      policy_ = ResolutionPolicy::strict();
    } else if (kind.text == "dominance") {
      policy_ = ResolutionPolicy::object_dominance();
    } else if (kind.text == "fewest-necessities") {
      policy_ = ResolutionPolicy::fewest_necessities();
    } else if (kind.text == "agent-priority") {
      std::vector<std::string> ranking;
      std::set<std::string> seen;
      do {
        const Token& agent = expect(TokenKind::word, "an agent name");
        if (!seen.insert(agent.text).second) {
          invalid(agent, "agent '" + agent.text + "' appears twice in the ranking");
        }
        ranking.push_back(agent.text);
      } while (accept(TokenKind::greater));
      policy_ = ResolutionPolicy::agent_priority(std::move(ranking));
    } else {
      throw SessionError(ErrorCode::ParseError, kind.line, kind.column,
                         "unknown policy '" + kind.text + "'");
    }
    end_of_line();
  }

  void let_stmt() {
    const Token& name_tok = expect(TokenKind::word, "a binding name");
    std::string name = fresh_name(name_tok);
    expect(TokenKind::equals, "'='");
    ExprPtr e = expr();
    end_of_line();
    statements_.push_back(Statement{StatementKind::let, name, std::move(e), std::nullopt});
    names_.emplace(name, NameKind::binding);
  }

  void simple_stmt(StatementKind kind) {
    ExprPtr e = expr();
    end_of_line();
    statements_.push_back(Statement{kind, "", std::move(e), std::nullopt});
  }

  void expect_stmt() {
    ExprPtr e = expr();
    expect(TokenKind::equals, "'='");
    NegotiationSet expected = negset_literal();
    end_of_line();
    statements_.push_back(Statement{StatementKind::expect, "", std::move(e), std::move(expected)});
  }

  // --- literals ------------------------------------------------------------
  FiniteSet set_literal() {
    expect(TokenKind::lbrace, "'{'");
    FiniteSet out(universe_);
    bool first = true;
    while (!at(TokenKind::rbrace)) {
      if (!first) accept(TokenKind::comma);
      const Token& member = object("an object or '}'");
      out = out.with(*universe_->index_of(member.text));
      first = false;
    }
    expect(TokenKind::rbrace, "'}'");
    return out;
  }

  NegotiationSet negset_literal() {
    const Token& open = expect(TokenKind::lbracket, "'['");
    FiniteSet necessity = set_literal();
    accept(TokenKind::comma);
    FiniteSet admissibility = set_literal();
    expect(TokenKind::rbracket, "']'");
    if (!necessity.is_subset_of(admissibility)) {
      invalid(open, "necessity " + necessity.to_string() + " is not contained in admissibility " +
                        admissibility.to_string());
    }
    return NegotiationSet(std::move(necessity), std::move(admissibility));
  }

  // --- expressions ---------------------------------------------------------
  // expr  := unary { infix unary }     (one precedence level, left-assoc)
  // unary := 'not' unary | primary
  ExprPtr expr() {
    ExprPtr left = unary();
    while (at(TokenKind::word)) {
      const std::string& word = peek().text;
      if (word == "minus") {
        ++pos_;
        left = make_expr(Difference{left, unary()});
      } else if (auto op = set_op(word)) {
        ++pos_;
        left = make_expr(Binary{*op, left, unary()});
      } else {
        break;
      }
    }
    return left;
  }

  ExprPtr unary() {
    if (at_word("not")) {
      ++pos_;
      return make_expr(Complement{unary()});
    }
    return primary();
  }

  ExprPtr primary() {
    if (accept(TokenKind::lparen)) {
      ExprPtr inner = expr();
      expect(TokenKind::rparen, "')'");
      return inner;
    }
    const Token& t = expect(TokenKind::word, "an expression");
    if (auto op = set_op(t.text)) {
      expect(TokenKind::lparen, "'(' after '" + t.text + "'");
      std::vector<ExprPtr> operands;
      operands.push_back(expr());
      while (accept(TokenKind::comma)) operands.push_back(expr());
      expect(TokenKind::rparen, "')'");
      return make_expr(Nary{*op, std::move(operands)});
    }
    if (is_reserved(t.text)) {
      throw SessionError(ErrorCode::ParseError, t.line, t.column,
                         "unexpected keyword '" + t.text + "' in expression");
    }
    auto it = names_.find(t.text);
    if (it == names_.end()) invalid(t, "unknown name '" + t.text + "'");
    if (it->second == NameKind::agent) return make_expr(AgentRef{t.text});
    return make_expr(BindingRef{t.text});
  }

  // --- final validation ----------------------------------------------------
  ContradictionSpec build_contradictions() {
    auto names = [](const std::vector<PendingRelation>& rs) { return strip(rs); };
    try {
      return make_contradiction_spec(universe_, names(strong_), names(weak_), names(dominance_));
    } catch (const Error& e) {
      const PendingRelation* where = !dominance_.empty() ? &dominance_.back()
                                     : !weak_.empty()    ? &weak_.back()
                                                         : &strong_.back();
      throw SessionError(ErrorCode::ValidationError, where->line, where->column, e.what());
    }
  }

  void validate_policy() {
    if (policy_.kind() != ResolutionPolicy::Kind::agent_priority) return;
    const Token& at = *policy_line_;
    for (const auto& name : policy_.ranking()) {
      auto it = names_.find(name);
      if (it == names_.end() || it->second != NameKind::agent) {
        invalid(at, "ranking names unknown agent '" + name + "'");
      }
    }
    for (const auto& agent : agents_) {
      if (!policy_.rank_of(agent.name)) invalid(at, "ranking does not cover agent '" + agent.name + "'");
    }
  }

  static std::vector<NamePair> strip(const std::vector<PendingRelation>& rs) {
    std::vector<NamePair> out;
    out.reserve(rs.size());
    for (const auto& r : rs) out.push_back(r.pair);
    return out;
  }

  enum class NameKind { agent, binding };

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;

  UniversePtr universe_;
  std::vector<AgentDecl> agents_;
  std::vector<PendingRelation> strong_;
  std::vector<PendingRelation> weak_;
  std::vector<PendingRelation> dominance_;
  ResolutionPolicy policy_ = ResolutionPolicy::strict();
  std::optional<Token> policy_line_;
  std::vector<Statement> statements_;
  std::map<std::string, NameKind, std::less<>> names_;
};

}  // namespace

bool is_reserved(std::string_view word) noexcept {
  return std::find(kReserved.begin(), kReserved.end(), word) != kReserved.end();
}

SessionScript parse_session(std::string_view text) {
  return Parser(text).run();
}

}  // namespace negset::session
