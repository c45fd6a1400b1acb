#include "emcs/io/parse.hpp"

#include <cctype>
#include <map>

#include <json.hpp>

#include "emcs/errors.hpp"

namespace emcs::io {

namespace {

struct Token {
  enum class Kind { identifier, integer, quoted, punct, arrow, end };

  Kind kind = Kind::end;
  std::string text;
  char punct = 0;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token next() {
    Token out = current_;
    advance();
    return out;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, current_.line, current_.column);
  }

private:
  void advance() {
    skip_trivia();
    current_.line = line_;
    current_.column = column_;
    if (pos_ >= text_.size()) {
      current_.kind = Token::Kind::end;
      current_.text.clear();
      return;
    }
    char c = text_[pos_];
    if (c == '<' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
      consume();
      consume();
      current_.kind = Token::Kind::arrow;
      current_.text = "<-";
      return;
    }
    if (c == '\'') {
      consume();
      std::string value;
      while (pos_ < text_.size() && text_[pos_] != '\'' && text_[pos_] != '\n') {
        value += text_[pos_];
        consume();
      }
      if (pos_ >= text_.size() || text_[pos_] != '\'')
        throw ParseError("unterminated quoted constant", current_.line,
                         current_.column);
      consume();
      current_.kind = Token::Kind::quoted;
      current_.text = std::move(value);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string value;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        value += text_[pos_];
        consume();
      }
      current_.kind = Token::Kind::integer;
      current_.text = std::move(value);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string value;
      while (pos_ < text_.size()) {
        char d = text_[pos_];
        bool continues = std::isalnum(static_cast<unsigned char>(d)) ||
                         d == '_' ||
                         (d == '-' && pos_ + 1 < text_.size() &&
                          std::isalnum(static_cast<unsigned char>(
                              text_[pos_ + 1])));
        if (!continues) break;
        value += d;
        consume();
      }
      current_.kind = Token::Kind::identifier;
      current_.text = std::move(value);
      return;
    }
    consume();
    current_.kind = Token::Kind::punct;
    current_.punct = c;
    current_.text.assign(1, c);
  }

  void skip_trivia() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') consume();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        consume();
      } else {
        break;
      }
    }
  }

  void consume() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  Token current_;
};

bool is_variable_name(const std::string& text) {
  return text.size() == 1 && std::islower(static_cast<unsigned char>(text[0]));
}

class SystemParser {
public:
  explicit SystemParser(std::string_view text) : lexer_(text) {}

  Emcs parse() {
    while (lexer_.peek().kind != Token::Kind::end) parse_context();
    resolve_literals();
    return std::move(system_);
  }

private:
  struct PendingLiteral {
    std::size_t context = 0;  // owner, 0-based
    std::size_t rule = 0;
    std::size_t position = 0;
    std::string name;  // empty when given numerically
    std::size_t line = 1, column = 1;
  };

  Lexer lexer_;
  Emcs system_;
  std::vector<PendingLiteral> pending_;

  Token expect(Token::Kind kind, const std::string& what) {
    if (lexer_.peek().kind != kind) lexer_.fail("expected " + what);
    return lexer_.next();
  }

  void expect_punct(char c) {
    const Token& token = lexer_.peek();
    if (token.kind != Token::Kind::punct || token.punct != c)
      lexer_.fail(std::string("expected '") + c + "'");
    lexer_.next();
  }

  bool accept_punct(char c) {
    const Token& token = lexer_.peek();
    if (token.kind == Token::Kind::punct && token.punct == c) {
      lexer_.next();
      return true;
    }
    return false;
  }

  std::string expect_identifier(const std::string& what) {
    return expect(Token::Kind::identifier, what).text;
  }

  void expect_keyword(const std::string& word) {
    const Token& token = lexer_.peek();
    if (token.kind != Token::Kind::identifier || token.text != word)
      lexer_.fail("expected '" + word + "'");
    lexer_.next();
  }

  bool peek_keyword(const std::string& word) const {
    const Token& token = lexer_.peek();
    return token.kind == Token::Kind::identifier && token.text == word;
  }

  std::string expect_constant() {
    const Token& token = lexer_.peek();
    if (token.kind == Token::Kind::quoted ||
        token.kind == Token::Kind::identifier ||
        token.kind == Token::Kind::integer)
      return lexer_.next().text;
    lexer_.fail("expected a constant");
  }

  Term parse_term() {
    const Token& token = lexer_.peek();
    if (token.kind == Token::Kind::quoted)
      return Term::make_constant(lexer_.next().text);
    if (token.kind == Token::Kind::integer)
      return Term::make_constant(lexer_.next().text);
    if (token.kind == Token::Kind::identifier) {
      std::string text = lexer_.next().text;
      if (is_variable_name(text)) return Term::make_variable(std::move(text));
      return Term::make_constant(std::move(text));
    }
    lexer_.fail("expected a term");
  }

  SchematicAtom parse_atom() {
    SchematicAtom atom;
    atom.predicate = expect_identifier("a predicate name");
    if (accept_punct('(')) {
      atom.args.push_back(parse_term());
      while (accept_punct(',')) atom.args.push_back(parse_term());
      expect_punct(')');
    }
    return atom;
  }

  void parse_context() {
    expect_keyword("context");
    EvolvingContext context;
    context.name = expect_identifier("a context name");
    if (system_.index_of(context.name))
      lexer_.fail("context name '" + context.name + "' already used");
    expect_punct(':');
    std::string kind = expect_identifier("a context kind");
    if (kind != "observation" && kind != "datalog" && kind != "normal-lp" &&
        kind != "el")
      lexer_.fail("unknown context kind '" + kind + "'");
    context.logic = make_logic(kind);
    context.is_observation = kind == "observation";
    expect_punct('{');
    while (!accept_punct('}')) {
      if (peek_keyword("vocab")) {
        parse_vocab(context);
      } else if (peek_keyword("kb")) {
        parse_kb(context, kind);
      } else if (peek_keyword("bridge")) {
        parse_bridge(context);
      } else if (peek_keyword("ops")) {
        parse_ops(context);
      } else {
        lexer_.fail("expected vocab, kb, bridge, ops, or '}'");
      }
    }
    system_.contexts.push_back(std::move(context));
  }

  void parse_vocab(EvolvingContext& context) {
    expect_keyword("vocab");
    expect_punct('{');
    while (!accept_punct('}')) {
      if (peek_keyword("pred")) {
        lexer_.next();
        std::string name = expect_identifier("a predicate name");
        expect_punct('/');
        Token arity = expect(Token::Kind::integer, "an arity");
        context.vocabulary.declare(name,
                                   static_cast<std::size_t>(
                                       std::stoul(arity.text)));
      } else if (peek_keyword("const")) {
        lexer_.next();
        context.vocabulary.constants.insert(expect_constant());
        while (accept_punct(','))
          context.vocabulary.constants.insert(expect_constant());
      } else {
        lexer_.fail("expected pred or const");
      }
      expect_punct(';');
    }
  }

  void parse_kb(EvolvingContext& context, const std::string& kind) {
    expect_keyword("kb");
    expect_punct('{');
    while (!accept_punct('}')) {
      if (kind == "el")
        context.kb.insert(parse_el_statement());
      else
        context.kb.insert(parse_lp_statement(kind));
      expect_punct(';');
    }
  }

  Statement parse_lp_statement(const std::string& kind) {
    SchematicAtom head = parse_atom();
    if (lexer_.peek().kind != Token::Kind::arrow) {
      if (!head.is_ground()) lexer_.fail("facts must be ground");
      return head.to_ground();
    }
    lexer_.next();
    LpRule rule;
    rule.head = std::move(head);
    do {
      LpLiteral literal;
      if (accept_punct('~')) literal.negated = true;
      literal.atom = parse_atom();
      if (literal.negated && kind != "normal-lp")
        lexer_.fail("default negation needs a normal-lp context");
      rule.body.push_back(std::move(literal));
    } while (accept_punct(','));
    return rule;
  }

  Statement parse_el_statement() {
    if (peek_keyword("some")) {
      // some r {o} sub B   |   some r A sub B   |   some r top sub B
      lexer_.next();
      std::string role = expect_identifier("a role name");
      if (accept_punct('{')) {
        std::string nominal = expect_constant();
        expect_punct('}');
        expect_keyword("sub");
        return ElAxiom::nominal_left(role, nominal,
                                     expect_identifier("a concept name"));
      }
      std::string filler = expect_identifier("a concept name or top");
      expect_keyword("sub");
      return ElAxiom::existential(role, filler == "top" ? "" : filler,
                                  expect_identifier("a concept name"));
    }
    std::string first = expect_identifier("a concept or predicate name");
    if (accept_punct('(')) {
      SchematicAtom atom;
      atom.predicate = std::move(first);
      atom.args.push_back(parse_term());
      while (accept_punct(',')) atom.args.push_back(parse_term());
      expect_punct(')');
      if (!atom.is_ground()) lexer_.fail("EL assertions must be ground");
      return atom.to_ground();
    }
    if (peek_keyword("and")) {
      lexer_.next();
      std::string second = expect_identifier("a concept name");
      expect_keyword("sub");
      if (peek_keyword("bot")) {
        lexer_.next();
        return ElAxiom::disjoint(first, second);
      }
      return ElAxiom::conjunction(first, second,
                                  expect_identifier("a concept name or bot"));
    }
    expect_keyword("sub");
    if (peek_keyword("some")) {
      lexer_.next();
      std::string role = expect_identifier("a role name");
      expect_punct('{');
      std::string nominal = expect_constant();
      expect_punct('}');
      return ElAxiom::nominal_right(first, role, nominal);
    }
    if (peek_keyword("bot"))
      lexer_.fail("'A sub bot' is outside the supported fragment; use "
                  "'A and A sub bot'");
    return ElAxiom::subsumption(first, expect_identifier("a concept name"));
  }

  void parse_bridge(EvolvingContext& context) {
    expect_keyword("bridge");
    expect_punct('{');
    while (!accept_punct('}')) {
      SchematicBridgeRule rule;
      std::string op = expect_identifier("an operation or next");
      if (op == "next") {
        expect_punct('(');
        rule.head.op = expect_identifier("an operation name");
        rule.head.next_wrapped = true;
        expect_punct('(');
        rule.head.formula = parse_atom();
        expect_punct(')');
        expect_punct(')');
      } else {
        rule.head.op = std::move(op);
        expect_punct('(');
        rule.head.formula = parse_atom();
        expect_punct(')');
      }
      if (lexer_.peek().kind == Token::Kind::arrow) {
        lexer_.next();
        do {
          SchematicBridgeLiteral literal;
          if (peek_keyword("not")) {
            lexer_.next();
            literal.negated = true;
          }
          const Token& open = lexer_.peek();
          expect_punct('(');
          PendingLiteral pending;
          pending.line = open.line;
          pending.column = open.column;
          const Token& reference = lexer_.peek();
          if (reference.kind == Token::Kind::integer) {
            literal.context_index =
                static_cast<std::size_t>(std::stoul(lexer_.next().text));
          } else {
            pending.name = expect_identifier("a context name or index");
          }
          expect_punct(':');
          literal.formula = parse_atom();
          expect_punct(')');
          if (!pending.name.empty()) {
            pending.context = system_.contexts.size();
            pending.rule = context.bridge_rules.size();
            pending.position = rule.body.size();
            pending_.push_back(pending);
          }
          rule.body.push_back(std::move(literal));
        } while (accept_punct(','));
      }
      expect_punct(';');
      context.bridge_rules.push_back(std::move(rule));
    }
  }

  void parse_ops(EvolvingContext& context) {
    expect_keyword("ops");
    expect_punct('{');
    context.op_base.clear();
    context.op_base.insert(expect_identifier("an operation name"));
    while (accept_punct(','))
      context.op_base.insert(expect_identifier("an operation name"));
    expect_punct(';');
    expect_punct('}');
  }

  void resolve_literals() {
    for (const PendingLiteral& pending : pending_) {
      std::optional<std::size_t> index = system_.index_of(pending.name);
      if (!index)
        throw ParseError("unknown context name '" + pending.name + "'",
                         pending.line, pending.column);
      system_.contexts[pending.context]
          .bridge_rules[pending.rule]
          .body[pending.position]
          .context_index = *index;
    }
  }
};

}  // namespace

Emcs parse_system(std::string_view text) {
  SystemParser parser(text);
  return parser.parse();
}

GroundAtom parse_ground_atom(std::string_view text) {
  Lexer lexer(text);
  if (lexer.peek().kind != Token::Kind::identifier)
    lexer.fail("expected a predicate name");
  GroundAtom atom;
  atom.predicate = lexer.next().text;
  auto accept_punct = [&](char c) {
    if (lexer.peek().kind == Token::Kind::punct && lexer.peek().punct == c) {
      lexer.next();
      return true;
    }
    return false;
  };
  if (accept_punct('(')) {
    do {
      const Token& token = lexer.peek();
      if (token.kind != Token::Kind::identifier &&
          token.kind != Token::Kind::quoted &&
          token.kind != Token::Kind::integer)
        lexer.fail("expected a constant");
      atom.args.push_back(lexer.next().text);
    } while (accept_punct(','));
    if (!accept_punct(')')) lexer.fail("expected ')'");
  }
  if (lexer.peek().kind != Token::Kind::end)
    lexer.fail("trailing input after atom");
  return atom;
}

namespace {

std::vector<std::pair<std::size_t, std::string>> nonempty_lines(
    std::string_view text) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::size_t line_number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_number;
    std::string line(text.substr(start, end - start));
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line[first] != '#')
      lines.emplace_back(line_number, line);
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

BeliefSet parse_atom_array(const nlohmann::json& array, std::size_t line) {
  if (!array.is_array())
    throw ParseError("expected an array of atom strings", line, 1);
  BeliefSet atoms;
  for (const auto& entry : array) {
    if (!entry.is_string())
      throw ParseError("expected an atom string", line, 1);
    try {
      atoms.insert(parse_ground_atom(entry.get<std::string>()));
    } catch (const ParseError& error) {
      throw ParseError(std::string("bad atom '") + entry.get<std::string>() +
                           "': " + error.what(),
                       line, 1);
    }
  }
  return atoms;
}

}  // namespace

ObservationSequence parse_observations(std::string_view text,
                                       const Emcs& system) {
  const std::size_t observation = system.observation_count();
  ObservationSequence sequence;
  for (const auto& [line, content] : nonempty_lines(text)) {
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(content);
    } catch (const nlohmann::json::exception& error) {
      throw ParseError(std::string("malformed record: ") + error.what(), line,
                       1);
    }
    if (!record.is_object())
      throw ParseError("instant record must be an object", line, 1);
    ObservationInstant instant;
    instant.observations.resize(observation);
    for (const auto& [name, value] : record.items()) {
      std::optional<std::size_t> index = system.index_of(name);
      if (!index)
        throw ParseError("unknown context name '" + name + "'", line, 1);
      if (*index > observation)
        throw ParseError("context '" + name + "' is not an observation context",
                         line, 1);
      const EvolvingContext& context = system.contexts[*index - 1];
      for (const GroundAtom& atom : parse_atom_array(value, line)) {
        if (!context.vocabulary.admits(atom))
          throw ParseError("atom " + to_string(atom) +
                               " not in the vocabulary of context " + name,
                           line, 1);
        instant.observations[*index - 1].insert(atom);
      }
    }
    sequence.instants.push_back(std::move(instant));
  }
  return sequence;
}

std::vector<StateRecord> parse_state_file(std::string_view text,
                                          const Emcs& system) {
  std::vector<StateRecord> records;
  for (const auto& [line, content] : nonempty_lines(text)) {
    nlohmann::json parsed;
    try {
      parsed = nlohmann::json::parse(content);
    } catch (const nlohmann::json::exception& error) {
      throw ParseError(std::string("malformed record: ") + error.what(), line,
                       1);
    }
    if (!parsed.is_object())
      throw ParseError("state record must be an object", line, 1);

    StateRecord record;
    const nlohmann::json* body = &parsed;
    if (parsed.contains("state")) {
      body = &parsed.at("state");
      if (parsed.contains("instant") && parsed.at("instant").is_number())
        record.instant = parsed.at("instant").get<std::size_t>();
    }
    if (record.instant == 0) record.instant = records.size() + 1;
    if (!body->is_object())
      throw ParseError("state must be an object", line, 1);

    record.state = BeliefState::empty(system.size());
    for (const auto& [name, value] : body->items()) {
      std::optional<std::size_t> index = system.index_of(name);
      if (!index)
        throw ParseError("unknown context name '" + name + "'", line, 1);
      record.state.components[*index - 1] = parse_atom_array(value, line);
    }
    records.push_back(std::move(record));
  }
  return records;
}

}  // namespace emcs::io
