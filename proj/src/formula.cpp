#include "qlogic/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "qlogic/error.hpp"

namespace qlogic {

Proposition Proposition::simple(std::string name) {
  return Proposition(std::make_shared<const Node>(Node{Kind::simple, std::move(name), {}}));
}

Proposition Proposition::negation(Proposition a) {
  return Proposition(std::make_shared<const Node>(Node{Kind::negation, "", {std::move(a)}}));
}

Proposition Proposition::implication(Proposition a, Proposition b) {
  return Proposition(std::make_shared<const Node>(
      Node{Kind::implication, "", {std::move(a), std::move(b)}}));
}

bool Proposition::operator==(const Proposition& o) const {
  if (node_ == o.node_) return true;
  return node_->kind == o.node_->kind && node_->name == o.node_->name &&
         node_->children == o.node_->children;
}

std::vector<std::string> Proposition::leaves() const {
  std::set<std::string> out;
  auto walk = [&](auto&& self, const Proposition& p) -> void {
    if (p.kind() == Kind::simple) out.insert(p.name());
    for (const auto& c : p.node_->children) self(self, c);
  };
  walk(walk, *this);
  return {out.begin(), out.end()};
}

std::size_t Proposition::depth() const {
  std::size_t d = 0;
  for (const auto& c : node_->children) d = std::max(d, c.depth() + 1);
  return d;
}

Proposition disjunction(Proposition a, Proposition b) {
  return Proposition::implication(Proposition::negation(std::move(a)), std::move(b));
}

Proposition conjunction(Proposition a, Proposition b) {
  return Proposition::negation(
      Proposition::implication(std::move(a), Proposition::negation(std::move(b))));
}

Proposition equivalence(Proposition a, Proposition b) {
  return conjunction(Proposition::implication(a, b), Proposition::implication(b, a));
}

namespace {

enum class Tok { name, prime, arrow, kw_or, kw_and, kw_iff, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '\'') {
      out.push_back({Tok::prime, "'", i++});
    } else if (s.substr(i, 3) == "\xE2\x80\xB2") {  // U+2032 prime
      out.push_back({Tok::prime, "'", i});
      i += 3;
    } else if (s.substr(i, 2) == "->") {
      out.push_back({Tok::arrow, "->", i});
      i += 2;
    } else if (c == '(') {
      out.push_back({Tok::lparen, "(", i++});
    } else if (c == ')') {
      out.push_back({Tok::rparen, ")", i++});
    } else if (name_char(c)) {
      const std::size_t start = i;
      while (i < s.size() && name_char(s[i])) ++i;
      if (i < s.size() && (s[i] == '+' || (s[i] == '-' && s.substr(i, 2) != "->"))) ++i;
      std::string word(s.substr(start, i - start));
      Tok kind = Tok::name;
      if (word == "or") kind = Tok::kw_or;
      if (word == "and") kind = Tok::kw_and;
      if (word == "iff") kind = Tok::kw_iff;
      out.push_back({kind, std::move(word), start});
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  out.push_back({Tok::end, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vocabulary)
      : tokens_(tokenize(text)), vocabulary_(vocabulary.begin(), vocabulary.end()) {}

  Proposition run() {
    auto p = iff();
    if (peek().kind != Tok::end) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
    return p;
  }

 private:
  const Token& peek() const { return tokens_[at_]; }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++at_;
    return true;
  }

  Proposition iff() {
    auto p = implication();
    while (accept(Tok::kw_iff)) p = equivalence(p, implication());
    return p;
  }
  Proposition implication() {
    auto p = disjunct();
    if (accept(Tok::arrow)) return Proposition::implication(p, implication());
    return p;
  }
  Proposition disjunct() {
    auto p = conjunct();
    while (accept(Tok::kw_or)) p = disjunction(p, conjunct());
    return p;
  }
  Proposition conjunct() {
    auto p = postfix();
    while (accept(Tok::kw_and)) p = conjunction(p, postfix());
    return p;
  }
  Proposition postfix() {
    auto p = primary();
    while (accept(Tok::prime)) p = Proposition::negation(p);
    return p;
  }
  Proposition primary() {
    const Token t = peek();
    if (accept(Tok::lparen)) {
      auto p = iff();
      if (!accept(Tok::rparen)) throw ParseError("expected ')'", peek().pos);
      return p;
    }
    if (accept(Tok::name)) {
      if (!vocabulary_.empty() && !vocabulary_.count(t.text)) {
        throw ParseError("unknown name '" + t.text + "'", t.pos);
      }
      return Proposition::simple(t.text);
    }
    if (t.kind == Tok::end) throw ParseError("unexpected end of input", t.pos);
    throw ParseError("unexpected '" + t.text + "'", t.pos);
  }

  std::vector<Token> tokens_;
  std::set<std::string> vocabulary_;
  std::size_t at_ = 0;
};

}  // namespace

Proposition parse(std::string_view text, const std::vector<std::string>& vocabulary) {
  return Parser(text, vocabulary).run();
}

std::string to_string(const Proposition& a) {
  switch (a.kind()) {
    case Proposition::Kind::simple:
      return a.name();
    case Proposition::Kind::negation: {
      const auto& x = a.operand();
      const auto inner = to_string(x);
      return x.kind() == Proposition::Kind::implication ? "(" + inner + ")'" : inner + "'";
    }
    case Proposition::Kind::implication: {
      auto left = to_string(a.left());
      if (a.left().kind() == Proposition::Kind::implication) left = "(" + left + ")";
      return left + " -> " + to_string(a.right());
    }
  }
  return {};
}

bool eval(const Assignment& t, const Proposition& a) {
  switch (a.kind()) {
    case Proposition::Kind::simple: {
      auto it = t.find(a.name());
      if (it == t.end()) throw UnknownElement(a.name());
      return it->second;
    }
    case Proposition::Kind::negation:
      return !eval(t, a.operand());
    case Proposition::Kind::implication:
      return !eval(t, a.left()) || eval(t, a.right());
  }
  return false;
}

CompiledProposition::CompiledProposition(const Proposition& a,
                                         const std::vector<std::string>& names) {
  if (names.size() > 64) throw PreconditionError("at most 64 names per compiled formula");
  auto emit = [&](auto&& self, const Proposition& p) -> void {
    switch (p.kind()) {
      case Proposition::Kind::simple: {
        auto it = std::find(names.begin(), names.end(), p.name());
        if (it == names.end()) throw UnknownElement(p.name());
        code_.push_back(static_cast<std::int32_t>(it - names.begin()));
        break;
      }
      case Proposition::Kind::negation:
        self(self, p.operand());
        code_.push_back(kNeg);
        break;
      case Proposition::Kind::implication:
        self(self, p.left());
        self(self, p.right());
        code_.push_back(kImpl);
        break;
    }
  };
  emit(emit, a);
  std::size_t h = 0;
  for (auto op : code_) {
    if (op >= 0) height_ = std::max(height_, ++h);
    else if (op == kImpl) --h;
  }
}

bool CompiledProposition::operator()(std::uint64_t bits) const {
  if (height_ <= 64) {
    std::uint64_t stack = 0;  // bit i is stack slot i
    std::size_t top = 0;
    for (auto op : code_) {
      if (op >= 0) {
        stack = (stack & ~(std::uint64_t{1} << top)) | (((bits >> op) & 1) << top);
        ++top;
      } else if (op == kNeg) {
        stack ^= std::uint64_t{1} << (top - 1);
      } else {
        --top;
        const auto b = (stack >> top) & 1;
        const auto a = (stack >> (top - 1)) & 1;
        const auto v = (~a | b) & 1;
        stack = (stack & ~(std::uint64_t{1} << (top - 1))) | (v << (top - 1));
      }
    }
    return stack & 1;
  }
  std::vector<bool> stack;
  stack.reserve(height_);
  for (auto op : code_) {
    if (op >= 0) {
      stack.push_back((bits >> op) & 1);
    } else if (op == kNeg) {
      stack.back() = !stack.back();
    } else {
      const bool b = stack.back();
      stack.pop_back();
      stack.back() = !stack.back() || b;
    }
  }
  return stack.back();
}

bool entails(const std::vector<Proposition>& k, const Proposition& a, std::size_t name_bound) {
  std::set<std::string> pool;
  for (const auto& p : k) {
    for (auto& n : p.leaves()) pool.insert(n);
  }
  for (auto& n : a.leaves()) pool.insert(n);
  if (pool.size() > name_bound || pool.size() > 63) {
    throw SearchBoundExceeded("entailment over " + std::to_string(pool.size()) +
                              " names exceeds bound " + std::to_string(name_bound));
  }
  const std::vector<std::string> names(pool.begin(), pool.end());
  std::vector<CompiledProposition> premises;
  for (const auto& p : k) premises.emplace_back(p, names);
  const CompiledProposition goal(a, names);
  const std::uint64_t total = std::uint64_t{1} << names.size();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    const bool models_k =
        std::all_of(premises.begin(), premises.end(), [&](const auto& p) { return p(bits); });
    if (models_k && !goal(bits)) return false;
  }
  return true;
}

Proposition random_proposition(const std::vector<std::string>& names, std::size_t max_depth,
                               std::mt19937_64& rng) {
  if (names.empty()) throw PreconditionError("no names to draw from");
  std::uniform_int_distribution<std::size_t> pick(0, names.size() - 1);
  std::uniform_int_distribution<int> shape(0, 2);
  if (max_depth == 0) return Proposition::simple(names[pick(rng)]);
  switch (shape(rng)) {
    case 0:
      return Proposition::simple(names[pick(rng)]);
    case 1:
      return Proposition::negation(random_proposition(names, max_depth - 1, rng));
    default: {
      auto l = random_proposition(names, max_depth - 1, rng);
      return Proposition::implication(l, random_proposition(names, max_depth - 1, rng));
    }
  }
}

ConReport con_properties_check(const std::vector<Proposition>& k,
                               const std::vector<std::string>& names, std::mt19937_64& rng,
                               std::size_t samples) {
  ConReport report;
  std::vector<Proposition> sample;
  for (std::size_t i = 0; i < samples; ++i) sample.push_back(random_proposition(names, 4, rng));

  for (const auto& p : k) {
    if (!entails(k, p)) {
      report.extensive = false;
      report.failures.push_back("extensivity: " + to_string(p));
    }
  }

  std::vector<bool> in_con(sample.size());
  std::vector<Proposition> con_k = k;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    in_con[i] = entails(k, sample[i]);
    if (in_con[i]) con_k.push_back(sample[i]);
  }

  auto wider = k;
  wider.push_back(random_proposition(names, 3, rng));
  wider.push_back(random_proposition(names, 3, rng));
  for (std::size_t i = 0; i < sample.size(); ++i) {
    if (in_con[i] && !entails(wider, sample[i])) {
      report.monotone = false;
      report.failures.push_back("monotonicity: " + to_string(sample[i]));
    }
    if (entails(con_k, sample[i]) != in_con[i]) {
      report.idempotent = false;
      report.failures.push_back("idempotence: " + to_string(sample[i]));
    }
  }

  // Finitary: shrink K greedily to a subset that still entails each member.
  for (std::size_t i = 0; i < sample.size(); ++i) {
    if (!in_con[i]) continue;
    auto core = k;
    for (std::size_t j = core.size(); j-- > 0;) {
      auto trial = core;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(j));
      if (entails(trial, sample[i])) core = std::move(trial);
    }
    if (!entails(core, sample[i])) {
      report.finitary = false;
      report.failures.push_back("finitary: " + to_string(sample[i]));
    }
  }
  return report;
}

}  // namespace qlogic
