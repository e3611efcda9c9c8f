#include "revcount/netlist_format.hpp"

#include "format_detail.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace revcount {

ParseError::ParseError(std::string message, std::size_t line, std::size_t column)
  : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message)
  , message_(std::move(message))
  , line_(line)
  , column_(column)
{
}

namespace detail {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line)
{
  if (auto hash = line.find('#'); hash != std::string_view::npos) {
    line = line.substr(0, hash);
  }
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    auto const start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    if (i > start) {
      tokens.push_back({line.substr(start, i - start), start + 1});
    }
  }
  return tokens;
}

bool is_identifier(std::string_view s)
{
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
    return false;
  }
  for (auto c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
      return false;
    }
  }
  return true;
}

class Parser {
public:
  explicit Parser(std::string_view text)
    : text_(text)
  {
  }

  Document run()
  {
    std::size_t pos = 0;
    bool ended = false;
    while (pos <= text_.size()) {
      auto const nl = text_.find('\n', pos);
      auto line = text_.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
      if (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
      }
      ++lineno_;
      tokens_ = tokenize(line);
      if (!tokens_.empty()) {
        if (ended) {
          fail("content after .end", 0);
        }
        ended = directive();
      }
      if (nl == std::string_view::npos) {
        break;
      }
      pos = nl + 1;
    }
    if (!ended) {
      throw ParseError("missing .end", lineno_, 1);
    }
    finish();
    return std::move(*doc_);
  }

private:
  [[noreturn]] void fail(std::string const& message, std::size_t token) const
  {
    auto const column = token < tokens_.size() ? tokens_[token].column : 1;
    throw ParseError(message, lineno_, column);
  }

  void expect_count(std::size_t n, std::size_t leading = 1) const
  {
    if (tokens_.size() < n) {
      throw ParseError(std::string(tokens_[leading - 1].text) + " expects " + std::to_string(n - leading) +
                         " operand(s)",
                       lineno_,
                       tokens_.back().column + tokens_.back().text.size());
    }
    if (tokens_.size() > n) {
      fail("unexpected token '" + std::string(tokens_[n].text) + "'", n);
    }
  }

  std::size_t number(std::size_t token) const
  {
    auto const s = tokens_[token].text;
    std::size_t value = 0;
    auto const [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      fail("expected a non-negative integer, got '" + std::string(s) + "'", token);
    }
    return value;
  }

  std::uint8_t bit(std::size_t token) const
  {
    auto const v = number(token);
    if (v > 1) {
      fail("expected 0 or 1, got '" + std::string(tokens_[token].text) + "'", token);
    }
    return static_cast<std::uint8_t>(v);
  }

  std::size_t index(std::size_t token) const
  {
    if (!doc_) {
      fail(".lines must precede line references", token);
    }
    auto const v = number(token);
    if (v >= doc_->netlist.line_count()) {
      fail("line index " + std::to_string(v) + " out of range (0.." + std::to_string(doc_->netlist.line_count() - 1) +
             ")",
           token);
    }
    return v;
  }

  std::string name(std::size_t token) const
  {
    auto const s = tokens_[token].text;
    if (!is_identifier(s)) {
      fail("invalid name '" + std::string(s) + "'", token);
    }
    return std::string(s);
  }

  void set_input(std::size_t line, InputRole role)
  {
    if (doc_->netlist.input(line)) {
      fail("duplicate input role for line " + std::to_string(line), 1);
    }
    doc_->netlist.set_input(line, std::move(role));
  }

  void set_output(std::size_t line, OutputRole role)
  {
    if (doc_->netlist.output(line)) {
      fail("duplicate output role for line " + std::to_string(line), 1);
    }
    doc_->netlist.set_output(line, std::move(role));
  }

  // Returns true on `.end`.
  bool directive()
  {
    auto const head = tokens_[0].text;
    if (!seen_header_) {
      if (head != ".rnl") {
        fail("file must start with '.rnl 1'", 0);
      }
      expect_count(2);
      if (number(1) != 1) {
        fail("unsupported format version " + std::string(tokens_[1].text), 1);
      }
      seen_header_ = true;
      return false;
    }

    if (head == ".rnl") {
      fail("duplicate .rnl header", 0);
    } else if (head == ".lines") {
      expect_count(2);
      if (doc_) {
        fail("duplicate .lines", 0);
      }
      auto const count = number(1);
      if (count == 0) {
        fail(".lines must be at least 1", 1);
      }
      doc_.emplace(Document{Netlist(count), std::nullopt, {}, 0});
    } else if (head == ".input") {
      expect_count(3);
      auto const line = index(1);
      set_input(line, InputRole::primary(name(2)));
    } else if (head == ".const") {
      expect_count(3);
      auto const line = index(1);
      set_input(line, InputRole::constant(bit(2)));
    } else if (head == ".output") {
      expect_count(3);
      auto const line = index(1);
      set_output(line, OutputRole::primary(name(2)));
    } else if (head == ".garbage") {
      expect_count(2);
      set_output(index(1), OutputRole::garbage());
    } else if (head == ".consumed") {
      expect_count(2);
      set_output(index(1), OutputRole::consumed());
    } else if (head == ".feedback") {
      expect_count(4);
      auto const out = index(1);
      auto const in = index(2);
      set_output(out, OutputRole::feedback(in, bit(3)));
      feedback_lines_.push_back({in, lineno_, tokens_[2].column});
    } else if (head == ".clock") {
      expect_count(2);
      auto const line = index(1);
      if (doc_->clock) {
        fail("duplicate .clock", 0);
      }
      doc_->clock = line;
    } else if (head == ".stage") {
      stage();
    } else if (head == "gate") {
      if (tokens_.size() < 2) {
        fail("gate needs a name", 0);
      }
      auto const* g = find_gate(tokens_[1].text);
      if (!g) {
        fail("unknown gate '" + std::string(tokens_[1].text) + "'", 1);
      }
      expect_count(2 + g->arity(), 2);
      std::vector<std::size_t> lines;
      for (std::size_t j = 0; j < g->arity(); ++j) {
        lines.push_back(index(2 + j));
      }
      if (!doc_) {
        fail(".lines must precede gates", 0);
      }
      doc_->netlist.add_gate(*g, std::move(lines));
    } else if (head == ".end") {
      expect_count(1);
      if (!doc_) {
        fail("missing .lines", 0);
      }
      doc_->end_line = lineno_;
      return true;
    } else {
      fail("unknown directive '" + std::string(head) + "'", 0);
    }
    return false;
  }

  void stage()
  {
    expect_count(8);
    if (!doc_) {
      fail(".lines must precede .stage", 0);
    }
    RawStage s;
    s.index = number(1);
    auto const clock = tokens_[2].text;
    if (clock == "global") {
      s.clock_stage = std::nullopt;
    } else if (clock.size() > 1 && clock[0] == 'q') {
      std::size_t j = 0;
      auto const [ptr, ec] = std::from_chars(clock.data() + 1, clock.data() + clock.size(), j);
      if (ec != std::errc{} || ptr != clock.data() + clock.size()) {
        fail("expected 'global' or q<stage>, got '" + std::string(clock) + "'", 2);
      }
      s.clock_stage = j;
    } else {
      fail("expected 'global' or q<stage>, got '" + std::string(clock) + "'", 2);
    }
    auto const edge = tokens_[3].text;
    if (edge != "rise" && edge != "fall") {
      fail("expected 'rise' or 'fall', got '" + std::string(edge) + "'", 3);
    }
    s.falling = edge == "fall";
    s.first_gate = number(4);
    s.end_gate = number(5);
    if (tokens_[6].text != "-") {
      s.clock_line = index(6);
    }
    s.feedback = number(7);
    s.source_line = lineno_;
    doc_->stages.push_back(s);
  }

  void finish()
  {
    auto const& nl = doc_->netlist;
    for (std::size_t i = 0; i < nl.line_count(); ++i) {
      if (!nl.input(i)) {
        throw ParseError("line " + std::to_string(i) + " has no input directive", doc_->end_line, 1);
      }
      if (!nl.output(i)) {
        throw ParseError("line " + std::to_string(i) + " has no output directive", doc_->end_line, 1);
      }
    }
    for (auto const& [line, row, column] : feedback_lines_) {
      if (nl.input(line)->is_constant()) {
        throw ParseError("feedback destination line " + std::to_string(line) + " is constant", row, column);
      }
    }
    for (auto const& v : validate(nl)) {
      if (v.kind == Violation::Kind::BadFeedback || v.kind == Violation::Kind::DuplicateName) {
        throw ParseError(v.message, doc_->end_line, 1);
      }
    }
  }

  struct FeedbackRef {
    std::size_t line;
    std::size_t row;
    std::size_t column;
  };

  std::string_view text_;
  std::size_t lineno_ = 0;
  std::vector<Token> tokens_;
  bool seen_header_ = false;
  std::optional<Document> doc_;
  std::vector<FeedbackRef> feedback_lines_;
};

} // namespace

Document parse_document(std::string_view text)
{
  return Parser(text).run();
}

std::string write_document(Netlist const& netlist, std::optional<std::size_t> clock, std::span<const RawStage> stages)
{
  std::ostringstream os;
  os << ".rnl 1\n";
  os << ".lines " << netlist.line_count() << '\n';
  for (std::size_t i = 0; i < netlist.line_count(); ++i) {
    auto const& in = netlist.input(i);
    if (!in) {
      continue;
    }
    if (in->is_constant()) {
      os << ".const " << i << ' ' << int(in->value) << '\n';
    } else {
      os << ".input " << i << ' ' << in->name << '\n';
    }
  }
  for (std::size_t i = 0; i < netlist.line_count(); ++i) {
    auto const& o = netlist.output(i);
    if (!o) {
      continue;
    }
    switch (o->kind) {
    case OutputRole::Kind::Primary: os << ".output " << i << ' ' << o->name << '\n'; break;
    case OutputRole::Kind::Garbage: os << ".garbage " << i << '\n'; break;
    case OutputRole::Kind::Consumed: os << ".consumed " << i << '\n'; break;
    case OutputRole::Kind::Feedback:
      os << ".feedback " << i << ' ' << o->feedback_dest << ' ' << int(o->feedback_init) << '\n';
      break;
    }
  }
  if (clock) {
    os << ".clock " << *clock << '\n';
  }
  for (auto const& s : stages) {
    os << ".stage " << s.index << ' ';
    if (s.clock_stage) {
      os << 'q' << *s.clock_stage;
    } else {
      os << "global";
    }
    os << ' ' << (s.falling ? "fall" : "rise") << ' ' << s.first_gate << ' ' << s.end_gate << ' ';
    if (s.clock_line) {
      os << *s.clock_line;
    } else {
      os << '-';
    }
    os << ' ' << s.feedback << '\n';
  }
  for (auto const& g : netlist.gates()) {
    os << "gate " << g.gate->name();
    for (auto l : g.lines) {
      os << ' ' << l;
    }
    os << '\n';
  }
  os << ".end\n";
  return os.str();
}

} // namespace detail

Netlist parse_netlist(std::string_view text)
{
  return detail::parse_document(text).netlist;
}

std::string serialize(Netlist const& netlist)
{
  return detail::write_document(netlist, std::nullopt, {});
}

} // namespace revcount
