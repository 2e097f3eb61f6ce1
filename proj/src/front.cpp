#include "legch/front.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>
#include <sstream>

namespace legch {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Syntax: return "syntax error";
    case ErrorKind::PositionOutOfRange: return "position out of range";
    case ErrorKind::OddStrandCount: return "odd terminal strand count";
    case ErrorKind::MultiComponent: return "closure has more than one component";
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::RotationNonzero: return "rotation number is nonzero";
    case ErrorKind::InternalInconsistency: return "internal inconsistency";
    case ErrorKind::SearchTooLarge: return "augmentation search too large";
    case ErrorKind::NotSpecialForm: return "front is not in special form";
    case ErrorKind::MaslovZero: return "Maslov number is zero";
    case ErrorKind::NotAnAugmentation: return "not an augmentation";
    case ErrorKind::DualityViolation: return "duality violation";
  }
  return "unknown error";
}

bool is_input_error(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Syntax:
    case ErrorKind::PositionOutOfRange:
    case ErrorKind::OddStrandCount:
    case ErrorKind::MultiComponent:
    case ErrorKind::InvalidArgument:
      return true;
    default:
      return false;
  }
}

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

std::shared_ptr<const FrontLayout> build_layout(const std::vector<Event>& events) {
  auto out = std::make_shared<FrontLayout>();
  FrontLayout& lay = *out;
  std::vector<int> stack;
  lay.slab_arcs.push_back(stack);
  lay.crossing_of_event.assign(events.size(), -1);

  for (std::size_t k = 0; k < events.size(); ++k) {
    const Event& ev = events[k];
    const int n = static_cast<int>(stack.size());
    if (ev.is_cusp()) {
      if (ev.pos < 1 || ev.pos > n + 1) {
        throw Error(ErrorKind::PositionOutOfRange,
                    "event " + std::to_string(k + 1) + ": left cusp at " +
                        std::to_string(ev.pos) + " with " + std::to_string(n) +
                        " strands");
      }
      const int upper = lay.arc_count++;
      const int lower = lay.arc_count++;
      lay.left_cusp_event.push_back(k);
      stack.insert(stack.begin() + (ev.pos - 1), {upper, lower});
    } else {
      if (ev.pos < 1 || ev.pos + 1 > n) {
        throw Error(ErrorKind::PositionOutOfRange,
                    "event " + std::to_string(k + 1) + ": crossing at " +
                        std::to_string(ev.pos) + " with " + std::to_string(n) +
                        " strands");
      }
      CrossingInfo info;
      info.event = k;
      info.pos = ev.pos;
      info.upper_arc = stack[ev.pos - 1];
      info.lower_arc = stack[ev.pos];
      lay.crossing_of_event[k] = static_cast<int>(lay.crossings.size());
      lay.crossings.push_back(info);
      std::swap(stack[ev.pos - 1], stack[ev.pos]);
    }
    lay.slab_arcs.push_back(stack);
  }

  if (stack.empty()) {
    throw Error(ErrorKind::OddStrandCount, "front has no strands");
  }
  if (stack.size() % 2 != 0) {
    throw Error(ErrorKind::OddStrandCount,
                "terminal strand count " + std::to_string(stack.size()) + " is odd");
  }

  lay.right_cusp_of_arc.assign(static_cast<std::size_t>(lay.arc_count), -1);
  for (std::size_t i = 0; i < stack.size(); i += 2) {
    const int idx = static_cast<int>(lay.right_cusps.size());
    lay.right_cusps.push_back({stack[i], stack[i + 1]});
    lay.right_cusp_of_arc[stack[i]] = idx;
    lay.right_cusp_of_arc[stack[i + 1]] = idx;
  }

  std::vector<int> parent(static_cast<std::size_t>(lay.arc_count));
  std::iota(parent.begin(), parent.end(), 0);
  auto join = [&](int a, int b) { parent[find_root(parent, a)] = find_root(parent, b); };
  for (int a = 0; a < lay.arc_count; a += 2) join(a, a + 1);
  for (const auto& rc : lay.right_cusps) join(rc.upper_arc, rc.lower_arc);
  const int root = find_root(parent, 0);
  for (int a = 0; a < lay.arc_count; ++a) {
    if (find_root(parent, a) != root) {
      throw Error(ErrorKind::MultiComponent, "plat closure is a link, not a knot");
    }
  }
  return out;
}

// Walks the knot once under the canonical orientation.
struct Traversal {
  std::vector<int> direction;  // +1 rightward, -1 leftward, per arc
  int up = 0;
  int down = 0;
  std::vector<int> mu;          // potential relative to arc 0
  bool mu_consistent = true;
};

Traversal traverse(const FrontLayout& lay) {
  Traversal t;
  t.direction.assign(static_cast<std::size_t>(lay.arc_count), 0);
  t.mu.assign(static_cast<std::size_t>(lay.arc_count), 0);
  int cur = 0;
  int mu = 0;
  while (true) {
    t.direction[cur] = +1;
    t.mu[cur] = mu;
    const RightCuspInfo& rc = lay.right_cusps[lay.right_cusp_of_arc[cur]];
    const bool from_upper = rc.upper_arc == cur;
    const int back = from_upper ? rc.lower_arc : rc.upper_arc;
    if (from_upper) {
      ++t.down;
      mu -= 1;
    } else {
      ++t.up;
      mu += 1;
    }
    t.direction[back] = -1;
    t.mu[back] = mu;
    const bool back_is_upper = back % 2 == 0;
    if (back_is_upper) {
      ++t.down;
      mu -= 1;
    } else {
      ++t.up;
      mu += 1;
    }
    cur = back ^ 1;
    if (cur == 0) {
      t.mu_consistent = mu == 0;
      break;
    }
  }
  return t;
}

}  // namespace

FrontDiagram::FrontDiagram(std::vector<Event> events, std::string name)
    : events_(std::move(events)), name_(std::move(name)), layout_(build_layout(events_)) {}

FrontDiagram FrontDiagram::plat(int strands, const std::vector<int>& word, std::string name) {
  if (strands < 2 || strands % 2 != 0) {
    throw Error(ErrorKind::OddStrandCount,
                "plat strand count must be even and at least 2, got " + std::to_string(strands));
  }
  std::vector<Event> events;
  for (int p = 1; p < strands; p += 2) events.push_back(Event::left_cusp(p));
  for (int i : word) events.push_back(Event::crossing(i));
  return FrontDiagram(std::move(events), std::move(name));
}

FrontDiagram FrontDiagram::renamed(std::string name) const {
  FrontDiagram copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

struct Token {
  enum class Kind { Word, Int, Colon, End };
  Kind kind = Kind::End;
  std::string text;
  long long value = 0;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::optional<std::string> name;

  Token next() {
    skip();
    Token tok;
    tok.line = line_;
    tok.col = col_;
    if (i_ >= text_.size()) return tok;
    const char ch = text_[i_];
    if (ch == ':') {
      advance();
      tok.kind = Token::Kind::Colon;
      tok.text = ":";
      return tok;
    }
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+') {
      std::string digits;
      digits += ch;
      advance();
      while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
        digits += text_[i_];
        advance();
      }
      if (digits == "-" || digits == "+" || digits.size() > 9) {
        throw error(tok, "malformed integer '" + digits + "'");
      }
      tok.kind = Token::Kind::Int;
      tok.text = digits;
      tok.value = std::stoll(digits);
      return tok;
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      while (i_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[i_]))) {
        tok.text += text_[i_];
        advance();
      }
      tok.kind = Token::Kind::Word;
      return tok;
    }
    throw error(tok, std::string("unexpected character '") + ch + "'");
  }

  static Error error(const Token& at, const std::string& what) {
    return Error(ErrorKind::Syntax, "line " + std::to_string(at.line) + ", column " +
                                        std::to_string(at.col) + ": " + what);
  }

 private:
  void advance() {
    if (text_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  void skip() {
    while (i_ < text_.size()) {
      const char ch = text_[i_];
      if (ch == '#') {
        std::string comment;
        while (i_ < text_.size() && text_[i_] != '\n') {
          comment += text_[i_];
          advance();
        }
        read_name(comment);
      } else if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
        advance();
      } else {
        break;
      }
    }
  }

  void read_name(const std::string& comment) {
    std::size_t k = 1;
    while (k < comment.size() && comment[k] == ' ') ++k;
    const std::string key = "name:";
    if (comment.compare(k, key.size(), key) != 0) return;
    std::string value = comment.substr(k + key.size());
    const auto b = value.find_first_not_of(" \t\r");
    const auto e = value.find_last_not_of(" \t\r");
    name = b == std::string::npos ? std::string{} : value.substr(b, e - b + 1);
  }

  std::string_view text_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

FrontDiagram parse_front(std::string_view text) {
  Lexer lex(text);
  Token head = lex.next();
  if (head.kind != Token::Kind::Word || (head.text != "plat" && head.text != "front")) {
    throw Lexer::error(head, "expected 'plat' or 'front'");
  }

  std::vector<Event> events;
  int strands = 0;

  if (head.text == "plat") {
    Token count = lex.next();
    if (count.kind != Token::Kind::Int) throw Lexer::error(count, "expected strand count");
    if (count.value < 2 || count.value % 2 != 0) {
      throw Error(ErrorKind::OddStrandCount,
                  "line " + std::to_string(count.line) + ", column " + std::to_string(count.col) +
                      ": plat strand count must be even and at least 2, got " + count.text);
    }
    strands = static_cast<int>(count.value);
    Token colon = lex.next();
    if (colon.kind != Token::Kind::Colon) throw Lexer::error(colon, "expected ':'");
    for (int p = 1; p < strands; p += 2) events.push_back(Event::left_cusp(p));
    for (Token tok = lex.next(); tok.kind != Token::Kind::End; tok = lex.next()) {
      if (tok.kind != Token::Kind::Int) throw Lexer::error(tok, "expected crossing position");
      if (tok.value < 1 || tok.value > strands - 1) {
        throw Error(ErrorKind::PositionOutOfRange,
                    "line " + std::to_string(tok.line) + ", column " + std::to_string(tok.col) +
                        ": crossing position " + tok.text + " outside [1, " +
                        std::to_string(strands - 1) + "]");
      }
      events.push_back(Event::crossing(static_cast<int>(tok.value)));
    }
  } else {
    Token colon = lex.next();
    if (colon.kind != Token::Kind::Colon) throw Lexer::error(colon, "expected ':'");
    for (Token tok = lex.next(); tok.kind != Token::Kind::End; tok = lex.next()) {
      if (tok.kind != Token::Kind::Word || (tok.text != "L" && tok.text != "X")) {
        throw Lexer::error(tok, "expected 'L' or 'X'");
      }
      Token pos = lex.next();
      if (pos.kind != Token::Kind::Int) throw Lexer::error(pos, "expected position");
      const bool cusp = tok.text == "L";
      const long long hi = cusp ? strands + 1 : strands - 1;
      if (pos.value < 1 || pos.value > hi) {
        throw Error(ErrorKind::PositionOutOfRange,
                    "line " + std::to_string(pos.line) + ", column " + std::to_string(pos.col) +
                        ": position " + pos.text + " outside [1, " + std::to_string(hi) +
                        "] with " + std::to_string(strands) + " strands");
      }
      const int p = static_cast<int>(pos.value);
      if (cusp) {
        events.push_back(Event::left_cusp(p));
        strands += 2;
      } else {
        events.push_back(Event::crossing(p));
      }
    }
  }
  return FrontDiagram(std::move(events), lex.name.value_or(std::string{}));
}

std::string serialize_front(const FrontDiagram& front) {
  std::ostringstream out;
  if (!front.name().empty()) out << "# name: " << front.name() << '\n';
  out << "front :";
  for (const Event& ev : front.events()) {
    out << ' ' << (ev.is_cusp() ? 'L' : 'X') << ' ' << ev.pos;
  }
  out << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Invariants and grading

std::vector<int> crossing_signs(const FrontDiagram& front) {
  const FrontLayout& lay = front.layout();
  const Traversal t = traverse(lay);
  std::vector<int> signs;
  signs.reserve(lay.crossings.size());
  for (const CrossingInfo& x : lay.crossings) {
    signs.push_back(t.direction[x.upper_arc] == t.direction[x.lower_arc] ? +1 : -1);
  }
  return signs;
}

ClassicalInvariants classical_invariants(const FrontDiagram& front) {
  const FrontLayout& lay = front.layout();
  const Traversal t = traverse(lay);
  ClassicalInvariants inv;
  for (int s : crossing_signs(front)) inv.writhe += s;
  inv.cusps = 2 * front.left_cusp_count();
  inv.up_cusps = t.up;
  inv.down_cusps = t.down;
  inv.tb = inv.writhe - inv.cusps / 2;
  inv.r = std::abs(t.up - t.down) / 2;
  return inv;
}

GradedAlphabet::GradedAlphabet(int crossings, int cusps, std::vector<int> degrees,
                               std::vector<int> mu)
    : crossings_(crossings), cusps_(cusps), degrees_(std::move(degrees)), mu_(std::move(mu)) {
  if (static_cast<int>(degrees_.size()) != crossings_ + cusps_) {
    throw Error(ErrorKind::InvalidArgument, "degree table size mismatch");
  }
}

std::vector<Gen> GradedAlphabet::of_degree(int k) const {
  std::vector<Gen> out;
  for (Gen g = 0; g < size(); ++g) {
    if (degrees_[g] == k) out.push_back(g);
  }
  return out;
}

std::map<int, int> GradedAlphabet::counts() const {
  std::map<int, int> n;
  for (int d : degrees_) ++n[d];
  return n;
}

int GradedAlphabet::min_degree() const {
  return degrees_.empty() ? 0 : *std::min_element(degrees_.begin(), degrees_.end());
}

int GradedAlphabet::max_degree() const {
  return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
}

GradedAlphabet maslov_and_grading(const FrontDiagram& front) {
  const FrontLayout& lay = front.layout();
  Traversal t = traverse(lay);
  if (!t.mu_consistent) {
    throw Error(ErrorKind::RotationNonzero,
                "no Maslov potential: rotation number is " +
                    std::to_string(std::abs(t.up - t.down) / 2));
  }
  const int lo = *std::min_element(t.mu.begin(), t.mu.end());
  for (int& m : t.mu) m -= lo;

  std::vector<int> degrees;
  for (const CrossingInfo& x : lay.crossings) {
    degrees.push_back(t.mu[x.upper_arc] - t.mu[x.lower_arc]);
  }
  for (std::size_t i = 0; i < lay.right_cusps.size(); ++i) degrees.push_back(1);
  return GradedAlphabet(front.crossing_count(), front.right_cusp_count(), std::move(degrees),
                        std::move(t.mu));
}

}  // namespace legch
