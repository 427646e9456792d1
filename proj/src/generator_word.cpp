#include "pascal/generator_word.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace pascal {

Side generator_side(Generator g) {
  switch (g) {
    case Generator::X:
    case Generator::D:
    case Generator::E:
      return Side::X;
    default:
      return Side::Y;
  }
}

const char* generator_name(Generator g) {
  switch (g) {
    case Generator::X: return "X";
    case Generator::D: return "D";
    case Generator::E: return "E";
    case Generator::Y: return "Y";
    case Generator::Dstar: return "Dstar";
    case Generator::G: return "G";
  }
  return "?";
}

DiffOp generator_operator(Generator g) {
  switch (g) {
    case Generator::X: return DiffOp::multiplication(Side::X, Polynomial{0, 1});
    case Generator::D: return DiffOp::shift(Side::X, 1);
    case Generator::E: return DiffOp::term(Side::X, -1, Polynomial{0, 1});
    case Generator::Y: return DiffOp::multiplication(Side::Y, Polynomial{0, 1});
    case Generator::Dstar: return DiffOp::shift(Side::Y, -1);
    case Generator::G: return DiffOp::term(Side::Y, 1, Polynomial{1, 1});
  }
  throw std::logic_error("unknown generator");
}

GeneratorWord GeneratorWord::letter(Generator g) {
  GeneratorWord w;
  w.terms_.push_back({BigRational(1), {g}});
  return w;
}

GeneratorWord GeneratorWord::scalar(const BigRational& c) {
  GeneratorWord w;
  if (!c.is_zero()) w.terms_.push_back({c, {}});
  return w;
}

std::optional<Side> GeneratorWord::side() const {
  std::optional<Side> side;
  for (const auto& t : terms_) {
    for (Generator g : t.letters) {
      const Side s = generator_side(g);
      if (side && *side != s) throw std::invalid_argument("GeneratorWord: mixes x- and y-side generators");
      side = s;
    }
  }
  return side;
}

GeneratorWord& GeneratorWord::operator+=(const GeneratorWord& rhs) {
  for (const auto& t : rhs.terms_) {
    auto it = std::find_if(terms_.begin(), terms_.end(), [&](const WordTerm& u) { return u.letters == t.letters; });
    if (it == terms_.end()) {
      terms_.push_back(t);
    } else {
      it->coefficient += t.coefficient;
      if (it->coefficient.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

GeneratorWord& GeneratorWord::operator*=(const BigRational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coefficient *= s;
  return *this;
}

GeneratorWord operator*(const GeneratorWord& a, const GeneratorWord& b) {
  GeneratorWord out;
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      GeneratorWord single;
      WordTerm t{ta.coefficient * tb.coefficient, ta.letters};
      t.letters.insert(t.letters.end(), tb.letters.begin(), tb.letters.end());
      single.terms_.push_back(std::move(t));
      out += single;
    }
  }
  return out;
}

std::string GeneratorWord::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    const bool negative = t.coefficient.sign() < 0;
    if (!out.empty()) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    const BigRational mag = t.coefficient.abs();
    std::string body;
    for (Generator g : t.letters) {
      if (!body.empty()) body += "*";
      body += generator_name(g);
    }
    if (body.empty()) {
      out += mag.to_string();
    } else {
      out += (mag == BigRational(1) ? "" : mag.to_string() + "*") + body;
    }
  }
  return out;
}

namespace {

class WordParser {
public:
  explicit WordParser(std::string_view text) : text_(text) {}

  GeneratorWord parse() {
    GeneratorWord w = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("GeneratorWord::parse: " + what + " at position " + std::to_string(pos_) +
                                " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool at_factor_start() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c == '(' || std::isalpha(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c));
  }

  GeneratorWord expression() {
    GeneratorWord w;
    bool negate = false;
    if (peek('-')) {
      ++pos_;
      negate = true;
    } else if (peek('+')) {
      ++pos_;
    }
    w = term();
    if (negate) w *= BigRational(-1);
    while (true) {
      if (peek('+')) {
        ++pos_;
        w += term();
      } else if (peek('-')) {
        ++pos_;
        w = w - term();
      } else {
        return w;
      }
    }
  }

  GeneratorWord term() {
    GeneratorWord w = power();
    while (true) {
      if (peek('*')) {
        ++pos_;
        w = w * power();
      } else if (at_factor_start()) {
        w = w * power();
      } else {
        return w;
      }
    }
  }

  GeneratorWord power() {
    GeneratorWord base = atom();
    if (!peek('^')) return base;
    ++pos_;
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    const auto exponent = std::stoul(std::string(text_.substr(start, pos_ - start)));
    GeneratorWord result = GeneratorWord::scalar(BigRational(1));
    for (unsigned long i = 0; i < exponent; ++i) result = result * base;
    return result;
  }

  GeneratorWord atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      GeneratorWord inner = expression();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/')) {
        ++pos_;
      }
      return GeneratorWord::scalar(BigRational::parse(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      // Generator names are single capitals except "Dstar".
      if (text_.substr(pos_, 5) == "Dstar") {
        pos_ += 5;
        return GeneratorWord::letter(Generator::Dstar);
      }
      ++pos_;
      switch (text_[start]) {
        case 'X': return GeneratorWord::letter(Generator::X);
        case 'D': return GeneratorWord::letter(Generator::D);
        case 'E': return GeneratorWord::letter(Generator::E);
        case 'Y': return GeneratorWord::letter(Generator::Y);
        case 'G': return GeneratorWord::letter(Generator::G);
        default: pos_ = start; fail("unknown generator");
      }
    }
    fail("unexpected character");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GeneratorWord GeneratorWord::parse(std::string_view text) { return WordParser(text).parse(); }

DiffOp to_diffop(const GeneratorWord& word, Side side_if_scalar) {
  const Side side = word.side().value_or(side_if_scalar);
  DiffOp sum(side);
  for (const auto& t : word.terms()) {
    DiffOp product = DiffOp::identity(side);
    for (Generator g : t.letters) product = product * generator_operator(g);
    sum += product * t.coefficient;
  }
  return sum;
}

DiffOp fourier_map(const GeneratorWord& word) {
  if (word.side() == Side::Y) throw std::invalid_argument("fourier_map: expects an x-side word");
  const DiffOp image_x = DiffOp::multiplication(Side::Y, Polynomial{0, 1}) + generator_operator(Generator::G);
  const DiffOp image_d = generator_operator(Generator::Dstar) + DiffOp::identity(Side::Y);
  const DiffOp image_e = generator_operator(Generator::G);
  DiffOp sum(Side::Y);
  for (const auto& t : word.terms()) {
    DiffOp product = DiffOp::identity(Side::Y);
    for (auto it = t.letters.rbegin(); it != t.letters.rend(); ++it) {
      switch (*it) {
        case Generator::X: product = product * image_x; break;
        case Generator::D: product = product * image_d; break;
        case Generator::E: product = product * image_e; break;
        default: throw std::logic_error("fourier_map: y-side letter");
      }
    }
    sum += product * t.coefficient;
  }
  return sum;
}

}  // namespace pascal
