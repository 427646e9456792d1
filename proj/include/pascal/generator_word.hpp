#pragma once

#include "pascal/big_rational.hpp"
#include "pascal/diffop.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pascal {

/// Generators of the two Fourier algebras of the binomial kernel.
/// x-side: X = x, D = delta_x, E = x delta_x^*.
/// y-side: Y = y, Dstar = delta_y^*, G = (y+1) delta_y.
enum class Generator { X, D, E, Y, Dstar, G };

Side generator_side(Generator g);
const char* generator_name(Generator g);
/// The operator a single generator stands for.
DiffOp generator_operator(Generator g);

struct WordTerm {
  BigRational coefficient;
  std::vector<Generator> letters;  // applied right to left, like operator products
  friend bool operator==(const WordTerm&, const WordTerm&) = default;
};

/// Formal linear combination of noncommutative words in the generators.
/// Words are kept verbatim; the empty word is the identity.
class GeneratorWord {
public:
  GeneratorWord() = default;
  static GeneratorWord letter(Generator g);
  static GeneratorWord scalar(const BigRational& c);

  /// Parses expressions such as "D*X - X + E", "D X^3 + X^2 E - (2X^3 + 3X^2 + 2X)".
  /// Juxtaposition or '*' multiplies; '^n' is a power; parentheses group.
  /// Throws std::invalid_argument on malformed input.
  static GeneratorWord parse(std::string_view text);

  const std::vector<WordTerm>& terms() const { return terms_; }
  /// Side of the letters used; nullopt when the word has no letters.
  /// Throws std::invalid_argument when x- and y-side letters are mixed.
  std::optional<Side> side() const;

  GeneratorWord& operator+=(const GeneratorWord& rhs);
  GeneratorWord& operator*=(const BigRational& s);
  friend GeneratorWord operator+(GeneratorWord a, const GeneratorWord& b) { return a += b; }
  friend GeneratorWord operator-(GeneratorWord a, const GeneratorWord& b) {
    return a += b * BigRational(-1);
  }
  friend GeneratorWord operator*(GeneratorWord a, const BigRational& s) { return a *= s; }
  /// Concatenation, distributed over the sums.
  friend GeneratorWord operator*(const GeneratorWord& a, const GeneratorWord& b);

  std::string to_string() const;

private:
  std::vector<WordTerm> terms_;
};

/// Expands the word into an operator on its own side.
DiffOp to_diffop(const GeneratorWord& word, Side side_if_scalar = Side::X);

/// The generalized Fourier map on an x-side word: X -> y + (y+1) delta_y,
/// D -> delta_y^* + 1, E -> (y+1) delta_y, with each word's letters reversed
/// (the map is an anti-homomorphism). Throws std::invalid_argument for y-side letters.
DiffOp fourier_map(const GeneratorWord& word);

}  // namespace pascal
