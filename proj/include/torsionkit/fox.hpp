#pragma once

// Free differential calculus on the free group <x, y>, evaluated through a
// matrix representation twisted by the abelianization.

#include <string>
#include <vector>

#include "torsionkit/numeric.hpp"

namespace torsionkit {

enum class Generator { x, y };

/// g or g^-1
struct Letter {
  Generator gen = Generator::x;
  bool inverse = false;

  friend bool operator==(const Letter&, const Letter&) = default;
};

struct FoxWord {
  std::vector<Letter> letters;

  /// g^e as |e| letters.
  static FoxWord power(Generator g, long e);
  /// Parses words like "x^3 y^-2 x"; whitespace separated, exponents optional.
  static FoxWord parse(const std::string& text);
  FoxWord inverse() const;
  std::string to_string() const;

  friend FoxWord operator*(FoxWord u, const FoxWord& v);
  friend bool operator==(const FoxWord&, const FoxWord&) = default;
};

/// coeff * word
struct GroupRingTerm {
  long coeff = 1;
  FoxWord word;

  friend bool operator==(const GroupRingTerm&, const GroupRingTerm&) = default;
};

/// Formal sum; terms are kept in the order the Fox rules produce them and
/// are not collected.
using GroupRingElement = std::vector<GroupRingTerm>;

std::string to_string(const GroupRingElement& element);

/// d(uv)/dg = du/dg + u dv/dg; dg/dg = 1; d(g^-1)/dg = -g^-1; dh/dg = 0.
GroupRingElement fox_derivative(const FoxWord& word, Generator g);

/// x^p y^-q
FoxWord torus_relator(long p, long q);

/// Images of the generators, with inverses precomputed.
struct GeneratorImages {
  ComplexMatrix x, x_inv, y, y_inv;

  GeneratorImages(ComplexMatrix x_image, ComplexMatrix y_image);
  const ComplexMatrix& image(const Letter& letter) const;
};

ComplexMatrix evaluate(const FoxWord& word, const GeneratorImages& images);
ComplexMatrix evaluate(const GroupRingElement& element, const GeneratorImages& images);

/// Evaluates fox_derivative(word, g) in one left-to-right pass that carries
/// the prefix product; equal to evaluate(fox_derivative(word, g), images).
ComplexMatrix evaluate_fox_derivative(const FoxWord& word, Generator g, const GeneratorImages& images);

}  // namespace torsionkit
