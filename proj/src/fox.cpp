#include "torsionkit/fox.hpp"

#include <algorithm>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace torsionkit {

FoxWord FoxWord::power(Generator g, long e) {
  FoxWord w;
  const Letter letter{g, e < 0};
  for (long i = 0; i < (e < 0 ? -e : e); ++i) w.letters.push_back(letter);
  return w;
}

FoxWord FoxWord::parse(const std::string& text) {
  static const std::regex token(R"(\s*([xy])(?:\^(-?\d+))?\s*)");
  FoxWord w;
  std::size_t consumed = 0;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), token); it != std::sregex_iterator(); ++it) {
    if (static_cast<std::size_t>(it->position()) != consumed) throw std::invalid_argument("bad Fox word: " + text);
    const Generator g = (*it)[1] == "x" ? Generator::x : Generator::y;
    const long e = (*it)[2].matched ? std::stol((*it)[2]) : 1;
    w = w * power(g, e);
    consumed += static_cast<std::size_t>(it->length());
  }
  if (consumed != text.size()) throw std::invalid_argument("bad Fox word: " + text);
  return w;
}

FoxWord FoxWord::inverse() const {
  FoxWord w;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back({it->gen, !it->inverse});
  return w;
}

std::string FoxWord::to_string() const {
  if (letters.empty()) return "1";
  std::ostringstream out;
  std::size_t i = 0;
  bool first = true;
  while (i < letters.size()) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    if (!first) out << ' ';
    first = false;
    out << (letters[i].gen == Generator::x ? 'x' : 'y');
    const long run = static_cast<long>(j - i);
    const long e = letters[i].inverse ? -run : run;
    if (e != 1) out << '^' << e;
    i = j;
  }
  return out.str();
}

FoxWord operator*(FoxWord u, const FoxWord& v) {
  for (const auto& letter : v.letters) {
    if (!u.letters.empty() && u.letters.back().gen == letter.gen && u.letters.back().inverse != letter.inverse) {
      u.letters.pop_back();
    } else {
      u.letters.push_back(letter);
    }
  }
  return u;
}

std::string to_string(const GroupRingElement& element) {
  if (element.empty()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < element.size(); ++i) {
    const auto& term = element[i];
    if (i == 0) {
      if (term.coeff < 0) out << '-';
    } else {
      out << (term.coeff < 0 ? " - " : " + ");
    }
    const long mag = term.coeff < 0 ? -term.coeff : term.coeff;
    const std::string word = term.word.to_string();
    if (mag != 1) {
      out << mag;
      if (word != "1") out << '*' << word;
    } else {
      out << word;
    }
  }
  return out.str();
}

GroupRingElement fox_derivative(const FoxWord& word, Generator g) {
  GroupRingElement out;
  FoxWord prefix;
  for (const auto& letter : word.letters) {
    if (letter.gen == g) {
      if (letter.inverse) {
        out.push_back({-1, prefix * FoxWord{{letter}}});
      } else {
        out.push_back({1, prefix});
      }
    }
    prefix = prefix * FoxWord{{letter}};
  }
  return out;
}

FoxWord torus_relator(long p, long q) { return FoxWord::power(Generator::x, p) * FoxWord::power(Generator::y, -q); }

GeneratorImages::GeneratorImages(ComplexMatrix x_image, ComplexMatrix y_image)
    : x(std::move(x_image)), x_inv(torsionkit::inverse(x)), y(std::move(y_image)), y_inv(torsionkit::inverse(y)) {
  if (x.size() != y.size()) throw std::invalid_argument("generator images differ in size");
}

const ComplexMatrix& GeneratorImages::image(const Letter& letter) const {
  if (letter.gen == Generator::x) return letter.inverse ? x_inv : x;
  return letter.inverse ? y_inv : y;
}

ComplexMatrix evaluate(const FoxWord& word, const GeneratorImages& images) {
  ComplexMatrix m = ComplexMatrix::identity(images.x.size());
  for (const auto& letter : word.letters) m = m * images.image(letter);
  return m;
}

ComplexMatrix evaluate(const GroupRingElement& element, const GeneratorImages& images) {
  ComplexMatrix sum(images.x.size());
  for (const auto& term : element) sum += evaluate(term.word, images) * Complex(Real(term.coeff));
  return sum;
}

ComplexMatrix evaluate_fox_derivative(const FoxWord& word, Generator g, const GeneratorImages& images) {
  const std::size_t n = images.x.size();
  ComplexMatrix sum(n);
  ComplexMatrix prefix = ComplexMatrix::identity(n);
  for (const auto& letter : word.letters) {
    if (letter.gen == g && !letter.inverse) sum += prefix;
    prefix = prefix * images.image(letter);
    if (letter.gen == g && letter.inverse) sum -= prefix;
  }
  return sum;
}

}  // namespace torsionkit
