// Builds a witness measure for the centre of the square and prints it.

#include "barylab/barylab.hpp"

#include <iostream>

int main() {
  using namespace barylab;
  const Polytope square({{Rational(-1), Rational(-1)},
                         {Rational(1), Rational(-1)},
                         {Rational(1), Rational(1)},
                         {Rational(-1), Rational(1)}});
  const RationalVector centre{Rational(0), Rational(0)};

  const CharacterizationReport report = characterize(square, centre);
  std::cout << "relint: " << report.relint << "  closure(V_a) = M: " << report.condition_ii << '\n';

  const DiscreteMeasure mu = construct_witness(square, centre, 8);
  for (std::size_t i = 0; i < mu.size(); ++i) {
    std::cout << mu.weights()[i] << "  (";
    for (std::size_t c = 0; c < mu.dim(); ++c) std::cout << (c ? ", " : "") << mu.atoms()[i][c];
    std::cout << ")\n";
  }
  const RationalVector b = barycenter(mu);
  std::cout << "barycenter: (" << b[0] << ", " << b[1] << ")\n";
}
