// Prints the characteristic polynomial of the single-seed 3-uniform
// sunflower with n petals, checks it against the resultant oracle when the
// system is small enough, and lists the eigenvalues with multiplicities.
//
//   sunflower_demo [n]

#include <hyperspec/hyperspec.hpp>

#include <iostream>
#include <string>

int main(int argc, char** argv) {
  using namespace hyperspec;
  const unsigned n = argc > 1 ? static_cast<unsigned>(std::stoul(argv[1])) : 1;
  try {
    const auto f = sunflower_char_poly(n);
    std::cout << "S(" << n << ",1,3): degree " << f.total_degree << ", lambda^"
              << f.lambda_exponent;
    for (const auto& c : f.factors) {
      std::cout << " (lambda^" << c.d << " - " << c.c.to_string() << ")^" << c.mult;
    }
    std::cout << "\n";

    if (n == 1) {
      const auto oracle = characteristic_polynomial_oracle(eigen_system(sunflower(1, 1, 3)));
      const bool same = oracle.monic == to_rational(expand(f));
      std::cout << "oracle: " << oracle.monic.to_string("lambda") << (same ? "  (agrees)" : "  (DIFFERS)")
                << "\n";
      if (!same) return 3;
    }

    // one variety point per petal choice pattern, evaluated at lambda = 2
    const std::complex<double> lambda = 2.0;
    std::vector<unsigned> choices(n, 1);
    const auto x = sunflower_variety_point(n, lambda, choices);
    std::cout << "all petals on the 1/lambda branch: f0 = " << sunflower_f0(lambda, x)
              << ", petal residual " << sunflower_petal_residual(lambda, x) << "\n";
  } catch (const GuardError& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
