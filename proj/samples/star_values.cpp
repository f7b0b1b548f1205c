// Prints w*(k), its t-adic version, and the numeric values they encode.
//
//   sample_star_values 2,2

#include <cstdio>
#include <iostream>

#include "mzv/numerics.hpp"

int main(int argc, char** argv) {
  mzv::Index k = mzv::Index::parse(argc > 1 ? argv[1] : "2,2");
  int order = 2;
  mzv::EvalConfig cfg;

  std::cout << "w*(" << k.str() << ") = " << mzv::w_star(k).str() << "\n";
  if (k.admissible()) {
    std::printf("zeta*(%s) = %.15f\n", k.str().c_str(), mzv::mzv_num<double>(k, true, cfg).value);
  }
  std::cout << "Z^sh(w*(k); T) = " << mzv::reg_t(mzv::w_star(k), mzv::product::shuffle).str() << "\n";

  const mzv::WordSeries& hat = mzv::w_star_hat(k, order);
  auto values = mzv::zeta_hat_num<double>(k, mzv::zeta_variant::star_ky, order, cfg);
  for (int n = 0; n <= order; ++n) {
    std::printf("t^%d: %-40s %.12f\n", n, hat[n].str().c_str(), values[n].value);
  }
}
