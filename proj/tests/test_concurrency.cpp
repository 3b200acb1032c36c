#include <atomic>
#include <thread>
#include <vector>

#include <doctest.h>

#include "se3tangent/derivatives.hpp"
#include "se3tangent/exp_dexp.hpp"
#include "se3tangent/jacobians.hpp"
#include "support/oracles.hpp"

using namespace se3tan;

TEST_CASE("evaluators are safe to call from many threads") {
  // exercises the lazily built series-weight tables under contention and
  // checks results stay bit-identical to the single-threaded ones
  std::mt19937_64 seed_rng(4242);
  std::vector<Vec6> Xs, Us;
  for (int i = 0; i < 64; ++i) {
    Xs.push_back(testing::random_screw(seed_rng, 1e-3, 3.0));
    Us.push_back(testing::random_vec6(seed_rng));
  }
  std::vector<Mat6> expected(Xs.size());
  for (size_t i = 0; i < Xs.size(); ++i)
    expected[i] = dexp(Xs[i]) + ddexp(Xs[i], Us[i], Variant::dexpinv) +
                  dexp_series(Xs[i], Variant::dexpinv, 20) + jac_eval(Xs[i], Us[i]);

  std::atomic<int> mismatches{0};
  auto worker = [&]() {
    for (int rep = 0; rep < 4; ++rep) {
      for (size_t i = 0; i < Xs.size(); ++i) {
        const Mat6 got = dexp(Xs[i]) + ddexp(Xs[i], Us[i], Variant::dexpinv) +
                         dexp_series(Xs[i], Variant::dexpinv, 20) + jac_eval(Xs[i], Us[i]);
        if ((got - expected[i]).cwiseAbs().maxCoeff() != 0.0) ++mismatches;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < 8; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  CHECK(mismatches.load() == 0);
}
