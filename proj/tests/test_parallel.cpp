#include <doctest.h>

#include <omp.h>

#include "zdg/graph_io.hpp"
#include "zdg/theorems.hpp"

using namespace zdg;

namespace {

struct Threads {
  int saved = omp_get_max_threads();
  explicit Threads(int n) { omp_set_num_threads(n); }
  ~Threads() { omp_set_num_threads(saved); }
};

}  // namespace

TEST_CASE("suite output does not depend on the thread count") {
  CheckContext ctx;
  ctx.profile = Profile::Smoke;
  std::string one, many;
  {
    Threads t(1);
    one = suite_json(run_all(ctx), false).dump();
  }
  {
    Threads t(4);
    many = suite_json(run_all(ctx), false).dump();
  }
  CHECK(one == many);
}

TEST_CASE("graph construction does not depend on the thread count") {
  for (Int n : {12, 15, 25}) {
    const RingSpec ring = make_ring(n, RingKind::ZnGaussian);
    std::string one, many;
    {
      Threads t(1);
      const Graph g = zero_divisor_graph(ring);
      one = to_json(g) + to_json(complement(g)) + to_json(line_graph(g));
    }
    {
      Threads t(3);
      const Graph g = zero_divisor_graph(ring);
      many = to_json(g) + to_json(complement(g)) + to_json(line_graph(g));
    }
    CHECK(one == many);
  }
}

TEST_CASE("spectra and witnesses do not depend on the thread count") {
  const Graph g = line_graph(zero_divisor_graph(make_ring(8, RingKind::ZnGaussian)));
  CycleSpectrum a, b;
  {
    Threads t(1);
    a = cycle_spectrum(g);
  }
  {
    Threads t(4);
    b = cycle_spectrum(g);
  }
  CHECK(a.present() == b.present());
  CHECK(a.witnesses() == b.witnesses());
  CHECK(a.witnesses() == serial::cycle_spectrum(g).witnesses());
}
