#pragma once

#include <string>
#include <vector>

#include "imcert/builder.hpp"
#include "imcert/chromatic.hpp"
#include "imcert/generators.hpp"
#include "imcert/verify.hpp"

namespace imcert {

struct SuiteOptions {
  std::vector<std::string> models = generator_models();
  int n_min = 5;
  int n_max = 20;
  int seeds = 5;  // random hosts per model and size
  std::vector<double> densities = {0.2, 0.5, 0.8};
  int kempe_cap = 16;  // exact coloring is exponential, keep hosts small
};

struct SuiteResult {
  long hosts = 0;
  long builds = 0;
  long invalid = 0;  // certificates rejected by the verifier
  long kempe_builds = 0;
  long kempe_invalid = 0;
  BuildTrace trace;
};

// Sweeps every model over the size range, builds certificates for every
// admissible left size of every host and verifies each one. Hosts with at
// least five vertices and at most kempe_cap also get the tripartite
// certificate. Deterministic for fixed options.
inline SuiteResult run_suite(const SuiteOptions& opt) {
  SuiteResult res;
  for (std::size_t mi = 0; mi < opt.models.size(); ++mi)
    for (int n = opt.n_min; n <= opt.n_max; ++n)
      for (int seed = 0; seed < opt.seeds; ++seed) {
        GeneratorSpec spec;
        spec.model = opt.models[mi];
        spec.n = n;
        spec.p = opt.densities[seed % opt.densities.size()];
        spec.seed = 1000003ULL * seed + 101ULL * n + mi;
        SimpleGraph g = generate_graph(spec);
        ++res.hosts;
        int h = (n + 1) / 2;
        for (int ell = 1; ell <= h - 1; ++ell) {
          ImmersionCertificate c =
              build_biclique_immersion(g, ell, &res.trace);
          ++res.builds;
          if (!verify_certificate(c).valid) ++res.invalid;
        }
        if (n >= 5 && n <= opt.kempe_cap) {
          ImmersionCertificate c = kempe_immersion(g);
          ++res.kempe_builds;
          if (!verify_certificate(c).valid) ++res.kempe_invalid;
        }
      }
  return res;
}

}  // namespace imcert
