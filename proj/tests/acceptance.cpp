// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "nfold/cok_bridge.hpp"
#include "nfold/error.hpp"
#include "nfold/homotopy.hpp"
#include "nfold/laws.hpp"
#include "nfold/presets.hpp"
#include "nfold/random.hpp"
#include "oracles.hpp"

using namespace nfold;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) first_failure = what;
    pass = false;
  }
};

// Runs law suites over rings and n values and accumulates, per tag, the
// number of random samples drawn and of checks executed.
struct SuiteTally {
  std::map<std::string, SuiteResult> by_tag;
  std::map<std::string, std::size_t> samples_by_tag;

  void run(const std::vector<std::string>& tags, const std::vector<std::string>& rings, std::size_t samples,
           std::uint64_t seed) {
    for (const auto& name : rings) {
      const Ring R = preset_ring(name);
      for (std::size_t n = 1; n <= 4; ++n) {
        Scenario sc;
        sc.ring = R.spec();
        sc.seed = seed + n;
        sc.n = n;
        sc.max_rank = R.field().is_rational() ? 2 : 3;
        sc.max_deg = 4;
        sc.samples = samples;
        for (const auto& tag : tags) {
          const SuiteResult r = run_suite(tag, R, sc);
          samples_by_tag[tag] += samples;
          SuiteResult& acc = by_tag[tag];
          acc.tag = tag;
          acc.cases += r.cases;
          acc.failures += r.failures;
          if (acc.first_failure.empty() && !r.first_failure.empty())
            acc.first_failure = name + " n=" + std::to_string(n) + ": " + r.first_failure;
        }
      }
    }
  }

  void report(Outcome& o, std::size_t min_samples) const {
    for (const auto& [tag, r] : by_tag) {
      const std::size_t drawn = samples_by_tag.at(tag);
      o.detail << " " << tag << "=" << drawn << "/" << r.cases
               << (r.failures ? "(" + std::to_string(r.failures) + " failed)" : "");
      o.expect(r.failures == 0, tag + ": " + r.first_failure);
      o.expect(drawn >= min_samples, tag + ": only " + std::to_string(drawn) + " random samples");
    }
  }
};

std::vector<std::string> all_rings() {
  std::vector<std::string> out;
  for (const auto& [name, spec] : ring_presets()) out.push_back(name);
  return out;
}

void functor_laws(Outcome& o) {
  SuiteTally t;
  t.run({"L2.2", "L2.3", "L2.4"}, all_rings(), 25, 100);
  t.report(o, 1000);
}

void adjunctions(Outcome& o) {
  SuiteTally t;
  t.run({"L2.5"}, all_rings(), 25, 200);
  t.report(o, 1000);
}

void homotopy_oracle(Outcome& o) {
  std::size_t total = 0, constructed = 0, negative = 0, witnesses = 0;
  for (const auto& name : default_commutative_presets()) {
    const Ring R = preset_ring(name);
    std::mt19937_64 rng(300);
    for (std::size_t n = 1; n <= 4; ++n)
      for (int t = 0; t < 60; ++t) {
        const RandomBounds b{n, R.field().is_rational() ? 2u : 3u, 4};
        const SeededObject x = random_seeded(R, rng, b);
        const SeededObject y = t % 2 == 0 ? x : random_seeded(R, rng, b);
        FactorMorphism f = random_null_homotopic(x.object, y.object, rng, 2);
        const bool built_null = t % 3 == 0;
        if (!built_null) f = f + random_morphism(x, y, rng);
        const bool expect = oracle::null_homotopic_mod_omega(f);
        const HomotopyResult h = is_p_null_homotopic(f);
        Verdict tv = Verdict::NoUpToBound;
        factors_through_trivials(f, &tv);
        const std::string where = name + " n=" + std::to_string(n);
        o.expect(!built_null || expect, where + ": oracle rejects a constructed null-homotopic map");
        o.expect(h.found() == expect, where + ": is_p_null_homotopic disagrees with the oracle");
        o.expect((tv == Verdict::Yes) == expect, where + ": factors_through_trivials disagrees with the oracle");
        if (h.found()) {
          ++witnesses;
          o.expect(reconstruct_from_witness(x.object, y.object, *h.witness) == f, where + ": witness does not reconstruct f");
        }
        ++total;
        constructed += built_null;
        negative += !expect;
      }
  }
  o.detail << " morphisms=" << total << " constructed-positive=" << constructed << " negative=" << negative
           << " witnesses re-verified=" << witnesses;
  o.expect(total >= 1000 && constructed >= 300 && negative >= 300, "case counts below target");
}

void gamma_equivalence(Outcome& o) {
  std::size_t objects = 0, morphisms = 0, corrupt = 0;
  for (const auto& name : all_rings()) {
    const Ring R = preset_ring(name);
    std::mt19937_64 rng(400);
    for (std::size_t n = 1; n <= 4; ++n)
      for (int t = 0; t < 30; ++t) {
        const SeededObject x = random_seeded(R, rng, {n, 3, 4});
        const SeededObject y = t % 2 == 0 ? x : random_seeded(R, rng, {n, 3, 4});
        const GammaModuleData gx = phi(x.object), gy = phi(y.object);
        o.expect(check_gamma(gx).ok && psi(gx) == x.object, name + ": object round trip");
        const GammaModuleData again = phi(psi(gx));
        bool same = again.ranks == gx.ranks;
        for (std::size_t k = 0; same && k < gx.maps.size(); ++k) same = again.maps[k] == gx.maps[k];
        o.expect(same, name + ": Phi Psi round trip");
        ++objects;
        const FactorMorphism f = random_morphism(x, y, rng) + random_null_homotopic(x.object, y.object, rng, 1);
        o.expect(psi(gx, gy, phi(f)) == f, name + ": morphism round trip");
        ++morphisms;
        if (n < 2) continue;
        const std::size_t i = 1 + rng() % n;
        std::size_t j = 1 + rng() % (n - 1);
        if (j >= i) ++j;
        std::vector<GammaModuleData> broken(3, gx);
        TwistedMatrix& m = broken[0].f(i, j);
        m.at(0, 0) = R.add(m.at(0, 0), R.one());
        broken[1].f(i, j) = broken[1].f(i, j).with_twist(broken[1].f(i, j).twist() + 1);
        TwistedMatrix& d = broken[2].f(i, i);
        d.at(0, 0) = R.add(d.at(0, 0), R.x_pow(1));
        for (const auto& b : broken) {
          bool rejected = !check_gamma(b).ok;
          try {
            psi(b);
            rejected = false;
          } catch (const Error&) {
          }
          o.expect(rejected, name + ": corrupted Gamma data accepted");
          ++corrupt;
        }
      }
  }
  o.detail << " objects=" << objects << " morphisms=" << morphisms << " corruptions rejected=" << corrupt;
  o.expect(objects >= 1000 && morphisms >= 1000, "case counts below target");
}

void lift_roundtrip(Outcome& o) {
  std::size_t min_chains = SIZE_MAX, min_faith = SIZE_MAX, negatives = 0;
  for (const auto& name : default_commutative_presets()) {
    const Ring R = preset_ring(name);
    std::mt19937_64 rng(500);
    std::size_t chains = 0;
    for (int t = 0; t < 200; ++t) {
      const std::size_t len = 1 + static_cast<std::size_t>(t % 3);
      const ChainModule c = random_chain(R, rng, len, 2);
      const NFactorization x = lift(c);
      o.expect(validate(x).valid, name + ": lift is not a valid factorization");
      o.expect(chain_iso(cok0(x), c, rng()).verdict == IsoVerdict::Isomorphic, name + ": Cok0(lift(c)) not isomorphic to c");
      std::size_t nonunit = 0;
      for (const auto& d : smith_form(c.module(len - 1).relations).diag) nonunit += !d.is_zero() && !R.is_unit(d);
      o.expect(x.rank(len) == nonunit, name + ": top rank differs from the nonunit invariant factors");
      o.expect(in_mono_class(x), name + ": lift leaves the mono class");
      ++chains;
    }
    std::size_t faith = 0;
    for (int t = 0; t < 200; ++t) {
      const std::size_t n = 2 + static_cast<std::size_t>(t % 3);
      const SeededObject x = random_seeded(R, rng, {n, 2, 4});
      const SeededObject y = t % 2 == 0 ? x : random_seeded(R, rng, {n, 2, 4});
      FactorMorphism f = random_null_homotopic(x.object, y.object, rng, 1);
      if (t % 4 != 0) f = f + random_morphism(x, y, rng);
      const FaithfulnessReport r = faithfulness_check(f);
      o.expect(r.agree_zero() && r.agree_projective(), name + ": Cok0 verdict disagrees with the homotopy oracle");
      negatives += r.null_homotopic == Verdict::No;
      ++faith;
    }
    min_chains = std::min(min_chains, chains);
    min_faith = std::min(min_faith, faith);
  }
  o.detail << " chains per instance=" << min_chains << " faithfulness cases per instance=" << min_faith
           << " (stably nonzero: " << negatives << ")";
  o.expect(min_chains >= 200 && min_faith >= 200, "case counts below target");
}

void classical_sanity(Outcome& o) {
  std::size_t checked = 0;
  for (int d = 1; d <= 4; ++d) {
    std::vector<Scalar> w(static_cast<std::size_t>(d) + 1, Field().zero());
    w.back() = Field().one();
    const Ring R(RingSpec{FieldSpec::rationals(), 0, w});
    for (const auto& a : oracle::compositions(d)) {
      const ChainModule c = cok0(oracle::monomial_object(R, a));
      bool ok = c.length() == a.size() - 1 && chain_is_mono(c).mono;
      int partial = 0;
      for (std::size_t i = 0; ok && i < c.length(); ++i) {
        partial += a[i];
        const auto inv = smith_form(c.module(i).relations).invariant_factors(R);
        ok = c.lin(i).dim() == static_cast<std::size_t>(partial) && inv.size() == 1 && R.equal(inv[0], R.x_pow(partial));
      }
      o.expect(ok, "composition of " + std::to_string(d) + " gives the wrong chain");
      ++checked;
    }
  }
  const int brute = oracle::brute_force_stable_end_dim();
  std::size_t lib = 0;
  for (const char* name : {"Q:x2", "F5:x2"}) {
    const Ring R = preset_ring(name);
    const NFactorization x = oracle::monomial_object(R, {1, 1});
    lib = stable_hom(x, x).k_dimension;
    o.expect(lib == 1 && brute == 1, std::string(name) + ": stable End of (x, x) is not one-dimensional");
  }
  o.detail << " compositions checked=" << checked << " stable End dim=" << lib << " (brute force " << brute << ")";
}

void recollements(Outcome& o) {
  const std::vector<std::pair<std::size_t, std::size_t>> pairs{{2, 1}, {3, 1}, {3, 2}, {4, 2}};
  std::size_t cases = 0;
  for (const auto& [n, k] : pairs) {
    SuiteResult r;
    LawRecorder rec(r);
    for (const auto& name : default_commutative_presets()) {
      const Ring R = preset_ring(name);
      std::mt19937_64 rng(600 + n * 10 + k);
      try {
        check_recollement(rec, R, n, k, rng, {n, 2, 4}, 8);
      } catch (const Error& e) {
        rec.check(false, name + ": " + e.what());
      }
    }
    o.expect(r.failures == 0, "(" + std::to_string(n) + "," + std::to_string(k) + ") " + r.first_failure);
    o.detail << " (" << n << "," << k << ")=" << r.cases;
    cases += r.cases;
  }
  o.expect(cases > 0, "no recollement cases");
}

void skew_soundness(Outcome& o) {
  std::size_t validated = 0, witnesses = 0, bounded = 0;
  for (const auto& name : skew_presets()) {
    const Ring R = preset_ring(name);
    std::mt19937_64 rng(700);
    for (std::size_t n = 1; n <= 4; ++n)
      for (int t = 0; t < 150; ++t) {
        o.expect(validate(random_seeded(R, rng, {n, 3, 4}).object).valid, name + ": generated object invalid");
        ++validated;
      }
    for (std::size_t n = 1; n <= 4; ++n)
      for (int t = 0; t < 25; ++t) {
        const SeededObject x = random_seeded(R, rng, {n, 2, 3});
        const SeededObject y = t % 2 == 0 ? x : random_seeded(R, rng, {n, 2, 3});
        FactorMorphism f = random_null_homotopic(x.object, y.object, rng, 1);
        if (t % 3 != 0) f = f + random_morphism(x, y, rng);
        const HomotopyResult h = is_p_null_homotopic(f);
        o.expect(t % 3 != 0 || h.verdict != Verdict::No, name + ": bounded search denies a constructed witness");
        if (h.found()) {
          ++witnesses;
          o.expect(reconstruct_from_witness(x.object, y.object, *h.witness) == f, name + ": witness does not re-verify");
        } else if (h.verdict == Verdict::NoUpToBound) {
          ++bounded;
        }
      }
  }
  SuiteTally t;
  t.run({"L2.2", "L2.3", "L2.4", "L2.5", "L2.6/Def", "T5.2"}, skew_presets(), 125, 800);
  t.run({"L2.7", "P3.4-instances", "L5.1"}, skew_presets(), 30, 900);
  t.report(o, 240);
  o.detail << " validated=" << validated << " witnesses re-verified=" << witnesses << " bounded verdicts=" << bounded;
}

}  // namespace

int main() {
  const std::vector<std::tuple<std::string, std::string, std::function<void(Outcome&)>>> criteria{
      {"1", "functor laws", functor_laws},
      {"2", "adjunction bijections", adjunctions},
      {"3", "homotopy oracle equivalence", homotopy_oracle},
      {"4", "Gamma_n equivalence", gamma_equivalence},
      {"5", "Cok0 / lift round trip and faithfulness", lift_roundtrip},
      {"6", "classical sanity", classical_sanity},
      {"7", "recollement suite", recollements},
      {"8", "skew soundness over F_4[x;Frob]", skew_soundness},
  };
  bool all = true;
  for (const auto& [id, title, run] : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      run(o);
    } catch (const Error& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %s: %s |%s | %.1fs%s%s\n", o.pass ? "PASS" : "FAIL", id.c_str(), title.c_str(),
                o.detail.str().c_str(), secs, o.pass ? "" : " | first failure: ", o.first_failure.c_str());
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
