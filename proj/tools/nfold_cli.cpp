// nfold_cli: JSON front end for the n-fold factorization toolkit.
//
// Exit codes: 0 pass, 2 property failure, 3 input error, 4 unsupported ring,
// 5 bounded verdict only.

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "nfold/cok_bridge.hpp"
#include "nfold/error.hpp"
#include "nfold/functors.hpp"
#include "nfold/homotopy.hpp"
#include "nfold/json_io.hpp"
#include "nfold/laws.hpp"
#include "nfold/presets.hpp"
#include "nfold/random.hpp"

using namespace nfold;

namespace {

enum Exit { kPass = 0, kFailure = 2, kInput = 3, kUnsupported = 4, kBounded = 5 };

struct Common {
  std::string ring;
  std::uint64_t seed = 42;
  std::size_t n = 3, max_rank = 2, samples = 8;
  int max_deg = 4;
  std::vector<std::string> suites;
  std::string json_out;
};

struct Report {
  json body = json::object();
  std::ostringstream text;
  int code = kPass;
};

// Ring from --ring, else from the "ring" member of the first input.
Ring resolve_ring(const Common& c, const std::vector<json>& inputs) {
  std::optional<Ring> ring;
  if (!c.ring.empty()) ring = parse_ring(c.ring);
  for (const json& j : inputs) {
    if (!j.is_object() || !j.contains("ring")) continue;
    const Ring r = ring_from_json(j.at("ring"));
    if (!ring) ring = r;
    require(ring->same_as(r), ErrorKind::IncompatibleRing, "input files disagree on the ring");
  }
  require(ring.has_value(), ErrorKind::InvalidInput, "no ring: pass --ring or include a \"ring\" member");
  return *ring;
}

const json& payload(const json& j, const char* key) {
  return j.is_object() && j.contains(key) ? j.at(key) : j;
}

void need_commutative(const Ring& r, const char* verb) {
  require(r.is_commutative(), ErrorKind::Unsupported, std::string(verb) + " needs a commutative ring");
}

void verdict_code(Report& rep, Verdict v) {
  if (v == Verdict::NoUpToBound) rep.code = std::max(rep.code, static_cast<int>(kBounded));
}

void cmd_validate(const Common& c, const std::string& path, Report& rep) {
  const json in = read_json_file(path);
  const Ring R = resolve_ring(c, {in});
  const NFactorization x = object_from_json(R, payload(in, "object"));
  const ValidationReport v = validate(x);
  rep.body = {{"valid", v.valid}, {"message", v.message}, {"n", x.n()}, {"ranks", x.ranks()}};
  if (v.failing_rotation) rep.body["failing_rotation"] = *v.failing_rotation;
  if (v.difference) rep.body["difference"] = to_json(*v.difference);
  rep.text << (v.valid ? "valid" : "invalid: " + v.message) << " (n = " << x.n() << ")\n";
  if (!v.valid) rep.code = kFailure;
}

Functor functor_by_name(const std::string& name, std::size_t n, std::size_t index, long power) {
  if (name == "shift") return shift_functor(n, power);
  if (name == "theta") return theta_functor(n, index);
  if (name == "projection") return projection_functor(n, index);
  if (name == "face") return face_functor(n, index);
  if (name == "degeneracy") return degeneracy_functor(n - 1, index);
  fail(ErrorKind::InvalidInput, "unknown functor '" + name + "' (shift, theta, projection, face, degeneracy)");
}

void cmd_functor(const Common& c, const std::string& name, std::size_t index, long power, const std::string& path,
                 Report& rep) {
  const json in = read_json_file(path);
  const Ring R = resolve_ring(c, {in});
  if (in.contains("morphism") || in.contains("components")) {
    const FactorMorphism f = morphism_from_json(R, payload(in, "morphism"));
    const Functor F = functor_by_name(name, f.n(), index, power);
    const FactorMorphism g = F(f);
    rep.body = {{"functor", F.name}, {"morphism", to_json(g)}};
    rep.text << F.name << " applied to a morphism; components " << g.n() << "\n";
    return;
  }
  const NFactorization x = object_from_json(R, payload(in, "object"));
  const Functor F = functor_by_name(name, name == "theta" ? c.n : x.n(), index, power);
  const NFactorization y = F(x);
  rep.body = {{"functor", F.name}, {"object", to_json(y)}};
  rep.text << F.name << ": " << y.to_string() << "\n";
}

void cmd_homotopy(const Common& c, const std::string& path, Report& rep) {
  const json in = read_json_file(path);
  const Ring R = resolve_ring(c, {in});
  const FactorMorphism f = morphism_from_json(R, payload(in, "morphism"));
  const HomotopyResult h = is_p_null_homotopic(f);
  Verdict tv = Verdict::No;
  factors_through_trivials(f, &tv);
  rep.body = {{"null_homotopic", to_string(h.verdict)}, {"factors_through_trivials", to_string(tv)}};
  if (h.bound >= 0) rep.body["degree_bound"] = h.bound;
  if (h.witness) rep.body["witness"] = to_json(*h.witness);
  rep.text << "p-null-homotopic: " << to_string(h.verdict) << "\nfactors through trivial objects: " << to_string(tv)
           << "\n";
  verdict_code(rep, h.verdict);
  verdict_code(rep, tv);
  if (h.verdict != Verdict::NoUpToBound && tv != Verdict::NoUpToBound && h.found() != (tv == Verdict::Yes))
    rep.code = kFailure;
}

void cmd_stable_hom(const Common& c, const std::string& px, const std::string& py, bool ideal, Report& rep) {
  const json jx = read_json_file(px), jy = read_json_file(py);
  const Ring R = resolve_ring(c, {jx, jy});
  need_commutative(R, "stable-hom");
  const NFactorization x = object_from_json(R, payload(jx, "object"));
  const NFactorization y = object_from_json(R, payload(jy, "object"));
  const StableHomReport s = stable_hom(x, y, ideal);
  json factors = json::array(), reps = json::array();
  for (const auto& d : s.invariant_factors) factors.push_back(to_json(R, d));
  for (const auto& m : s.representatives) reps.push_back(to_json(m));
  rep.body = {{"generators", s.generators},       {"invariant_factors", factors}, {"k_dimension", s.k_dimension},
              {"omega_torsion", s.omega_torsion}, {"representatives", reps},      {"ideal_class_only", ideal}};
  rep.text << s.summary(R) << "\n";
}

void cmd_stably_zero(const Common& c, const std::string& path, Report& rep) {
  const json in = read_json_file(path);
  const Ring R = resolve_ring(c, {in});
  const NFactorization x = object_from_json(R, payload(in, "object"));
  const HomotopyResult h = is_stably_zero(x);
  rep.body = {{"stably_zero", to_string(h.verdict)}};
  if (h.witness) rep.body["witness"] = to_json(*h.witness);
  rep.text << "stably zero: " << to_string(h.verdict) << "\n";
  verdict_code(rep, h.verdict);
}

void cmd_cok0(const Common& c, const std::string& path, Report& rep) {
  const json in = read_json_file(path);
  const Ring R = resolve_ring(c, {in});
  if (in.contains("morphism") || in.contains("components")) {
    const FactorMorphism f = morphism_from_json(R, payload(in, "morphism"));
    const ChainModule cx = cok0(f.source()), cy = cok0(f.target());
    const auto images = cok0(f);
    json comps = json::array(), lin = json::array();
    for (const auto& m : images) comps.push_back(to_json(m));
    for (const auto& m : linear_chain_map(cx, cy, images)) lin.push_back(to_json(m));
    rep.body = {{"source", to_json(cx)}, {"target", to_json(cy)}, {"components", comps}, {"linear", lin}};
    rep.text << "Cok0 of a morphism with " << images.size() << " components\n";
    return;
  }
  const NFactorization x = object_from_json(R, payload(in, "object"));
  const ChainModule ch = cok0(x);
  const MonoReport mono = chain_is_mono(ch);
  rep.body = {{"chain", to_json(ch)}, {"dims", ch.dims()}, {"mono", mono.mono}};
  rep.text << "Cok0 chain of length " << ch.length() << ", k-dimensions";
  for (auto d : ch.dims()) rep.text << " " << d;
  rep.text << (mono.mono ? ", monomorphisms\n" : ", not mono\n");
}

void cmd_lift(const Common& c, const std::string& path, Report& rep) {
  const json in = read_json_file(path);
  const Ring R = resolve_ring(c, {in});
  need_commutative(R, "lift");
  const ChainModule ch = chain_from_json(R, payload(in, "chain"));
  const NFactorization x = lift(ch);
  const IsoVerdict iso = chain_iso(cok0(x), ch, c.seed).verdict;
  rep.body = {{"object", to_json(x)}, {"valid", validate(x).valid}, {"roundtrip", to_string(iso)}};
  rep.text << "lift: " << x.to_string() << "\nCok0(lift) ~ chain: " << to_string(iso) << "\n";
  if (!validate(x).valid || iso != IsoVerdict::Isomorphic) rep.code = kFailure;
}

void cmd_chain_iso(const Common& c, const std::string& pa, const std::string& pb, Report& rep) {
  const json ja = read_json_file(pa), jb = read_json_file(pb);
  const Ring R = resolve_ring(c, {ja, jb});
  const ChainModule a = chain_from_json(R, payload(ja, "chain"));
  const ChainModule b = chain_from_json(R, payload(jb, "chain"));
  const ChainIsoResult r = chain_iso(a, b, c.seed);
  rep.body = {{"verdict", to_string(r.verdict)}, {"reason", r.reason}};
  if (r.verdict == IsoVerdict::Isomorphic) {
    json fw = json::array();
    for (const auto& m : r.forward) fw.push_back(to_json(m));
    rep.body["forward"] = fw;
  }
  rep.text << to_string(r.verdict) << (r.reason.empty() ? "" : ": " + r.reason) << "\n";
  if (r.verdict == IsoVerdict::NotFound) rep.code = kBounded;
}

void cmd_phi(const Common& c, const std::string& path, Report& rep) {
  const json in = read_json_file(path);
  const Ring R = resolve_ring(c, {in});
  const GammaModuleData g = phi(object_from_json(R, payload(in, "object")));
  const GammaReport ok = check_gamma(g);
  rep.body = {{"gamma", to_json(g)}, {"relations_hold", ok.ok}};
  rep.text << "Gamma_" << g.n << " module, relations " << (ok.ok ? "hold" : "fail: " + ok.message) << "\n";
  if (!ok.ok) rep.code = kFailure;
}

void cmd_psi(const Common& c, const std::string& path, Report& rep) {
  const json in = read_json_file(path);
  const Ring R = resolve_ring(c, {in});
  const GammaModuleData g = gamma_from_json(R, payload(in, "gamma"));
  const GammaReport ok = check_gamma(g);
  if (!ok.ok) {
    rep.body = {{"relations_hold", false}, {"message", ok.message}};
    rep.text << "not a Gamma_" << g.n << " module: " << ok.message << "\n";
    rep.code = kFailure;
    return;
  }
  const NFactorization x = psi(g);
  rep.body = {{"object", to_json(x)}, {"relations_hold", true}};
  rep.text << "Psi: " << x.to_string() << "\n";
}

void cmd_recollement(const Common& c, std::size_t n, std::size_t k, const std::string& path, Report& rep) {
  const json in = path.empty() ? json::object() : read_json_file(path);
  const Ring R = resolve_ring(c, {in});
  require(k >= 1 && k < n, ErrorKind::InvalidInput, "recollement needs 1 <= k < n");
  const Recollement rc = recollement_functors(n, k);
  std::mt19937_64 rng(c.seed);
  const RandomBounds b{n, c.max_rank, c.max_deg};
  SuiteResult res;
  res.tag = "recollement";
  LawRecorder rec(res);
  std::vector<NFactorization> objects;
  if (!path.empty()) objects.push_back(object_from_json(R, payload(in, "object")));
  for (std::size_t s = 0; s < c.samples; ++s) objects.push_back(random_seeded(R, rng, b).object);
  json kernel = json::array();
  for (const NFactorization& x : objects) {
    require(x.n() == n, ErrorKind::InvalidInput, "object must lie in F_n");
    const NFactorization z = rc.quotient(x);
    rec.check(rc.quotient(rc.section_left(z)) == z, "quotient after left section = id");
    rec.check(rc.quotient(rc.section_right(z)) == z, "quotient after right section = id");
    const NFactorization w = random_seeded(R, rng, {n - k + 1, c.max_rank, c.max_deg}).object;
    const HomotopyResult h = is_stably_zero(rc.quotient(rc.inc(w)));
    rec.check(h.verdict != Verdict::No, "quotient of inc is stably zero");
    verdict_code(rep, h.verdict);
    kernel.push_back(to_string(h.verdict));
    for (const Adjunction* adj : {&rc.adj_inc_left, &rc.adj_inc_right, &rc.adj_quot_left, &rc.adj_quot_right}) {
      const NFactorization ax = adj->left.src_n == n ? x : rc.quotient(x);
      const NFactorization ay = random_seeded(R, rng, {adj->left.dst_n, c.max_rank, c.max_deg}).object;
      const NFactorization lx = adj->left(ax), ry = adj->right(ay);
      check_adjunction(rec, *adj, ax, ay, random_hom(lx, ay, rng), random_hom(ax, ry, rng),
                       identity_morphism(ax) + random_hom(ax, ax, rng), identity_morphism(ay) + random_hom(ay, ay, rng));
      rec.check(compose(adj->left(adj->unit(ax)), adj->counit(lx)) == identity_morphism(lx),
                adj->name + ": triangle identity on the given object");
    }
  }
  rep.body = {{"n", n},           {"k", k},          {"cases", res.cases}, {"failures", res.failures},
              {"kernel", kernel}, {"first_failure", res.first_failure}};
  rep.text << "recollement (" << n << ", " << k << "): " << res.cases << " checks, " << res.failures << " failures\n";
  if (!res.first_failure.empty()) rep.text << "  first failure: " << res.first_failure << "\n";
  if (res.failures > 0) rep.code = kFailure;
}

void cmd_laws(const Common& c, Report& rep) {
  Scenario sc;
  sc.ring = parse_ring(c.ring.empty() ? "Q:x3" : c.ring).spec();
  sc.seed = c.seed;
  sc.n = c.n;
  sc.max_rank = c.max_rank;
  sc.max_deg = c.max_deg;
  sc.samples = c.samples;
  sc.suites = c.suites;
  const auto results = run_laws(sc);
  json rows = json::array();
  for (const auto& r : results) {
    rows.push_back({{"tag", r.tag},
                    {"title", r.title},
                    {"cases", r.cases},
                    {"failures", r.failures},
                    {"passed", r.passed()},
                    {"first_failure", r.first_failure}});
    rep.text << (r.passed() ? "PASS " : "FAIL ") << r.tag << "  " << r.cases << " cases";
    if (r.cases == 0) rep.text << " (no executed cases)";
    if (!r.first_failure.empty()) rep.text << "  first failure: " << r.first_failure;
    rep.text << "\n";
    if (!r.passed()) rep.code = kFailure;
  }
  rep.body = {{"ring", to_json(Ring(sc.ring))}, {"seed", sc.seed}, {"n", sc.n}, {"suites", rows}};
}

int exit_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Unsupported: return kUnsupported;
    default: return kInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"n-fold module factorizations over univariate (skew) polynomial rings"};
  app.require_subcommand(1);
  Common c;
  auto common = [&c](CLI::App* sub) {
    sub->add_option("--ring", c.ring, "ring preset (e.g. Q:x3, F5:x2(x-1), F4frob:x2), inline JSON or file");
    sub->add_option("--seed", c.seed, "random seed");
    sub->add_option("--n", c.n, "number of maps in generated factorizations");
    sub->add_option("--max-rank", c.max_rank, "largest component rank of generated objects");
    sub->add_option("--max-deg", c.max_deg, "largest entry degree of generated objects");
    sub->add_option("--samples", c.samples, "cases per suite");
    sub->add_option("--json", c.json_out, "write the JSON report to this file ('-' for stdout)");
  };

  std::string path, path2, fname;
  std::size_t index = 0, rn = 2, rk = 1;
  long power = 1;
  bool ideal = false;

  auto* validate_cmd = app.add_subcommand("validate", "check the rotation identities of a factorization");
  validate_cmd->add_option("file", path, "object JSON")->required();
  auto* functor_cmd = app.add_subcommand("functor", "apply shift, theta, projection, face or degeneracy");
  functor_cmd->add_option("name", fname, "functor name")->required();
  functor_cmd->add_option("file", path, "object or morphism JSON")->required();
  functor_cmd->add_option("--index", index, "face/degeneracy/theta index");
  functor_cmd->add_option("--power", power, "shift power");
  auto* homotopy_cmd = app.add_subcommand("homotopy-check", "decide whether a morphism is p-null-homotopic");
  homotopy_cmd->add_option("file", path, "morphism JSON")->required();
  auto* stable_cmd = app.add_subcommand("stable-hom", "stable Hom group between two objects");
  stable_cmd->add_option("source", path, "object JSON")->required();
  stable_cmd->add_option("target", path2, "object JSON")->required();
  stable_cmd->add_flag("--ideal", ideal, "quotient only by maps factoring through theta^0");
  auto* zero_cmd = app.add_subcommand("stably-zero", "decide whether the identity is null-homotopic");
  zero_cmd->add_option("file", path, "object JSON")->required();
  auto* cok_cmd = app.add_subcommand("cok0", "chain of cokernels of an object or morphism");
  cok_cmd->add_option("file", path, "object or morphism JSON")->required();
  auto* lift_cmd = app.add_subcommand("lift", "factorization whose Cok0 chain is the given chain");
  lift_cmd->add_option("file", path, "chain JSON")->required();
  auto* iso_cmd = app.add_subcommand("chain-iso", "search for an isomorphism of chains");
  iso_cmd->add_option("left", path, "chain JSON")->required();
  iso_cmd->add_option("right", path2, "chain JSON")->required();
  auto* phi_cmd = app.add_subcommand("phi", "Gamma_n module of a factorization");
  phi_cmd->add_option("file", path, "object JSON")->required();
  auto* psi_cmd = app.add_subcommand("psi", "factorization of a Gamma_n module");
  psi_cmd->add_option("file", path, "Gamma_n JSON")->required();
  auto* rec_cmd = app.add_subcommand("recollement", "check the recollement functors for (n, k)");
  rec_cmd->add_option("big_n", rn, "number of maps n")->required();
  rec_cmd->add_option("small_k", rk, "quotient size k")->required();
  rec_cmd->add_option("file", path, "optional object of F_n");
  auto* laws_cmd = app.add_subcommand("laws", "run the randomized law suites");
  laws_cmd->add_option("--suite", c.suites, "law tags to run (default: all)")->delimiter(',');
  for (auto* sub : app.get_subcommands({})) common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInput;
  }

  Report rep;
  try {
    if (*validate_cmd) cmd_validate(c, path, rep);
    else if (*functor_cmd) cmd_functor(c, fname, index, power, path, rep);
    else if (*homotopy_cmd) cmd_homotopy(c, path, rep);
    else if (*stable_cmd) cmd_stable_hom(c, path, path2, ideal, rep);
    else if (*zero_cmd) cmd_stably_zero(c, path, rep);
    else if (*cok_cmd) cmd_cok0(c, path, rep);
    else if (*lift_cmd) cmd_lift(c, path, rep);
    else if (*iso_cmd) cmd_chain_iso(c, path, path2, rep);
    else if (*phi_cmd) cmd_phi(c, path, rep);
    else if (*psi_cmd) cmd_psi(c, path, rep);
    else if (*rec_cmd) cmd_recollement(c, rn, rk, path, rep);
    else if (*laws_cmd) cmd_laws(c, rep);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e);
  } catch (const json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return kInput;
  }

  rep.body["exit_code"] = rep.code;
  if (c.json_out == "-") {
    std::cout << rep.body.dump(2) << "\n";
  } else {
    std::cout << rep.text.str();
    if (!c.json_out.empty()) {
      std::ofstream out(c.json_out);
      if (!out) {
        std::cerr << "error: cannot write " << c.json_out << "\n";
        return kInput;
      }
      out << rep.body.dump(2) << "\n";
    }
  }
  return rep.code;
}
