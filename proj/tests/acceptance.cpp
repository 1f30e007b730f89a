// One line per acceptance criterion: PASS/FAIL, id, elapsed seconds, detail.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "tbs/catalog.hpp"
#include "tbs/sampling.hpp"
#include "tbs/selftest.hpp"

using namespace tbs;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void run(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0 && s >= limit_s) {
    o.ok = false;
    o.detail += " (over the " + std::to_string(limit_s) + " s limit)";
  }
  if (!o.ok) ++failures;
  std::printf("%s %2d %-34s %7.3fs  %s\n", o.ok ? "PASS" : "FAIL", id, title, s, o.detail.c_str());
  std::fflush(stdout);
}

Outcome parity_window() {
  std::size_t pairs = 0, bad = 0;
  for (long a = -6; a <= 6; ++a)
    for (long b = -6; b <= 6; ++b)
      for (long c = -6; c <= 6; ++c)
        for (long d = -6; d <= 6; ++d) {
          LatticePoint k(a, b), k0(c, d);
          Int x = det2(k, k0) - gcd2(k) - gcd2(k0) + gcd2(k + k0);
          ++pairs;
          if (!mpz_even_p(x.get_mpz_t())) ++bad;
        }
  return {pairs == 28561 && bad == 0, std::to_string(pairs) + " pairs, " + std::to_string(bad) + " failures"};
}

Outcome cohomology_oracle() {
  Sampler s(101);
  std::size_t pairs = 0, agree = 0, yes = 0;
  auto compare = [&](const Cocycle& a, const Cocycle& b) {
    bool c = cohomologous(a, b);
    bool w = coboundary_witness(a.to_table(), b.to_table()).has_value();
    ++pairs;
    if (c == w) ++agree;
    if (c) ++yes;
  };
  const std::vector<std::vector<std::int64_t>> groups = {{2, 2}, {4}, {2, 4}, {3, 3}, {2, 2, 2}, {4, 4}, {2, 6}, {2, 2, 4}, {2, 8}, {16}};
  for (const auto& t : groups) {
    AbGroup G(0, t);
    for (int rep = 0; rep < 2; ++rep) {
      Cocycle a = add_coboundary(s.random_bichar(G), s.random_function(G, 12));
      compare(a, add_coboundary(a, s.random_function(G, 12)));
      compare(a, add_coboundary(s.random_bichar(G), s.random_function(G, 8)));
    }
    compare(Cocycle::trivial(G), add_coboundary(Cocycle::trivial(G), s.random_function(G, 10)));
  }
  for (std::int64_t q : {2, 3}) {
    Cocycle m = mu_q(q);
    compare(m, Cocycle::trivial(m.group()));
    compare(m, add_coboundary(m, s.random_function(m.group(), 9)));
    compare(m, m);
  }
  return {pairs >= 50 && agree == pairs, std::to_string(agree) + "/" + std::to_string(pairs) + " agree (" +
                                             std::to_string(yes) + " cohomologous)"};
}

Outcome centralizers() {
  Outcome o;
  for (std::int64_t q : {3, 5, 7}) {
    CentralizerReport r = centralizer(q_triplet(q), std::nullopt);
    bool ok = r.complete && r.structure && r.structure->order == static_cast<std::size_t>(q) &&
              r.structure->invariant_factors == std::vector<std::int64_t>{q};
    o.ok = o.ok && ok;
    o.detail += "q=" + std::to_string(q) + ": " + (r.structure ? r.structure->str() : "?") + "; ";
  }
  CentralizerReport p = centralizer(product_triplet({3, 5}), std::nullopt);
  o.ok = o.ok && p.complete && p.structure && p.structure->order == 15 &&
         p.structure->invariant_factors == std::vector<std::int64_t>{15};
  o.detail += "Q={3,5}: " + (p.structure ? p.structure->str() : "?");
  return o;
}

Outcome factoriality() {
  Outcome o;
  for (std::int64_t q : {3, 5, 7}) {
    bool nd = is_nondegenerate(mu_q(q)).nondegenerate;
    o.ok = o.ok && nd;
    o.detail += "mu_" + std::to_string(q) + "=" + (nd ? "true" : "false") + "; ";
  }
  AbGroup z3(0, {3});
  bool triv = is_nondegenerate(Cocycle::trivial(z3)).nondegenerate;
  o.ok = o.ok && !triv;
  o.detail += std::string("trivial=") + (triv ? "true" : "false") + "; ";
  Nondegeneracy c = is_nondegenerate(mu_det(Phase(1, 16)));
  o.ok = o.ok && c.nondegenerate;
  o.detail += std::string("mu_c(1/16) on Z^2=") + (c.nondegenerate ? "true" : "false");
  if (c.witness) o.detail += " with radical element " + to_json(*c.witness).dump();
  return o;
}

Outcome malleability() {
  Outcome o;
  for (std::int64_t q : {3, 5}) {
    Json r = malleability_report(q_triplet(q), 202 + static_cast<std::uint64_t>(q));
    bool ok = r["ok"].get<bool>();
    std::size_t cases = 0;
    for (const auto& c : r["checks"]) cases += c["cases"].get<std::size_t>();
    o.ok = o.ok && ok;
    o.detail += "q=" + std::to_string(q) + ": " + std::to_string(cases) + " cases " + (ok ? "ok" : "FAILED") + "; ";
  }
  return o;
}

Outcome action_algebra() {
  Sampler s(303);
  Triplet t = q_triplet(3);
  std::vector<Character> chars = all_characters(t.group);
  auto g0 = [&] { return Gamma0Elem{chars[static_cast<std::size_t>(s.uniform(0, 8))], s.point(3), s.sl2()}; };
  std::size_t assoc = 0;
  for (int i = 0; i < 100; ++i) {
    Gamma0Elem a = g0(), b = g0(), c = g0();
    if (gamma0_mul(t, gamma0_mul(t, a, b), c) == gamma0_mul(t, a, gamma0_mul(t, b, c))) ++assoc;
  }
  std::vector<RelationSample> samples;
  for (int i = 0; i < 50; ++i) samples.push_back({s.point(3), s.point(3), s.sl2(), s.alg_elem(t.base(), 2)});
  RelationReport r = verify_rho_relations(t, samples);
  return {assoc == 100 && r.ok, std::to_string(assoc) + "/100 associative; relations on " + std::to_string(samples.size()) +
                                    " instances: " + (r.ok ? "ok" : r.counterexamples.front())};
}

Outcome intertwiner() {
  Sampler s(404);
  Triplet t = q_triplet(3);
  AbHom phi(t.group, t.group, {{1, 0}, {1, 1}});
  std::vector<AffineSL2> aff;
  for (int i = 0; i < 20; ++i) aff.push_back(s.affine());
  std::vector<std::pair<AlgElem, AlgElem>> pairs;
  for (int i = 0; i < 100; ++i) pairs.emplace_back(s.alg_elem(t.base(), 2), s.alg_elem(t.base(), 2));
  PiReport main = verify_pi(build_pi(t, t, phi), pairs, aff);
  PiPhi dropped = build_pi(t, t, phi, true);
  PiReport same_config = verify_pi(dropped, pairs, aff);

  // c_phi vanishes on the configuration above, so the mutation is also run where
  // the sign character makes c_phi nontrivial.
  AbGroup g2(0, {2, 2});
  Triplet ta(g2, mu_q(2), Character(g2, {Phase(1, 2), Phase()}));
  Triplet tb(g2, mu_q(2), Character::trivial(g2));
  std::vector<std::pair<AlgElem, AlgElem>> pairs2;
  for (int i = 0; i < 50; ++i) pairs2.emplace_back(s.alg_elem(ta.base(), 2), s.alg_elem(ta.base(), 2));
  AbHom id = AbHom::identity(g2);
  PiReport good = verify_pi(build_pi(ta, tb, id), pairs2, aff);
  PiReport mutated = verify_pi(build_pi(ta, tb, id, true), pairs2, aff);

  std::string d = "q=3 pairs " + std::to_string(main.checked) + ": " + (main.ok ? "ok" : main.failures.front());
  d += std::string("; mutation on q=3 ") + (same_config.ok ? "undetected (c_phi trivial)" : "detected");
  d += std::string("; (Z/2)^2 sign character: correct ") + (good.ok ? "ok" : "FAILED") + ", mutated " +
       (mutated.ok ? "undetected" : "detected");
  return {main.ok && good.ok && !mutated.ok && dropped.c_phi().is_trivial() == same_config.ok, d};
}

Outcome z2_separation() {
  Sampler s(505);
  AbGroup z2(2, {});
  const std::vector<Character> chis = {Character::trivial(z2), Character(z2, {Phase(1, 2), Phase()}),
                                       Character(z2, {Phase(1, 2), Phase(1, 2)}), Character(z2, {Phase(1, 4), Phase()})};
  std::size_t agree = 0, yes = 0, searched_unknown = 0;
  std::string first_bad;
  for (int i = 0; i < 50; ++i) {
    Phase a = s.phase(12);
    Phase b = i % 3 == 0 ? a : (i % 3 == 1 ? -a : s.phase(12));
    const Character& chi = chis[static_cast<std::size_t>(s.uniform(0, 3))];
    Triplet ta = z2_triplet(mu_upper(a), chi), tb = z2_triplet(mu_upper(b), chi);
    ConjugacyReport closed = decide_conjugacy(ta, tb, std::nullopt);
    ConjugacyReport search = decide_conjugacy_by_search(ta, tb, 3);
    bool expect_yes = a == b || a == -b;
    bool witness_ok = !closed.witness || [&] {
      ConditionFlags f = check_conditions(ta, tb, *closed.witness);
      return f.cocycle && f.character;
    }();
    bool ok = closed.closed_form && closed.complete && witness_ok &&
              (closed.verdict == Verdict::Yes) == expect_yes &&
              (search.verdict == Verdict::Yes) == expect_yes;
    if (search.verdict == Verdict::Unknown) ++searched_unknown;
    if (expect_yes) ++yes;
    if (ok) ++agree;
    else if (first_bad.empty()) first_bad = " first mismatch " + a.str() + " vs " + b.str();
  }
  return {agree == 50, std::to_string(agree) + "/50 agree (" + std::to_string(yes) + " YES, bounded search UNKNOWN on " +
                           std::to_string(searched_unknown) + ")" + first_bad};
}

Outcome weak_mixing() {
  Sampler s(606);
  Triplet t = q_triplet(3);
  std::size_t ok = 0;
  for (int i = 0; i < 20; ++i) {
    std::vector<AlgElem> elems;
    int n = static_cast<int>(s.uniform(1, 4));
    for (int j = 0; j < n; ++j) elems.push_back(s.alg_elem(t.base(), 3) + AlgElem::one(t.base()).scaled(s.coefficient()));
    LatticePoint k = weak_mixing_witness(t, elems);
    if (is_weak_mixing_witness(t, elems, k)) ++ok;
  }
  return {ok == 20, std::to_string(ok) + "/20 witnesses verified by trace"};
}

Outcome determinism() {
  SelftestOptions opts;
  std::string a = run_selftest(opts).dump(2);
  std::string b = run_selftest(opts).dump(2);
  return {a == b, std::to_string(a.size()) + " bytes, " + (a == b ? "identical" : "different")};
}

}  // namespace

int main() {
  run(1, "det/gcd parity window", 1.0, parity_window);
  run(2, "cohomology oracle agreement", 30.0, cohomology_oracle);
  run(3, "centralizer values", 60.0, centralizers);
  run(4, "factoriality", 0, factoriality);
  run(5, "malleability flow q=3,5", 120.0, malleability);
  run(6, "affine extension and rho", 0, action_algebra);
  run(7, "intertwiner and mutation", 0, intertwiner);
  run(8, "Z^2 closed form vs search", 0, z2_separation);
  run(9, "weak mixing witnesses", 0, weak_mixing);
  run(10, "selftest determinism", 0, determinism);
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
