// tbs: command-line front end over triplet files. Every exit path prints JSON.
// Exit codes: 0 success or YES, 1 NO, 2 invalid input, 3 UNKNOWN.

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "tbs/selftest.hpp"

namespace {

using tbs::Json;

enum Exit { kOk = 0, kNo = 1, kInvalid = 2, kUnknown = 3 };

int emit(const Json& j, int code) {
  std::cout << j.dump(2) << "\n";
  return code;
}

int error_json(const std::string& violation, const std::string& path, const std::string& message) {
  Json j = {{"ok", false}, {"violation", violation}, {"message", message}};
  j["path"] = path.empty() ? Json(nullptr) : Json(path);
  return emit(j, kInvalid);
}

int verdict_exit(tbs::Verdict v) {
  switch (v) {
    case tbs::Verdict::Yes: return kOk;
    case tbs::Verdict::No: return kNo;
    default: return kUnknown;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on twisted Bernoulli shift triplets (H, mu, chi)"};
  app.require_subcommand(1);
  bool json_flag = true;
  app.add_flag("--json", json_flag, "JSON output (the only format)");

  std::string file_a, file_b;
  std::optional<std::int64_t> bound;
  tbs::SelftestOptions st;

  auto* validate = app.add_subcommand("validate", "check every invariant of a triplet file");
  validate->add_option("file", file_a)->required();

  auto* central = app.add_subcommand("centralizer", "automorphisms of (H, mu*mu, chi^2)");
  central->add_option("file", file_a)->required();
  central->add_option("--bound", bound, "coefficient bound for free coordinates");

  auto* conj = app.add_subcommand("conjugate", "decide conjugacy of two triplets");
  conj->add_option("file_a", file_a)->required();
  conj->add_option("file_b", file_b)->required();
  conj->add_option("--bound", bound, "coefficient bound for free coordinates");

  auto* factor = app.add_subcommand("factor", "nondegeneracy of the commutator form");
  factor->add_option("file", file_a)->required();

  auto* bichar = app.add_subcommand("bicharacter", "print the matrix of mu*mu");
  bichar->add_option("file", file_a)->required();

  auto* mall = app.add_subcommand("malleability", "flow checks on a finite triplet");
  mall->add_option("file", file_a)->required();
  mall->add_option("--seed", st.seed, "sampler seed");

  auto* self = app.add_subcommand("selftest", "run the property suites");
  self->add_option("--suite", st.suite, "run one suite")->check(CLI::IsMember(tbs::selftest_suites()));
  self->add_option("--q", st.q, "malleability suite: this q only")->check(CLI::Range(std::int64_t{2}, std::int64_t{7}));
  self->add_option("--seed", st.seed, "sampler seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return error_json("usage", "", e.what());
  }

  try {
    if (*validate) {
      tbs::Triplet t = tbs::read_triplet_file(file_a);
      return emit({{"ok", true}, {"label", t.label}, {"group", tbs::to_json(t.group)}}, kOk);
    }
    if (*central) {
      tbs::CentralizerReport r = tbs::centralizer(tbs::read_triplet_file(file_a), bound);
      return emit(tbs::to_json(r), r.complete ? kOk : kUnknown);
    }
    if (*conj) {
      tbs::Triplet a = tbs::read_triplet_file(file_a);
      tbs::Triplet b = tbs::read_triplet_file(file_b);
      tbs::ConjugacyReport r = tbs::decide_conjugacy(a, b, bound);
      return emit(tbs::to_json(r), verdict_exit(r.verdict));
    }
    if (*factor) {
      tbs::Triplet t = tbs::read_triplet_file(file_a);
      return emit(tbs::to_json(tbs::is_nondegenerate(t.mu)), kOk);
    }
    if (*bichar) {
      tbs::Triplet t = tbs::read_triplet_file(file_a);
      return emit(tbs::to_json(tbs::star_bicharacter(t.mu)), kOk);
    }
    if (*mall) {
      tbs::Triplet t = tbs::read_triplet_file(file_a);
      if (!t.group.is_finite()) return error_json("unsupported", "/group", "the flow needs a finite group");
      Json r = tbs::malleability_report(t, st.seed);
      return emit(r, r["ok"].get<bool>() ? kOk : kNo);
    }
    Json r = tbs::run_selftest(st);
    return emit(r, r["ok"].get<bool>() ? kOk : kNo);
  } catch (const tbs::ValidationError& e) {
    return error_json(e.kind(), e.path(), e.what());
  } catch (const tbs::Unsupported& e) {
    return error_json("unsupported", "", e.what());
  } catch (const tbs::InvalidArgument& e) {
    return error_json("invalid", "", e.what());
  }
}
