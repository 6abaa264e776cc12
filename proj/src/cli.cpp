#include "coinduct/cli.hpp"

#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "coinduct/basictopology.hpp"
#include "coinduct/document.hpp"
#include "coinduct/encodings.hpp"
#include "coinduct/error.hpp"
#include "coinduct/fixpoint.hpp"
#include "coinduct/proofobjects.hpp"

namespace coinduct::cli {

namespace {

struct Options {
  std::string ruleset;
  std::string v;
  std::string mode = "ind";
  std::string element;
  std::string trace;
  std::string output;
  std::string witness;
  std::string rule;
  std::string cert;
  std::string claim;
  std::string transform;
  std::size_t max_elements = OracleOptions{}.max_elements;
  std::size_t max_options = ConfAsDerOptions{}.max_options_per_element;
  bool exhaustive = false;
  std::size_t samples = LawOptions{}.samples;
  std::uint64_t seed = 0;
};

struct Io {
  std::ostream& out;
  std::ostream& err;
};

RuleSet load_ruleset(const Options& o) { return io::ruleset_from_document(io::read_document(o.ruleset)); }

std::optional<Predicate> load_v(const Options& o, const Carrier& carrier) {
  if (o.v.empty()) return std::nullopt;
  return io::subset_from_document(io::read_document(o.v), carrier);
}

void emit(const Options& o, const Io& io, const io::Document& doc) {
  if (o.output.empty()) {
    io.out << io::emit_document(doc);
  } else {
    io::write_document(o.output, doc);
  }
}

void write_trace(const Options& o, const Carrier& carrier, std::string_view mode, const FixpointTrace& trace) {
  if (!o.trace.empty()) io::write_document(o.trace, io::trace_report(carrier, mode, trace));
}

int cmd_solve(const Options& o, const Io& io) {
  const auto r = load_ruleset(o);
  if (o.mode != "ind" && o.mode != "coind") throw InvalidInput("--mode must be ind or coind");
  const auto result = o.mode == "ind" ? ind_fixpoint(r) : coind_fixpoint(r);
  io.out << format_predicate(result.value) << "\n";
  write_trace(o, r.carrier(), o.mode, result.trace);
  return kExitOk;
}

int cmd_cover(const Options& o, const Io& io, bool positive) {
  const auto r = load_ruleset(o);
  const auto v = *load_v(o, r.carrier());
  const auto result = positive ? positivity_fixpoint(r, v) : cover_fixpoint(r, v);
  io.out << format_predicate(result.value) << "\n";
  write_trace(o, r.carrier(), positive ? "pos" : "cover", result.trace);
  return kExitOk;
}

int cmd_derive(const Options& o, const Io& io) {
  const auto r = load_ruleset(o);
  const auto v = load_v(o, r.carrier());
  const auto a = r.carrier().index_of(o.element);
  if (v) {
    const auto fix = cover_fixpoint(r, *v);
    if (!fix.value.contains(a)) {
      io.err << "underivable: '" << o.element << "' is not covered by V\n";
      return kExitSemantic;
    }
    emit(o, io, io::cover_proof_document(r, *v, extract_cover_proof(r, *v, a, fix.trace)));
  } else {
    const auto fix = ind_fixpoint(r);
    if (!fix.value.contains(a)) {
      io.err << "underivable: '" << o.element << "' is not in the inductive predicate\n";
      return kExitSemantic;
    }
    emit(o, io, io::derivation_document(r, extract_derivation(r, a, fix.trace)));
  }
  return kExitOk;
}

int cmd_witness(const Options& o, const Io& io) {
  const auto r = load_ruleset(o);
  const auto v = load_v(o, r.carrier());
  const auto a = r.carrier().index_of(o.element);
  const auto support = v ? positivity(r, *v) : coind_predicate(r);
  if (!support.contains(a)) {
    io.err << "no witness: '" << o.element << "' is not in the "
           << (v ? "positivity relation" : "coinductive predicate") << "\n";
    return kExitSemantic;
  }
  emit(o, io, io::witness_document(r, v ? build_coind_witness(r, *v, a) : build_coind_witness(r, a)));
  return kExitOk;
}

int cmd_unfold(const Options& o, const Io& io) {
  const auto r = load_ruleset(o);
  const auto w = io::witness_from_document(io::read_document(o.witness), r.carrier());
  if (auto verdict = verify_coind_witness(r, w); !verdict) {
    io.err << "invalid witness: " << verdict.failure << "\n";
    return kExitSemantic;
  }
  const auto step = des(r, w, o.rule);
  emit(o, io, io::witness_document(r, step.next));
  return kExitOk;
}

int report_verdict(const Io& io, const CheckResult& verdict) {
  if (verdict) {
    io.out << "valid\n";
    return kExitOk;
  }
  io.out << "invalid: " << verdict.failure << "\n";
  return kExitSemantic;
}

int cmd_verify(const Options& o, const Io& io) {
  const auto r = load_ruleset(o);
  const auto doc = io::read_document(o.cert);
  switch (doc.kind) {
    case io::DocumentKind::derivation: {
      const auto parsed = io::derivation_from_document(doc, r.carrier());
      if (parsed.tree) return report_verdict(io, check_derivation(r, *parsed.tree));
      return report_verdict(io, check_cover_proof(r, *parsed.v, *parsed.proof));
    }
    case io::DocumentKind::witness:
      return report_verdict(io, verify_coind_witness(r, io::witness_from_document(doc, r.carrier())));
    case io::DocumentKind::subset: {
      const auto p = io::subset_from_document(doc, r.carrier());
      const auto v = load_v(o, r.carrier());
      bool ok = false;
      if (o.claim == "closed") {
        ok = v ? verify_closed(r, *v, p) : verify_closed(r, p);
      } else if (o.claim == "consistent") {
        ok = v ? verify_consistent(r, *v, p) : verify_consistent(r, p);
      } else {
        throw InvalidInput("verifying a subset needs --claim closed|consistent");
      }
      return report_verdict(io, ok ? CheckResult::pass() : CheckResult::fail("subset is not " + o.claim));
    }
    default:
      throw FormatError("/kind", "cannot verify a " + std::string(io::to_string(doc.kind)) + " document");
  }
}

int cmd_encode(const Options& o, const Io& io) {
  const auto doc = io::read_document(o.ruleset);
  if (o.transform == "to-ruleset") {
    emit(o, io, io::ruleset_document(ruleset_of_container(io::container_from_document(doc))));
    return kExitOk;
  }
  const auto r = io::ruleset_from_document(doc);
  const auto need_v = [&]() {
    auto v = load_v(o, r.carrier());
    if (!v) throw InvalidInput("--transform " + o.transform + " needs --v");
    return *v;
  };
  if (o.transform == "enlarge") {
    emit(o, io, io::ruleset_document(enlarge(r, need_v())));
  } else if (o.transform == "restrict") {
    emit(o, io, io::ruleset_document(restrict(r, need_v())));
  } else if (o.transform == "to-container") {
    emit(o, io, io::container_document(container_of_ruleset(r)));
  } else if (o.transform == "conf-as-der") {
    emit(o, io, io::container_document(conf_as_der(r, {o.max_options})));
  } else {
    throw InvalidInput("unknown transform '" + o.transform + "'");
  }
  return kExitOk;
}

int cmd_oracle(const Options& o, const Io& io) {
  const auto r = load_ruleset(o);
  const auto v = load_v(o, r.carrier());
  const OracleOptions bound{o.max_elements};
  Predicate least = v ? oracle_lfp(r, *v, bound) : oracle_lfp(r, bound);
  Predicate greatest = v ? oracle_gfp(r, *v, bound) : oracle_gfp(r, bound);
  const bool agrees = v ? (least == cover(r, *v) && greatest == positivity(r, *v))
                        : (least == ind_predicate(r) && greatest == coind_predicate(r));
  io.out << "lfp " << format_predicate(least) << " / gfp " << format_predicate(greatest) << "; solver "
         << (agrees ? "agrees" : "disagrees") << "\n";
  return agrees ? kExitOk : kExitSemantic;
}

int cmd_laws(const Options& o, const Io& io) {
  const auto r = load_ruleset(o);
  LawOptions options;
  options.force_exhaustive = o.exhaustive;
  options.samples = o.samples;
  options.seed = o.seed;
  const auto report = check_basic_topology(r, options);
  emit(o, io, io::law_report(r, report));
  return report.gating_hold() ? kExitOk : kExitSemantic;
}

int guarded(const Io& io, const std::function<int()>& body) {
  try {
    return body();
  } catch (const BoundExceeded& e) {
    io.err << "bound exceeded: " << e.what() << "\n";
    return kExitBound;
  } catch (const InvalidInput& e) {
    io.err << "malformed input: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const SemanticError& e) {
    io.err << e.what() << "\n";
    return kExitSemantic;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  const Io io{out, err};
  CLI::App app{"Finite-model engine for inductive and coinductive predicates, covers and positivity relations"};
  app.require_subcommand(1);

  auto ruleset_opt = [&](CLI::App* sub) { sub->add_option("--ruleset", o.ruleset, "rule set document")->required(); };
  auto v_opt = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--v", o.v, "subset document for V");
    if (required) opt->required();
  };
  auto out_opt = [&](CLI::App* sub) { sub->add_option("-o,--out", o.output, "write the document here instead of stdout"); };

  auto* solve = app.add_subcommand("solve", "least closed / greatest consistent predicate");
  ruleset_opt(solve);
  solve->add_option("--mode", o.mode, "ind or coind")->check(CLI::IsMember({"ind", "coind"}));
  solve->add_option("--trace", o.trace, "write the Kleene trace report here");

  auto* cover_cmd = app.add_subcommand("cover", "the cover - ◁ V");
  ruleset_opt(cover_cmd);
  v_opt(cover_cmd, true);
  cover_cmd->add_option("--trace", o.trace, "write the Kleene trace report here");

  auto* pos = app.add_subcommand("pos", "the positivity relation - ⋉ V");
  ruleset_opt(pos);
  v_opt(pos, true);
  pos->add_option("--trace", o.trace, "write the Kleene trace report here");

  auto* derive = app.add_subcommand("derive", "derivation tree (or cover proof with --v)");
  ruleset_opt(derive);
  v_opt(derive, false);
  derive->add_option("--element", o.element)->required();
  out_opt(derive);

  auto* witness = app.add_subcommand("witness", "coinduction witness (positivity witness with --v)");
  ruleset_opt(witness);
  v_opt(witness, false);
  witness->add_option("--element", o.element)->required();
  out_opt(witness);

  auto* unfold = app.add_subcommand("unfold", "one destructor step of a witness");
  ruleset_opt(unfold);
  unfold->add_option("--witness", o.witness)->required();
  unfold->add_option("--rule", o.rule)->required();
  out_opt(unfold);

  auto* verify = app.add_subcommand("verify", "check a derivation, witness, or closed/consistent subset");
  ruleset_opt(verify);
  verify->add_option("--cert", o.cert)->required();
  v_opt(verify, false);
  verify->add_option("--claim", o.claim, "closed or consistent (subset certificates)")
      ->check(CLI::IsMember({"closed", "consistent"}));

  auto* encode = app.add_subcommand("encode", "apply one of the inter-encodings");
  ruleset_opt(encode);
  encode->add_option("--transform", o.transform)
      ->required()
      ->check(CLI::IsMember({"enlarge", "restrict", "to-container", "to-ruleset", "conf-as-der"}));
  v_opt(encode, false);
  encode->add_option("--max-options", o.max_options, "choice-function cap per element for conf-as-der");
  out_opt(encode);

  auto* oracle = app.add_subcommand("oracle", "exhaustive fixed points compared against the solver");
  ruleset_opt(oracle);
  v_opt(oracle, false);
  oracle->add_option("--max-elements", o.max_elements, "largest carrier the oracle enumerates");

  auto* laws = app.add_subcommand("laws", "basic-topology law report");
  ruleset_opt(laws);
  auto* exhaustive = laws->add_flag("--exhaustive", o.exhaustive, "check every (U, V) pair");
  laws->add_option("--samples", o.samples, "sampled (U, V) pairs on large carriers")->excludes(exhaustive);
  laws->add_option("--seed", o.seed)->excludes(exhaustive);
  out_opt(laws);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitMalformed;
  }

  return guarded(io, [&]() -> int {
    if (solve->parsed()) return cmd_solve(o, io);
    if (cover_cmd->parsed()) return cmd_cover(o, io, false);
    if (pos->parsed()) return cmd_cover(o, io, true);
    if (derive->parsed()) return cmd_derive(o, io);
    if (witness->parsed()) return cmd_witness(o, io);
    if (unfold->parsed()) return cmd_unfold(o, io);
    if (verify->parsed()) return cmd_verify(o, io);
    if (encode->parsed()) return cmd_encode(o, io);
    if (oracle->parsed()) return cmd_oracle(o, io);
    return cmd_laws(o, io);
  });
}

}  // namespace coinduct::cli
