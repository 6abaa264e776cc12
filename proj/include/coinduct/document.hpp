#pragma once

// On-disk format: UTF-8 JSON, envelope {"kind", "version", "payload"}.
// Emission is byte-stable: object keys sorted, two-space indent, trailing
// newline. Predicates serialize as sorted arrays of atoms.

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "coinduct/basictopology.hpp"
#include "coinduct/container.hpp"
#include "coinduct/encodings.hpp"
#include "coinduct/fixpoint.hpp"
#include "coinduct/predicate.hpp"
#include "coinduct/proofobjects.hpp"
#include "coinduct/ruleset.hpp"

namespace coinduct::io {

using Json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

enum class DocumentKind { ruleset, container, subset, derivation, witness, report };

std::string_view to_string(DocumentKind kind);

struct Document {
  DocumentKind kind = DocumentKind::report;
  int version = kFormatVersion;
  Json payload;
};

/// Throws FormatError (with a location) on bad JSON or a bad envelope.
Document parse_document(std::string_view text);
std::string emit_document(const Document& doc);

Document read_document(const std::filesystem::path& path);
void write_document(const std::filesystem::path& path, const Document& doc);

/// Throws FormatError unless doc.kind == expected.
void expect_kind(const Document& doc, DocumentKind expected);

// Payload conversions. The *_from_* readers check the schema (FormatError)
// and the structural invariants (InvalidRuleSet / InvalidInput).

Json to_json(const Predicate& p);
Predicate predicate_from_json(const Json& j, const Carrier& carrier, const std::string& where);

Document ruleset_document(const RuleSet& r);
RuleSetDesc ruleset_desc_from_payload(const Json& payload);
RuleSet ruleset_from_document(const Document& doc);

Document container_document(const IndexedContainer& k);
ContainerDesc container_desc_from_payload(const Json& payload);
IndexedContainer container_from_document(const Document& doc);

/// {"members": [...]}; the carrier comes from the rule set it is used with.
Document subset_document(const Predicate& p);
Predicate subset_from_document(const Document& doc, const Carrier& carrier);

/// {"mode": "ind", "tree": node} with node {"conclusion", "rule", "children": {premise: node}}.
Document derivation_document(const RuleSet& r, const DerivationTree& t);
/// {"mode": "cover", "v": [...], "proof": node}; rf nodes are {"conclusion", "step": "rf"}.
Document cover_proof_document(const RuleSet& r, const Predicate& v, const CoverProof& p);

struct ParsedDerivation {
  std::optional<DerivationTree> tree;  // mode ind
  std::optional<CoverProof> proof;     // mode cover
  std::optional<Predicate> v;          // mode cover
};
ParsedDerivation derivation_from_document(const Document& doc, const Carrier& carrier);

/// {"start", "support", "v"?, "continuations": {element: {rule: premise}}}.
Document witness_document(const RuleSet& r, const CoinductionWitness& w);
CoinductionWitness witness_from_document(const Document& doc, const Carrier& carrier);

// Reports (kind "report"); payload["report"] names the report type.
Document trace_report(const Carrier& carrier, std::string_view mode, const FixpointTrace& trace);
Document law_report(const RuleSet& r, const LawReport& report);
Document axiom_report(const RuleSet& r, const AxiomReport& report);
Document duality_report(const DualityReport& report);

}  // namespace coinduct::io
