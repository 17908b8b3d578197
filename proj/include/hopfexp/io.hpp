#pragma once

#include <json.hpp>

#include "hopfexp/exponent.hpp"
#include "hopfexp/hopf.hpp"

namespace hopfexp {

using json = nlohmann::ordered_json;

/// Scalar encodings: "a" or "a/b" (rational), decimal string (prime field),
/// list of rational strings in the power basis (cyclotomic).
FieldElement parse_scalar(const json& j, const FieldDescriptor& f);
json serialize_scalar(const FieldElement& e);

FieldDescriptor field_from_json(const json& j);
json field_to_json(const FieldDescriptor& f);
FieldDescriptor field_from_spec_string(const std::string& s);  // "rational", "cyclotomic:3", "prime:7"

/// Versioned structure-constant document. Serialization is canonical: fixed key
/// order, sorted sparse triples, canonical scalar strings.
struct AlgebraDocument {
    int format_version = 1;
    FieldDescriptor field;
    std::int64_t dim = 0;
    std::vector<std::string> basis;
    // sparse triples (i, j, k, scalar): e_i e_j has the coefficient at e_k (mult),
    // Delta(e_i) has it at e_j (x) e_k (comult)
    std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t, FieldElement>> mult, comult;
    Vec unit, counit;
    std::optional<Matrix> antipode;  // dense row-major when present
    json metadata = json::object();
};

AlgebraDocument document_from_algebra(const HopfAlgebra& h, json metadata = json::object());
/// Axiom verification is a hard gate; the antipode is derived when absent.
HopfAlgebra algebra_from_document(const AlgebraDocument& doc);

json document_to_json(const AlgebraDocument& doc);
AlgebraDocument document_from_json(const json& j);

std::string canonical_serialize(const AlgebraDocument& doc);
std::string document_digest(const AlgebraDocument& doc);  // sha256 of the canonical form

void save_document(const AlgebraDocument& doc, const std::string& path);
AlgebraDocument load_document(const std::string& path);
HopfAlgebra load_algebra(const std::string& path);

/// Twist document: {"format_version", "j", "j_inverse"} with dim^2 scalars each.
json twist_to_json(const HopfAlgebra& h, const TensorElem& j, const TensorElem& j_inverse);
std::pair<Vec, Vec> twist_from_json(const HopfAlgebra& h, const json& doc);

struct VerificationCheck {
    std::string name;
    std::string anchor;  // the law being checked, as a formula
    std::string status;  // "pass" | "fail" | "skipped"
    std::string witness;
};

struct VerificationReport {
    int format_version = 1;
    std::string subject_digest;
    std::vector<VerificationCheck> checks;
    std::vector<std::pair<std::int64_t, std::string>> exponents;  // i -> rendered result

    bool all_passed() const;
    json to_json() const;
    static VerificationReport from_json(const json& j);
    std::string to_text() const;
};

}  // namespace hopfexp
